#include <doctest.h>

#include <cmath>

#include "cohom/cases.hpp"

using namespace cohom;

TEST_CASE("torus weights of SU(k+1)") {
  for (int k = 1; k <= 8; ++k) {
    TorusWeights t = su_torus_weights(k);
    CHECK(t.weights.size() == static_cast<size_t>(k + 1));
    CHECK(torus_weights_ok(t));
  }
  TorusWeights one = su_torus_weights(1);
  CHECK(one.weights == std::vector<Weight>{{1}, {-1}});
  CHECK_THROWS(su_torus_weights(0));
}

TEST_CASE("broken weight systems are rejected") {
  TorusWeights t = su_torus_weights(3);
  TorusWeights dup = t;
  dup.weights[1] = dup.weights[0];
  CHECK_FALSE(torus_weights_ok(dup));
  TorusWeights shortlist = t;
  shortlist.weights.pop_back();
  CHECK_FALSE(torus_weights_ok(shortlist));
  // The standard lattice metric is not the one making the characters equiangular.
  TorusWeights flat = t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) flat.metric[i][j] = i == j ? 1 : 0;
  CHECK_FALSE(torus_weights_ok(flat));
}

TEST_CASE("maximal torus on C^{k+1}") {
  for (int k = 1; k <= 3; ++k) {
    INFO(k);
    TorusCase r = verify_torus_case(k);
    CHECK(r.cohom == k + 2);
    CHECK(r.no_boundary);
    CHECK(r.lines == k + 1);
    CHECK(r.l_equals_k_plus_1);
    CHECK_FALSE(r.certificate.empty());
  }
  CHECK(torus_case_expr(2).group_label == "T2");
  CHECK_THROWS(verify_torus_case(9));
}

TEST_CASE("equiangular simplex lines") {
  for (int k = 2; k <= 6; ++k) CHECK(equiangular_symmetry_check(k));
  CHECK_THROWS(equiangular_symmetry_check(7));

  // Orthogonal lines are equiangular too, but at a right angle.
  std::vector<Vec<Rational>> frame = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK_FALSE(simplex_line_configuration(frame, 2));
  CHECK_FALSE(simplex_line_configuration(frame, 3));
  // Three lines in the plane at 60 and 120 degrees, with one direction stretched.
  std::vector<Vec<Rational>> skewed = {{2, 0}, {-1, 1}, {-1, -1}};
  CHECK_FALSE(simplex_line_configuration(skewed, 2));
  // A rescaled simplex is still one.
  std::vector<Vec<Rational>> tri = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK(simplex_line_configuration(tri, 2));
}
