#include <doctest.h>

#include <set>

#include "cohom/irrepmeta.hpp"
#include "cohom/rootsys.hpp"

using namespace cohom;

namespace {

// SU(n+1) dimension from the hook-content formula on the Young diagram of the labels.
long hook_content_dim(int n, const Weight& a) {
  std::vector<int> rows(n, 0);
  for (int i = n - 1, s = 0; i >= 0; --i) rows[i] = (s += a[i]);
  std::vector<int> cols(rows.empty() ? 0 : rows[0], 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rows[i]; ++j) ++cols[j];
  Rational d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rows[i]; ++j) {
      int hook = (rows[i] - j - 1) + (cols[j] - i - 1) + 1;
      d *= Rational(n + 1 + j - i) / hook;
    }
  REQUIRE(d.get_den() == 1);
  return d.get_num().get_si();
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Weight fundamental(int rank, int i) {
  Weight w(rank, 0);
  w[i] = 1;
  return w;
}

}  // namespace

TEST_CASE("group dimensions") {
  for (int n = 1; n <= 8; ++n) CHECK(root_system({Family::A, n}).group_dim() == n * (n + 2));
  for (int n = 2; n <= 8; ++n) {
    CHECK(root_system({Family::B, n}).group_dim() == n * (2 * n + 1));
    CHECK(root_system({Family::C, n}).group_dim() == n * (2 * n + 1));
  }
  for (int n = 3; n <= 8; ++n) CHECK(root_system({Family::D, n}).group_dim() == n * (2 * n - 1));
  const std::pair<const char*, int> exc[] = {{"G2", 14}, {"F4", 52}, {"E6", 78}, {"E7", 133}, {"E8", 248}};
  for (auto [name, d] : exc) {
    CHECK(root_system(parse_simple_type(name)).group_dim() == d);
    CHECK(classical_group_dim(parse_simple_type(name)) == d);
  }
}

TEST_CASE("type validity and names") {
  CHECK(is_valid({Family::A, 1}));
  CHECK_FALSE(is_valid({Family::B, 1}));
  CHECK_FALSE(is_valid({Family::D, 2}));
  CHECK_FALSE(is_valid({Family::E, 9}));
  CHECK_FALSE(is_valid({Family::G, 3}));
  CHECK(parse_simple_type("B3") == SimpleType{Family::B, 3});
  CHECK(SimpleType{Family::E, 7}.name() == "E7");
  CHECK_THROWS(parse_simple_type("Q2"));
}

TEST_CASE("Weyl dimension of SU(n+1) agrees with the hook-content formula") {
  for (int n = 1; n <= 5; ++n) {
    const RootSystem& rs = root_system({Family::A, n});
    for (const Weight& w : dominant_weights_up_to_dim(rs, 400)) CHECK(weyl_dim_small(rs, w) == hook_content_dim(n, w));
  }
  CHECK(weyl_dim_small(root_system({Family::A, 5}), {0, 1, 0, 0, 0}) == 15);
}

TEST_CASE("classical dimensions") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(weyl_dim_small(root_system({Family::B, n}), fundamental(n, 0)) == 2 * n + 1);
    CHECK(weyl_dim_small(root_system({Family::B, n}), fundamental(n, n - 1)) == (1L << n));
    CHECK(weyl_dim_small(root_system({Family::C, n}), fundamental(n, 0)) == 2 * n);
  }
  for (int n = 4; n <= 8; ++n) {
    CHECK(weyl_dim_small(root_system({Family::D, n}), fundamental(n, 0)) == 2 * n);
    CHECK(weyl_dim_small(root_system({Family::D, n}), fundamental(n, n - 1)) == (1L << (n - 1)));
  }
  CHECK(weyl_dim_small(root_system(parse_simple_type("E6")), fundamental(6, 0)) == 27);
  CHECK(weyl_dim_small(root_system(parse_simple_type("E7")), root_system(parse_simple_type("E7")).highest_root_labels()) == 133);
  CHECK(weyl_dim(root_system(parse_simple_type("E8")), Weight(8, 1)) == Integer(1) << 120);
}

TEST_CASE("dominant weight enumeration") {
  const RootSystem& g2 = root_system(parse_simple_type("G2"));
  std::set<long> dims;
  for (const Weight& w : dominant_weights_up_to_dim(g2, 14)) dims.insert(weyl_dim_small(g2, w));
  CHECK(dims == std::set<long>{1, 7, 14});

  const RootSystem& e8 = root_system(parse_simple_type("E8"));
  std::vector<Weight> small = dominant_weights_up_to_dim(e8, 500);
  REQUIRE(small.size() == 2);
  std::set<Weight> got(small.begin(), small.end());
  CHECK(got.count(Weight(8, 0)) == 1);
  CHECK(got.count(e8.highest_root_labels()) == 1);
}

TEST_CASE("Weyl orbit of rho has the order of the Weyl group") {
  for (int n = 1; n <= 4; ++n) {
    const RootSystem& rs = root_system({Family::A, n});
    CHECK(static_cast<long>(weyl_orbit(rs, rs.rho()).size()) == factorial(n + 1));
  }
  for (int n = 2; n <= 4; ++n) {
    const RootSystem& rs = root_system({Family::B, n});
    CHECK(static_cast<long>(weyl_orbit(rs, rs.rho()).size()) == (1L << n) * factorial(n));
  }
  const RootSystem& d4 = root_system({Family::D, 4});
  CHECK(weyl_orbit(d4, d4.rho()).size() == 192);
  const RootSystem& g2 = root_system(parse_simple_type("G2"));
  CHECK(weyl_orbit(g2, g2.rho()).size() == 12);
  const RootSystem& f4 = root_system(parse_simple_type("F4"));
  CHECK(weyl_orbit(f4, f4.rho()).size() == 1152);
  // The orbit of the highest root is the set of long roots.
  const RootSystem& e6 = root_system(parse_simple_type("E6"));
  CHECK(weyl_orbit(e6, e6.highest_root_labels()).size() == 72);
}

TEST_CASE("dual weight is the dominant conjugate of the negative") {
  const char* types[] = {"A1", "A4", "B3", "C3", "D4", "D5", "E6", "E7", "F4", "G2"};
  for (const char* name : types) {
    const RootSystem& rs = root_system(parse_simple_type(name));
    for (int i = 0; i < rs.rank; ++i) {
      Weight lam = fundamental(rs.rank, i);
      Weight neg = lam;
      for (auto& x : neg) x = -x;
      CHECK_MESSAGE(longest_element_dual(rs, lam) == dominant_conjugate(rs, neg), name << " " << i);
    }
  }
  const RootSystem& a4 = root_system({Family::A, 4});
  CHECK(longest_element_dual(a4, {1, 2, 0, 0}) == Weight{0, 0, 2, 1});
  const RootSystem& d4 = root_system({Family::D, 4});
  CHECK(longest_element_dual(d4, {0, 0, 1, 0}) == Weight{0, 0, 1, 0});
  const RootSystem& e6 = root_system(parse_simple_type("E6"));
  Weight l = fundamental(6, 0);
  CHECK(longest_element_dual(e6, l) != l);
  CHECK(longest_element_dual(e6, longest_element_dual(e6, l)) == l);
  CHECK(static_cast<int>(longest_element_word(e6).size()) == 36);
}

TEST_CASE("root system basics") {
  const RootSystem& b3 = root_system({Family::B, 3});
  CHECK(b3.positive_roots.size() == 9);
  CHECK(b3.index_of_root(b3.positive_roots.back()) == 8);
  CHECK(b3.index_of_root({5, 5, 5}) == -1);
  for (int i = 0; i < b3.rank; ++i) {
    // Reflection in alpha_i negates alpha_i.
    Weight a = b3.simple_root(i), r = b3.reflect(a, i);
    for (int j = 0; j < b3.rank; ++j) CHECK(r[j] == -a[j]);
  }
  CHECK(dominates(b3, b3.highest_root_labels(), Weight(3, 0)));
  CHECK_FALSE(dominates(b3, Weight(3, 0), b3.highest_root_labels()));
  CHECK(is_dominant({0, 2, 1}));
  CHECK_FALSE(is_dominant({1, -1}));
  CHECK(weight_to_string({1, 0, -2}) == "[1,0,-2]");
}
