#include <doctest.h>

#include "props.hpp"

using namespace cohom;

TEST_CASE("dimension identities") {
  const char* corpus[] = {"SO(3): R^7",        "SU(2): C^4",       "E6: C^27",          "SU(3) (x)_C SU(3)",
                          "U(3) (x)_C SP(2)",  "SO(3) (x)_R U(2)", "SU(4): S^2",        "SO(3): R^5 (+) SO(3): R^3",
                          "SP(3) (x)_H SP(1)", "T(2): [1,0] (+) T(2): [0,1]"};
  for (const char* s : corpus) {
    INFO(s);
    CHECK(props::dimension_identities(*build_action(parse_rep(s))));
  }
}

TEST_CASE("parity criterion agrees with the invariant form oracle") {
  auto irreps = props::irreps_up_to(60);
  CHECK(irreps.size() > 100);
  auto bad = props::fs_type_mismatches(irreps);
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? std::string() : bad.front()));
}

TEST_CASE("Freudenthal sums equal Weyl dimensions") {
  auto bad = props::freudenthal_mismatches(props::irreps_up_to(100));
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? std::string() : bad.front()));
}

TEST_CASE("slice of a sum") {
  for (const auto& s : props::sum_fixtures()) {
    INFO(s);
    SliceCheck r = slice_cohomogeneity_check(*build_action(parse_rep(s)));
    CHECK(r.lhs == r.rhs);
  }
}

TEST_CASE("slice of a product") {
  for (const auto& s : props::tensor_fixtures()) {
    INFO(s);
    SliceCheck r = product_slice_check(*build_action(parse_rep(s)));
    CHECK(r.lhs == r.rhs);
  }
}

TEST_CASE("monotonicity in the family parameter") {
  for (const auto& fam : props::monotone_families()) {
    std::vector<int> cs;
    CHECK(props::monotone(fam, &cs));
    CHECK(cs.front() <= cs.back());
  }
}
