#include <doctest.h>

#include "cohom/irrepmeta.hpp"

using namespace cohom;

namespace {

IrrepSpec irrep(const char* type, Weight w) { return IrrepSpec::of(parse_simple_type(type), std::move(w)); }

}  // namespace

TEST_CASE("Frobenius-Schur types of familiar representations") {
  CHECK(fs_type(irrep("A1", {1})) == FSType::Quaternionic);
  CHECK(fs_type(irrep("A1", {2})) == FSType::Real);
  CHECK(fs_type(irrep("A1", {3})) == FSType::Quaternionic);
  CHECK(fs_type(irrep("A2", {1, 0})) == FSType::Complex);
  CHECK(fs_type(irrep("A2", {1, 1})) == FSType::Real);
  CHECK(fs_type(irrep("A3", {0, 1, 0})) == FSType::Real);
  CHECK(fs_type(irrep("A5", {0, 0, 1, 0, 0})) == FSType::Quaternionic);
  CHECK(fs_type(irrep("B3", {0, 0, 1})) == FSType::Real);
  CHECK(fs_type(irrep("B4", {0, 0, 0, 1})) == FSType::Real);
  CHECK(fs_type(irrep("B5", {0, 0, 0, 0, 1})) == FSType::Quaternionic);
  CHECK(fs_type(irrep("C3", {1, 0, 0})) == FSType::Quaternionic);
  CHECK(fs_type(irrep("C3", {0, 1, 0})) == FSType::Real);
  CHECK(fs_type(irrep("D4", {0, 0, 0, 1})) == FSType::Real);
  CHECK(fs_type(irrep("D5", {0, 0, 0, 0, 1})) == FSType::Complex);
  CHECK(fs_type(irrep("D6", {0, 0, 0, 0, 0, 1})) == FSType::Quaternionic);
  CHECK(fs_type(irrep("G2", {1, 0})) == FSType::Real);
  CHECK(fs_type(irrep("E6", {1, 0, 0, 0, 0, 0})) == FSType::Complex);
  CHECK(fs_type(irrep("E7", root_system(parse_simple_type("E7")).highest_root_labels())) == FSType::Real);
  CHECK(fs_type(IrrepSpec::torus({1})) == FSType::Complex);
  CHECK(fs_type(IrrepSpec::torus({0, 0})) == FSType::Real);
}

TEST_CASE("real dimension by type") {
  std::optional<IrrepSpec> e7;
  for (int i = 0; i < 7; ++i) {
    Weight w(7, 0);
    w[i] = 1;
    if (complex_dim(irrep("E7", w)) == 56) e7 = irrep("E7", w);
  }
  REQUIRE(e7.has_value());
  CHECK(fs_type(*e7) == FSType::Quaternionic);
  CHECK(real_dim(*e7) == 112);
  CHECK(real_dim(irrep("A2", {1, 0})) == 6);
  CHECK(real_dim(irrep("A1", {2})) == 3);
  CHECK(real_dim(irrep("A1", {1})) == 4);
  CHECK(real_dim(IrrepSpec::torus({2})) == 2);
}

TEST_CASE("weight multiplicities") {
  WeightMultiset m = weight_multiplicities(irrep("A2", {1, 1}));
  CHECK(m.at({0, 0}) == 2);
  CHECK(m.size() == 7);
  CHECK(zero_weight_dim(irrep("G2", {1, 0})) == 1);
  CHECK(zero_weight_dim(irrep("A1", {1})) == 0);
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    const RootSystem& rs = root_system(parse_simple_type(name));
    CHECK_MESSAGE(zero_weight_dim(IrrepSpec::of(rs.type, rs.highest_root_labels())) == rs.rank, name);
  }
  // dim V^SO(n) zero weight of S^2_0 on SO(2r+1): r.
  CHECK(zero_weight_dim(irrep("B3", {2, 0, 0})) == 3);
}

TEST_CASE("Freudenthal multiplicities sum to the Weyl dimension") {
  for (const char* name : {"A2", "A4", "B2", "B4", "C3", "D4", "D5", "G2", "F4"}) {
    const RootSystem& rs = root_system(parse_simple_type(name));
    for (const Weight& w : dominant_weights_up_to_dim(rs, 300)) {
      long total = 0;
      for (const auto& [mu, mult] : weight_multiplicities(IrrepSpec::of(rs.type, w))) total += mult;
      CHECK_MESSAGE(total == weyl_dim_small(rs, w), name << " " << weight_to_string(w));
    }
  }
}

TEST_CASE("weight multiset is Weyl invariant") {
  const RootSystem& rs = root_system(parse_simple_type("B3"));
  WeightMultiset m = weight_multiplicities(IrrepSpec::of(rs.type, {1, 0, 1}));
  for (const auto& [mu, mult] : m)
    for (int i = 0; i < rs.rank; ++i) CHECK(m.at(rs.reflect(mu, i)) == mult);
}

TEST_CASE("spec validation") {
  CHECK_THROWS(validate(irrep("A2", {1, -1})));
  CHECK_THROWS(validate(irrep("A2", {1})));
  CHECK_NOTHROW(validate(irrep("A2", {1, 0})));
  CHECK(irrep("A1", {3}).describe() == "A1[3]");
  CHECK(IrrepSpec::torus({1, -1}).describe() == "T2[1,-1]");
  CHECK(type_letter(FSType::Quaternionic) == 'q');
}
