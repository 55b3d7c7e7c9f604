#include <doctest.h>

#include "cohom/dsl.hpp"

using namespace cohom;
using K = RepExpr::Kind;

namespace {

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IrrepSpec leaf_of(const std::string& s) {
  RepExpr e = parse_rep(s);
  REQUIRE(e.kind == K::Leaf);
  return e.leaf;
}

}  // namespace

TEST_CASE("sugar elaborates to explicit highest weights") {
  CHECK(leaf_of("SU(6): Lambda^2") == IrrepSpec::of({Family::A, 5}, {0, 1, 0, 0, 0}));
  CHECK(leaf_of("E6: C^27") == IrrepSpec::of(parse_simple_type("E6"), {1, 0, 0, 0, 0, 0}));
  CHECK(leaf_of("SO(3): R^7") == IrrepSpec::of({Family::A, 1}, {6}));
  CHECK(leaf_of("SU(2): C^4") == IrrepSpec::of({Family::A, 1}, {3}));
  CHECK(leaf_of("SU(3): S^2 C^3") == IrrepSpec::of({Family::A, 2}, {2, 0}));
  CHECK(leaf_of("Spin(7): R^8") == IrrepSpec::of({Family::B, 3}, {0, 0, 1}));
  CHECK(leaf_of("Spin(9): spin") == IrrepSpec::of({Family::B, 4}, {0, 0, 0, 1}));
  CHECK(leaf_of("SO(7)") == IrrepSpec::of({Family::B, 3}, {1, 0, 0}));
  CHECK(leaf_of("SP(2): Q^2") == IrrepSpec::of({Family::C, 2}, {1, 0}));
  CHECK(leaf_of("SO(5): Lambda^2") == IrrepSpec::of({Family::B, 2}, {0, 2}));
  CHECK(leaf_of("G2: adjoint").weight == root_system(parse_simple_type("G2")).highest_root_labels());
  CHECK(leaf_of("U(1): [3]") == IrrepSpec::torus({3}));
  CHECK(leaf_of("SU(4): [1, 0, 1]") == IrrepSpec::of({Family::A, 3}, {1, 0, 1}));
}

TEST_CASE("combinators") {
  RepExpr e = parse_rep("SO(3): R^3 (x)_R G2: R^7");
  REQUIRE(e.kind == K::TensorR);
  CHECK(e.children[0].leaf == IrrepSpec::of({Family::A, 1}, {2}));
  CHECK(e.children[1].leaf == IrrepSpec::of(parse_simple_type("G2"), {1, 0}));
  CHECK(e.group_label == "SO3xG2");
  CHECK(e.rep_label == "R^3 (x)_R R^7");

  RepExpr so4 = parse_rep("SO(4): R^4");
  CHECK(so4.kind == K::TensorH);
  CHECK(so4.group_label == "SO4");

  RepExpr u = parse_rep("U(3) (x)_C SP(2)");
  CHECK(u.kind == K::TensorC);
  CHECK(expr_real_dim(u) == 24);

  // Left-associative.
  RepExpr s = parse_rep("SU(2) (+) SU(2) (+) SU(2)");
  REQUIRE(s.kind == K::Sum);
  CHECK(s.children[0].kind == K::Sum);
  CHECK(s.children[1].kind == K::Leaf);

  RepExpr p = parse_rep("SU(2) (+) (SU(2) (+) SU(2))");
  CHECK(p.children[1].kind == K::Sum);
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_rep("SO(3):R^3(x)_R G2:R^7") == parse_rep("  SO ( 3 ) : R ^ 3  ( x ) _ R  G2 : R^7 "));
}

TEST_CASE("sugar dimensions match the nominal ones") {
  for (int n = 3; n <= 10; ++n) {
    CHECK(complex_dim(leaf_of("SU(" + std::to_string(n) + "): Lambda^2")) == n * (n - 1) / 2);
    CHECK(complex_dim(leaf_of("SU(" + std::to_string(n) + "): S^2")) == n * (n + 1) / 2);
    CHECK(complex_dim(leaf_of("SU(" + std::to_string(n) + "): C^" + std::to_string(n))) == n);
  }
  for (int n = 5; n <= 12; ++n) {
    CHECK(complex_dim(leaf_of("SO(" + std::to_string(n) + "): Lambda^2")) == n * (n - 1) / 2);
    CHECK(complex_dim(leaf_of("SO(" + std::to_string(n) + "): S^2_0")) == n * (n + 1) / 2 - 1);
    CHECK(complex_dim(leaf_of("SO(" + std::to_string(n) + "): R^" + std::to_string(n))) == n);
  }
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(complex_dim(leaf_of("SP(" + std::to_string(n) + "): Lambda^" + std::to_string(k))) ==
            binom(2 * n, k) - (k >= 2 ? binom(2 * n, k - 2) : 0));
  CHECK(complex_dim(leaf_of("SU(8): Lambda^4")) == 70);
  CHECK(complex_dim(leaf_of("Spin(16): R^128")) == 128);
  CHECK(real_dim(leaf_of("Spin(12): C^32")) == 64);
}

TEST_CASE("print then parse is stable") {
  const char* corpus[] = {
      "SO(3): R^7",
      "U(2): C^4",
      "SO(3): R^3 (x)_R G2: R^7",
      "SU(3): S^2",
      "SU(3) (x)_C SU(3)",
      "SO(3) (x)_R U(2)",
      "SO(4) (x)_R Spin(7): R^8",
      "U(3) (x)_C SP(2)",
      "SP(3) (x)_H SP(1)",
      "SO(3) (+) SO(3): R^5",
      "T(2): [1,-1] (+) T(2): [0,1]",
      "E7: C^56",
      "Spin(10): C^16",
      "SO(8): S^2_0",
  };
  for (const char* s : corpus) {
    RepExpr a = parse_rep(s);
    std::string printed = print_rep(a);
    RepExpr b = parse_rep(printed);
    CHECK_MESSAGE(a == b, s << " -> " << printed);
    CHECK(print_rep(b) == printed);
  }
}

TEST_CASE("syntax errors carry byte offsets") {
  auto offset_of = [](const std::string& s) -> long {
    try {
      parse_rep(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset);
    }
    return -1;
  };
  CHECK(offset_of("SU(3") == 4);
  CHECK(offset_of("XY(3)") == 0);
  CHECK(offset_of("SU(3): Foo") == 7);
  CHECK(offset_of("SU(3) (x)_Z SU(3)") == 10);
  CHECK(offset_of("SU(3) SU(3)") == 6);
  CHECK(offset_of("") == 0);
}

TEST_CASE("type errors") {
  CHECK_THROWS_AS(parse_rep("SO(3): [1]"), TypeError);
  CHECK_THROWS_AS(parse_rep("SO(3): C^2"), TypeError);
  CHECK_THROWS_AS(parse_rep("SO(7): R^8"), TypeError);  // the spin representation does not factor through SO7
  CHECK_THROWS_AS(parse_rep("SO(3) (x)_H SP(1)"), TypeError);
  CHECK_THROWS_AS(parse_rep("SO(3) (x)_C SU(3)"), TypeError);
  CHECK_THROWS_AS(parse_rep("SU(3): [1,0,0]"), TypeError);
  CHECK_THROWS_AS(parse_rep("SU(3) (+) SU(4)"), TypeError);
  try {
    parse_rep("SO(3) (x)_H SP(1)");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("SO3") != std::string::npos);
  }
}
