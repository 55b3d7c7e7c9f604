// Per-irrep metadata: type (real/complex/quaternionic), real dimension, weight multiplicities.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohom/rootsys.hpp"

namespace cohom {

// A simple factor with a dominant highest weight, or a torus with an integer character.
struct IrrepSpec {
  std::optional<SimpleType> simple;  // empty for a torus
  int torus_rank = 0;
  Weight weight;
  std::string global_form_label;  // display only

  static IrrepSpec of(SimpleType t, Weight w, std::string label = "");
  static IrrepSpec torus(Weight character, std::string label = "");
  bool is_torus() const { return !simple.has_value(); }
  std::string describe() const;  // "A1[3]" or "T2(1,-1)"
  bool operator==(const IrrepSpec& o) const {
    return simple == o.simple && torus_rank == o.torus_rank && weight == o.weight;
  }
};

void validate(const IrrepSpec& s);

enum class FSType { Real, Complex, Quaternionic };
std::string to_string(FSType t);
char type_letter(FSType t);  // r, c, q

using WeightMultiset = std::map<Weight, int>;

// Parity criterion for self-dual weights; cross-checked against the invariant-form oracle in tests.
FSType fs_type(const IrrepSpec& spec);
long complex_dim(const IrrepSpec& spec);
long real_dim(const IrrepSpec& spec);

// Multiplicities of dominant weights (Freudenthal recursion, memoized).
const std::map<Weight, int>& dominant_multiplicities(const SimpleType& t, const Weight& lam);
WeightMultiset weight_multiplicities(const IrrepSpec& spec);
int zero_weight_dim(const IrrepSpec& spec);
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);

}  // namespace cohom
