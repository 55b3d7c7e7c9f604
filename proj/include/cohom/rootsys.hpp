// Simple Lie types, root data, Weyl dimension and dominant weight enumeration.
#pragma once

#include <string>
#include <vector>

#include "cohom/field.hpp"

namespace cohom {

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // e.g. "A5"
  auto operator<=>(const SimpleType&) const = default;
};

bool is_valid(const SimpleType& t);
SimpleType parse_simple_type(const std::string& s);  // "E6", "B3"

// Dynkin labels (coordinates in the fundamental weight basis).
using Weight = std::vector<int>;

struct RootSystem {
  SimpleType type;
  int rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee>; column j holds the labels of alpha_j.
  std::vector<std::vector<int>> cartan;
  // Symmetrized form on simple roots, short roots of squared length 2.
  std::vector<std::vector<int>> form;
  // Positive roots in simple-root coordinates, sorted by height then lexicographically.
  std::vector<std::vector<int>> positive_roots;
  // Matching coroots in simple-coroot coordinates.
  std::vector<std::vector<int>> positive_coroots;
  // Inverse Cartan matrix (simple-root coordinates of fundamental weights, by column).
  std::vector<std::vector<Rational>> cartan_inv;

  int group_dim() const { return rank + 2 * static_cast<int>(positive_roots.size()); }
  Weight rho() const { return Weight(rank, 1); }
  Weight root_labels(const std::vector<int>& root) const;
  std::vector<Rational> root_coords(const Weight& w) const;  // simple-root coordinates
  Rational inner(const Weight& x, const Weight& y) const;
  int pair_coroot(const Weight& w, size_t k) const;  // <w, beta_k^vee>
  Weight highest_root_labels() const;
  Weight simple_root(int i) const;  // labels of alpha_i
  Weight reflect(const Weight& w, int i) const;
  int index_of_root(const std::vector<int>& root) const;  // -1 if not a positive root
};

RootSystem build_root_system(const SimpleType& t);
// Cached instance; safe for concurrent readers.
const RootSystem& root_system(const SimpleType& t);

bool is_dominant(const Weight& w);
Integer weyl_dim(const RootSystem& rs, const Weight& lam);
long weyl_dim_small(const RootSystem& rs, const Weight& lam);  // throws when it does not fit

std::vector<Weight> dominant_weights_up_to_dim(const RootSystem& rs, long maxdim);

// Dominant representative of the Weyl orbit of w.
Weight dominant_conjugate(const RootSystem& rs, const Weight& w);
Weight longest_element_dual(const RootSystem& rs, const Weight& lam);
// Reduced word for w0 (indices of simple reflections, applied right to left).
std::vector<int> longest_element_word(const RootSystem& rs);

// Classical dimension of the group for a type (closed formulas).
int classical_group_dim(const SimpleType& t);

// Weights mu with lam - mu in the positive root cone (dominance order), for dominant inputs.
bool dominates(const RootSystem& rs, const Weight& lam, const Weight& mu);

std::string weight_to_string(const Weight& w);

}  // namespace cohom
