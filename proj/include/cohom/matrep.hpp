// Real matrix models of compact group representations built from irreducible leaves.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohom/irrepmeta.hpp"
#include "cohom/linalg.hpp"

namespace cohom {

// Expression tree over irreducible leaves.
struct RepExpr {
  enum class Kind { Leaf, TensorR, TensorC, TensorH, Sum };
  Kind kind = Kind::Leaf;
  IrrepSpec leaf;
  std::vector<RepExpr> children;
  std::string group_label;  // e.g. "SO3xG2"
  std::string rep_label;    // e.g. "R^3 (x)_R R^7"
  std::string source;       // surface syntax reproduced by the printer, if any

  static RepExpr make_leaf(IrrepSpec spec, std::string group_label = "", std::string rep_label = "");
  static RepExpr tensor(Kind k, RepExpr a, RepExpr b);
  static RepExpr sum(RepExpr a, RepExpr b);
  bool operator==(const RepExpr& o) const;  // structure and leaves; labels ignored
};

// Structural checks shared by the parser and build_action; throws TypeError.
struct TypeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
void typecheck(const RepExpr& e);

// Irreducible leaf kinds as seen by the combinators.
FSType leaf_type(const IrrepSpec& s);
long expr_real_dim(const RepExpr& e);
std::string default_group_label(const IrrepSpec& s);
std::string default_rep_label(const IrrepSpec& s);
// True when the weight factors through SO(n) (B, D) or SO(3) (A1 with even label).
bool vector_type(const IrrepSpec& s);

struct GroupFactor {
  std::optional<SimpleType> simple;
  int torus_rank = 0;
  int t_offset = 0;    // first coordinate in the maximal torus
  int gen_offset = 0;  // first generator index
  int dim() const;
  bool operator==(const GroupFactor& o) const { return simple == o.simple && torus_rank == o.torus_rank; }
};

struct LieAction {
  int dim_V = 0;
  int group_dim = 0;
  std::vector<Sparse<Rational>> generators;  // basis of the Lie algebra image, skew for gram
  Sparse<Rational> gram;                     // invariant positive definite form Q
  std::optional<Sparse<Rational>> J;         // invariant complex structure, if any
  std::optional<Sparse<Rational>> jj;        // invariant quaternionic structure anticommuting with J
  std::optional<FSType> type;                // set for irreducible leaves
  std::string group_label, rep_label;
  RepExpr expr;

  std::vector<GroupFactor> factors;
  int t_rank = 0;
  std::vector<Weight> t_weights;  // weights of V (x) C on the maximal torus, with multiplicity
  std::vector<Weight> t_roots;    // positive roots of G on the maximal torus
  // Real vectors spanning (complexified) weight spaces; used to seed isotropy searches.
  std::vector<Vec<Rational>> weight_points;

  // Tensor nodes: the factors and the map (v, w) -> v (x) w into V.
  std::shared_ptr<const LieAction> left, right;
  std::function<Vec<Rational>(const Vec<Rational>&, const Vec<Rational>&)> pure_tensor;

  // Reductions modulo p, filled at construction.
  std::vector<Sparse<Fp>> generators_mod;
  Sparse<Fp> gram_mod;

  // X applied to v for all generators, as columns of a dim_V x group_dim matrix.
  template <class F>
  Dense<F> tangent_matrix(const Vec<F>& v) const;
};

std::shared_ptr<const LieAction> build_action(const RepExpr& e);

// Type of an irrep from the space of invariant bilinear forms, solved on weight-graded
// unknowns modulo p. Independent of the parity criterion.
FSType fs_type_by_invariant_form(const IrrepSpec& s);
enum class BilinearForm { Symmetric, Antisymmetric, None };
std::string to_string(BilinearForm b);
BilinearForm invariant_bilinear_form(const IrrepSpec& s);
// Invariant antilinear structure with square -1 on a quaternionic leaf, realified.
Sparse<Rational> quaternionic_structure(const LieAction& leaf);

template <class F>
Dense<F> LieAction::tangent_matrix(const Vec<F>& v) const {
  Dense<F> t(dim_V, group_dim);
  for (int k = 0; k < group_dim; ++k) {
    Vec<F> col;
    if constexpr (std::is_same_v<F, Fp>)
      col = generators_mod[k].apply(v);
    else
      col = generators[k].apply(v);
    t.set_col(k, col);
  }
  return t;
}

}  // namespace cohom
