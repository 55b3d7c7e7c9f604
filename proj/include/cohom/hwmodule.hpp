// Highest-weight modules over Q with Chevalley generators, contravariant form and
// the intertwiner of the Chevalley involution.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cohom/irrepmeta.hpp"
#include "cohom/linalg.hpp"

namespace cohom {

struct HWModule {
  SimpleType type;
  Weight lambda;
  int dim = 0;
  std::vector<Weight> weights;  // weight spaces, ordered by depth below lambda
  std::vector<int> offset, mult;
  std::map<Weight, int> windex;
  std::vector<int> basis_space;  // weight-space index of each basis vector

  std::vector<Sparse<Rational>> e, f;  // simple raising/lowering operators
  std::vector<Sparse<Rational>> h;     // diagonal Cartan operators
  std::vector<Sparse<Rational>> root_e, root_f;  // one pair per positive root
  Sparse<Rational> S;                           // contravariant form: e^T S = S f

  // Present for self-dual weights: N e_i = -f_i N, N h = -h N, N^2 = n_square * 1.
  std::optional<Sparse<Rational>> N;
  Rational n_square;

  const Weight& weight_of(int basis_index) const { return weights[basis_space[basis_index]]; }
};

// Lowering-word generation: candidates f_i b are separated by their images under all e_j,
// which is injective below the highest weight in an irreducible module.
HWModule build_module(const SimpleType& t, const Weight& lam);
std::shared_ptr<const HWModule> module_cache(const SimpleType& t, const Weight& lam);

}  // namespace cohom
