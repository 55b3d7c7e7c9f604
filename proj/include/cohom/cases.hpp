// The maximal torus of SU(k+1) on C^{k+1} and the simplex line configuration behind it.
#pragma once

#include <string>
#include <vector>

#include "cohom/geometry.hpp"

namespace cohom {

struct TorusWeights {
  int k = 0;
  std::vector<Weight> weights;                // k+1 characters, in the coordinates theta_1..theta_k
  std::vector<std::vector<Rational>> metric;  // bi-invariant inner product on the dual of the torus algebra
};
TorusWeights su_torus_weights(int k);

// Sum zero, spanning, normalized Gram entries -1/k, and pairwise non-proportional when k > 1.
bool torus_weights_ok(const TorusWeights& t);

// T^k acting on C^{k+1} through the characters above.
RepExpr torus_case_expr(int k);

struct TorusCase {
  int cohom = 0;
  bool no_boundary = false;
  bool l_equals_k_plus_1 = false;
  int lines = 0;  // irreducible summands, one character each
  std::string certificate;
};
TorusCase verify_torus_case(int k, const GeomOptions& opt = {});

// Lines through the given vectors: k+1 of them, spanning a k-dimensional space, equiangular with
// angle other than pi/2, and permuted by a group of orthogonal maps realizing S_{k+1}.
bool simplex_line_configuration(const std::vector<Vec<Rational>>& lines, int k);
bool equiangular_symmetry_check(int k);

}  // namespace cohom
