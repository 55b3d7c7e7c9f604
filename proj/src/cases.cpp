#include "cohom/cases.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cohom {

using Q = Rational;

TorusWeights su_torus_weights(int k) {
  if (k < 1) throw std::invalid_argument("su_torus_weights: k must be at least 1");
  TorusWeights t;
  t.k = k;
  // diag(e^{i theta_1}, ..., e^{i theta_{k+1}}) with theta_{k+1} = -(theta_1 + ... + theta_k).
  for (int i = 0; i < k; ++i) {
    Weight w(k, 0);
    w[i] = 1;
    t.weights.push_back(w);
  }
  t.weights.push_back(Weight(k, -1));
  // The trace form on the torus algebra is I + J in these coordinates; its dual is I - J/(k+1).
  t.metric.assign(k, std::vector<Q>(k, Q(-1, k + 1)));
  for (int i = 0; i < k; ++i) t.metric[i][i] += 1;
  return t;
}

namespace {

Q pair(const TorusWeights& t, const Weight& a, const Weight& b) {
  Q s = 0;
  for (int i = 0; i < t.k; ++i)
    for (int j = 0; j < t.k; ++j) s += t.metric[i][j] * a[i] * b[j];
  return s;
}

}  // namespace

bool torus_weights_ok(const TorusWeights& t) {
  const int k = t.k;
  if (static_cast<int>(t.weights.size()) != k + 1) return false;
  Weight sum(k, 0);
  for (const auto& w : t.weights)
    for (int i = 0; i < k; ++i) sum[i] += w[i];
  if (std::any_of(sum.begin(), sum.end(), [](int x) { return x != 0; })) return false;
  Dense<Q> m(k, k + 1);
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i < k; ++i) m(i, j) = t.weights[j][i];
  if (rank(m) != k) return false;
  for (int a = 0; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      Q ab = pair(t, t.weights[a], t.weights[b]);
      Q aa = pair(t, t.weights[a], t.weights[a]), bb = pair(t, t.weights[b], t.weights[b]);
      if (k > 1 && ab * ab == aa * bb) return false;  // proportional; unavoidable on a line
      // cos = -1/k, compared without square roots.
      if (sgn(ab) >= 0 || ab * ab * k * k != aa * bb) return false;
    }
  return true;
}

RepExpr torus_case_expr(int k) {
  TorusWeights t = su_torus_weights(k);
  RepExpr e = RepExpr::make_leaf(IrrepSpec::torus(t.weights[0]));
  for (int i = 1; i <= k; ++i) e = RepExpr::sum(e, RepExpr::make_leaf(IrrepSpec::torus(t.weights[i])));
  e.group_label = "T" + std::to_string(k);
  e.rep_label = "C^" + std::to_string(k + 1);
  return e;
}

TorusCase verify_torus_case(int k, const GeomOptions& opt) {
  if (k < 1 || k > 8) throw std::invalid_argument("verify_torus_case: need 1 <= k <= 8");
  auto a = build_action(torus_case_expr(k));
  TorusCase r;
  r.cohom = cohomogeneity(*a, opt);
  CertificateResult cert = no_boundary_certificate(*a, opt);
  r.no_boundary = cert.status == Certificate::CertifiedNo;
  r.certificate = cert.reason;
  // One character per irreducible summand; for k = 1 the two characters span the same line.
  std::set<Weight> chars;
  std::vector<const RepExpr*> stack{&a->expr};
  while (!stack.empty()) {
    const RepExpr* e = stack.back();
    stack.pop_back();
    if (e->kind == RepExpr::Kind::Leaf)
      chars.insert(e->leaf.weight);
    else
      for (const auto& c : e->children) stack.push_back(&c);
  }
  r.lines = static_cast<int>(chars.size());
  r.l_equals_k_plus_1 = r.lines == k + 1;
  return r;
}

bool simplex_line_configuration(const std::vector<Vec<Q>>& lines, int k) {
  const int l = static_cast<int>(lines.size());
  if (l != k + 1 || l == 0) return false;
  const int m = static_cast<int>(lines[0].size());
  Dense<Q> v(m, l);
  for (int j = 0; j < l; ++j) v.set_col(j, lines[j]);
  if (rank(v) != k) return false;
  std::vector<std::vector<Q>> g(l, std::vector<Q>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g[i][j] = dot(lines[i], lines[j]);
  // Equiangular with cos^2 = 1/k^2; this excludes right angles and repeated lines.
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (g[i][j] * g[i][j] * k * k != g[i][i] * g[j][j]) return false;
  // A permutation is induced by an isometry of the span iff it preserves the Gram matrix,
  // since the Gram matrix determines all linear relations among the vectors.
  std::vector<int> s(l);
  std::iota(s.begin(), s.end(), 0);
  do {
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (g[s[i]][s[j]] != g[i][j]) return false;
  } while (std::next_permutation(s.begin(), s.end()));
  return true;
}

bool equiangular_symmetry_check(int k) {
  if (k < 2 || k > 6) throw std::invalid_argument("equiangular_symmetry_check: need 2 <= k <= 6");
  // Vertices of the regular simplex in the hyperplane x_1 + ... + x_{k+1} = 0.
  std::vector<Vec<Q>> lines;
  for (int i = 0; i <= k; ++i) {
    Vec<Q> v(k + 1, Q(-1, k + 1));
    v[i] += 1;
    lines.push_back(v);
  }
  return simplex_line_configuration(lines, k);
}

}  // namespace cohom
