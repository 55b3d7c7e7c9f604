#include "cohom/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cohom {

using Q = Rational;

MatAction<Q> exact_action(const LieAction& a) { return {a.dim_V, a.generators, a.gram}; }
MatAction<Fp> modular_action(const LieAction& a) { return {a.dim_V, a.generators_mod, a.gram_mod}; }

Vec<Q> sample_vector(int dim, std::uint64_t seed, int index) {
  RationalSampler s(seed * 1000003ULL + static_cast<std::uint64_t>(index) * 7919ULL + 1);
  return s.vector(dim);
}

std::string to_string(BoundaryStatus b) {
  switch (b) {
    case BoundaryStatus::Yes: return "yes";
    case BoundaryStatus::CertifiedNo: return "no";
    case BoundaryStatus::Unknown: return "unknown";
  }
  return "?";
}

namespace {

template <class F>
int frank(const Dense<F>& m) {
  if (m.r == 0 || m.c == 0) return 0;
  if constexpr (std::is_same_v<F, Q>)
    return bareiss_rank(m);
  else
    return rank(m);
}

template <class F>
Vec<F> lift(const Vec<Q>& v) {
  if constexpr (std::is_same_v<F, Q>)
    return v;
  else
    return convert_vec<Fp>(v);
}

template <class F>
Sparse<Fp> to_mod(const Sparse<F>& m) {
  if constexpr (std::is_same_v<F, Fp>)
    return m;
  else
    return m.template convert<Fp>();
}

template <class F>
Sparse<F> combination(const std::vector<Sparse<F>>& gens, const Vec<F>& c, int dim) {
  std::vector<std::tuple<int, int, F>> t;
  for (size_t k = 0; k < gens.size(); ++k) {
    if (FieldOps<F>::is_zero(c[k])) continue;
    for (int i = 0; i < gens[k].r; ++i)
      for (const auto& [j, v] : gens[k].rows[i]) t.emplace_back(i, j, c[k] * v);
  }
  return Sparse<F>::from_triplets(dim, dim, std::move(t));
}

template <class F>
Dense<F> apply_cols(const Sparse<F>& m, const Dense<F>& b) {
  Dense<F> out(m.r, b.c);
  for (int j = 0; j < b.c; ++j) out.set_col(j, m.apply(b.col(j)));
  return out;
}

// Matrix of X restricted to the invariant subspace spanned by the columns of b.
template <class F>
Sparse<F> restrict_to(const Sparse<F>& x, const Dense<F>& b, const Coordinates<F>& co) {
  Dense<F> r(b.c, b.c);
  for (int j = 0; j < b.c; ++j) r.set_col(j, co(x.apply(b.col(j))));
  return Sparse<F>::from_dense(r);
}

template <class F>
Sparse<F> restrict_gram(const Sparse<F>& q, const Dense<F>& b) {
  Dense<F> qb = apply_cols(q, b);
  return Sparse<F>::from_dense(b.transpose() * qb);
}

// Basis of {w : <g_k, w>_q = 0 for all columns g_k}.
template <class F>
Dense<F> orthogonal_complement(const Sparse<F>& q, const Dense<F>& cols, int dim) {
  if (cols.c == 0) return Dense<F>::identity(dim);
  Dense<F> qc = apply_cols(q, cols);
  return kernel(qc.transpose());
}

template <class F>
Dense<F> common_kernel(const std::vector<Sparse<F>>& ms, int dim) {
  std::vector<std::vector<F>> rows;
  Dense<F> stacked(0, dim);
  int r = 0;
  for (const auto& m : ms) r += m.r;
  stacked = Dense<F>(r, dim);
  int off = 0;
  for (const auto& m : ms) {
    for (int i = 0; i < m.r; ++i)
      for (const auto& [j, v] : m.rows[i]) stacked(off + i, j) = v;
    off += m.r;
  }
  if (r == 0) return Dense<F>::identity(dim);
  return kernel(stacked);
}

template <class F>
Vec<F> generic_in(const Dense<F>& basis, std::uint64_t seed, int index) {
  Vec<F> c = lift<F>(sample_vector(basis.c, seed, index));
  return basis.apply(c);
}

// Effective dimension of the span of a list of matrices.
template <class F>
int span_dim(const std::vector<Sparse<F>>& ms) {
  if (ms.empty()) return 0;
  int d = ms[0].r;
  std::map<long, int> pos;
  for (const auto& m : ms)
    for (int i = 0; i < m.r; ++i)
      for (const auto& e : m.rows[i]) pos.emplace(static_cast<long>(i) * d + e.first, 0);
  int k = 0;
  for (auto& [key, idx] : pos) idx = k++;
  Dense<F> flat(k, static_cast<int>(ms.size()));
  for (size_t c = 0; c < ms.size(); ++c)
    for (int i = 0; i < ms[c].r; ++i)
      for (const auto& [j, v] : ms[c].rows[i]) flat(pos.at(static_cast<long>(i) * d + j), static_cast<int>(c)) = v;
  return frank(flat);
}

template <class F>
struct Regular {
  Vec<F> v;
  int rank = -1;
};

template <class F>
Regular<F> regular_point(const MatAction<F>& a, std::uint64_t seed, int samples) {
  Regular<F> best;
  for (int s = 0; s < std::max(1, samples); ++s) {
    Vec<F> v = lift<F>(sample_vector(a.dim, seed, s));
    int r = frank(a.tangent(v));
    if (r > best.rank) best = {v, r};
  }
  return best;
}

template <class F>
Dense<F> normal_space_at(const MatAction<F>& a, const Vec<F>& p) {
  return orthogonal_complement(a.gram, a.tangent(p), a.dim);
}

template <class F>
bool polar_at(const MatAction<F>& a, const Vec<F>& v) {
  Dense<F> n = normal_space_at(a, v);
  if (n.c == 0) return true;
  Dense<F> qn = apply_cols(a.gram, n);
  for (int u = 0; u < n.c; ++u) {
    Vec<F> x = n.col(u);
    for (const auto& g : a.gens) {
      Vec<F> y = g.apply(x);
      for (int w = 0; w < n.c; ++w) {
        F s = FieldOps<F>::zero();
        for (int i = 0; i < a.dim; ++i)
          if (!FieldOps<F>::is_zero(y[i])) s += qn(i, w) * y[i];
        if (!FieldOps<F>::is_zero(s)) return false;
      }
    }
  }
  return true;
}

template <class F>
bool polar_generic(const MatAction<F>& a, std::uint64_t seed, int samples) {
  Regular<F> r1 = regular_point(a, seed, samples);
  if (!polar_at(a, r1.v)) return false;
  Regular<F> r2 = regular_point(a, seed + 101, std::max(1, samples));
  if (r2.rank != r1.rank) r2 = r1;
  return polar_at(a, r2.v);
}

template <class F>
MatAction<F> reduce_to_fixed(const MatAction<F>& a, const Dense<F>& b, int* reduced_dim) {
  // Generators preserving span(b), restricted to it.
  const int m = b.c;
  Dense<F> ann = kernel(b.transpose());  // columns annihilate span(b)
  std::vector<Dense<F>> xb;
  for (const auto& g : a.gens) xb.push_back(apply_cols(g, b));
  Dense<F> eq(ann.c * m, static_cast<int>(a.gens.size()));
  for (size_t k = 0; k < a.gens.size(); ++k) {
    Dense<F> l = ann.transpose() * xb[k];
    for (int i = 0; i < l.r; ++i)
      for (int j = 0; j < l.c; ++j) eq(i * m + j, static_cast<int>(k)) = l(i, j);
  }
  Dense<F> keep = eq.r == 0 ? Dense<F>::identity(static_cast<int>(a.gens.size())) : kernel(eq);
  Coordinates<F> co(b);
  MatAction<F> out;
  out.dim = m;
  out.gram = restrict_gram(a.gram, b);
  std::vector<Sparse<F>> restricted;
  for (int j = 0; j < keep.c; ++j) restricted.push_back(restrict_to(combination(a.gens, keep.col(j), a.dim), b, co));
  // Keep an independent subset.
  std::vector<Sparse<F>> basis;
  int have = 0;
  for (auto& x : restricted) {
    basis.push_back(x);
    int d = span_dim(basis);
    if (d == have)
      basis.pop_back();
    else
      have = d;
  }
  out.gens = std::move(basis);
  *reduced_dim = have;
  return out;
}

template <class F>
std::optional<int> copolarity_bound_impl(const MatAction<F>& a, std::uint64_t seed, int samples,
                                         std::vector<int>& dims) {
  if (polar_generic(a, seed, samples)) return 0;
  MatAction<F> cur = a;
  for (int step = 0; step < 16; ++step) {
    Regular<F> r = regular_point(cur, seed + step, samples);
    Dense<F> iso = kernel(cur.tangent(r.v));
    if (iso.c == 0) {
      if (step == 0) return std::nullopt;
      return span_dim(cur.gens);
    }
    std::vector<Sparse<F>> k;
    for (int j = 0; j < iso.c; ++j) k.push_back(combination(cur.gens, iso.col(j), cur.dim));
    Dense<F> fixed = common_kernel(k, cur.dim);
    int d = 0;
    cur = reduce_to_fixed(cur, fixed, &d);
    dims.push_back(d);
  }
  throw std::logic_error("copolarity reduction did not stabilize");
}

template <class F>
int section_closure(const MatAction<F>& a, std::uint64_t seed, int samples) {
  Regular<F> r = regular_point(a, seed, samples);
  Dense<F> sigma = normal_space_at(a, r.v);
  int stale = 0, index = 0;
  while (stale < 3 && sigma.c < a.dim) {
    Vec<F> w = generic_in(sigma, seed + 7777, index++);
    if (frank(a.tangent(w)) < r.rank) continue;
    Dense<F> nw = normal_space_at(a, w);
    Dense<F> both(a.dim, sigma.c + nw.c);
    for (int j = 0; j < sigma.c; ++j) both.set_col(j, sigma.col(j));
    for (int j = 0; j < nw.c; ++j) both.set_col(sigma.c + j, nw.col(j));
    Dense<F> grown = column_basis(both);
    if (grown.c == sigma.c)
      ++stale;
    else
      stale = 0;
    sigma = std::move(grown);
    if (index > 64) break;
  }
  return sigma.c;
}

template <class F>
bool use_exact(const LieAction& a, const GeomOptions& opt) {
  (void)sizeof(F);
  if (opt.backend == Backend::Exact) return true;
  if (opt.backend == Backend::Modular) return false;
  return a.dim_V <= opt.exact_max_dim;
}

bool exact_for(const LieAction& a, const GeomOptions& opt) { return use_exact<Q>(a, opt); }

}  // namespace

template <class F>
SliceData<F> slice_at(const MatAction<F>& a, const Vec<F>& p) {
  SliceData<F> s;
  s.base_point = p;
  Dense<F> t = a.tangent(p);
  s.isotropy = kernel(t);
  s.normal_space = orthogonal_complement(a.gram, t, a.dim);
  s.slice_action.dim = s.normal_space.c;
  s.slice_action.gram = restrict_gram(a.gram, s.normal_space);
  if (s.normal_space.c > 0) {
    Coordinates<F> co(s.normal_space);
    for (int j = 0; j < s.isotropy.c; ++j)
      s.slice_action.gens.push_back(restrict_to(combination(a.gens, s.isotropy.col(j), a.dim), s.normal_space, co));
  }
  return s;
}

template SliceData<Q> slice_at(const MatAction<Q>&, const Vec<Q>&);
template SliceData<Fp> slice_at(const MatAction<Fp>&, const Vec<Fp>&);

template <class F>
int generic_cohomogeneity(const MatAction<F>& a, std::uint64_t seed, int samples) {
  if (a.dim == 0) return 0;
  return a.dim - regular_point(a, seed, samples).rank;
}

template int generic_cohomogeneity(const MatAction<Q>&, std::uint64_t, int);
template int generic_cohomogeneity(const MatAction<Fp>&, std::uint64_t, int);

int cohomogeneity(const LieAction& a, const GeomOptions& opt) {
  if (exact_for(a, opt)) return generic_cohomogeneity(exact_action(a), opt.seed, opt.samples);
  return generic_cohomogeneity(modular_action(a), opt.seed, opt.samples);
}

bool is_polar(const LieAction& a, const GeomOptions& opt) {
  if (exact_for(a, opt)) return polar_generic(exact_action(a), opt.seed, opt.samples);
  return polar_generic(modular_action(a), opt.seed, opt.samples);
}

SliceData<Q> principal_isotropy(const LieAction& a, const GeomOptions& opt) {
  MatAction<Q> m = exact_action(a);
  return slice_at(m, regular_point(m, opt.seed, opt.samples).v);
}

int principal_isotropy_dim(const LieAction& a, const GeomOptions& opt) {
  return a.group_dim - (a.dim_V - cohomogeneity(a, opt));
}

CopolarityBound copolarity_upper_bound(const LieAction& a, const GeomOptions& opt) {
  CopolarityBound b;
  const int c = cohomogeneity(a, opt);
  if (opt.backend == Backend::Exact)
    b.reduction_bound = copolarity_bound_impl(exact_action(a), opt.seed, opt.samples, b.reduction_dims);
  else
    b.reduction_bound = copolarity_bound_impl(modular_action(a), opt.seed, opt.samples, b.reduction_dims);
  b.section_dim = generalized_section_dim(a, opt);
  b.trivial = b.section_dim == a.dim_V;
  b.value = b.section_dim - c;
  if (b.reduction_bound && *b.reduction_bound < *b.value) {
    b.value = b.reduction_bound;
    b.trivial = false;
  }
  if (b.trivial) b.note = "the section closure is all of V";
  return b;
}

int generalized_section_dim(const LieAction& a, const GeomOptions& opt) {
  if (opt.backend == Backend::Exact) return section_closure(exact_action(a), opt.seed, opt.samples);
  return section_closure(modular_action(a), opt.seed, opt.samples);
}

// ---------------------------------------------------------------- boundary

namespace {

struct WitnessShape {
  int iso = 0, fixed = 0, moving = 0;
};

// Codimension-one stratum test at p: the isotropy acts with cohomogeneity one on the part of
// the normal space it moves. The final rank is taken modulo p, which can only overstate the
// cohomogeneity, so a value of one is certified whenever the slice data are exact.
template <class F>
std::optional<WitnessShape> witness_test(const MatAction<F>& a, const Vec<F>& p, std::uint64_t seed) {
  if (is_zero_vec(p)) return std::nullopt;
  SliceData<F> s = slice_at(a, p);
  if (s.isotropy.c == 0) return std::nullopt;
  const int nn = s.normal_space.c;
  Dense<F> fixed = common_kernel(s.slice_action.gens, nn);
  if (fixed.c == nn) return std::nullopt;
  Dense<F> moving = orthogonal_complement(s.slice_action.gram, fixed, nn);
  Coordinates<F> co(moving);
  MatAction<Fp> h;
  h.dim = moving.c;
  for (const auto& g : s.slice_action.gens) h.gens.push_back(to_mod(restrict_to(g, moving, co)));
  if (generic_cohomogeneity(h, seed, 2) != 1) return std::nullopt;
  return WitnessShape{s.isotropy.c, fixed.c, moving.c};
}

std::vector<Vec<Q>> witness_candidates(const LieAction& a, std::uint64_t seed) {
  std::vector<Vec<Q>> c;
  std::set<Vec<Q>> seen;
  auto add = [&](Vec<Q> v) {
    if (is_zero_vec(v)) return;
    if (seen.insert(v).second) c.push_back(std::move(v));
  };
  const auto& wp = a.weight_points;
  for (const auto& p : wp) add(p);
  const size_t m = std::min<size_t>(wp.size(), 48);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      Vec<Q> v = wp[i];
      for (size_t k = 0; k < v.size(); ++k) v[k] += wp[j][k];
      add(std::move(v));
    }
  if (a.left && a.right && a.pure_tensor) {
    Vec<Q> v1 = sample_vector(a.left->dim_V, seed, 11), v2 = sample_vector(a.right->dim_V, seed, 12);
    add(a.pure_tensor(v1, v2));
    for (const auto& q : a.right->weight_points) add(a.pure_tensor(v1, q));
    for (const auto& q : a.left->weight_points) add(a.pure_tensor(q, v2));
    // Diagonal tensors sum_i c_i x_i (x) y_i over mutually orthogonal weight points.
    auto orthogonal_run = [](const LieAction& f) {
      std::vector<Vec<Q>> run;
      std::vector<Vec<Q>> pool = f.weight_points;
      for (int i = 0; i < f.dim_V; ++i) {
        Vec<Q> e(f.dim_V, Q(0));
        e[i] = 1;
        pool.push_back(std::move(e));
      }
      for (const auto& w : pool) {
        Vec<Q> qw = f.gram.apply(w);
        bool ok = true;
        for (const auto& u : run) ok = ok && dot(u, qw) == 0;
        if (ok) run.push_back(w);
      }
      return run;
    };
    std::vector<Vec<Q>> xs = orthogonal_run(*a.left), ys = orthogonal_run(*a.right);
    const size_t top = std::min(xs.size(), ys.size());
    RationalSampler coef(seed + 5);
    for (int shift = 0; shift < 2; ++shift)
      for (size_t r = 2; r <= top; ++r) {
        Vec<Q> v(a.dim_V, Q(0));
        for (size_t i = 0; i < r; ++i) {
          Vec<Q> t = a.pure_tensor(xs[i], ys[(i + shift) % ys.size()]);
          Q c = coef.next_nonzero();
          for (size_t k = 0; k < v.size(); ++k) v[k] += c * t[k];
        }
        add(std::move(v));
      }
  }
  return c;
}

}  // namespace

namespace {

using IVec = std::vector<long>;

// Z-basis of the lattice spanned by integer rows (Euclidean row reduction).
std::vector<IVec> lattice_basis(std::vector<IVec> rows, int t) {
  std::vector<IVec> basis;
  for (int col = 0; col < t; ++col) {
    while (true) {
      int piv = -1;
      for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv < 0 || std::labs(rows[i][col]) < std::labs(rows[piv][col]))) piv = static_cast<int>(i);
      if (piv < 0) break;
      bool done = true;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) == piv || rows[i][col] == 0) continue;
        long q = rows[i][col] / rows[piv][col];
        for (int j = 0; j < t; ++j) rows[i][j] -= q * rows[piv][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        basis.push_back(rows[piv]);
        rows.erase(rows.begin() + piv);
        break;
      }
    }
  }
  return basis;
}

struct Arrangement {
  std::vector<Weight> weights;  // with multiplicity
  std::vector<Weight> roots;
  int t = 0;
};

int rank_of(const std::vector<Weight>& vs, int t) {
  Dense<Q> m(static_cast<int>(vs.size()), t);
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < t; ++j) m(static_cast<int>(i), j) = vs[i][j];
  return vs.empty() ? 0 : frank(m);
}

bool in_span(const std::vector<Weight>& basis, const Weight& w, int t) {
  if (basis.empty()) {
    for (int x : w)
      if (x != 0) return false;
    return true;
  }
  std::vector<Weight> b = basis;
  int r = rank_of(b, t);
  b.push_back(w);
  return rank_of(b, t) == r;
}

// Proper flats of the arrangement of weight and root directions, each given by the
// directions it contains.
std::vector<std::vector<Weight>> torus_flats(const LieAction& a) {
  const int t = a.t_rank;
  std::vector<Weight> dirs;
  auto add_dir = [&](const Weight& w) {
    bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
    if (zero) return;
    for (const auto& d : dirs)
      if (rank_of({d, w}, t) == 1) return;
    dirs.push_back(w);
  };
  for (const auto& w : a.t_weights) add_dir(w);
  for (const auto& r : a.t_roots) add_dir(r);
  std::set<std::vector<int>> flats;  // by contained direction indices
  std::vector<std::vector<int>> frontier{{}};
  flats.insert({});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& fl : frontier) {
      std::vector<Weight> span;
      for (int i : fl) span.push_back(dirs[i]);
      for (size_t d = 0; d < dirs.size(); ++d) {
        if (std::find(fl.begin(), fl.end(), static_cast<int>(d)) != fl.end()) continue;
        std::vector<Weight> s2 = span;
        s2.push_back(dirs[d]);
        if (rank_of(s2, t) >= t) continue;
        std::vector<int> closed;
        for (size_t e = 0; e < dirs.size(); ++e)
          if (in_span(s2, dirs[e], t)) closed.push_back(static_cast<int>(e));
        if (flats.insert(closed).second) next.push_back(closed);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Weight>> out;
  for (const auto& fl : flats) {
    std::vector<Weight> span;
    for (int i : fl) span.push_back(dirs[i]);
    out.push_back(std::move(span));
  }
  return out;
}

// Torus elements x (in weight coordinates) with exp(pi x) of order two in the effective torus:
// a set of representatives of L*/2L*, L the lattice spanned by the weights. Empty when the
// torus does not act effectively.
std::optional<std::vector<std::vector<Q>>> torus_involutions(const LieAction& a) {
  const int t = a.t_rank;
  std::vector<IVec> rows;
  for (const auto& w : a.t_weights) rows.push_back(IVec(w.begin(), w.end()));
  std::vector<IVec> lb = lattice_basis(rows, t);
  if (static_cast<int>(lb.size()) != t) return std::nullopt;
  Dense<Q> aug(t, 2 * t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) aug(i, j) = lb[i][j];
    aug(i, t + i) = 1;
  }
  rref_inplace(aug);  // right half: inverse, whose columns are the dual basis
  std::vector<std::vector<Q>> out;
  for (long mask = 1; mask < (1L << t); ++mask) {
    std::vector<Q> x(t, Q(0));
    for (int k = 0; k < t; ++k)
      if (mask >> k & 1)
        for (int i = 0; i < t; ++i) x[i] += aug(i, t + k);
    out.push_back(std::move(x));
  }
  return out;
}

Q pairing(const std::vector<Q>& x, const Weight& w) {
  Q s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * w[i];
  return s;
}

bool even_integer(const Q& s) { return s.get_den() == 1 && mpz_even_p(s.get_num().get_mpz_t()); }

// Generator indices of the maximal torus, in weight-coordinate order.
std::vector<int> torus_generators(const LieAction& a) {
  std::vector<int> idx(a.t_rank, -1);
  for (const auto& f : a.factors) {
    int first = f.gen_offset;
    int rank = f.torus_rank;
    if (f.simple) {
      const RootSystem& rs = root_system(*f.simple);
      first += 2 * static_cast<int>(rs.positive_roots.size());
      rank = rs.rank;
    }
    for (int j = 0; j < rank; ++j) idx[f.t_offset + j] = first + j;
  }
  return idx;
}

// Exact dimension of the image of G.B in the orbit space, at a generic point of span(B).
int stratum_dim(const MatAction<Q>& a, const Dense<Q>& b, std::uint64_t seed, int index) {
  Vec<Q> p = generic_in(b, seed, index);
  Dense<Q> t = a.tangent(p);
  Dense<Q> both(a.dim, t.c + b.c);
  for (int j = 0; j < t.c; ++j) both.set_col(j, t.col(j));
  for (int j = 0; j < b.c; ++j) both.set_col(t.c + j, b.col(j));
  return frank(both) - frank(t);
}

}  // namespace

bool verify_boundary_witness(const LieAction& a, const Vec<Q>& p, std::uint64_t seed) {
  return witness_test(exact_action(a), p, seed).has_value();
}

std::optional<BoundaryWitness> boundary_witness_search(const LieAction& a, const GeomOptions& opt) {
  MatAction<Fp> mod = modular_action(a);
  MatAction<Q> ex = exact_action(a);
  const int principal = principal_isotropy_dim(a, opt);
  std::set<std::pair<int, int>> tried;  // (isotropy dim, fixed-space dim) already explored
  int index = 0;
  for (const auto& q : witness_candidates(a, opt.seed)) {
    Vec<Fp> qm = convert_vec<Fp>(q);
    Dense<Fp> iso = kernel(mod.tangent(qm));
    if (iso.c <= principal) continue;
    std::vector<Sparse<Fp>> k;
    for (int j = 0; j < iso.c; ++j) k.push_back(combination(mod.gens, iso.col(j), mod.dim));
    Dense<Fp> fixed = common_kernel(k, mod.dim);
    if (!tried.insert({iso.c, fixed.c}).second) continue;
    // The candidate itself, then a generic point of the fixed space of its isotropy.
    std::vector<std::optional<Vec<Q>>> exact_points{q, std::nullopt};
    for (int variant = 0; variant < 2; ++variant) {
      Vec<Fp> pm = variant == 0 ? qm : generic_in(fixed, opt.seed + 31, index++);
      if (!witness_test(mod, pm, opt.seed)) continue;
      Vec<Q> p = q;
      if (variant == 1) {
        // Rebuild the point over Q from the exact fixed space of the exact isotropy.
        Dense<Q> iq = kernel(ex.tangent(q));
        std::vector<Sparse<Q>> kq;
        for (int j = 0; j < iq.c; ++j) kq.push_back(combination(ex.gens, iq.col(j), ex.dim));
        p = generic_in(common_kernel(kq, ex.dim), opt.seed + 37, index++);
      }
      if (auto w = witness_test(ex, p, opt.seed)) return BoundaryWitness{p, w->iso, w->fixed, w->moving};
    }
  }
  const int c = a.dim_V - a.group_dim + principal;
  const std::vector<int> tg = torus_generators(a);
  auto torus_element = [&](const std::vector<Q>& x) {
    Vec<Q> coeff(a.group_dim, Q(0));
    for (int j = 0; j < a.t_rank; ++j) coeff[tg[j]] = x[j];
    return combination(ex.gens, coeff, ex.dim);
  };
  // Circle isotropy: fixed spaces of generic circles in the annihilator of a flat.
  if (principal == 0) {
    RationalSampler pick(opt.seed + 47);
    auto flats = torus_flats(a);
    if (flats.size() > 4000) flats.resize(4000);
    for (const auto& span : flats) {
      Dense<Q> m(static_cast<int>(span.size()), a.t_rank);
      for (size_t i = 0; i < span.size(); ++i)
        for (int j = 0; j < a.t_rank; ++j) m(static_cast<int>(i), j) = span[i][j];
      Dense<Q> ann = span.empty() ? Dense<Q>::identity(a.t_rank) : kernel(m);
      Vec<Q> x = ann.apply(pick.vector(ann.c));
      Dense<Q> fixed = kernel(torus_element(x).to_dense());
      if (fixed.c == 0 || fixed.c == a.dim_V) continue;
      if (stratum_dim(ex, fixed, opt.seed + 53, index++) == c - 1) {
        Vec<Q> p = generic_in(fixed, opt.seed + 59, index++);
        return BoundaryWitness{p, static_cast<int>(kernel(ex.tangent(p)).c), fixed.c, a.dim_V - fixed.c};
      }
    }
  }
  // Finite isotropy: fixed spaces of involutions in the maximal torus whose sweep has
  // codimension one in the orbit space.
  auto invs = a.t_rank <= 10 ? torus_involutions(a) : std::nullopt;
  if (!invs) return std::nullopt;
  for (const auto& x : *invs) {
    int f = 0, kmax = 0;
    for (const auto& w : a.t_weights) {
      Q s = pairing(x, w);
      f += even_integer(s);
      kmax = std::max(kmax, static_cast<int>(Q(abs(s)).get_num().get_si()));
    }
    if (f == a.dim_V) continue;
    Sparse<Q> w = exp_pi(torus_element(x), kmax);
    if (!(w * w == Sparse<Q>::identity(ex.dim))) throw std::logic_error("torus element is not an involution");
    Dense<Q> fixed = kernel((w - Sparse<Q>::identity(ex.dim)).to_dense());
    if (fixed.c != f) throw std::logic_error("torus weights disagree with the fixed space of an involution");
    if (stratum_dim(ex, fixed, opt.seed + 41, index++) == c - 1) {
      Vec<Q> p = generic_in(fixed, opt.seed + 43, index++);
      return BoundaryWitness{p, 0, fixed.c, a.dim_V - fixed.c};
    }
  }
  return std::nullopt;
}


CertificateResult no_boundary_certificate(const LieAction& a, const GeomOptions& opt) {
  CertificateResult res;
  int simple_a1 = 0, other_simple = 0, a1_offset = -1;
  for (const auto& f : a.factors) {
    if (!f.simple) continue;
    if (*f.simple == SimpleType{Family::A, 1}) {
      ++simple_a1;
      a1_offset = f.t_offset;
    } else {
      ++other_simple;
    }
  }
  if (other_simple > 0 || simple_a1 > 1) {
    res.reason = "unsupported group shape (only tori and one SU2 or SO3 factor times a torus are handled)";
    return res;
  }
  if (principal_isotropy_dim(a, opt) != 0) {
    res.reason = "principal isotropy is not trivial";
    return res;
  }
  const int t = a.t_rank, g = a.group_dim, dv = a.dim_V;
  // S^3 isotropy: the central involution of the SU2 factor acts by the parity of its label.
  if (simple_a1 == 1) {
    bool odd = false, even = false;
    for (const auto& w : a.t_weights) (w[a1_offset] % 2 ? odd : even) = true;
    if (odd && even) {
      res.reason = "central involution of the SU2 factor has mixed parity";
      return res;
    }
  }
  // Circles: weights and roots vanishing on a generic circle in the annihilator of a flat.
  for (const auto& span : torus_flats(a)) {
    int f = 0, roots_in = 0;
    for (const auto& w : a.t_weights) f += in_span(span, w, t);
    for (const auto& r : a.t_roots) roots_in += in_span(span, r, t);
    int n = t + 2 * roots_in;
    if (dv - 2 == f + g - n) {
      res.reason = "a circle stratum satisfies the dimension equation";
      return res;
    }
  }
  // Involutions: elements of order two in the effective maximal torus.
  auto invs = torus_involutions(a);
  if (!invs) {
    res.reason = "torus does not act effectively";
    return res;
  }
  for (const auto& x : *invs) {
    int f = 0, roots_in = 0;
    for (const auto& w : a.t_weights) {
      Q s = pairing(x, w);
      if (s.get_den() != 1) throw std::logic_error("dual lattice pairing is not integral");
      f += even_integer(s);
    }
    for (const auto& r : a.t_roots) roots_in += even_integer(pairing(x, r));
    int n = t + 2 * roots_in;
    if (dv - 1 == f + g - n) {
      res.reason = "an involution stratum satisfies the dimension equation";
      return res;
    }
  }
  res.status = Certificate::CertifiedNo;
  res.reason = "no isotropy type S^0, S^1 or S^3 can produce a codimension-one stratum";
  return res;
}

AnalysisReport analyze(const LieAction& a, const GeomOptions& opt, bool with_boundary) {
  AnalysisReport r;
  r.dim_V = a.dim_V;
  r.group_dim = a.group_dim;
  r.sample_seed = opt.seed;
  r.cohomogeneity = cohomogeneity(a, opt);
  r.orbit_dim = a.dim_V - r.cohomogeneity;
  r.principal_isotropy_dim = a.group_dim - r.orbit_dim;
  r.polar = is_polar(a, opt);
  if (r.polar) {
    r.copolarity_upper = 0;
  } else {
    CopolarityBound b = copolarity_upper_bound(a, opt);
    r.copolarity_upper = b.value;
    r.copolarity_trivial = b.trivial;
  }
  if (with_boundary) {
    r.witness = boundary_witness_search(a, opt);
    if (r.witness)
      r.boundary = BoundaryStatus::Yes;
    else if (no_boundary_certificate(a, opt).status == Certificate::CertifiedNo)
      r.boundary = BoundaryStatus::CertifiedNo;
  }
  return r;
}

namespace {

MatAction<Fp> isotropy_on(const LieAction& acting_on, const Dense<Fp>& coeffs) {
  MatAction<Fp> m;
  m.dim = acting_on.dim_V;
  m.gram = acting_on.gram_mod;
  for (int j = 0; j < coeffs.c; ++j) m.gens.push_back(combination(acting_on.generators_mod, coeffs.col(j), m.dim));
  return m;
}

}  // namespace

SliceCheck slice_cohomogeneity_check(const LieAction& sum, const GeomOptions& opt) {
  if (!sum.left || !sum.right || sum.expr.kind != RepExpr::Kind::Sum)
    throw std::invalid_argument("slice_cohomogeneity_check needs a direct sum");
  SliceCheck s;
  s.lhs = generic_cohomogeneity(modular_action(sum), opt.seed, opt.samples);
  const LieAction &v1 = *sum.left, &v2 = *sum.right;
  MatAction<Fp> m1 = modular_action(v1);
  int c1 = generic_cohomogeneity(m1, opt.seed + 1, opt.samples);
  Regular<Fp> r = regular_point(m1, opt.seed + 1, opt.samples);
  Dense<Fp> iso = kernel(m1.tangent(r.v));
  int c2 = generic_cohomogeneity(isotropy_on(v2, iso), opt.seed + 2, opt.samples);
  s.rhs = c1 + c2;
  return s;
}

SliceCheck product_slice_check(const LieAction& tensor, const GeomOptions& opt) {
  if (!tensor.left || !tensor.right || tensor.expr.kind != RepExpr::Kind::TensorR)
    throw std::invalid_argument("product_slice_check needs a real tensor product");
  const LieAction &a1 = *tensor.left, &a2 = *tensor.right;
  MatAction<Fp> m1 = modular_action(a1), m2 = modular_action(a2);
  int c1 = generic_cohomogeneity(m1, opt.seed + 1, opt.samples);
  int c2 = generic_cohomogeneity(m2, opt.seed + 2, opt.samples);
  if (c1 != 1 || c2 != 1) throw std::invalid_argument("product_slice_check: factors must have cohomogeneity 1");
  SliceCheck s;
  s.lhs = generic_cohomogeneity(modular_action(tensor), opt.seed, opt.samples);
  Regular<Fp> r1 = regular_point(m1, opt.seed + 1, opt.samples), r2 = regular_point(m2, opt.seed + 2, opt.samples);
  auto perp = [](const MatAction<Fp>& m, const Vec<Fp>& v) {
    Dense<Fp> vc(m.dim, 1);
    vc.set_col(0, v);
    return orthogonal_complement(m.gram, vc, m.dim);
  };
  Dense<Fp> p1 = perp(m1, r1.v), p2 = perp(m2, r2.v);
  Coordinates<Fp> co1(p1), co2(p2);
  Dense<Fp> iso1 = kernel(m1.tangent(r1.v)), iso2 = kernel(m2.tangent(r2.v));
  MatAction<Fp> h;
  h.dim = p1.c * p2.c;
  Sparse<Fp> g1 = restrict_gram(m1.gram, p1), g2 = restrict_gram(m2.gram, p2);
  h.gram = kron(g1, g2);
  Sparse<Fp> i1 = Sparse<Fp>::identity(p1.c), i2 = Sparse<Fp>::identity(p2.c);
  for (int j = 0; j < iso1.c; ++j)
    h.gens.push_back(kron(restrict_to(combination(m1.gens, iso1.col(j), m1.dim), p1, co1), i2));
  for (int j = 0; j < iso2.c; ++j)
    h.gens.push_back(kron(i1, restrict_to(combination(m2.gens, iso2.col(j), m2.dim), p2, co2)));
  s.rhs = generic_cohomogeneity(h, opt.seed + 3, opt.samples) + c1 + c2 - 1;
  return s;
}

InvolutionAudit involution_audit(const LieAction& a, const Sparse<Q>& w) {
  const int n = a.dim_V;
  if (w.r != n || w.c != n) throw std::invalid_argument("involution matrix has the wrong size");
  if (!(w * w == Sparse<Q>::identity(n))) throw std::invalid_argument("matrix is not an involution");
  if (!(w.transpose() * a.gram * w == a.gram)) throw std::invalid_argument("matrix is not orthogonal for the invariant form");
  InvolutionAudit r;
  std::vector<Sparse<Q>> conj, diff;
  for (const auto& x : a.generators) {
    Sparse<Q> y = w * x * w;
    conj.push_back(y);
    diff.push_back(y - x);
  }
  int base = span_dim(a.generators);
  for (const auto& y : conj) {
    std::vector<Sparse<Q>> all = a.generators;
    all.push_back(y);
    if (span_dim(all) != base) throw std::invalid_argument("involution does not normalize the Lie algebra");
  }
  r.normalizes = true;
  Dense<Q> wm = (w - Sparse<Q>::identity(n)).to_dense();
  r.f = n - frank(wm);
  r.dim_C = a.group_dim - span_dim(diff);
  r.nice_formula_holds = r.f == n - a.group_dim + r.dim_C - 1;
  return r;
}

Sparse<Q> exp_pi(const Sparse<Q>& X, int kmax) {
  const int n = X.r;
  Sparse<Q> y = X * X;
  Sparse<Q> out(n, n);
  for (int k = 0; k <= kmax; ++k) {
    Sparse<Q> term = Sparse<Q>::identity(n, Q(k % 2 ? -1 : 1));
    for (int j = 0; j <= kmax; ++j) {
      if (j == k) continue;
      Q den = Q(j * j - k * k);
      term = (term * (y + Sparse<Q>::identity(n, Q(j * j)))).scaled(1 / den);
    }
    out = out + term;
  }
  return out;
}

}  // namespace cohom
