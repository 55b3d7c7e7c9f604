#include "cohom/matrep.hpp"

#include <map>
#include <numeric>

#include "cohom/hwmodule.hpp"

namespace cohom {

using Q = Rational;

// ---------------------------------------------------------------- expressions and labels

FSType leaf_type(const IrrepSpec& s) { return fs_type(s); }

// Orthogonal heads for weights that factor through SO(n); SU2 with even labels is SO3.
bool vector_type(const IrrepSpec& s) {
  const SimpleType& t = *s.simple;
  const Weight& w = s.weight;
  switch (t.family) {
    case Family::A: return t.rank == 1 && w[0] % 2 == 0;
    case Family::B: return w[t.rank - 1] % 2 == 0;
    case Family::D: return (w[t.rank - 2] + w[t.rank - 1]) % 2 == 0;
    default: return false;
  }
}

std::string default_group_label(const IrrepSpec& s) {
  if (!s.global_form_label.empty()) return s.global_form_label;
  if (s.is_torus()) return s.torus_rank == 1 ? "U1" : "T" + std::to_string(s.torus_rank);
  const SimpleType& t = *s.simple;
  int n = t.rank;
  bool so = vector_type(s);
  switch (t.family) {
    case Family::A: return n == 1 && so ? "SO3" : "SU" + std::to_string(n + 1);
    case Family::B: return (so ? "SO" : "Spin") + std::to_string(2 * n + 1);
    case Family::C: return "SP" + std::to_string(n);
    case Family::D: return (so ? "SO" : "Spin") + std::to_string(2 * n);
    default: return t.name();
  }
}

std::string default_rep_label(const IrrepSpec& s) {
  FSType ty = fs_type(s);
  if (s.simple && s.simple->family == Family::A && s.simple->rank >= 2) {
    const int n = s.simple->rank + 1;
    const Weight& w = s.weight;
    int nonzero = 0, pos = -1;
    for (int i = 0; i < n - 1; ++i)
      if (w[i] != 0) ++nonzero, pos = i;
    std::string name;
    if (nonzero == 1 && w[pos] == 1 && pos > 0 && pos < n - 2)
      name = "Lambda^" + std::to_string(std::min(pos + 1, n - 1 - pos)) + " C^" + std::to_string(n);
    else if (nonzero == 1 && w[pos] >= 2 && (pos == 0 || pos == n - 2))
      name = "S^" + std::to_string(w[pos]) + " C^" + std::to_string(n);
    if (!name.empty()) return ty == FSType::Real ? "[" + name + "]_R" : name;
  }
  long d = complex_dim(s);
  return (ty == FSType::Real ? "R^" : "C^") + std::to_string(d);
}

RepExpr RepExpr::make_leaf(IrrepSpec spec, std::string group_label, std::string rep_label) {
  validate(spec);
  RepExpr e;
  e.kind = Kind::Leaf;
  e.group_label = group_label.empty() ? default_group_label(spec) : std::move(group_label);
  e.rep_label = rep_label.empty() ? default_rep_label(spec) : std::move(rep_label);
  e.leaf = std::move(spec);
  return e;
}

namespace {

bool is_u1(const RepExpr& e) { return e.kind == RepExpr::Kind::Leaf && e.leaf.is_torus() && e.leaf.torus_rank == 1; }

bool composite_label(const std::string& s) { return s.find("(x)") != std::string::npos || s.find("(+)") != std::string::npos; }

std::string wrap(const std::string& s) { return composite_label(s) ? "(" + s + ")" : s; }

std::string real_label(const RepExpr& e) {
  if (composite_label(e.rep_label)) return wrap(e.rep_label);
  if (e.rep_label.rfind("R^", 0) == 0) return e.rep_label;
  return "R^" + std::to_string(expr_real_dim(e));
}

}  // namespace

RepExpr RepExpr::tensor(Kind k, RepExpr a, RepExpr b) {
  RepExpr e;
  e.kind = k;
  if (k == Kind::TensorC && is_u1(b)) {
    // SU(n) next to a circle factor displays as U(n).
    std::string g = a.group_label;
    size_t pos = 0;
    bool merged = false;
    while (pos <= g.size()) {
      size_t end = g.find('x', pos);
      if (end == std::string::npos) end = g.size();
      if (g.compare(pos, 2, "SU") == 0) {
        g.erase(pos, 1);
        merged = true;
        break;
      }
      pos = end + 1;
    }
    e.group_label = merged ? g : g + "xU1";
    e.rep_label = a.rep_label;
  } else if (k == Kind::TensorH && a.kind == Kind::Leaf && b.kind == Kind::Leaf && a.leaf == b.leaf &&
             a.leaf.simple && *a.leaf.simple == SimpleType{Family::A, 1} && a.leaf.weight == Weight{1}) {
    e.group_label = "SO4";
    e.rep_label = "R^4";
  } else {
    e.group_label = a.group_label + "x" + b.group_label;
    if (k == Kind::TensorR)
      e.rep_label = real_label(a) + " (x)_R " + real_label(b);
    else
      e.rep_label = wrap(a.rep_label) + (k == Kind::TensorC ? " (x)_C " : " (x)_H ") + wrap(b.rep_label);
  }
  e.children = {std::move(a), std::move(b)};
  return e;
}

RepExpr RepExpr::sum(RepExpr a, RepExpr b) {
  RepExpr e;
  e.kind = Kind::Sum;
  e.group_label = a.group_label;
  e.rep_label = a.rep_label + " (+) " + b.rep_label;
  e.children = {std::move(a), std::move(b)};
  return e;
}

bool RepExpr::operator==(const RepExpr& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Leaf) return leaf == o.leaf;
  return children == o.children;
}

namespace {

enum class Shape { RealForm, Realified, Sum };

struct ShapeInfo {
  Shape shape;
  int eps = 0;  // square of the antilinear structure, 0 if none
  std::vector<GroupFactor> factors;
};

std::string subtree(const RepExpr& e) { return e.group_label + ": " + e.rep_label; }

ShapeInfo shape_of(const RepExpr& e) {
  using K = RepExpr::Kind;
  if (e.kind == K::Leaf) {
    validate(e.leaf);
    GroupFactor f;
    f.simple = e.leaf.simple;
    f.torus_rank = e.leaf.torus_rank;
    FSType t = fs_type(e.leaf);
    if (t == FSType::Real) return {Shape::RealForm, 1, {f}};
    return {Shape::Realified, t == FSType::Quaternionic ? -1 : 0, {f}};
  }
  if (e.children.size() != 2) throw TypeError("combinator needs two operands");
  ShapeInfo a = shape_of(e.children[0]), b = shape_of(e.children[1]);
  ShapeInfo out;
  out.factors = a.factors;
  if (e.kind != K::Sum) {
    if (a.shape == Shape::Sum || b.shape == Shape::Sum)
      throw TypeError("tensor product of a direct sum is not supported: " + subtree(e));
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  }
  switch (e.kind) {
    case K::TensorR:
      if (a.shape == Shape::RealForm && b.shape == Shape::RealForm) return {Shape::RealForm, 1, out.factors};
      if (a.shape == Shape::Realified && b.shape == Shape::Realified) return {Shape::RealForm, 1, out.factors};
      return {Shape::Realified, a.shape == Shape::Realified ? a.eps : b.eps, out.factors};
    case K::TensorC:
      if (a.shape != Shape::Realified) throw TypeError("(x)_C needs a complex structure on " + subtree(e.children[0]));
      if (b.shape != Shape::Realified) throw TypeError("(x)_C needs a complex structure on " + subtree(e.children[1]));
      return {Shape::Realified, a.eps * b.eps, out.factors};
    case K::TensorH:
      if (a.shape != Shape::Realified || a.eps != -1)
        throw TypeError("(x)_H needs a quaternionic operand: " + subtree(e.children[0]));
      if (b.shape != Shape::Realified || b.eps != -1)
        throw TypeError("(x)_H needs a quaternionic operand: " + subtree(e.children[1]));
      return {Shape::RealForm, 1, out.factors};
    case K::Sum:
      if (a.factors != b.factors) throw TypeError("(+) needs the same group on both sides: " + subtree(e));
      return {Shape::Sum, 0, out.factors};
    default: break;
  }
  throw TypeError("unknown combinator");
}

}  // namespace

void typecheck(const RepExpr& e) { shape_of(e); }

long expr_real_dim(const RepExpr& e) {
  using K = RepExpr::Kind;
  switch (e.kind) {
    case K::Leaf: return real_dim(e.leaf);
    case K::Sum: return expr_real_dim(e.children[0]) + expr_real_dim(e.children[1]);
    case K::TensorR: return expr_real_dim(e.children[0]) * expr_real_dim(e.children[1]);
    case K::TensorC: return expr_real_dim(e.children[0]) * expr_real_dim(e.children[1]) / 2;
    case K::TensorH: return expr_real_dim(e.children[0]) * expr_real_dim(e.children[1]) / 4;
  }
  return 0;
}

int GroupFactor::dim() const { return simple ? root_system(*simple).group_dim() : torus_rank; }

// ---------------------------------------------------------------- complex models

namespace {

struct CxMat {
  Sparse<Q> re, im;
};

CxMat cx_kron(const CxMat& a, const CxMat& b) {
  return {kron(a.re, b.re) - kron(a.im, b.im), kron(a.re, b.im) + kron(a.im, b.re)};
}

CxMat cx_real(const Sparse<Q>& m) { return {m, Sparse<Q>(m.r, m.c)}; }

struct CVec {
  Vec<Q> re, im;
};

Vec<Q> kron_vec(const Vec<Q>& x, const Vec<Q>& y) {
  Vec<Q> z(x.size() * y.size(), Q(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) z[i * y.size() + j] = x[i] * y[j];
  }
  return z;
}

CVec cx_kron_vec(const CVec& a, const CVec& b) {
  CVec c;
  c.re = kron_vec(a.re, b.re);
  Vec<Q> t = kron_vec(a.im, b.im);
  for (size_t i = 0; i < c.re.size(); ++i) c.re[i] -= t[i];
  c.im = kron_vec(a.re, b.im);
  t = kron_vec(a.im, b.re);
  for (size_t i = 0; i < c.im.size(); ++i) c.im[i] += t[i];
  return c;
}

struct Node {
  Shape shape = Shape::RealForm;
  int n = 0;  // complex dimension of the model
  std::vector<CxMat> gens;
  CxMat H;
  std::optional<Sparse<Q>> sigma;  // antilinear structure z -> sigma * conj(z)
  int eps = 0;
  std::vector<Weight> cxw;  // weights of the complex model, with multiplicity
  Sparse<Q> P, M, LP, LM;  // real form: Fix = P R^p + i M R^m; LP, LM are left inverses
  std::shared_ptr<LieAction> act;

  Vec<Q> real_point(const CVec& z) const {
    if (shape == Shape::Realified) {
      Vec<Q> v = z.re;
      v.insert(v.end(), z.im.begin(), z.im.end());
      return v;
    }
    Vec<Q> sx = sigma->apply(z.re), sy = sigma->apply(z.im);
    Vec<Q> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = (z.re[i] + sx[i]) / 2;
      b[i] = (z.im[i] - sy[i]) / 2;
    }
    Vec<Q> v = LP.apply(a), w = LM.apply(b);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  }
  CVec to_cx(const Vec<Q>& v) const {
    if (shape == Shape::Realified) return {Vec<Q>(v.begin(), v.begin() + n), Vec<Q>(v.begin() + n, v.end())};
    Vec<Q> c(v.begin(), v.begin() + P.c), d(v.begin() + P.c, v.end());
    return {P.apply(c), M.apply(d)};
  }
};

using NodeP = std::shared_ptr<Node>;

Sparse<Q> sparse_from_cols(int rows, const std::vector<std::vector<std::pair<int, Q>>>& cols) {
  std::vector<std::tuple<int, int, Q>> t;
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, v] : cols[j]) t.emplace_back(i, static_cast<int>(j), v);
  return Sparse<Q>::from_triplets(rows, static_cast<int>(cols.size()), std::move(t));
}

// Fix(sigma) = E_+ (+) i E_-, computed on connected components of the support of sigma.
void split_real_form(Node& nd) {
  const Sparse<Q>& s = *nd.sigma;
  const int n = nd.n;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : s.rows[i]) parent[find(i)] = find(j);
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);

  std::vector<std::vector<std::pair<int, Q>>> pcols, mcols;
  std::vector<std::tuple<int, int, Q>> lp, lm;
  for (const auto& [root, idx] : comps) {
    const int c = static_cast<int>(idx.size());
    std::map<int, int> local;
    for (int k = 0; k < c; ++k) local[idx[k]] = k;
    Dense<Q> blk(c, c);
    for (int k = 0; k < c; ++k)
      for (const auto& [j, v] : s.rows[idx[k]]) blk(k, local.at(j)) = v;
    for (int sign : {1, -1}) {
      Dense<Q> a = blk;
      for (int k = 0; k < c; ++k) a(k, k) -= sign;
      Dense<Q> ker = kernel(a);
      if (ker.c == 0) continue;
      auto& cols = sign > 0 ? pcols : mcols;
      auto& left = sign > 0 ? lp : lm;
      const int base = static_cast<int>(cols.size());
      for (int j = 0; j < ker.c; ++j) {
        std::vector<std::pair<int, Q>> col;
        for (int k = 0; k < c; ++k)
          if (ker(k, j) != 0) col.push_back({idx[k], ker(k, j)});
        cols.push_back(std::move(col));
      }
      Coordinates<Q> co(ker);
      for (int i = 0; i < ker.c; ++i)
        for (int j = 0; j < ker.c; ++j)
          if (co.inv(i, j) != 0) left.emplace_back(base + i, idx[co.rows[j]], co.inv(i, j));
    }
  }
  nd.P = sparse_from_cols(n, pcols);
  nd.M = sparse_from_cols(n, mcols);
  nd.LP = Sparse<Q>::from_triplets(nd.P.c, n, std::move(lp));
  nd.LM = Sparse<Q>::from_triplets(nd.M.c, n, std::move(lm));
  if (nd.P.c + nd.M.c != n) throw std::logic_error("real form has the wrong dimension");
}

void realize(Node& nd) {
  LieAction& a = *nd.act;
  a.generators.clear();
  if (nd.shape == Shape::Realified) {
    a.dim_V = 2 * nd.n;
    Sparse<Q> z(nd.n, nd.n);
    for (const auto& x : nd.gens) a.generators.push_back(block2(x.re, x.im.scaled(-1), x.im, x.re));
    a.gram = block2(nd.H.re, nd.H.im.scaled(-1), nd.H.im, nd.H.re);
    Sparse<Q> id = Sparse<Q>::identity(nd.n);
    a.J = block2(z, id.scaled(-1), id, z);
    if (nd.eps == -1) a.jj = block2(*nd.sigma, z, z, nd.sigma->scaled(-1));
    return;
  }
  split_real_form(nd);
  a.dim_V = nd.n;
  Sparse<Q> Pt = nd.P.transpose(), Mt = nd.M.transpose();
  for (const auto& x : nd.gens)
    a.generators.push_back(
        block2(nd.LP * (x.re * nd.P), (nd.LP * (x.im * nd.M)).scaled(-1), nd.LM * (x.im * nd.P), nd.LM * (x.re * nd.M)));
  a.gram = block2(Pt * (nd.H.re * nd.P), (Pt * (nd.H.im * nd.M)).scaled(-1), Mt * (nd.H.im * nd.P),
                  Mt * (nd.H.re * nd.M));
}

void reduce_mod_p(LieAction& a) {
  a.generators_mod.clear();
  for (const auto& g : a.generators) a.generators_mod.push_back(g.convert<Fp>());
  a.gram_mod = a.gram.convert<Fp>();
}

Weight embed(const Weight& w, int offset, int total) {
  Weight out(total, 0);
  for (size_t i = 0; i < w.size(); ++i) out[offset + i] = w[i];
  return out;
}

Weight negate(Weight w) {
  for (auto& x : w) x = -x;
  return w;
}

std::optional<Q> rational_sqrt(const Q& x) {
  if (x < 0) return std::nullopt;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), x.get_den().get_mpz_t());
  if (a * a != x.get_num() || b * b != x.get_den()) return std::nullopt;
  return Q(a, b);
}

NodeP leaf_node(const IrrepSpec& s) {
  auto nd = std::make_shared<Node>();
  nd->act = std::make_shared<LieAction>();
  LieAction& a = *nd->act;
  GroupFactor f;
  f.simple = s.simple;
  f.torus_rank = s.torus_rank;
  a.factors = {f};
  FSType ty = fs_type(s);
  a.type = ty;
  std::vector<Weight>& cxw = nd->cxw;
  if (s.is_torus()) {
    nd->n = 1;
    a.t_rank = s.torus_rank;
    for (int j = 0; j < s.torus_rank; ++j) {
      Sparse<Q> im(1, 1);
      if (s.weight[j] != 0) im.rows[0].push_back({0, Q(s.weight[j])});
      nd->gens.push_back({Sparse<Q>(1, 1), im});
    }
    nd->H = cx_real(Sparse<Q>::identity(1));
    cxw = {s.weight};
    if (ty == FSType::Real) {
      nd->sigma = Sparse<Q>::identity(1);
      nd->eps = 1;
    }
  } else {
    auto mod = module_cache(*s.simple, s.weight);
    const RootSystem& rs = root_system(*s.simple);
    nd->n = mod->dim;
    a.t_rank = rs.rank;
    Sparse<Q> z(mod->dim, mod->dim);
    for (size_t g = 0; g < mod->root_e.size(); ++g) {
      nd->gens.push_back({mod->root_e[g] - mod->root_f[g], z});
      nd->gens.push_back({z, mod->root_e[g] + mod->root_f[g]});
    }
    for (int j = 0; j < rs.rank; ++j) nd->gens.push_back({z, mod->h[j]});
    nd->H = cx_real(mod->S);
    for (int k = 0; k < mod->dim; ++k) cxw.push_back(mod->weight_of(k));
    for (const auto& r : rs.positive_roots) a.t_roots.push_back(rs.root_labels(r));
    if (ty != FSType::Complex) {
      if (!mod->N) throw std::logic_error("self-dual module without intertwiner");
      auto root = rational_sqrt(abs(mod->n_square));
      if (!root) throw std::runtime_error("N^2 is not a rational square for " + s.describe());
      nd->sigma = mod->N->scaled(1 / *root);
      nd->eps = mod->n_square > 0 ? 1 : -1;
      if ((nd->eps == 1) != (ty == FSType::Real)) throw std::logic_error("structure sign disagrees with type");
    }
  }
  nd->shape = ty == FSType::Real ? Shape::RealForm : Shape::Realified;
  a.group_dim = static_cast<int>(nd->gens.size());
  realize(*nd);
  for (const auto& w : cxw) a.t_weights.push_back(w);
  if (nd->shape == Shape::Realified)
    for (const auto& w : cxw) a.t_weights.push_back(negate(w));
  for (int k = 0; k < nd->n; ++k) {
    CVec e{Vec<Q>(nd->n, Q(0)), Vec<Q>(nd->n, Q(0))};
    e.re[k] = 1;
    Vec<Q> p = nd->real_point(e);
    if (!is_zero_vec(p)) a.weight_points.push_back(p);
    if (nd->shape == Shape::RealForm) {
      std::swap(e.re, e.im);
      p = nd->real_point(e);
      if (!is_zero_vec(p)) a.weight_points.push_back(p);
    }
  }
  return nd;
}

// V_R (x) C with its tautological real structure.
NodeP complexification(const NodeP& x) {
  if (x->shape == Shape::RealForm) return x;
  auto nd = std::make_shared<Node>();
  nd->shape = Shape::RealForm;
  nd->n = x->act->dim_V;
  for (const auto& g : x->act->generators) nd->gens.push_back(cx_real(g));
  nd->H = cx_real(x->act->gram);
  nd->sigma = Sparse<Q>::identity(nd->n);
  nd->eps = 1;
  nd->P = nd->LP = Sparse<Q>::identity(nd->n);
  nd->M = Sparse<Q>(nd->n, 0);
  nd->LM = Sparse<Q>(0, nd->n);
  nd->cxw = x->act->t_weights;
  nd->act = x->act;
  return nd;
}

constexpr size_t kMaxWeightPoints = 2000;

NodeP tensor_node(RepExpr::Kind kind, NodeP a, NodeP b) {
  using K = RepExpr::Kind;
  NodeP oa = a, ob = b;
  Shape shape;
  if (kind == K::TensorR) {
    if (a->shape == Shape::Realified && b->shape == Shape::Realified) {
      a = complexification(a);
      b = complexification(b);
    }
    shape = (a->shape == Shape::RealForm && b->shape == Shape::RealForm) ? Shape::RealForm : Shape::Realified;
  } else if (kind == K::TensorC) {
    shape = Shape::Realified;
  } else {
    shape = Shape::RealForm;
  }
  auto nd = std::make_shared<Node>();
  nd->shape = shape;
  nd->n = a->n * b->n;
  Sparse<Q> ia = Sparse<Q>::identity(a->n), ib = Sparse<Q>::identity(b->n);
  for (const auto& g : a->gens) nd->gens.push_back(cx_kron(g, cx_real(ib)));
  for (const auto& g : b->gens) nd->gens.push_back(cx_kron(cx_real(ia), g));
  nd->H = cx_kron(a->H, b->H);
  if (a->sigma && b->sigma) {
    nd->sigma = kron(*a->sigma, *b->sigma);
    nd->eps = a->eps * b->eps;
  }
  if (shape == Shape::RealForm && (!nd->sigma || nd->eps != 1)) throw std::logic_error("tensor: missing real structure");
  nd->act = std::make_shared<LieAction>();
  LieAction& act = *nd->act;
  const LieAction &la = *oa->act, &lb = *ob->act;
  act.group_dim = static_cast<int>(nd->gens.size());
  realize(*nd);

  act.factors = la.factors;
  int tr = la.t_rank, go = la.group_dim;
  for (auto f : lb.factors) {
    f.t_offset += tr;
    f.gen_offset += go;
    act.factors.push_back(f);
  }
  act.t_rank = la.t_rank + lb.t_rank;
  for (const auto& r : la.t_roots) act.t_roots.push_back(embed(r, 0, act.t_rank));
  for (const auto& r : lb.t_roots) act.t_roots.push_back(embed(r, la.t_rank, act.t_rank));
  for (const auto& x : a->cxw)
    for (const auto& y : b->cxw) {
      Weight w = embed(x, 0, act.t_rank);
      for (int i = 0; i < lb.t_rank; ++i) w[la.t_rank + i] += y[i];
      nd->cxw.push_back(std::move(w));
    }
  act.t_weights = nd->cxw;
  if (shape == Shape::Realified)
    for (const auto& w : nd->cxw) act.t_weights.push_back(negate(w));

  act.left = oa->act;
  act.right = ob->act;
  NodeP self = nd, ca = a, cb = b;
  act.pure_tensor = [self, ca, cb](const Vec<Q>& x, const Vec<Q>& y) {
    return self->real_point(cx_kron_vec(ca->to_cx(x), cb->to_cx(y)));
  };
  for (const auto& p : la.weight_points) {
    for (const auto& q : lb.weight_points) {
      if (act.weight_points.size() >= kMaxWeightPoints) break;
      Vec<Q> v = act.pure_tensor(p, q);
      if (!is_zero_vec(v)) act.weight_points.push_back(std::move(v));
    }
  }
  return nd;
}

NodeP sum_node(const NodeP& a, const NodeP& b) {
  auto nd = std::make_shared<Node>();
  nd->shape = Shape::Sum;
  nd->act = std::make_shared<LieAction>();
  LieAction& act = *nd->act;
  const LieAction &la = *a->act, &lb = *b->act;
  act.dim_V = la.dim_V + lb.dim_V;
  act.group_dim = la.group_dim;
  for (int k = 0; k < la.group_dim; ++k) act.generators.push_back(block_diag(la.generators[k], lb.generators[k]));
  act.gram = block_diag(la.gram, lb.gram);
  if (la.J && lb.J) act.J = block_diag(*la.J, *lb.J);
  if (la.jj && lb.jj) act.jj = block_diag(*la.jj, *lb.jj);
  act.factors = la.factors;
  act.t_rank = la.t_rank;
  act.t_roots = la.t_roots;
  act.t_weights = la.t_weights;
  act.t_weights.insert(act.t_weights.end(), lb.t_weights.begin(), lb.t_weights.end());
  for (const auto& p : la.weight_points) {
    Vec<Q> v = p;
    v.resize(act.dim_V, Q(0));
    act.weight_points.push_back(std::move(v));
  }
  for (const auto& p : lb.weight_points) {
    Vec<Q> v(la.dim_V, Q(0));
    v.insert(v.end(), p.begin(), p.end());
    act.weight_points.push_back(std::move(v));
  }
  act.left = a->act;
  act.right = b->act;
  return nd;
}

NodeP build_node(const RepExpr& e) {
  using K = RepExpr::Kind;
  NodeP nd;
  if (e.kind == K::Leaf) {
    nd = leaf_node(e.leaf);
  } else {
    NodeP a = build_node(e.children[0]), b = build_node(e.children[1]);
    nd = e.kind == K::Sum ? sum_node(a, b) : tensor_node(e.kind, a, b);
  }
  LieAction& act = *nd->act;
  act.expr = e;
  act.group_label = e.group_label;
  act.rep_label = e.rep_label;
  reduce_mod_p(act);
  return nd;
}

}  // namespace

std::shared_ptr<const LieAction> build_action(const RepExpr& e) {
  typecheck(e);
  return build_node(e)->act;
}

FSType fs_type_by_invariant_form(const IrrepSpec& s) {
  validate(s);
  if (s.is_torus()) {
    for (int x : s.weight)
      if (x != 0) return FSType::Complex;
    return FSType::Real;
  }
  auto mod = module_cache(*s.simple, s.weight);
  const int n = mod->dim;
  // Unknowns B[k][l] with wt(k) + wt(l) = 0.
  std::map<std::pair<int, int>, int> var;
  for (int k = 0; k < n; ++k) {
    Weight neg = negate(mod->weight_of(k));
    auto it = mod->windex.find(neg);
    if (it == mod->windex.end()) continue;
    int w = it->second;
    for (int t = 0; t < mod->mult[w]; ++t) var.emplace(std::make_pair(k, mod->offset[w] + t), 0);
  }
  if (var.empty()) return FSType::Complex;
  int nv = 0;
  for (auto& [key, idx] : var) idx = nv++;
  // X^T B + B X = 0 for the Chevalley generators.
  std::map<std::pair<int, int>, std::map<int, Fp>> eqs;
  auto add_generator = [&](const Sparse<Q>& X) {
    Sparse<Fp> x = X.convert<Fp>();
    for (const auto& [key, idx] : var) {
      auto [k, l] = key;
      for (const auto& [a, v] : x.rows[k]) eqs[{a, l}][idx] += v;
      for (const auto& [b, v] : x.rows[l]) eqs[{k, b}][idx] += v;
    }
  };
  for (int i = 0; i < s.simple->rank; ++i) {
    add_generator(mod->e[i]);
    add_generator(mod->f[i]);
  }
  Dense<Fp> sys(static_cast<int>(eqs.size()), nv);
  int row = 0;
  for (const auto& [key, coeffs] : eqs) {
    for (const auto& [idx, v] : coeffs) sys(row, idx) = v;
    ++row;
  }
  Dense<Fp> ker = kernel(sys);
  if (ker.c == 0) return FSType::Complex;
  if (ker.c > 1) throw std::logic_error("invariant forms: irreducible module has several invariant forms");
  bool sym = true, skew = true;
  for (const auto& [key, idx] : var) {
    Fp x = ker(idx, 0), y = ker(var.at({key.second, key.first}), 0);
    sym = sym && x == y;
    skew = skew && x == -y;
  }
  if (sym == skew) throw std::logic_error("invariant forms: neither symmetric nor skew");
  return sym ? FSType::Real : FSType::Quaternionic;
}

Sparse<Rational> quaternionic_structure(const LieAction& leaf) {
  if (!leaf.jj) throw std::invalid_argument("representation has no quaternionic structure: " + leaf.rep_label);
  return *leaf.jj;
}

std::string to_string(BilinearForm b) {
  switch (b) {
    case BilinearForm::Symmetric: return "symmetric";
    case BilinearForm::Antisymmetric: return "antisymmetric";
    case BilinearForm::None: return "none";
  }
  return "?";
}

BilinearForm invariant_bilinear_form(const IrrepSpec& s) {
  switch (fs_type_by_invariant_form(s)) {
    case FSType::Real: return BilinearForm::Symmetric;
    case FSType::Quaternionic: return BilinearForm::Antisymmetric;
    case FSType::Complex: break;
  }
  return BilinearForm::None;
}

}  // namespace cohom
