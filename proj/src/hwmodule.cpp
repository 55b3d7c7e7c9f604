#include "cohom/hwmodule.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cohom {

namespace {

using Q = Rational;

struct Builder {
  const RootSystem& rs;
  HWModule& m;
  int r;
  int nw = 0;
  std::vector<std::vector<int>> up, down;         // up[i][w]: index of w + alpha_i, or -1
  std::vector<std::vector<Dense<Q>>> eb, fb;      // eb[i][w]: V_w -> V_{w+alpha_i}
  std::vector<Dense<Q>> sb;                       // contravariant form on each weight space
  std::vector<int> parent_root, parent_local;     // basis vector k = f_{parent_root} (basis parent_local of V_{w+alpha})

  Builder(const RootSystem& rs_, HWModule& m_) : rs(rs_), m(m_), r(rs_.rank) {}

  void weights() {
    IrrepSpec spec = IrrepSpec::of(m.type, m.lambda);
    std::vector<std::pair<Q, Weight>> order;
    for (const auto& [w, mu] : weight_multiplicities(spec)) {
      Weight d(r);
      for (int i = 0; i < r; ++i) d[i] = m.lambda[i] - w[i];
      Q h = 0;
      for (const auto& c : rs.root_coords(d)) h += c;
      order.push_back({h, w});
    }
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second > y.second;
    });
    const auto& dm = dominant_multiplicities(m.type, m.lambda);
    int off = 0;
    for (const auto& [h, w] : order) {
      m.windex[w] = static_cast<int>(m.weights.size());
      m.weights.push_back(w);
      int mu = dm.at(dominant_conjugate(rs, w));
      m.offset.push_back(off);
      m.mult.push_back(mu);
      for (int k = 0; k < mu; ++k) m.basis_space.push_back(static_cast<int>(m.weights.size()) - 1);
      off += mu;
    }
    m.dim = off;
    nw = static_cast<int>(m.weights.size());
    up.assign(r, std::vector<int>(nw, -1));
    down.assign(r, std::vector<int>(nw, -1));
    for (int i = 0; i < r; ++i) {
      Weight a = rs.simple_root(i);
      for (int w = 0; w < nw; ++w) {
        Weight u = m.weights[w], d = m.weights[w];
        for (int k = 0; k < r; ++k) {
          u[k] += a[k];
          d[k] -= a[k];
        }
        if (auto it = m.windex.find(u); it != m.windex.end()) up[i][w] = it->second;
        if (auto it = m.windex.find(d); it != m.windex.end()) down[i][w] = it->second;
      }
    }
    eb.assign(r, std::vector<Dense<Q>>(nw));
    fb.assign(r, std::vector<Dense<Q>>(nw));
    sb.assign(nw, Dense<Q>());
    parent_root.assign(m.dim, -1);
    parent_local.assign(m.dim, -1);
  }

  void generate() {
    for (int i = 0; i < r; ++i) eb[i][0] = Dense<Q>(0, 1);
    sb[0] = Dense<Q>::identity(1);
    for (int w = 1; w < nw; ++w) {
      const Weight& mu = m.weights[w];
      std::vector<int> seg(r + 1, 0);
      for (int j = 0; j < r; ++j) seg[j + 1] = seg[j] + (up[j][w] >= 0 ? m.mult[up[j][w]] : 0);
      const int L = seg[r];
      std::vector<std::pair<int, int>> cands;
      for (int i = 0; i < r; ++i)
        if (up[i][w] >= 0)
          for (int b = 0; b < m.mult[up[i][w]]; ++b) cands.push_back({i, b});
      Dense<Q> E(L, static_cast<int>(cands.size()));
      for (size_t c = 0; c < cands.size(); ++c) {
        auto [i, b] = cands[c];
        int nu = up[i][w];
        for (int j = 0; j < r; ++j) {
          if (up[j][w] < 0) continue;
          Vec<Q> out(m.mult[up[j][w]], Q(0));
          int t = up[j][nu];
          if (t >= 0) out = fb[i][t].apply(eb[j][nu].col(b));
          if (j == i) out[b] += m.weights[nu][i];
          for (size_t k = 0; k < out.size(); ++k) E(seg[j] + static_cast<int>(k), static_cast<int>(c)) = out[k];
        }
      }
      std::vector<int> chosen = independent_columns(E);
      if (static_cast<int>(chosen.size()) != m.mult[w])
        throw std::logic_error("build_module: weight space " + weight_to_string(mu) + " has wrong dimension");
      Dense<Q> B(L, m.mult[w]);
      for (int k = 0; k < m.mult[w]; ++k) {
        for (int x = 0; x < L; ++x) B(x, k) = E(x, chosen[k]);
        parent_root[m.offset[w] + k] = cands[chosen[k]].first;
        parent_local[m.offset[w] + k] = cands[chosen[k]].second;
      }
      for (int j = 0; j < r; ++j) {
        if (up[j][w] < 0) continue;
        Dense<Q> blk(m.mult[up[j][w]], m.mult[w]);
        for (int x = 0; x < blk.r; ++x)
          for (int k = 0; k < blk.c; ++k) blk(x, k) = B(seg[j] + x, k);
        eb[j][w] = std::move(blk);
      }
      if (L > 0) {
        Coordinates<Q> coords(B);
        for (int i = 0; i < r; ++i) {
          int nu = up[i][w];
          if (nu < 0) continue;
          Dense<Q> blk(m.mult[w], m.mult[nu]);
          size_t c0 = 0;
          while (cands[c0].first != i) ++c0;
          for (int b = 0; b < m.mult[nu]; ++b) blk.set_col(b, coords(E.col(static_cast<int>(c0) + b)));
          fb[i][nu] = std::move(blk);
        }
      }
      // S(f_i b, y) = S(b, e_i y).
      Dense<Q> s(m.mult[w], m.mult[w]);
      for (int k = 0; k < m.mult[w]; ++k) {
        int i = parent_root[m.offset[w] + k], b = parent_local[m.offset[w] + k];
        int nu = up[i][w];
        for (int l = 0; l < m.mult[w]; ++l) {
          Vec<Q> y = eb[i][w].col(l);
          Q acc = 0;
          for (int t = 0; t < m.mult[nu]; ++t) acc += sb[nu](b, t) * y[t];
          s(k, l) = acc;
        }
      }
      if (!(s == s.transpose())) throw std::logic_error("build_module: contravariant form is not symmetric");
      sb[w] = std::move(s);
    }
  }

  Sparse<Q> assemble(const std::vector<Dense<Q>>& blocks, const std::vector<int>& target) {
    std::vector<std::tuple<int, int, Q>> trip;
    for (int w = 0; w < nw; ++w) {
      if (target[w] < 0) continue;
      const Dense<Q>& b = blocks[w];
      for (int x = 0; x < b.r; ++x)
        for (int y = 0; y < b.c; ++y)
          if (b(x, y) != 0) trip.emplace_back(m.offset[target[w]] + x, m.offset[w] + y, b(x, y));
    }
    return Sparse<Q>::from_triplets(m.dim, m.dim, std::move(trip));
  }

  void finish() {
    for (int i = 0; i < r; ++i) {
      m.e.push_back(assemble(eb[i], up[i]));
      m.f.push_back(assemble(fb[i], down[i]));
      Sparse<Q> h(m.dim, m.dim);
      for (int k = 0; k < m.dim; ++k) {
        int l = m.weight_of(k)[i];
        if (l != 0) h.rows[k].push_back({k, Q(l)});
      }
      m.h.push_back(std::move(h));
    }
    std::vector<int> self(nw);
    for (int w = 0; w < nw; ++w) self[w] = w;
    m.S = assemble(sb, self);

    m.root_e.resize(rs.positive_roots.size());
    m.root_f.resize(rs.positive_roots.size());
    for (size_t g = 0; g < rs.positive_roots.size(); ++g) {
      const auto& root = rs.positive_roots[g];
      int height = 0;
      for (int x : root) height += x;
      if (height == 1) {
        int i = static_cast<int>(std::find(root.begin(), root.end(), 1) - root.begin());
        m.root_e[g] = m.e[i];
        m.root_f[g] = m.f[i];
        continue;
      }
      for (int i = 0; i < r; ++i) {
        if (root[i] == 0) continue;
        auto beta = root;
        --beta[i];
        int bi = rs.index_of_root(beta);
        if (bi < 0) continue;
        m.root_e[g] = commutator(m.e[i], m.root_e[bi]);
        m.root_f[g] = commutator(m.root_f[bi], m.f[i]);
        break;
      }
    }
  }

  void chevalley_intertwiner() {
    if (longest_element_dual(rs, m.lambda) != m.lambda) return;
    std::vector<int> neg(nw);
    for (int w = 0; w < nw; ++w) {
      Weight u = m.weights[w];
      for (auto& x : u) x = -x;
      neg[w] = m.windex.at(u);
    }
    std::vector<Dense<Q>> nb(nw);
    nb[0] = Dense<Q>::identity(1);
    for (int w = 1; w < nw; ++w) {
      Dense<Q> blk(m.mult[neg[w]], m.mult[w]);
      for (int k = 0; k < m.mult[w]; ++k) {
        int i = parent_root[m.offset[w] + k], b = parent_local[m.offset[w] + k];
        int nu = up[i][w];
        // N(f_i b) = -e_i N(b), with N(b) in V_{-nu}.
        Vec<Q> v = eb[i][neg[nu]].apply(nb[nu].col(b));
        for (auto& x : v) x = -x;
        blk.set_col(k, v);
      }
      nb[w] = std::move(blk);
    }
    m.N = assemble(nb, neg);
    Sparse<Q> sq = *m.N * *m.N;
    m.n_square = sq.at(0, 0);
    if (!(sq == Sparse<Q>::identity(m.dim, m.n_square)))
      throw std::logic_error("build_module: N^2 is not scalar");
  }
};

}  // namespace

HWModule build_module(const SimpleType& t, const Weight& lam) {
  validate(IrrepSpec::of(t, lam));
  const RootSystem& rs = root_system(t);
  HWModule m;
  m.type = t;
  m.lambda = lam;
  Builder b(rs, m);
  b.weights();
  b.generate();
  b.finish();
  b.chevalley_intertwiner();
  if (Integer(m.dim) != weyl_dim(rs, lam)) throw std::logic_error("build_module: dimension mismatch");
  return m;
}

std::shared_ptr<const HWModule> module_cache(const SimpleType& t, const Weight& lam) {
  static std::mutex mu;
  static std::map<std::pair<SimpleType, Weight>, std::shared_ptr<const HWModule>> cache;
  auto key = std::make_pair(t, lam);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = std::make_shared<const HWModule>(build_module(t, lam));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, value).first->second;
}

}  // namespace cohom
