#include "cohom/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <set>
#include <stdexcept>

namespace cohom {

namespace {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

// Bourbaki numbering; entries are (alpha_i, alpha_j) with short roots of length 2.
std::vector<std::vector<int>> symmetric_form(const SimpleType& t) {
  int n = t.rank;
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) b[i][i] = 4;
      b[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      b[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      b[0][0] = 2;
      b[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return b;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = m[i][n + j];
  return r;
}

}  // namespace

std::string SimpleType::name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

bool is_valid(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

SimpleType parse_simple_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad simple type '" + s + "'");
  static const std::string fams = "ABCDEFG";
  auto pos = fams.find(s[0]);
  if (pos == std::string::npos) throw std::invalid_argument("bad simple type '" + s + "'");
  SimpleType t{static_cast<Family>(pos), std::stoi(s.substr(1))};
  if (!is_valid(t)) throw std::invalid_argument("invalid rank for type '" + s + "'");
  return t;
}

RootSystem build_root_system(const SimpleType& t) {
  if (!is_valid(t)) throw std::invalid_argument("invalid rank " + std::to_string(t.rank) + " for the family");
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  int n = t.rank;
  rs.form = symmetric_form(t);
  rs.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan[i][j] = 2 * rs.form[i][j] / rs.form[i][i];
  rs.cartan_inv = invert(rs.cartan);

  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    layer.push_back(a);
    seen.insert(a);
  }
  std::vector<std::vector<int>> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (;;) {
          std::vector<int> d = beta;
          d[i] -= p + 1;
          if (d[i] < 0 || !seen.count(d)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += beta[j] * rs.cartan[i][j];
        if (p - pair > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  rs.positive_roots = all;
  for (const auto& beta : all) {
    int len = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) len += beta[i] * rs.form[i][j] * beta[j];
    std::vector<int> co(n);
    for (int j = 0; j < n; ++j) co[j] = beta[j] * rs.form[j][j] / len;
    rs.positive_coroots.push_back(co);
  }
  return rs;
}

const RootSystem& root_system(const SimpleType& t) {
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, std::make_unique<RootSystem>(build_root_system(t))).first;
  return *it->second;
}

Weight RootSystem::root_labels(const std::vector<int>& root) const {
  Weight w(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) w[i] += cartan[i][j] * root[j];
  return w;
}

Weight RootSystem::simple_root(int i) const {
  Weight w(rank);
  for (int k = 0; k < rank; ++k) w[k] = cartan[k][i];
  return w;
}

std::vector<Rational> RootSystem::root_coords(const Weight& w) const {
  std::vector<Rational> m(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) m[i] += cartan_inv[i][j] * w[j];
  return m;
}

Rational RootSystem::inner(const Weight& x, const Weight& y) const {
  std::vector<Rational> m = root_coords(y);
  Rational s = 0;
  for (int i = 0; i < rank; ++i) s += x[i] * m[i] * form[i][i] / 2;
  return s;
}

int RootSystem::pair_coroot(const Weight& w, size_t k) const {
  int s = 0;
  for (int j = 0; j < rank; ++j) s += positive_coroots[k][j] * w[j];
  return s;
}

Weight RootSystem::highest_root_labels() const { return root_labels(positive_roots.back()); }

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight r = w;
  int c = w[i];
  for (int k = 0; k < rank; ++k) r[k] -= c * cartan[k][i];
  return r;
}

int RootSystem::index_of_root(const std::vector<int>& root) const {
  auto it = std::find(positive_roots.begin(), positive_roots.end(), root);
  return it == positive_roots.end() ? -1 : static_cast<int>(it - positive_roots.begin());
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

Integer weyl_dim(const RootSystem& rs, const Weight& lam) {
  if (static_cast<int>(lam.size()) != rs.rank) throw std::invalid_argument("weight has wrong length");
  if (!is_dominant(lam)) throw std::invalid_argument("weyl_dim: weight is not dominant");
  Integer num = 1, den = 1;
  for (size_t k = 0; k < rs.positive_coroots.size(); ++k) {
    int a = 0, b = 0;
    for (int j = 0; j < rs.rank; ++j) {
      a += rs.positive_coroots[k][j] * (lam[j] + 1);
      b += rs.positive_coroots[k][j];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

long weyl_dim_small(const RootSystem& rs, const Weight& lam) {
  Integer d = weyl_dim(rs, lam);
  if (!d.fits_slong_p()) throw std::overflow_error("dimension too large");
  return d.get_si();
}

std::vector<Weight> dominant_weights_up_to_dim(const RootSystem& rs, long maxdim) {
  // The dimension grows in every label, so the admissible set is a down-set reachable from 0.
  std::set<Weight> kept;
  std::queue<Weight> q;
  Weight zero(rs.rank, 0);
  if (maxdim >= 1) {
    kept.insert(zero);
    q.push(zero);
  }
  Integer bound = maxdim;
  while (!q.empty()) {
    Weight w = q.front();
    q.pop();
    for (int i = 0; i < rs.rank; ++i) {
      Weight u = w;
      ++u[i];
      if (kept.count(u)) continue;
      if (weyl_dim(rs, u) > bound) continue;
      kept.insert(u);
      q.push(u);
    }
  }
  std::vector<std::pair<Integer, Weight>> out;
  for (const auto& w : kept) out.push_back({weyl_dim(rs, w), w});
  std::sort(out.begin(), out.end());
  std::vector<Weight> r;
  for (auto& [d, w] : out) r.push_back(w);
  return r;
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& w) {
  Weight u = w;
  for (;;) {
    int i = 0;
    while (i < rs.rank && u[i] >= 0) ++i;
    if (i == rs.rank) return u;
    u = rs.reflect(u, i);
  }
}

Weight longest_element_dual(const RootSystem& rs, const Weight& lam) {
  Weight neg = lam;
  for (auto& x : neg) x = -x;
  return dominant_conjugate(rs, neg);
}

std::vector<int> longest_element_word(const RootSystem& rs) {
  Weight u(rs.rank, -1);
  std::vector<int> word;
  for (;;) {
    int i = 0;
    while (i < rs.rank && u[i] >= 0) ++i;
    if (i == rs.rank) break;
    u = rs.reflect(u, i);
    word.push_back(i);
  }
  return word;
}

int classical_group_dim(const SimpleType& t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

bool dominates(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  Weight d(rs.rank);
  for (int i = 0; i < rs.rank; ++i) d[i] = lam[i] - mu[i];
  for (const auto& c : rs.root_coords(d))
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

std::string weight_to_string(const Weight& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

}  // namespace cohom
