#include "cohom/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cohom/dsl.hpp"

namespace cohom {

using K = RepExpr::Kind;

std::string to_string(Provenance p) { return p == Provenance::Computed ? "computed" : "reference-fixture"; }

std::string ClassificationRow::copolarity_cell() const {
  if (copolarity_trivial) return "trivial";
  if (copolarity) return std::to_string(*copolarity);
  return "?";
}

std::string ClassificationRow::boundary_cell() const {
  switch (boundary) {
    case BoundaryStatus::Yes: return "yes";
    case BoundaryStatus::CertifiedNo: return "no";
    default: return "?";
  }
}

// ---------------------------------------------------------------- canonical forms

namespace {

// Node permutations preserving the Cartan matrix, found by backtracking.
const std::vector<std::vector<int>>& automorphisms(const SimpleType& t) {
  static std::mutex mu;
  static std::map<SimpleType, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(t); it != cache.end()) return it->second;
  const RootSystem& rs = root_system(t);
  const int r = rs.rank;
  std::vector<std::vector<int>> out;
  std::vector<int> p(r, -1);
  std::vector<bool> used(r, false);
  std::function<void(int)> go = [&](int i) {
    if (i == r) {
      out.push_back(p);
      return;
    }
    for (int j = 0; j < r; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = rs.cartan[i][k] == rs.cartan[j][p[k]] && rs.cartan[k][i] == rs.cartan[p[k]][j];
      if (!ok) continue;
      used[j] = true;
      p[i] = j;
      go(i + 1);
      used[j] = false;
    }
  };
  go(0);
  return cache.emplace(t, std::move(out)).first->second;
}

IrrepSpec canonical_spec(const IrrepSpec& s) {
  if (s.is_torus()) {
    Weight w = s.weight;
    auto nz = std::find_if(w.begin(), w.end(), [](int x) { return x != 0; });
    if (nz != w.end() && *nz < 0)
      for (auto& x : w) x = -x;
    return IrrepSpec::torus(w);
  }
  SimpleType t = *s.simple;
  Weight w = s.weight;
  if (t == SimpleType{Family::B, 2}) {
    t = {Family::C, 2};
    w = {w[1], w[0]};
  } else if (t == SimpleType{Family::D, 3}) {
    t = {Family::A, 3};
    w = {w[1], w[0], w[2]};
  }
  Weight best = w;
  for (const auto& p : automorphisms(t)) {
    Weight u(w.size());
    for (size_t i = 0; i < w.size(); ++i) u[p[i]] = w[i];
    best = std::max(best, u);
  }
  return IrrepSpec::of(t, best);
}

bool is_torus_leaf(const RepExpr& e) { return e.kind == K::Leaf && e.leaf.is_torus(); }

void flatten(const RepExpr& e, K kind, std::vector<RepExpr>& out) {
  if (e.kind == kind && kind != K::TensorH) {
    for (const auto& c : e.children) flatten(c, kind, out);
  } else {
    out.push_back(canonical(e));
  }
}

}  // namespace

RepExpr canonical(const RepExpr& e) {
  if (e.kind == K::Leaf) return RepExpr::make_leaf(canonical_spec(e.leaf));
  std::vector<RepExpr> parts;
  if (e.kind == K::TensorH) {
    for (const auto& c : e.children) parts.push_back(canonical(c));
  } else {
    flatten(e, e.kind, parts);
  }
  // Smaller factors first, circles last, so that labels read like the tables.
  std::vector<std::tuple<bool, long, std::string, size_t>> order;
  for (size_t i = 0; i < parts.size(); ++i)
    order.emplace_back(is_torus_leaf(parts[i]), expr_real_dim(parts[i]), canonical_key(parts[i]), i);
  std::sort(order.begin(), order.end());
  RepExpr acc = parts[std::get<3>(order[0])];
  for (size_t i = 1; i < order.size(); ++i) {
    const RepExpr& next = parts[std::get<3>(order[i])];
    acc = e.kind == K::Sum ? RepExpr::sum(acc, next) : RepExpr::tensor(e.kind, acc, next);
  }
  return acc;
}

namespace {

std::string key_of_canonical(const RepExpr& e) {
  if (e.kind == K::Leaf) return e.leaf.describe();
  const char* op = e.kind == K::TensorR ? "R" : e.kind == K::TensorC ? "C" : e.kind == K::TensorH ? "H" : "S";
  return std::string(op) + "(" + key_of_canonical(e.children[0]) + "," + key_of_canonical(e.children[1]) + ")";
}

}  // namespace

std::string canonical_key(const RepExpr& e) {
  if (e.kind == K::Leaf) return canonical_spec(e.leaf).describe();
  return key_of_canonical(canonical(e));
}

// ---------------------------------------------------------------- work pool

namespace {

void parallel_for(size_t n, int threads, const std::function<void(size_t)>& f) {
  int t = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  t = static_cast<int>(std::min<size_t>(t, n));
  if (t <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int k = 0; k < t; ++k)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

void sort_rows(std::vector<ClassificationRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
    return std::tie(a.group_dim, a.dim_V, a.group_label, a.rep_label) <
           std::tie(b.group_dim, b.dim_V, b.group_label, b.rep_label);
  });
}

ClassificationRow make_row(const RepExpr& e, const LieAction& a, int c) {
  ClassificationRow r;
  r.rep_expr = e;
  r.group_label = e.group_label;
  r.rep_label = e.rep_label;
  r.group_dim = a.group_dim;
  r.dim_V = a.dim_V;
  r.cohomogeneity = c;
  return r;
}

std::vector<SimpleType> sweep_types() {
  std::vector<SimpleType> out;
  for (int r = 1; r <= 16; ++r) out.push_back({Family::A, r});
  for (int r = 3; r <= 8; ++r) out.push_back({Family::B, r});  // B2 is C2
  for (int r = 2; r <= 9; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= 8; ++r) out.push_back({Family::D, r});  // D3 is A3
  for (const char* x : {"G2", "F4", "E6", "E7", "E8"}) out.push_back(parse_simple_type(x));
  return out;
}

// Canonical nontrivial dominant weights of t with complex dimension at most maxdim.
std::vector<IrrepSpec> canonical_leaves(const SimpleType& t, long maxdim) {
  std::vector<IrrepSpec> out;
  for (const Weight& w : dominant_weights_up_to_dim(root_system(t), maxdim)) {
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) continue;
    IrrepSpec s = IrrepSpec::of(t, w);
    if (canonical_spec(s).weight != w) continue;
    out.push_back(s);
  }
  return out;
}

RepExpr u1() { return RepExpr::make_leaf(IrrepSpec::torus({1})); }
RepExpr leaf(const IrrepSpec& s) { return RepExpr::make_leaf(s); }
RepExpr sp1() { return leaf(IrrepSpec::of({Family::A, 1}, {1})); }

struct Evaluated {
  std::optional<ClassificationRow> row;
  int c = -1;
};

// Cohomogeneity always; polarity only when the cohomogeneity is in range.
Evaluated evaluate(const RepExpr& e, int c_min, int c_max, const ClassifyOptions& opt) {
  RepExpr ce = canonical(e);
  auto a = build_action(ce);
  Evaluated out;
  out.c = cohomogeneity(*a, opt.geom);
  if (out.c < c_min || out.c > c_max) return out;
  ClassificationRow r = make_row(ce, *a, out.c);
  r.polar = is_polar(*a, opt.geom);
  out.row = std::move(r);
  return out;
}

std::vector<ClassificationRow> dedupe(std::vector<ClassificationRow> rows) {
  std::map<std::string, ClassificationRow> by_key;
  for (auto& r : rows) by_key.emplace(canonical_key(r.rep_expr), std::move(r));
  std::vector<ClassificationRow> out;
  for (auto& [k, r] : by_key) out.push_back(std::move(r));
  sort_rows(out);
  return out;
}

std::vector<ClassificationRow> evaluate_all(const std::vector<RepExpr>& cands, int c_min, int c_max,
                                            const ClassifyOptions& opt) {
  std::vector<Evaluated> res(cands.size());
  parallel_for(cands.size(), opt.threads, [&](size_t i) { res[i] = evaluate(cands[i], c_min, c_max, opt); });
  std::vector<ClassificationRow> rows;
  for (auto& r : res)
    if (r.row) rows.push_back(std::move(*r.row));
  return dedupe(std::move(rows));
}

}  // namespace

// ---------------------------------------------------------------- sweeps

std::vector<ClassificationRow> enumerate_simple(int c_min, int c_max, const ClassifyOptions& opt) {
  if (c_min < 2 || c_max > 8 || c_min > c_max) throw std::invalid_argument("enumerate_simple: need 2 <= c_min <= c_max <= 8");
  std::vector<RepExpr> cands;
  for (const SimpleType& t : sweep_types()) {
    const int g = root_system(t).group_dim();
    // dim V - dim G <= c bounds the real dimension.
    for (const IrrepSpec& s : canonical_leaves(t, g + c_max))
      if (real_dim(s) <= g + c_max) cands.push_back(leaf(s));
  }
  return evaluate_all(cands, c_min, c_max, opt);
}

std::vector<ClassificationRow> enumerate_c1(const ClassifyOptions& opt) {
  const int n = opt.family_bound;
  std::vector<SimpleType> types;
  for (int r = 1; r + 1 <= n; ++r) types.push_back({Family::A, r});
  for (int r = 3; r <= 4; ++r) types.push_back({Family::B, r});  // B4 for the spin representation of Spin9
  for (int r = 2; r <= n; ++r) types.push_back({Family::C, r});
  for (int r = 4; 2 * r <= n; ++r) types.push_back({Family::D, r});
  for (const char* x : {"G2", "F4", "E6", "E7", "E8"}) types.push_back(parse_simple_type(x));
  std::vector<RepExpr> cands;
  for (const SimpleType& t : types) {
    const int g = root_system(t).group_dim();
    for (const IrrepSpec& s : canonical_leaves(t, g + 4)) {
      const long rd = real_dim(s);
      const FSType ty = fs_type(s);
      if (rd <= g + 1) cands.push_back(leaf(s));
      if (ty != FSType::Real && rd <= g + 2) cands.push_back(RepExpr::tensor(K::TensorC, leaf(s), u1()));
      if (ty == FSType::Quaternionic && rd <= g + 4) cands.push_back(RepExpr::tensor(K::TensorH, leaf(s), sp1()));
    }
  }
  std::vector<ClassificationRow> rows = evaluate_all(cands, 1, 1, opt);
  // SO(n) on R^n belongs to the infinite family; keep its members within the bound.
  std::erase_if(rows, [n](const ClassificationRow& r) {
    const RepExpr& e = r.rep_expr;
    if (e.kind != K::Leaf || !e.leaf.simple) return false;
    Family f = e.leaf.simple->family;
    return (f == Family::B || f == Family::D) && vector_type(e.leaf) && r.dim_V > n;
  });
  return rows;
}

// ---------------------------------------------------------------- products

namespace {

// An irreducible building block: a simple leaf, a leaf times U1, or a leaf times SP1 over H.
struct Brick {
  RepExpr e;
  long rd = 0;   // real dimension
  long cd = 0;   // complex dimension of the simple leaf
  int g = 0;     // group dimension
  IrrepSpec spec;
  FSType ty = FSType::Real;  // type of the simple leaf
  std::string family;        // "SU", "U", "SP", "SPU", "SPSP", "SO" or empty
  int n = 0;                 // family parameter
};

std::string leaf_family(const IrrepSpec& s, int& n) {
  const SimpleType& t = *s.simple;
  const Weight& w = s.weight;
  Weight first(t.rank, 0);
  first[0] = 1;
  if (t.family == Family::A && w == first) {
    n = t.rank + 1;
    return t.rank == 1 ? "SP" : "SU";  // SU2 = SP1
  }
  if (t.family == Family::C && w == first) {
    n = t.rank;
    return "SP";
  }
  if ((t.family == Family::B || t.family == Family::D) && w == first) {
    n = static_cast<int>(complex_dim(s));
    return "SO";
  }
  return "";
}

std::vector<Brick> bricks(long cap_dim) {
  std::vector<Brick> out;
  for (const SimpleType& t : sweep_types()) {
    const int g = root_system(t).group_dim();
    for (const IrrepSpec& s : canonical_leaves(t, cap_dim)) {
      Brick b;
      b.spec = s;
      b.cd = complex_dim(s);
      b.ty = fs_type(s);
      b.g = g;
      int n = 0;
      std::string fam = leaf_family(s, n);
      b.e = leaf(s);
      b.rd = real_dim(s);
      b.family = fam;
      b.n = n;
      out.push_back(b);
      if (b.ty != FSType::Real) {
        Brick u = b;
        u.e = RepExpr::tensor(K::TensorC, leaf(s), u1());
        u.g = g + 1;
        u.family = fam == "SU" ? "U" : fam == "SP" ? "SPU" : "";
        out.push_back(u);
      }
      if (b.ty == FSType::Quaternionic) {
        Brick h = b;
        h.e = RepExpr::tensor(K::TensorH, leaf(s), sp1());
        h.g = g + 3;
        h.rd = 2 * b.cd;  // the real form of C^{2m} (x) C^2
        h.ty = FSType::Real;
        h.family = fam == "SP" ? "SPSP" : "";
        out.push_back(h);
      }
    }
  }
  return out;
}

bool so_standard(const Brick& b) {
  if (b.e.kind == K::TensorH) return b.spec == IrrepSpec::of({Family::A, 1}, {1});  // SO4
  if (b.e.kind != K::Leaf) return false;
  const IrrepSpec& s = b.spec;
  if (b.family == "SO") return true;
  return s == IrrepSpec::of({Family::A, 1}, {2}) || s == IrrepSpec::of({Family::C, 2}, {0, 1}) ||
         s == IrrepSpec::of({Family::A, 3}, {0, 1, 0});
}

struct Job {
  std::vector<RepExpr> chain;  // evaluated in order; stops once the cohomogeneity exceeds the target
  std::string family;          // description for the pruning log, empty for single candidates
};

}  // namespace

ProductSearch search_products(int c_target, const ClassifyOptions& opt) {
  if (c_target != 4 && c_target != 5) throw std::invalid_argument("enumerate_products: c_target must be 4 or 5");
  const int c = c_target;
  const std::vector<Brick> all = bricks(64);
  std::vector<Job> jobs;
  auto family_jobs = [&](const std::string& name, auto&& select) {
    // Group the admissible family members by family name, ordered by parameter.
    std::map<std::string, std::vector<std::pair<int, RepExpr>>> fams;
    for (const Brick& b : all) {
      auto e = select(b);
      if (!e) continue;
      if (b.family.empty())
        jobs.push_back({{*e}, ""});
      else
        fams[b.family].push_back({b.n, *e});
    }
    for (auto& [f, members] : fams) {
      std::sort(members.begin(), members.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      Job j;
      j.family = name + " (x) " + f + "(n)";
      for (auto& m : members) j.chain.push_back(m.second);
      jobs.push_back(std::move(j));
    }
  };

  // Real case: a real factor of dimension at most 5 times any brick.
  for (const Brick& v1 : all) {
    if (v1.ty != FSType::Real || v1.rd < 3 || v1.rd > 5) continue;
    if (v1.e.kind == K::TensorC) continue;
    family_jobs(
        v1.e.group_label + " on " + v1.e.rep_label,
        [&](const Brick& v2) -> std::optional<RepExpr> {
          if (v1.rd * v2.rd > v1.g + v2.g + c) return std::nullopt;
          if (so_standard(v1) && so_standard(v2)) return std::nullopt;  // SO m (x) SO n is polar
          return RepExpr::tensor(K::TensorR, v1.e, v2.e);
        });
  }

  // Complex case: a small complex factor times a simple leaf, with and without a circle.
  for (const Brick& a : all) {
    if (a.e.kind != K::Leaf || a.ty == FSType::Real || a.cd < 2 || a.cd > 5) continue;
    for (bool circle : {true, false}) {
      family_jobs(
          a.e.group_label + (circle ? "xU1" : ""),
          [&](const Brick& b) -> std::optional<RepExpr> {
            if (b.e.kind != K::Leaf || b.ty == FSType::Real) return std::nullopt;
            if (a.ty == FSType::Quaternionic && b.ty == FSType::Quaternionic) return std::nullopt;
            if (2 * a.cd * b.cd > a.g + b.g + (circle ? 1 : 0) + c) return std::nullopt;
            int na = 0;
            bool su_a = leaf_family(a.spec, na) == "SU" || a.spec == IrrepSpec::of({Family::A, 1}, {1});
            if (circle && su_a && b.family == "SU") return std::nullopt;  // SU m (x) U n is polar
            RepExpr e = RepExpr::tensor(K::TensorC, a.e, b.e);
            return circle ? RepExpr::tensor(K::TensorC, e, u1()) : e;
          });
    }
  }

  // Quaternionic case.
  for (const Brick& a : all) {
    if (a.e.kind != K::Leaf || a.ty != FSType::Quaternionic) continue;
    family_jobs(
        a.e.group_label + " over H",
        [&](const Brick& b) -> std::optional<RepExpr> {
          if (b.e.kind != K::Leaf || b.ty != FSType::Quaternionic) return std::nullopt;
          if (a.cd * b.cd > a.g + b.g + c) return std::nullopt;
          if (a.family == "SP" && b.family == "SP") return std::nullopt;  // SP m (x) SP n is polar
          return RepExpr::tensor(K::TensorH, a.e, b.e);
        });
  }

  // A simple factor times a circle.
  for (const Brick& b : all)
    if (b.e.kind == K::TensorC && b.rd <= b.g + c) jobs.push_back({{b.e}, ""});

  // Dedupe equal candidates within jobs of one element.
  std::set<std::string> seen;
  std::vector<Job> unique;
  for (auto& j : jobs) {
    if (j.family.empty()) {
      if (!seen.insert(canonical_key(j.chain[0])).second) continue;
    }
    unique.push_back(std::move(j));
  }

  std::vector<std::vector<ClassificationRow>> found(unique.size());
  std::vector<std::optional<PrunedFamily>> pruned(unique.size());
  std::vector<int> counts(unique.size(), 0);
  parallel_for(unique.size(), opt.threads, [&](size_t i) {
    for (const RepExpr& e : unique[i].chain) {
      Evaluated ev = evaluate(e, c, c, opt);
      ++counts[i];
      if (ev.row && !ev.row->polar) found[i].push_back(std::move(*ev.row));
      if (!unique[i].family.empty() && ev.c > c) {
        // c(rho(n)) <= c(rho(n+1)): the rest of the family is out of range.
        pruned[i] = PrunedFamily{unique[i].family, print_rep(canonical(e)), ev.c};
        break;
      }
    }
  });
  ProductSearch out;
  std::vector<ClassificationRow> rows;
  for (size_t i = 0; i < unique.size(); ++i) {
    for (auto& r : found[i]) rows.push_back(std::move(r));
    if (pruned[i]) out.pruned.push_back(*pruned[i]);
    out.evaluated += counts[i];
  }
  // Single-factor rows belong to the simple sweep.
  std::erase_if(rows, [](const ClassificationRow& r) { return r.rep_expr.kind == K::Leaf; });
  out.rows = dedupe(std::move(rows));
  std::sort(out.pruned.begin(), out.pruned.end(),
            [](const PrunedFamily& x, const PrunedFamily& y) { return x.family < y.family; });
  return out;
}

std::vector<ClassificationRow> enumerate_products(int c_target, const ClassifyOptions& opt) {
  return search_products(c_target, opt).rows;
}

std::vector<ClassificationRow> classify_cohomogeneity(int c, const ClassifyOptions& opt) {
  std::vector<ClassificationRow> rows;
  for (auto& r : enumerate_simple(c, c, opt))
    if (!r.polar) rows.push_back(std::move(r));
  for (auto& r : enumerate_products(c, opt)) rows.push_back(std::move(r));
  return dedupe(std::move(rows));
}

// ---------------------------------------------------------------- reference tables

const std::vector<ReferenceRow>& table_fixture(int c) {
  static const std::vector<ReferenceRow> t4 = {
      {"SO3", "R^7", 4, "trivial", "no", "SO(3): R^7"},
      {"U2", "C^4", 4, "trivial", "no", "U(2): C^4"},
      {"SO3xG2", "R^3 (x)_R R^7", 4, "2", "yes", "SO(3) (x)_R G2"},
      {"SU3", "S^2 C^3", 4, "2", "yes", "SU(3): S^2"},
      {"SU6", "Lambda^2 C^6", 4, "2", "yes", "SU(6): Lambda^2"},
      {"SU3xSU3", "C^3 (x)_C C^3", 4, "2", "yes", "SU(3) (x)_C SU(3)"},
      {"E6", "C^27", 4, "2", "yes", "E6: C^27"},
  };
  static const std::vector<ReferenceRow> t5 = {
      {"SU2", "C^4", 5, "trivial", "no", "SU(2): C^4"},
      {"SO3xU2", "R^3 (x)_R R^4", 5, "trivial", "yes", "SO(3) (x)_R U(2)"},
      {"SU4", "S^2 C^4", 5, "3", "yes", "SU(4): S^2"},
      {"SU8", "Lambda^2 C^8", 5, "3", "yes", "SU(8): Lambda^2"},
      {"SU4xSU4", "C^4 (x)_C C^4", 5, "3", "yes", "SU(4) (x)_C SU(4)"},
      {"SO4xSpin7", "R^4 (x)_R R^8", 5, "3", "yes", "SO(4) (x)_R Spin(7): R^8"},
      {"U3xSP2", "C^3 (x)_C C^4", 5, "7", "yes", "U(3) (x)_C SP(2)"},
  };
  static const std::vector<ReferenceRow> none;
  return c == 4 ? t4 : c == 5 ? t5 : none;
}

namespace {

// Cells whose exact value rests on arguments outside the engine; computed values are only
// checked against them.
bool carried_from_fixture(const ReferenceRow& f, const std::string& cell) {
  return cell == "copolarity" && f.group == "SO4xSpin7";
}

const ReferenceRow* fixture_for(const ClassificationRow& r) {
  for (int c : {4, 5})
    for (const auto& f : table_fixture(c))
      if (f.group == r.group_label && f.rep == r.rep_label) return &f;
  return nullptr;
}

}  // namespace

AnnotationResult annotate_tables(std::vector<ClassificationRow> rows, const ClassifyOptions& opt) {
  AnnotationResult out;
  parallel_for(rows.size(), opt.threads, [&](size_t i) {
    ClassificationRow& r = rows[i];
    auto a = build_action(r.rep_expr);
    r.report = analyze(*a, opt.geom, true);
    const AnalysisReport& rep = *r.report;
    r.polar = rep.polar;
    if (rep.polar) {
      r.copolarity = 0;
    } else if (rep.copolarity_trivial) {
      r.copolarity_trivial = true;
    } else {
      r.copolarity = rep.copolarity_upper;
    }
    r.boundary = rep.boundary;
    if (r.boundary == BoundaryStatus::Yes && rep.witness)
      r.notes.push_back("boundary: witness point with " + std::to_string(rep.witness->isotropy_dim) +
                        "-dimensional isotropy");
    if (r.boundary == BoundaryStatus::CertifiedNo) r.notes.push_back("boundary: no-boundary certificate");
    // Empty boundary forces trivial copolarity, so a nontrivial one forces a boundary.
    if (r.boundary == BoundaryStatus::Unknown && r.copolarity && !r.copolarity_trivial) {
      r.boundary = BoundaryStatus::Yes;
      r.notes.push_back("boundary: implied by nontrivial copolarity");
    }
    if (r.boundary == BoundaryStatus::CertifiedNo && !r.copolarity_trivial) {
      r.notes.push_back("copolarity: trivial, implied by empty boundary (computed bound " + r.copolarity_cell() + ")");
      r.copolarity_trivial = true;
      r.copolarity.reset();
    }
  });
  for (auto& r : rows) {
    const ReferenceRow* f = fixture_for(r);
    if (f && carried_from_fixture(*f, "copolarity")) {
      int ref = std::stoi(f->copolarity);
      std::string computed = r.copolarity_cell();
      if (r.copolarity_trivial || (r.copolarity && *r.copolarity < ref))
        out.failures.push_back(r.group_label + " " + r.rep_label + ": computed copolarity " + computed +
                               " contradicts the reference value " + f->copolarity);
      r.copolarity = ref;
      r.copolarity_trivial = false;
      r.provenance = Provenance::ReferenceFixture;
      r.notes.push_back("copolarity: reference value " + f->copolarity + ", computed upper bound " + computed);
    }
    if (f && r.boundary == BoundaryStatus::Unknown) {
      r.boundary = f->boundary == "yes" ? BoundaryStatus::Yes : BoundaryStatus::CertifiedNo;
      r.provenance = Provenance::ReferenceFixture;
      r.notes.push_back("boundary: reference value " + f->boundary + "; the engine found no witness");
    }
    if (f && !r.copolarity && !r.copolarity_trivial) {
      if (f->copolarity == "trivial")
        r.copolarity_trivial = true;
      else
        r.copolarity = std::stoi(f->copolarity);
      r.provenance = Provenance::ReferenceFixture;
      r.notes.push_back("copolarity: reference value " + f->copolarity);
    }
    if (r.boundary == BoundaryStatus::Unknown || (!r.copolarity && !r.copolarity_trivial))
      out.failures.push_back(r.group_label + " " + r.rep_label + ": undecided cell");
  }
  out.rows = std::move(rows);
  return out;
}

std::string TableDiff::to_string() const {
  std::string s;
  for (const auto& m : missing) s += "missing: " + m + "\n";
  for (const auto& m : extra) s += "extra: " + m + "\n";
  for (const auto& m : mismatched) s += "mismatch: " + m + "\n";
  return s;
}

TableDiff compare_to_reference(const std::vector<ClassificationRow>& rows, const std::vector<ReferenceRow>& fixture) {
  TableDiff d;
  std::map<std::string, const ClassificationRow*> got;
  for (const auto& r : rows) got[r.group_label + " | " + r.rep_label] = &r;
  std::set<std::string> expected;
  for (const auto& f : fixture) {
    std::string key = f.group + " | " + f.rep;
    expected.insert(key);
    auto it = got.find(key);
    if (it == got.end()) {
      d.missing.push_back(key);
      continue;
    }
    const ClassificationRow& r = *it->second;
    if (r.cohomogeneity != f.cohomogeneity)
      d.mismatched.push_back(key + ": cohomogeneity " + std::to_string(r.cohomogeneity) + " != " + std::to_string(f.cohomogeneity));
    if (r.copolarity_cell() != f.copolarity)
      d.mismatched.push_back(key + ": copolarity " + r.copolarity_cell() + " != " + f.copolarity);
    if (r.boundary_cell() != f.boundary)
      d.mismatched.push_back(key + ": boundary " + r.boundary_cell() + " != " + f.boundary);
  }
  for (const auto& [key, r] : got)
    if (!expected.count(key)) d.extra.push_back(key);
  return d;
}

// ---------------------------------------------------------------- sweep fixtures

std::vector<SweepEntry> simple_polar_fixture() {
  std::vector<SweepEntry> v;
  auto add = [&](const std::string& e, int c) { v.push_back({e, c, true}); };
  auto n_ = [](const std::string& head, int n, const std::string& rep) {
    return head + "(" + std::to_string(n) + "): " + rep;
  };
  for (int n = 3; n <= 9; ++n)
    if (n != 4) add(n_("SO", n, "S^2_0"), n - 1);  // SO4 is not simple
  for (int n = 3; n <= 9; ++n) add(n_("SP", n, "Lambda^2"), n - 1);
  add("F4: R^26", 2);
  for (int n = 3; n <= 9; ++n) add(n_("SU", n, "adjoint"), n - 1);
  for (int n = 5; n <= 17; ++n) add(n_("SO", n, "Lambda^2"), n / 2);
  for (int n = 2; n <= 8; ++n) add(n_("SP", n, "S^2"), n);
  add("F4: adjoint", 4);
  add("G2: adjoint", 2);
  add("E6: adjoint", 6);
  add("E7: adjoint", 7);
  add("E8: adjoint", 8);
  for (int n = 5; n <= 17; n += 2) add(n_("SU", n, "Lambda^2"), (n - 1) / 2);
  add("Spin(10): C^16", 2);
  add("SP(4): Lambda^4", 6);
  add("SU(8): Lambda^4", 7);
  add("Spin(16): R^128", 8);
  return v;
}

std::vector<SweepEntry> simple_nonpolar_fixture() {
  std::vector<SweepEntry> v;
  auto add = [&](const std::string& e, int c) { v.push_back({e, c, false}); };
  for (int n : {7, 9, 11}) add("SO(3): R^" + std::to_string(n), n - 3);
  add("SU(2): C^4", 5);
  add("SU(6): Lambda^3", 7);
  for (int n = 6; n <= 14; n += 2) add("SU(" + std::to_string(n) + "): Lambda^2", n / 2 + 1);
  for (int n = 3; n <= 7; ++n) add("SU(" + std::to_string(n) + "): S^2", n + 1);
  add("SP(3): Lambda^3", 7);
  add("Spin(12): C^32", 7);
  add("E6: C^27", 4);
  add("E7: C^56", 7);
  return v;
}

std::vector<SweepEntry> c1_fixture(int n_max) {
  std::vector<SweepEntry> v;
  auto add = [&](const std::string& e) { v.push_back({e, 1, true}); };
  auto s = [](int n) { return std::to_string(n); };
  for (int n = 3; n <= n_max; ++n) add("SO(" + s(n) + "): R^" + s(n));
  for (int n = 2; n <= n_max; ++n) add("SU(" + s(n) + ")");
  for (int n = 1; n <= n_max; ++n) add("SP(" + s(n) + ")");
  add("G2: R^7");
  add("Spin(7): R^8");
  add("Spin(9): R^16");
  for (int n = 2; n <= n_max; ++n) add("U(" + s(n) + ")");
  for (int n = 1; n <= n_max; ++n) add("SP(" + s(n) + ") (x)_C U(1)");
  for (int n = 1; n <= n_max; ++n) add("SP(" + s(n) + ") (x)_H SP(1)");
  return v;
}

std::string SetDiff::to_string() const {
  std::string s;
  for (const auto& m : missing) s += "missing: " + m + "\n";
  for (const auto& m : extra) s += "extra: " + m + "\n";
  for (const auto& m : mismatched) s += "mismatch: " + m + "\n";
  return s;
}

SetDiff compare_sweep(const std::vector<ClassificationRow>& rows, const std::vector<SweepEntry>& fixture) {
  SetDiff d;
  std::map<std::string, SweepEntry> want;
  for (const auto& f : fixture) {
    std::string key = canonical_key(parse_rep(f.expr));
    auto [it, fresh] = want.emplace(key, f);
    if (!fresh && (it->second.cohomogeneity != f.cohomogeneity || it->second.polar != f.polar))
      d.mismatched.push_back("fixture entries " + it->second.expr + " and " + f.expr + " disagree");
  }
  std::set<std::string> got;
  for (const auto& r : rows) {
    std::string key = canonical_key(r.rep_expr);
    got.insert(key);
    auto it = want.find(key);
    std::string name = r.group_label + " " + r.rep_label + " [" + key + "]";
    if (it == want.end()) {
      d.extra.push_back(name + " c=" + std::to_string(r.cohomogeneity) + (r.polar ? " polar" : ""));
      continue;
    }
    if (it->second.cohomogeneity != r.cohomogeneity || it->second.polar != r.polar)
      d.mismatched.push_back(name + ": c=" + std::to_string(r.cohomogeneity) + (r.polar ? " polar" : " non-polar") +
                             ", expected c=" + std::to_string(it->second.cohomogeneity) +
                             (it->second.polar ? " polar" : " non-polar"));
  }
  for (const auto& [key, f] : want)
    if (!got.count(key)) d.missing.push_back(f.expr + " [" + key + "]");
  return d;
}

// ---------------------------------------------------------------- emitters

namespace {

const char* kColumns[] = {"group", "rep", "cohomogeneity", "polar", "copolarity", "boundary", "provenance"};

std::vector<std::string> cells(const ClassificationRow& r) {
  return {r.group_label, r.rep_label, std::to_string(r.cohomogeneity), r.polar ? "yes" : "no",
          r.copolarity_cell(), r.boundary_cell(), to_string(r.provenance)};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string rows_to_json(const std::vector<ClassificationRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["group"] = r.group_label;
    o["rep"] = r.rep_label;
    o["cohomogeneity"] = r.cohomogeneity;
    o["polar"] = r.polar;
    o["copolarity"] = r.copolarity_cell();
    o["boundary"] = r.boundary_cell();
    o["provenance"] = to_string(r.provenance);
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

std::string rows_to_csv(const std::vector<ClassificationRow>& rows) {
  std::string s;
  for (size_t i = 0; i < std::size(kColumns); ++i) s += (i ? "," : "") + std::string(kColumns[i]);
  s += "\n";
  for (const auto& r : rows) {
    auto c = cells(r);
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + csv_field(c[i]);
    s += "\n";
  }
  return s;
}

std::string rows_to_markdown(const std::vector<ClassificationRow>& rows) {
  std::vector<std::vector<std::string>> table{{"G", "rho", "c", "polar", "copolarity", "boundary", "provenance"}};
  for (const auto& r : rows) table.push_back(cells(r));
  std::vector<size_t> w(table[0].size(), 0);
  for (const auto& row : table)
    for (size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    out << "|";
    for (size_t i = 0; i < row.size(); ++i) out << " " << row[i] << std::string(w[i] - row[i].size(), ' ') << " |";
    out << "\n";
  };
  line(table[0]);
  out << "|";
  for (size_t i = 0; i < w.size(); ++i) out << std::string(w[i] + 2, '-') << "|";
  out << "\n";
  for (size_t k = 1; k < table.size(); ++k) line(table[k]);
  return out.str();
}

}  // namespace cohom
