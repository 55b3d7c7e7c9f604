// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cohom/cases.hpp"
#include "cohom/classify.hpp"
#include "props.hpp"

using namespace cohom;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail = "") {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << n << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cohom_of(const std::string& s) { return cohomogeneity(*build_action(parse_rep(s))); }

std::string join(const std::vector<std::string>& v, size_t max = 5) {
  std::string s;
  for (size_t i = 0; i < v.size() && i < max; ++i) s += (i ? "; " : "") + v[i];
  if (v.size() > max) s += "; ...";
  return s;
}

struct Tables {
  std::map<int, std::vector<ClassificationRow>> rows;
  double seconds = 0;
};

Tables criterion1() {
  Tables t;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<std::string> problems;
  for (int c : {4, 5}) {
    t.rows[c] = classify_cohomogeneity(c);
    std::set<std::string> got, want;
    for (const auto& r : t.rows[c])
      got.insert(r.group_label + " | " + r.rep_label + " | " + std::to_string(r.cohomogeneity));
    for (const auto& f : table_fixture(c)) want.insert(f.group + " | " + f.rep + " | " + std::to_string(f.cohomogeneity));
    for (const auto& g : got)
      if (!want.count(g)) problems.push_back("extra " + g);
    for (const auto& w : want)
      if (!got.count(w)) problems.push_back("missing " + w);
    ok = ok && got == want && t.rows[c].size() == 7;
  }
  t.seconds = seconds_since(t0);
  ok = ok && t.seconds < 600;
  std::ostringstream d;
  d << "7 + 7 rows, " << static_cast<int>(t.seconds) << " s";
  if (!problems.empty()) d << "; " << join(problems);
  report(1, ok, "classify --cohom 4 and 5 reproduce both tables", d.str());
  return t;
}

void criterion2(const Tables& t) {
  bool ok = true;
  std::vector<std::string> notes, problems;
  int computed = 0;
  for (int c : {4, 5}) {
    auto it = t.rows.find(c);
    if (it == t.rows.end()) {
      ok = false;
      continue;
    }
    AnnotationResult res = annotate_tables(it->second);
    for (const auto& f : res.failures) problems.push_back(f);
    TableDiff d = compare_to_reference(res.rows, table_fixture(c));
    if (!d.empty()) problems.push_back(d.to_string());
    for (const auto& r : res.rows) {
      if (r.copolarity_cell() == "?" || r.boundary_cell() == "?") problems.push_back(r.group_label + " undecided");
      if (r.provenance == Provenance::ReferenceFixture)
        notes.push_back(r.group_label + " " + r.rep_label + " from fixture");
      else
        ++computed;
    }
    ok = ok && res.failures.empty() && d.empty();
  }
  ok = ok && problems.empty();
  std::string detail = std::to_string(computed) + " rows fully computed";
  if (!notes.empty()) detail += "; " + join(notes);
  if (!problems.empty()) detail += "; " + join(problems);
  report(2, ok, "copolarity and boundary columns decided and matching", detail);
}

void criterion3() {
  auto rows = enumerate_simple(2, 8);
  auto fx = simple_polar_fixture();
  auto np = simple_nonpolar_fixture();
  fx.insert(fx.end(), np.begin(), np.end());
  SetDiff d = compare_sweep(rows, fx);
  report(3, d.empty(), "simple-group sweep for 2 <= c <= 8",
         std::to_string(rows.size()) + " rows" + (d.empty() ? "" : "; " + d.to_string()));
}

void criterion4() {
  auto rows = enumerate_c1();
  SetDiff d = compare_sweep(rows, c1_fixture(8));
  report(4, d.empty(), "cohomogeneity one list for n <= 8",
         std::to_string(rows.size()) + " rows" + (d.empty() ? "" : "; " + d.to_string()));
}

void criterion5() {
  const std::pair<const char*, int> spots[] = {
      {"SU(2): C^4", 5},        {"E6: C^27", 4},          {"SO(3): R^3 (x)_R G2: R^7", 4},
      {"U(3) (x)_C SP(2)", 5},  {"SO(4) (x)_R Spin(7): R^8", 5}, {"SU(3) (x)_C SP(2)", 6},
      {"SO(3) (x)_R U(3)", 6},  {"SO(3) (x)_R U(4)", 6},  {"SO(3) (x)_R U(2)", 5}};
  std::vector<std::string> bad;
  for (auto [s, c] : spots) {
    int got = cohom_of(s);
    if (got != c) bad.push_back(std::string(s) + " gave " + std::to_string(got));
  }
  report(5, bad.empty(), "spot cohomogeneities", bad.empty() ? "9 values" : join(bad));
}

void criterion6() {
  // Smallest parameter of each family in the sweep fixtures.
  const char* polar[] = {"SO(3): S^2_0",  "SP(3): Lambda^2", "F4: R^26",       "SU(3): adjoint", "SO(5): Lambda^2",
                         "SP(2): S^2",    "F4: adjoint",     "G2: adjoint",    "E6: adjoint",    "E7: adjoint",
                         "E8: adjoint",   "SU(5): Lambda^2", "Spin(10): C^16", "SP(4): Lambda^4", "SU(8): Lambda^4",
                         "Spin(16): R^128"};
  const char* nonpolar[] = {"SO(3): R^7",      "SU(2): C^4",      "SU(6): Lambda^3", "SU(6): Lambda^2", "SU(3): S^2",
                            "SP(3): Lambda^3", "Spin(12): C^32",  "E6: C^27",        "E7: C^56"};
  std::set<std::string> pkeys, nkeys;
  for (const auto& e : simple_polar_fixture()) pkeys.insert(canonical_key(parse_rep(e.expr)));
  for (const auto& e : simple_nonpolar_fixture()) nkeys.insert(canonical_key(parse_rep(e.expr)));
  std::vector<std::string> bad;
  for (const char* s : polar) {
    if (!pkeys.count(canonical_key(parse_rep(s)))) bad.push_back(std::string(s) + " not in the polar table");
    if (!is_polar(*build_action(parse_rep(s)))) bad.push_back(std::string(s) + " not polar");
  }
  for (const char* s : nonpolar) {
    if (!nkeys.count(canonical_key(parse_rep(s)))) bad.push_back(std::string(s) + " not in the non-polar table");
    if (is_polar(*build_action(parse_rep(s)))) bad.push_back(std::string(s) + " polar");
  }
  report(6, bad.empty(), "polarity oracle on both simple-group tables",
         bad.empty() ? "16 polar, 9 non-polar" : join(bad));
}

void criterion7() {
  std::vector<std::string> bad;
  for (int k = 1; k <= 6; ++k) {
    TorusCase t = verify_torus_case(k);
    if (t.cohom != k + 2) bad.push_back("k=" + std::to_string(k) + " cohom " + std::to_string(t.cohom));
    if (!t.no_boundary) bad.push_back("k=" + std::to_string(k) + " not certified");
  }
  report(7, bad.empty(), "maximal torus of SU(k+1) for k = 1..6", bad.empty() ? "c = k+2, certified-no" : join(bad));
}

void criterion8(const Tables& t) {
  std::vector<std::string> bad;
  // Dimension identities on every action analyzed above.
  std::vector<RepExpr> exprs;
  for (const auto& [c, rows] : t.rows)
    for (const auto& r : rows) exprs.push_back(r.rep_expr);
  for (const auto& e : c1_fixture(8)) exprs.push_back(parse_rep(e.expr));
  for (const auto& e : simple_nonpolar_fixture()) exprs.push_back(parse_rep(e.expr));
  for (const auto& e : simple_polar_fixture()) exprs.push_back(parse_rep(e.expr));
  int n_dim = 0;
  for (const auto& e : exprs) {
    ++n_dim;
    if (!props::dimension_identities(*build_action(e))) bad.push_back("dimension identity: " + print_rep(e));
  }
  for (const auto& s : props::sum_fixtures()) {
    SliceCheck r = slice_cohomogeneity_check(*build_action(parse_rep(s)));
    if (!r.holds()) bad.push_back("slice of sum: " + s);
  }
  for (const auto& s : props::tensor_fixtures()) {
    SliceCheck r = product_slice_check(*build_action(parse_rep(s)));
    if (!r.holds()) bad.push_back("slice of product: " + s);
  }
  for (const auto& fam : props::monotone_families())
    if (!props::monotone(fam)) bad.push_back("monotonicity: " + fam.front());
  auto irreps = props::irreps_up_to(100);
  for (const auto& s : props::fs_type_mismatches(irreps)) bad.push_back("fs type: " + s);
  for (const auto& s : props::freudenthal_mismatches(irreps)) bad.push_back("Freudenthal: " + s);
  std::ostringstream d;
  d << n_dim << " actions, 5 sums, 3 products, 2 families, " << irreps.size() << " irreps of dim <= 100";
  if (!bad.empty()) d << "; " << join(bad);
  report(8, bad.empty(), "property suites", d.str());
}

void criterion9() {
  // w = -exp(pi X / 2) with X the Cartan generator: normalizes SO3, lies outside the identity
  // component of its normalizer on odd-dimensional spaces, and fixes every other weight plane.
  std::vector<std::string> detail, bad;
  for (int n = 2; n <= 5; ++n) {
    auto a = build_action(parse_rep("SO(3): R^" + std::to_string(2 * n + 1)));
    Sparse<Rational> w = exp_pi(a->generators[2].scaled(Rational(1, 2)), n).scaled(Rational(-1));
    InvolutionAudit r = involution_audit(*a, w);
    bool polar = is_polar(*a);
    bool nice = r.normalizes && r.nice_formula_holds && !polar;
    detail.push_back("n=" + std::to_string(n) + (r.nice_formula_holds ? " formula holds" : " formula fails") +
                     (polar ? ", polar" : ""));
    if (nice != (n == 3)) bad.push_back("n=" + std::to_string(n));
  }
  report(9, bad.empty(), "involution audit on SO(3) over R^{2n+1}: non-polar and nice only for n = 3", join(detail));
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  Tables t = criterion1();
  criterion2(t);
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(t);
  criterion9();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "in " << static_cast<int>(seconds_since(t0)) << " s"
            << std::endl;
  return failures ? 1 : 0;
}
