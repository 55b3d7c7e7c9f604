#include "cohom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cohom/cases.hpp"
#include "cohom/classify.hpp"
#include "cohom/dsl.hpp"

namespace cohom {

Sparse<Rational> read_matrix(const std::string& text) {
  std::istringstream in(text);
  long r = -1, c = -1;
  if (!(in >> r >> c) || r < 0 || c < 0) throw std::invalid_argument("matrix: expected 'rows cols' header");
  std::vector<std::tuple<int, int, Rational>> trip;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("matrix: expected " + std::to_string(r * c) + " entries");
      Rational q = parse_rational(tok);
      if (q != 0) trip.emplace_back(static_cast<int>(i), static_cast<int>(j), q);
    }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("matrix: trailing data '" + extra + "'");
  return Sparse<Rational>::from_triplets(static_cast<int>(r), static_cast<int>(c), std::move(trip));
}

std::string write_matrix(const Sparse<Rational>& m) {
  std::ostringstream out;
  out << m.r << " " << m.c << "\n";
  for (int i = 0; i < m.r; ++i) {
    for (int j = 0; j < m.c; ++j) out << (j ? " " : "") << to_string(m.at(i, j));
    out << "\n";
  }
  return out.str();
}

namespace {

std::string boundary_word(BoundaryStatus b) {
  switch (b) {
    case BoundaryStatus::Yes: return "yes";
    case BoundaryStatus::CertifiedNo: return "certified-no";
    default: return "unknown";
  }
}

std::shared_ptr<const LieAction> action_of(const std::string& text) { return build_action(parse_rep(text)); }

int cmd_info(const std::string& text, std::ostream& out) {
  RepExpr e = parse_rep(text);
  auto a = build_action(e);
  out << "expr: " << print_rep(e) << "\n";
  out << "group: " << a->group_label << "\n";
  out << "rep: " << a->rep_label << "\n";
  out << "dim G: " << a->group_dim << "\n";
  out << "dim V: " << a->dim_V << "\n";
  if (a->type) out << "type: " << to_string(*a->type) << "\n";
  out << "invariant complex structure: " << (a->J ? "yes" : "no") << "\n";
  out << "canonical: " << canonical_key(e) << "\n";
  return 0;
}

int cmd_classify(int c, const std::string& format, const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  AnnotationResult res = annotate_tables(classify_cohomogeneity(c, opt), opt);
  if (format == "json")
    out << rows_to_json(res.rows);
  else if (format == "csv")
    out << rows_to_csv(res.rows);
  else
    out << rows_to_markdown(res.rows);
  for (const auto& r : res.rows)
    for (const auto& n : r.notes)
      if (r.provenance == Provenance::ReferenceFixture && n.find("reference") != std::string::npos)
        err << "note: " << r.group_label << " " << r.rep_label << ": " << n << "\n";
  for (const auto& f : res.failures) err << "error: " << f << "\n";
  return res.failures.empty() ? 0 : 1;
}

int cmd_tables(bool verify, const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  int status = 0;
  for (int c : {4, 5}) {
    AnnotationResult res = annotate_tables(classify_cohomogeneity(c, opt), opt);
    out << "cohomogeneity " << c << "\n" << rows_to_markdown(res.rows);
    for (const auto& f : res.failures) {
      err << "error: " << f << "\n";
      status = 1;
    }
    if (!verify) continue;
    TableDiff d = compare_to_reference(res.rows, table_fixture(c));
    if (d.empty()) {
      out << "verified: matches the reference table\n";
    } else {
      out << d.to_string();
      status = 1;
    }
  }
  return status;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomogeneity, polarity and orbit-space boundary of compact group representations", "cohom"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 17;
  int samples = 3;
  app.add_option("--seed", seed, "seed for generic sample points")->capture_default_str();
  app.add_option("--samples", samples, "number of generic sample points")->capture_default_str()->check(CLI::PositiveNumber);

  std::string expr;
  auto add_expr_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("expr", expr, "representation, e.g. \"SO(3): R^3 (x)_R G2: R^7\"")->required();
    return s;
  };
  auto* info = add_expr_cmd("info", "parse and describe a representation");
  auto* cohom = add_expr_cmd("cohom", "print the cohomogeneity");
  auto* polar = add_expr_cmd("polar", "decide polarity");
  auto* copol = add_expr_cmd("copolarity", "bound the copolarity");
  auto* bnd = add_expr_cmd("boundary", "search for boundary of the orbit space");

  int c_target = 0;
  std::string format = "md";
  auto* classify = app.add_subcommand("classify", "non-polar irreducible representations of a given cohomogeneity");
  classify->add_option("--cohom", c_target, "4 or 5")->required()->check(CLI::IsMember({4, 5}));
  classify->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));

  bool verify = false;
  auto* tables = app.add_subcommand("tables", "print both tables");
  tables->add_flag("--verify", verify, "compare against the reference tables");

  int k = 0;
  auto* torus = app.add_subcommand("torus-case", "maximal torus of SU(k+1) on C^{k+1}");
  torus->add_option("--k", k, "rank, 1..8")->required()->check(CLI::Range(1, 8));

  std::string matrix_file;
  auto* audit = add_expr_cmd("audit-involution", "check an involution against the fixed-point formula");
  audit->add_option("--matrix", matrix_file, "matrix file: 'rows cols' then entries")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  GeomOptions geom;
  geom.seed = seed;
  geom.samples = samples;
  ClassifyOptions copt;
  copt.geom = geom;

  try {
    if (*info) return cmd_info(expr, out);
    if (*cohom) {
      out << cohomogeneity(*action_of(expr), geom) << "\n";
      return 0;
    }
    if (*polar) {
      out << (is_polar(*action_of(expr), geom) ? "yes" : "no") << "\n";
      return 0;
    }
    if (*copol) {
      auto a = action_of(expr);
      if (is_polar(*a, geom)) {
        out << "0\n";
        return 0;
      }
      CopolarityBound b = copolarity_upper_bound(*a, geom);
      if (b.trivial)
        out << "trivial\n";
      else if (b.value)
        out << *b.value << "\n";
      else
        out << "unknown\n";
      return 0;
    }
    if (*bnd) {
      auto a = action_of(expr);
      AnalysisReport r = analyze(*a, geom, true);
      out << boundary_word(r.boundary) << "\n";
      if (r.witness)
        out << "witness: isotropy dim " << r.witness->isotropy_dim << ", fixed " << r.witness->fixed_dim << ", moving "
            << r.witness->moving_dim << "\n";
      return 0;
    }
    if (*classify) return cmd_classify(c_target, format, copt, out, err);
    if (*tables) return cmd_tables(verify, copt, out, err);
    if (*torus) {
      TorusCase t = verify_torus_case(k, geom);
      out << "cohom " << t.cohom << "\n";
      out << "boundary: " << (t.no_boundary ? "certified-no" : "unknown") << "\n";
      out << "irreducible summands: " << t.lines << (t.l_equals_k_plus_1 ? " (= k+1)" : "") << "\n";
      return t.cohom == k + 2 && t.no_boundary && t.l_equals_k_plus_1 ? 0 : 1;
    }
    if (*audit) {
      std::ifstream in(matrix_file);
      if (!in) {
        err << "error: cannot read " << matrix_file << "\n";
        return 1;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      auto a = action_of(expr);
      InvolutionAudit r = involution_audit(*a, read_matrix(buf.str()));
      out << "normalizes: " << (r.normalizes ? "yes" : "no") << "\n";
      out << "dim fixed space: " << r.f << "\n";
      out << "dim centralizer: " << r.dim_C << "\n";
      out << "formula holds: " << (r.nice_formula_holds ? "yes" : "no") << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n  " << expr << "\n  " << std::string(std::min(e.offset, expr.size()), ' ')
        << "^\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace cohom
