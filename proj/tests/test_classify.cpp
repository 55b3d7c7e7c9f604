#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "cohom/classify.hpp"
#include "cohom/dsl.hpp"

using namespace cohom;

namespace {

std::string key(const char* s) { return canonical_key(parse_rep(s)); }

// Rows standing in for a fully annotated table, built straight from the fixture.
std::vector<ClassificationRow> rows_from_fixture(int c) {
  std::vector<ClassificationRow> rows;
  for (const ReferenceRow& f : table_fixture(c)) {
    ClassificationRow r;
    r.group_label = f.group;
    r.rep_label = f.rep;
    r.rep_expr = parse_rep(f.expr);
    r.cohomogeneity = f.cohomogeneity;
    if (f.copolarity == "trivial")
      r.copolarity_trivial = true;
    else
      r.copolarity = std::stoi(f.copolarity);
    r.boundary = f.boundary == "yes" ? BoundaryStatus::Yes : BoundaryStatus::CertifiedNo;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("canonical forms identify isomorphic descriptions") {
  CHECK(key("SP(2): Q^2") == key("Spin(5): spin"));
  CHECK(key("SO(5): R^5") == key("SP(2): Lambda^2"));
  CHECK(key("SU(4): Lambda^2") == key("SO(6): R^6"));
  CHECK(key("SU(4)") == key("SU(4): [0,0,1]"));
  CHECK(key("Spin(8): [0,0,1,0]") == key("SO(8): R^8"));
  CHECK(key("E6: [1,0,0,0,0,0]") == key("E6: C^27"));
  CHECK(key("SO(3): R^3 (x)_R G2: R^7") == key("G2: R^7 (x)_R SO(3): R^3"));
  CHECK(key("U(1): [1]") == key("U(1): [-1]"));
  CHECK(key("SU(3)") != key("SU(3): S^2"));
  CHECK(key("SO(3): R^5 (+) SO(3): R^3") == key("SO(3): R^3 (+) SO(3): R^5"));
}

TEST_CASE("table fixtures parse to their labels") {
  for (int c : {4, 5}) {
    const auto& fx = table_fixture(c);
    CHECK(fx.size() == 7);
    for (const ReferenceRow& f : fx) {
      INFO(f.expr);
      RepExpr e = parse_rep(f.expr);
      CHECK(e.group_label == f.group);
      CHECK(e.rep_label == f.rep);
      CHECK(f.cohomogeneity == c);
    }
  }
  CHECK(table_fixture(3).empty());
}

TEST_CASE("table diff reports each corrupted cell") {
  auto rows = rows_from_fixture(5);
  CHECK(compare_to_reference(rows, table_fixture(5)).empty());

  auto bad = rows;
  bad[2].copolarity = 4;
  TableDiff d = compare_to_reference(bad, table_fixture(5));
  CHECK(d.size() == 1);
  CHECK(d.mismatched.size() == 1);

  bad = rows;
  bad.pop_back();
  CHECK(compare_to_reference(bad, table_fixture(5)).missing.size() == 1);
  bad = rows;
  bad.push_back(rows[0]);
  bad.back().rep_label = "R^99";
  d = compare_to_reference(bad, table_fixture(5));
  CHECK(d.size() == 1);
  CHECK(d.extra.size() == 1);
  CHECK_FALSE(d.to_string().empty());
}

TEST_CASE("emitters") {
  auto rows = rows_from_fixture(4);
  auto j = nlohmann::json::parse(rows_to_json(rows));
  REQUIRE(j.is_array());
  CHECK(j.size() == 7);
  for (const auto& r : j) {
    for (const char* k : {"group", "rep", "cohomogeneity", "polar", "copolarity", "boundary", "provenance"})
      CHECK_MESSAGE(r.contains(k), k);
    CHECK(r["cohomogeneity"] == 4);
    CHECK(r["provenance"] == "computed");
  }
  std::istringstream csv(rows_to_csv(rows));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "group,rep,cohomogeneity,polar,copolarity,boundary,provenance");
  int n = 0;
  while (std::getline(csv, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(n == 7);
  std::string md = rows_to_markdown(rows);
  CHECK(md.rfind("| G ", 0) == 0);
  CHECK(std::count(md.begin(), md.end(), '\n') == 9);
  CHECK(to_string(Provenance::ReferenceFixture) == "reference-fixture");
}

TEST_CASE("small simple sweep matches the fixtures") {
  auto rows = enumerate_simple(2, 3);
  std::vector<SweepEntry> fx;
  for (const auto& list : {simple_polar_fixture(), simple_nonpolar_fixture()})
    for (const auto& e : list)
      if (e.cohomogeneity >= 2 && e.cohomogeneity <= 3) fx.push_back(e);
  SetDiff d = compare_sweep(rows, fx);
  CHECK_MESSAGE(d.empty(), d.to_string());
  for (const auto& r : rows) CHECK(r.dim_V <= r.group_dim + r.cohomogeneity);
}

TEST_CASE("product search: pruning is sound and the result deterministic") {
  ClassifyOptions one, four;
  one.threads = 1;
  four.threads = 4;
  ProductSearch a = search_products(4, one);
  ProductSearch b = search_products(4, four);
  CHECK(rows_to_csv(a.rows) == rows_to_csv(b.rows));
  CHECK(a.evaluated == b.evaluated);
  CHECK(a.rows.size() == 3);
  CHECK_FALSE(a.pruned.empty());
  for (const PrunedFamily& p : a.pruned) {
    INFO(p.family << ": " << p.first_pruned);
    int c = cohomogeneity(*build_action(parse_rep(p.first_pruned)));
    CHECK(c == p.cohomogeneity);
    CHECK(c > 4);
  }
  for (const auto& r : a.rows) {
    CHECK(r.cohomogeneity == 4);
    CHECK_FALSE(r.polar);
    CHECK(r.dim_V <= r.group_dim + r.cohomogeneity);
  }
  CHECK_THROWS(search_products(6));
}

TEST_CASE("pruned neighbours lie above the target") {
  CHECK(cohomogeneity(*build_action(parse_rep("SU(3) (x)_C SP(2)"))) == 6);
  CHECK(cohomogeneity(*build_action(parse_rep("SO(3) (x)_R U(3)"))) == 6);
  CHECK(cohomogeneity(*build_action(parse_rep("SO(3) (x)_R U(4)"))) == 6);
}
