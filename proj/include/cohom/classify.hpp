// Enumeration of low-cohomogeneity representations and the reference tables they must reproduce.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom/geometry.hpp"

namespace cohom {

enum class Provenance { Computed, ReferenceFixture };
std::string to_string(Provenance p);

struct ClassificationRow {
  std::string group_label, rep_label;
  RepExpr rep_expr;
  int group_dim = 0, dim_V = 0;
  int cohomogeneity = 0;
  bool polar = false;
  std::optional<int> copolarity;  // empty with copolarity_trivial unset: Unknown
  bool copolarity_trivial = false;
  BoundaryStatus boundary = BoundaryStatus::Unknown;
  Provenance provenance = Provenance::Computed;
  std::optional<AnalysisReport> report;
  std::vector<std::string> notes;

  std::string copolarity_cell() const;  // "trivial", "2", "?"
  std::string boundary_cell() const;    // "yes", "no", "?"
};

struct ClassifyOptions {
  GeomOptions geom;
  int threads = 0;  // 0: hardware concurrency
  int family_bound = 8;
};

// Canonical form of an expression under diagram automorphisms of each simple factor, the
// low-rank coincidences B2 = C2 and D3 = A3, and reordering of commutative products.
RepExpr canonical(const RepExpr& e);
std::string canonical_key(const RepExpr& e);

std::vector<ClassificationRow> enumerate_c1(const ClassifyOptions& opt = {});
std::vector<ClassificationRow> enumerate_simple(int c_min, int c_max, const ClassifyOptions& opt = {});
std::vector<ClassificationRow> enumerate_products(int c_target, const ClassifyOptions& opt = {});

// Families cut off by monotonicity, with the first instance that left the target range.
struct PrunedFamily {
  std::string family;
  std::string first_pruned;  // in the text syntax
  int cohomogeneity = 0;
};
struct ProductSearch {
  std::vector<ClassificationRow> rows;
  std::vector<PrunedFamily> pruned;
  int evaluated = 0;
};
ProductSearch search_products(int c_target, const ClassifyOptions& opt = {});

// Simple and product rows of cohomogeneity c that are not polar.
std::vector<ClassificationRow> classify_cohomogeneity(int c, const ClassifyOptions& opt = {});

struct ReferenceRow {
  std::string group, rep;
  int cohomogeneity = 0;
  std::string copolarity, boundary;
  std::string expr;  // the same row in the text syntax
};
const std::vector<ReferenceRow>& table_fixture(int c);

struct AnnotationResult {
  std::vector<ClassificationRow> rows;
  std::vector<std::string> failures;  // rows left with an undecided cell
};
// Fills the copolarity and boundary columns. Cells the engine cannot decide are taken from
// the fixture and the row is marked ReferenceFixture.
AnnotationResult annotate_tables(std::vector<ClassificationRow> rows, const ClassifyOptions& opt = {});

struct TableDiff {
  std::vector<std::string> missing, extra, mismatched;
  size_t size() const { return missing.size() + extra.size() + mismatched.size(); }
  bool empty() const { return size() == 0; }
  std::string to_string() const;
};
// Rows are matched on group and representation labels; cohomogeneity, copolarity and boundary
// cells must agree.
TableDiff compare_to_reference(const std::vector<ClassificationRow>& rows, const std::vector<ReferenceRow>& fixture);

// Expected contents of the sweeps, instantiated from the family descriptions.
struct SweepEntry {
  std::string expr;
  int cohomogeneity = 0;
  bool polar = false;
};
std::vector<SweepEntry> simple_polar_fixture();
std::vector<SweepEntry> simple_nonpolar_fixture();
std::vector<SweepEntry> c1_fixture(int n_max = 8);

struct SetDiff {
  std::vector<std::string> missing, extra, mismatched;
  bool empty() const { return missing.empty() && extra.empty() && mismatched.empty(); }
  std::string to_string() const;
};
// Matches rows and entries by canonical_key.
SetDiff compare_sweep(const std::vector<ClassificationRow>& rows, const std::vector<SweepEntry>& fixture);

std::string rows_to_json(const std::vector<ClassificationRow>& rows);
std::string rows_to_csv(const std::vector<ClassificationRow>& rows);
std::string rows_to_markdown(const std::vector<ClassificationRow>& rows);

}  // namespace cohom
