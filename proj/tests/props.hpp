// Property checks shared by the unit suite and the acceptance binary.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cohom/dsl.hpp"
#include "cohom/geometry.hpp"

namespace props {

using namespace cohom;

inline const std::vector<SimpleType>& small_types() {
  static const std::vector<SimpleType> v = [] {
    std::vector<SimpleType> t;
    for (int n = 1; n <= 16; ++n) t.push_back({Family::A, n});
    for (int n = 3; n <= 8; ++n) t.push_back({Family::B, n});
    for (int n = 2; n <= 9; ++n) t.push_back({Family::C, n});
    for (int n = 4; n <= 8; ++n) t.push_back({Family::D, n});
    for (const char* e : {"G2", "F4", "E6", "E7", "E8"}) t.push_back(parse_simple_type(e));
    return t;
  }();
  return v;
}

inline std::vector<IrrepSpec> irreps_up_to(long dim) {
  std::vector<IrrepSpec> out;
  for (const SimpleType& t : small_types())
    for (const Weight& w : dominant_weights_up_to_dim(root_system(t), dim))
      if (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) out.push_back(IrrepSpec::of(t, w));
  return out;
}

// Returns the irreps where the parity criterion and the invariant-form oracle disagree.
inline std::vector<std::string> fs_type_mismatches(const std::vector<IrrepSpec>& irreps) {
  std::vector<std::string> bad;
  for (const IrrepSpec& s : irreps)
    if (fs_type(s) != fs_type_by_invariant_form(s)) bad.push_back(s.describe());
  return bad;
}

inline std::vector<std::string> freudenthal_mismatches(const std::vector<IrrepSpec>& irreps) {
  std::vector<std::string> bad;
  for (const IrrepSpec& s : irreps) {
    long total = 0;
    for (const auto& [mu, m] : weight_multiplicities(s)) total += m;
    if (total != weyl_dim_small(root_system(*s.simple), s.weight)) bad.push_back(s.describe());
  }
  return bad;
}

// c + orbit dim = dim V and orbit dim + isotropy dim = dim G.
inline bool dimension_identities(const LieAction& a, const GeomOptions& opt = {}) {
  AnalysisReport r = analyze(a, opt, false);
  return r.cohomogeneity + r.orbit_dim == a.dim_V && r.orbit_dim + r.principal_isotropy_dim == a.group_dim &&
         r.principal_isotropy_dim == principal_isotropy_dim(a, opt);
}

inline const std::vector<std::string>& sum_fixtures() {
  static const std::vector<std::string> v = {
      "SO(3): R^5 (+) SO(3): R^3", "SU(3) (+) SU(3)",           "SO(3): R^3 (+) SO(3): R^3",
      "G2: R^7 (+) G2: R^7",       "SO(5): R^5 (+) SO(5): Lambda^2"};
  return v;
}

inline const std::vector<std::string>& tensor_fixtures() {
  static const std::vector<std::string> v = {"SO(3): R^3 (x)_R G2: R^7", "SO(4) (x)_R Spin(7): R^8",
                                             "SO(3): R^3 (x)_R SO(5): R^5"};
  return v;
}

// A real representation tensored with the standard representation of SO(n) or U(n);
// the cohomogeneity must not drop as n grows.
inline std::vector<std::vector<std::string>> monotone_families() {
  std::vector<std::string> real, unitary;
  for (int n = 3; n <= 7; ++n) real.push_back("SO(3): R^5 (x)_R SO(" + std::to_string(n) + ")");
  for (int n = 2; n <= 5; ++n) unitary.push_back("SO(3) (x)_R U(" + std::to_string(n) + ")");
  return {real, unitary};
}

inline bool monotone(const std::vector<std::string>& family, std::vector<int>* values = nullptr) {
  int prev = -1;
  bool ok = true;
  for (const auto& s : family) {
    int c = cohomogeneity(*build_action(parse_rep(s)));
    if (values) values->push_back(c);
    ok = ok && c >= prev;
    prev = c;
  }
  return ok;
}

}  // namespace props
