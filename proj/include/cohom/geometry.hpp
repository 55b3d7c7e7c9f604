// Orbit geometry of a LieAction: cohomogeneity, polarity, slices, copolarity bounds, boundary.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohom/matrep.hpp"

namespace cohom {

// Exact ranks are a few orders slower than ranks modulo p; a rank mod p never exceeds
// the rational rank, so modular orbit dimensions are certified lower bounds.
enum class Backend { Auto, Exact, Modular };

struct GeomOptions {
  std::uint64_t seed = 17;
  int samples = 3;
  Backend backend = Backend::Auto;
  int exact_max_dim = 32;  // Auto switches to the modular backend above this dim V
};

// A linear action given by matrices over F that are skew for `gram`.
template <class F>
struct MatAction {
  int dim = 0;
  std::vector<Sparse<F>> gens;
  Sparse<F> gram;

  Dense<F> tangent(const Vec<F>& v) const {
    Dense<F> t(dim, static_cast<int>(gens.size()));
    for (size_t k = 0; k < gens.size(); ++k) t.set_col(static_cast<int>(k), gens[k].apply(v));
    return t;
  }
};

MatAction<Rational> exact_action(const LieAction& a);
MatAction<Fp> modular_action(const LieAction& a);

template <class F>
struct SliceData {
  Vec<F> base_point;
  Dense<F> isotropy;       // columns: coefficient vectors over the generators
  Dense<F> normal_space;   // columns: basis of the gram-orthogonal complement of the orbit
  MatAction<F> slice_action;  // isotropy acting on normal_space coordinates
};

template <class F>
SliceData<F> slice_at(const MatAction<F>& a, const Vec<F>& p);

// Generic sample number `index` for a given seed (rational, shared by both backends).
Vec<Rational> sample_vector(int dim, std::uint64_t seed, int index);

int cohomogeneity(const LieAction& a, const GeomOptions& opt = {});
bool is_polar(const LieAction& a, const GeomOptions& opt = {});
SliceData<Rational> principal_isotropy(const LieAction& a, const GeomOptions& opt = {});
int principal_isotropy_dim(const LieAction& a, const GeomOptions& opt = {});

template <class F>
int generic_cohomogeneity(const MatAction<F>& a, std::uint64_t seed, int samples);

// Copolarity from the closure of the normal space at a regular point under adding normal spaces
// at regular points of the span. A closure equal to V means trivial copolarity; otherwise the
// closure is a generalized section of dimension c + value. The isotropy reduction loop gives an
// independent bound when the principal isotropy is not trivial.
struct CopolarityBound {
  std::optional<int> value;  // empty: Unknown
  bool trivial = false;
  int section_dim = 0;
  std::optional<int> reduction_bound;
  std::vector<int> reduction_dims;  // group dimension after each reduction step
  std::string note;
};
CopolarityBound copolarity_upper_bound(const LieAction& a, const GeomOptions& opt = {});

// Smallest subspace through a regular point containing the normal spaces at its regular
// points, grown by sampling. Returns its dimension.
int generalized_section_dim(const LieAction& a, const GeomOptions& opt = {});

struct BoundaryWitness {
  Vec<Rational> point;
  int isotropy_dim = 0;
  int fixed_dim = 0;     // dim of isotropy-fixed normal vectors
  int moving_dim = 0;    // dim of their complement in the normal space
};
std::optional<BoundaryWitness> boundary_witness_search(const LieAction& a, const GeomOptions& opt = {});
// Exact re-check of a witness point.
bool verify_boundary_witness(const LieAction& a, const Vec<Rational>& p, std::uint64_t seed = 17);

enum class Certificate { CertifiedNo, Inconclusive };
struct CertificateResult {
  Certificate status = Certificate::Inconclusive;
  std::string reason;
};
CertificateResult no_boundary_certificate(const LieAction& a, const GeomOptions& opt = {});

enum class BoundaryStatus { Yes, CertifiedNo, Unknown };
std::string to_string(BoundaryStatus b);

struct AnalysisReport {
  int dim_V = 0, group_dim = 0;
  int cohomogeneity = 0;
  int orbit_dim = 0;
  int principal_isotropy_dim = 0;
  bool polar = false;
  std::optional<int> copolarity_upper;
  bool copolarity_trivial = false;
  BoundaryStatus boundary = BoundaryStatus::Unknown;
  std::optional<BoundaryWitness> witness;
  std::uint64_t sample_seed = 0;
};
AnalysisReport analyze(const LieAction& a, const GeomOptions& opt = {}, bool with_boundary = true);

struct SliceCheck {
  int lhs = 0, rhs = 0;
  bool holds() const { return lhs == rhs; }
};
// c(V1 + V2) against c(V1) + c(G_v1, V2).
SliceCheck slice_cohomogeneity_check(const LieAction& sum, const GeomOptions& opt = {});
// c(V1 (x)_R V2) against c(H, v1^perp (x) v2^perp) + c1 + c2 - 1, both factors of cohomogeneity 1.
SliceCheck product_slice_check(const LieAction& tensor, const GeomOptions& opt = {});

struct InvolutionAudit {
  bool normalizes = false;
  int f = 0;
  int dim_C = 0;
  bool nice_formula_holds = false;
};
InvolutionAudit involution_audit(const LieAction& a, const Sparse<Rational>& w);

// exp(pi X) for X semisimple with eigenvalues i k, |k| <= kmax, computed by interpolation in X^2.
Sparse<Rational> exp_pi(const Sparse<Rational>& X, int kmax);

}  // namespace cohom
