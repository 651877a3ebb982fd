#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minimorph/field.hpp"
#include "minimorph/polyops.hpp"
#include "minimorph/sampling.hpp"
#include "minimorph/variety.hpp"

namespace minimorph {

enum class SpaceKind { euclidean, lorentzian, sphere, hyperbolic };

/// Flat coordinate space R^n (Euclidean or Lorentzian), or the unit
/// hypersurface cut out of it: |x|^2 = 1 for the sphere, <x,x>_L = -1 for
/// the hyperboloid.
struct AmbientSpace {
    SpaceKind kind = SpaceKind::euclidean;
    int dimension = 0;

    MetricSignature metric() const {
        const bool lor = kind == SpaceKind::lorentzian || kind == SpaceKind::hyperbolic;
        return lor ? MetricSignature::lorentz(dimension) : MetricSignature::euclidean(dimension);
    }
    bool curved() const { return kind == SpaceKind::sphere || kind == SpaceKind::hyperbolic; }

    /// Defining constraint of the hypersurface, zero on it (curved kinds
    /// only): |x|^2 - 1, resp. <x,x>_L + 1.
    double hypersurface_constraint(std::span<const double> x) const;

    std::string str() const;
    bool operator==(const AmbientSpace&) const = default;
};

/// Result of the is-harmonic-morphism certification a constructor runs
/// before handing out a spec.
struct Certification {
    bool exact = false;   // zero residual polynomials vs. sampled residuals
    bool passed = false;
    int points = 0;       // sample count (numeric route)
    double max_tension = 0.0;
    double max_conformality = 0.0;
    std::uint64_t seed = 0;
};

/// A named map with everything needed to verify and use it.  `field` is
/// evaluable wherever the defining formula makes sense (its own predicate);
/// `domain` additionally carries the geometric conditions of the ambient
/// space (cone membership, origin exclusion), so domain implies the field
/// predicate.  Immutable after construction.
struct MorphismSpec {
    std::string name;
    AmbientSpace ambient;
    ScalarField field;
    std::optional<RationalFn> exact_form;
    /// Homogeneity degree of the defining form; 0 for quotients and for
    /// restrictions to the sphere/hyperboloid.
    int degree = 0;
    DomainPredicate domain;
    std::optional<Quintuple> quintuple;  // coefficients, when quadric-based
    Certification certification;

    bool has_exact_form() const { return exact_form.has_value(); }
};

/// Seed used for every constructor-time numeric certification; fixed so
/// builds are reproducible.
inline constexpr std::uint64_t kCertificationSeed = 424242;

/// The canonical quintuple from free parameters (3, 4) on the "+" branch:
/// (5i, 16i/5, 3, 4, -12i/5).
Quintuple canonical_quintuple();

/// Real expansion of a polynomial in complex variables:
///   z_k -> x_{offset+2k} + i x_{offset+2k+1}  (0-based indices).
MultiPoly expand_complex_vars(const MultiPoly& zpoly, int total_real_vars, int offset);

/// Same, except the LAST complex variable becomes the real difference of
/// the last two coordinates, x_{N-2} - x_{N-1}.
MultiPoly expand_dual_vars(const MultiPoly& zpoly, int total_real_vars, int offset);

/// phi(x) = sum c_k x_k on Euclidean R^n; requires sum c_k^2 = 0 and c != 0.
MorphismSpec linear_isotropic(const std::vector<GaussRat>& c);
MorphismSpec linear_isotropic(const std::vector<Complex>& c, double tol = 1e-12);

/// The quadric p on Euclidean R^3 for a quintuple on the variety.
MorphismSpec quadric_p(const Quintuple& q);

/// Two independent homogeneous polynomials of equal positive degree in the
/// complex variables z_1..z_n, expanded over Euclidean R^{2n} with
/// z_k = x_{2k-1} + i x_{2k} (1-based); certified as an eigenfamily with
/// lambda = mu = 0.
std::pair<MorphismSpec, MorphismSpec> holo_pair(const MultiPoly& P, const MultiPoly& Q);

/// The composite (p^{d/2} + P_d)/Q_d on Euclidean R^{2n+3}, with the R^3
/// factor at x_1..x_3 and z_k = x_{2k+2} + i x_{2k+3} (1-based).  P_d may
/// be the zero polynomial; Q_d must be nonzero, and both must be
/// homogeneous of degree d (P_d, Q_d independent when P_d != 0).  Even d
/// gives an exact rational form; odd d gives a numeric field using the
/// principal square root, with the branch cut {p(x) real <= 0} excluded.
MorphismSpec composite_phi_hat(const Quintuple& q, const MultiPoly& P_d, const MultiPoly& Q_d,
                               int d);

/// Lorentzian dual of composite_phi_hat on R^{2n+3}_1, restricted to the
/// cone U = {<x,x>_L < 0}: the last complex variable becomes the real
/// difference x_{2n+2} - x_{2n+3}.
MorphismSpec hyperbolic_dual(const Quintuple& q, const MultiPoly& P_d, const MultiPoly& Q_d,
                             int d);

/// Re-tag a degree-0 Euclidean spec to the unit sphere.  The field and its
/// formula-level predicate are unchanged (a degree-0 map is determined by
/// its values on the sphere); the spec domain excludes the origin, and
/// hypersurface membership becomes a constraint equation for fiber work.
MorphismSpec sphere_restriction(const MorphismSpec& spec);

/// Re-tag a degree-0 Lorentzian spec to the unit hyperboloid inside the
/// cone <x,x>_L < 0.
MorphismSpec hyperbolic_restriction(const MorphismSpec& spec);

/// (x1 + i x2)/(x3 + i x4) restricted to S^3.
MorphismSpec hopf();
/// (x1 + i x2)/(x3 - x4) on the cone of R^4_1, restricted to H^3.
MorphismSpec hopf_dual();

/// Quotient P(phi_1..phi_m)/Q(phi_1..phi_m) of an eigenfamily with
/// lambda = mu = 0.  All components must share the ambient space and the
/// homogeneity degree; P, Q are polynomials in m variables, homogeneous of
/// equal positive degree and independent.
MorphismSpec rational_combination(const std::vector<MorphismSpec>& specs, const MultiPoly& P,
                                  const MultiPoly& Q);

/// Exact proof that the dual denominator z_n = x_{2n+2} - x_{2n+3} cannot
/// vanish on the cone: substituting x_{2n+3} := x_{2n+2} into <x,x>_L
/// leaves the sum of the remaining squares, which is non-negative.
struct ConeDefinednessProof {
    bool certified = false;
    std::string identity;
};
ConeDefinednessProof dual_denominator_cone_proof(int n);

/// Named catalog: "hopf", "hopf-dual", "linear-c3", "r3-quadric",
/// "s4-quadric", "h4-quadric", and the parametric families
/// "phi-even:d=<even>,n=<n>", "phi-odd:d=<odd>,n=<n>",
/// "phi-dual:d=<even>,n=<n>" built from the canonical quintuple with
/// P_d = 0, Q_d = z_1^d for n = 1 and P_d = z_1^d, Q_d = z_2^d for n >= 2.
MorphismSpec catalog(const std::string& name);

/// The fixed entries exercised by the verification suites.
std::vector<std::string> catalog_names();

/// Random point of the spec's domain with a safety margin: excluded
/// polynomials bounded away from zero, branch cuts avoided by a band of
/// the same width.  Degree-0 specs are sampled on the unit sphere or
/// hyperboloid, others in a box.
PointR sample_domain_point(const MorphismSpec& spec, Sampler& sampler, double margin = 0.1,
                           int max_tries = 100000);

/// Run the is-harmonic-morphism certification and store it on the spec.
/// Exact when exact_form is present (zero residual numerators), sampled
/// otherwise.  Throws ConstraintViolation if it fails.
Certification certify_spec(MorphismSpec& spec, int points = 200, double tol = 1e-9,
                           std::uint64_t seed = kCertificationSeed);

}  // namespace minimorph
