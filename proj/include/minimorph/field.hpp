#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "minimorph/jet.hpp"
#include "minimorph/metric.hpp"
#include "minimorph/poly.hpp"

namespace minimorph {

/// Total predicate describing where a field may be evaluated.  Explicit
/// data rather than runtime failures: zero sets, branch cuts and cone
/// conditions are queryable before any evaluation.
struct DomainPredicate {
    /// Points where any of these polynomials vanish are excluded.
    std::vector<MultiPoly> excluded_zeros;
    /// Points where any of these takes a value on the non-positive real
    /// axis are excluded (principal square root cut, branch point included).
    /// A thin guard band of relative width cut_guard is excluded with it.
    std::vector<MultiPoly> branch_cuts;
    /// Require <x,x>_L < 0 under `sig`.
    bool require_cone = false;
    bool exclude_origin = false;
    MetricSignature sig{};
    double cut_guard = 1e-9;

    bool contains(std::span<const double> x) const;

    /// Conjunction of the two predicates.
    DomainPredicate intersect(const DomainPredicate& o) const;

    static DomainPredicate everywhere() { return {}; }
};

/// A complex-valued field on R^n evaluable to a second-order jet, plus the
/// domain predicate on which evaluation is legal.  Immutable and safe to
/// share across threads.
class ScalarField {
public:
    using Evaluator = std::function<Jet2(std::span<const double>)>;

    ScalarField(int dim, Evaluator eval, DomainPredicate domain = {});

    static ScalarField from_poly(const MultiPoly& p, DomainPredicate domain = {});
    /// Quotient field; the denominator's zero set is excluded automatically.
    static ScalarField from_ratfn(const RationalFn& r, DomainPredicate extra = {});

    int dim() const { return dim_; }
    const DomainPredicate& domain() const { return domain_; }
    bool in_domain(std::span<const double> x) const { return domain_.contains(x); }

    /// Evaluation without the domain check (used by eval_jet2 after it).
    Jet2 eval_raw(std::span<const double> x) const { return eval_(x); }

    /// Field with the same evaluator and a tightened domain.
    ScalarField restricted(const DomainPredicate& extra) const;

private:
    int dim_;
    Evaluator eval_;
    DomainPredicate domain_;
};

/// Forward-mode jet of an exact polynomial at a real point.
Jet2 poly_jet(const MultiPoly& p, std::span<const double> x);

/// Polynomial evaluated over jet-valued "variables" (used for composites
/// like P(phi_1,...,phi_m)).
Jet2 poly_jet_of(const MultiPoly& p, std::span<const Jet2> vars);

/// Value, gradient, Hessian at x.  DomainViolation outside the predicate,
/// OverflowError if the result leaves the representable range.
Jet2 eval_jet2(const ScalarField& field, std::span<const double> x);

/// Signature-weighted trace of the Hessian.
Complex tension(const ScalarField& field, std::span<const double> x, const MetricSignature& sig);

/// Signature-weighted product of gradients; exactly symmetric in (f, g).
Complex conformality(const ScalarField& f, const ScalarField& g, std::span<const double> x,
                     const MetricSignature& sig);

/// Metric-raised complex gradient: component k is w_k * d(phi)/dx_k.
Eigen::VectorXcd grad_complex(const ScalarField& field, std::span<const double> x,
                              const MetricSignature& sig);

/// True iff |f(s*x) - f(x)| <= tol*(1+|f(x)|) for every scale s.
bool check_radial_invariance(const ScalarField& field, std::span<const double> x,
                             std::span<const double> scales, double tol = 1e-10);

/// Harmonic test functions on C used to exercise the pullback property.
enum class HarmonicTest { re_w, im_w, re_w2, im_w2, re_inv_w };
constexpr std::array<HarmonicTest, 5> kHarmonicTests = {
    HarmonicTest::re_w, HarmonicTest::im_w, HarmonicTest::re_w2, HarmonicTest::im_w2,
    HarmonicTest::re_inv_w};

/// The composition h(phi(x)) as a field (h harmonic on C, away from 0 for
/// re_inv_w).
ScalarField pullback(const ScalarField& phi, HarmonicTest h);

}  // namespace minimorph
