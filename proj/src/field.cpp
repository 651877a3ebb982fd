#include "minimorph/field.hpp"

#include <cmath>
#include <utility>

#include "minimorph/errors.hpp"

namespace minimorph {

bool DomainPredicate::contains(std::span<const double> x) const {
    for (double v : x) {
        if (!std::isfinite(v)) return false;
    }
    if (exclude_origin) {
        bool all_zero = true;
        for (double v : x) {
            if (v != 0.0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return false;
    }
    if (require_cone) {
        if (sig.dimension != static_cast<int>(x.size())) return false;
        if (!(sig.norm2(x) < 0.0)) return false;
    }
    for (const MultiPoly& p : excluded_zeros) {
        if (p.eval(x) == Complex(0.0, 0.0)) return false;
    }
    for (const MultiPoly& p : branch_cuts) {
        const Complex v = p.eval(x);
        const double scale = cut_guard * (1.0 + std::abs(v));
        if (v.real() <= scale && std::abs(v.imag()) <= scale) return false;
    }
    return true;
}

DomainPredicate DomainPredicate::intersect(const DomainPredicate& o) const {
    DomainPredicate out = *this;
    out.excluded_zeros.insert(out.excluded_zeros.end(), o.excluded_zeros.begin(),
                              o.excluded_zeros.end());
    out.branch_cuts.insert(out.branch_cuts.end(), o.branch_cuts.begin(), o.branch_cuts.end());
    out.exclude_origin = out.exclude_origin || o.exclude_origin;
    out.cut_guard = std::max(out.cut_guard, o.cut_guard);
    if (o.require_cone) {
        if (require_cone && sig.dimension != o.sig.dimension)
            throw DimensionMismatch("conflicting cone signatures in domain intersection");
        out.require_cone = true;
        out.sig = o.sig;
    }
    return out;
}

ScalarField::ScalarField(int dim, Evaluator eval, DomainPredicate domain)
    : dim_(dim), eval_(std::move(eval)), domain_(std::move(domain)) {
    if (dim_ <= 0) throw DimensionMismatch("field dimension must be positive");
}

ScalarField ScalarField::from_poly(const MultiPoly& p, DomainPredicate domain) {
    const int n = p.n_vars();
    return ScalarField(
        n, [p](std::span<const double> x) { return poly_jet(p, x); }, std::move(domain));
}

ScalarField ScalarField::from_ratfn(const RationalFn& r, DomainPredicate extra) {
    const int n = r.n_vars();
    DomainPredicate dom = std::move(extra);
    dom.excluded_zeros.push_back(r.den());
    const MultiPoly num = r.num();
    const MultiPoly den = r.den();
    return ScalarField(
        n,
        [num, den](std::span<const double> x) { return poly_jet(num, x) / poly_jet(den, x); },
        std::move(dom));
}

ScalarField ScalarField::restricted(const DomainPredicate& extra) const {
    ScalarField out = *this;
    out.domain_ = domain_.intersect(extra);
    return out;
}

Jet2 poly_jet(const MultiPoly& p, std::span<const double> x) {
    const int n = p.n_vars();
    if (static_cast<int>(x.size()) != n)
        throw DimensionMismatch("point dimension does not match polynomial arity");
    Jet2 acc = Jet2::constant(n, Complex(0.0, 0.0));
    for (const auto& [exps, coef] : p.terms()) {
        Jet2 term = Jet2::constant(n, coef.to_complex());
        for (int k = 0; k < n; ++k) {
            if (exps[k] == 0) continue;
            term = term * Jet2::variable(n, k, x[k]).pow(exps[k]);
        }
        acc += term;
    }
    return acc;
}

Jet2 poly_jet_of(const MultiPoly& p, std::span<const Jet2> vars) {
    const int m = p.n_vars();
    if (static_cast<int>(vars.size()) != m)
        throw DimensionMismatch("jet count does not match polynomial arity");
    const int n = vars.empty() ? 1 : vars[0].dim();
    Jet2 acc = Jet2::constant(n, Complex(0.0, 0.0));
    for (const auto& [exps, coef] : p.terms()) {
        Jet2 term = Jet2::constant(n, coef.to_complex());
        for (int k = 0; k < m; ++k) {
            if (exps[k] == 0) continue;
            term = term * vars[k].pow(exps[k]);
        }
        acc += term;
    }
    return acc;
}

Jet2 eval_jet2(const ScalarField& field, std::span<const double> x) {
    if (static_cast<int>(x.size()) != field.dim())
        throw DimensionMismatch("point dimension does not match field dimension");
    if (!field.in_domain(x)) throw DomainViolation("point outside the field's domain predicate");
    Jet2 jet = field.eval_raw(x);
    if (!jet.finite()) throw OverflowError("field evaluation left the representable range");
    return jet;
}

Complex tension(const ScalarField& field, std::span<const double> x, const MetricSignature& sig) {
    if (sig.dimension != field.dim())
        throw DimensionMismatch("metric signature dimension does not match field");
    const Jet2 jet = eval_jet2(field, x);
    Complex acc(0.0, 0.0);
    for (int k = 0; k < sig.dimension; ++k) acc += sig.weight(k) * jet.hessian()(k, k);
    return acc;
}

Complex conformality(const ScalarField& f, const ScalarField& g, std::span<const double> x,
                     const MetricSignature& sig) {
    if (f.dim() != g.dim()) throw DimensionMismatch("conformality operands live on different spaces");
    if (sig.dimension != f.dim())
        throw DimensionMismatch("metric signature dimension does not match fields");
    const Jet2 jf = eval_jet2(f, x);
    const Jet2 jg = eval_jet2(g, x);
    Complex acc(0.0, 0.0);
    for (int k = 0; k < sig.dimension; ++k)
        acc += sig.weight(k) * jf.gradient()(k) * jg.gradient()(k);
    return acc;
}

Eigen::VectorXcd grad_complex(const ScalarField& field, std::span<const double> x,
                              const MetricSignature& sig) {
    if (sig.dimension != field.dim())
        throw DimensionMismatch("metric signature dimension does not match field");
    const Jet2 jet = eval_jet2(field, x);
    Eigen::VectorXcd g = jet.gradient();
    for (int k = 0; k < sig.dimension; ++k) g(k) *= sig.weight(k);
    return g;
}

bool check_radial_invariance(const ScalarField& field, std::span<const double> x,
                             std::span<const double> scales, double tol) {
    const Complex base = eval_jet2(field, x).value();
    std::vector<double> scaled(x.size());
    for (double s : scales) {
        if (!(s > 0.0)) throw DomainViolation("radial scales must be positive");
        for (size_t k = 0; k < x.size(); ++k) scaled[k] = s * x[k];
        const Complex other = eval_jet2(field, scaled).value();
        if (std::abs(other - base) > tol * (1.0 + std::abs(base))) return false;
    }
    return true;
}

ScalarField pullback(const ScalarField& phi, HarmonicTest h) {
    DomainPredicate dom = phi.domain();
    const ScalarField inner = phi;
    ScalarField::Evaluator eval;
    switch (h) {
        case HarmonicTest::re_w:
            eval = [inner](std::span<const double> x) { return inner.eval_raw(x).real_part(); };
            break;
        case HarmonicTest::im_w:
            eval = [inner](std::span<const double> x) { return inner.eval_raw(x).imag_part(); };
            break;
        case HarmonicTest::re_w2:
            eval = [inner](std::span<const double> x) {
                const Jet2 w = inner.eval_raw(x);
                return (w * w).real_part();
            };
            break;
        case HarmonicTest::im_w2:
            eval = [inner](std::span<const double> x) {
                const Jet2 w = inner.eval_raw(x);
                return (w * w).imag_part();
            };
            break;
        case HarmonicTest::re_inv_w:
            // 1/w needs w != 0; callers sample with a margin on |phi|.
            eval = [inner](std::span<const double> x) {
                const Jet2 w = inner.eval_raw(x);
                return (Jet2::constant(w.dim(), Complex(1.0, 0.0)) / w).real_part();
            };
            break;
    }
    return ScalarField(phi.dim(), std::move(eval), std::move(dom));
}

}  // namespace minimorph
