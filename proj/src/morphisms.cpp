#include "minimorph/morphisms.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "minimorph/errors.hpp"

namespace minimorph {

namespace {

/// Exact test on coefficient vectors: with both polynomials nonzero they
/// are dependent iff Q is a scalar multiple of P.
bool linearly_dependent(const MultiPoly& P, const MultiPoly& Q) {
    if (P.is_zero() || Q.is_zero()) return true;
    const auto& [lead_exp, lead_coef] = *P.terms().begin();
    const GaussRat match = Q.coeff(lead_exp);
    if (match.is_zero()) return false;
    const GaussRat t = match / lead_coef;
    return Q == t * P;
}

int require_homogeneous(const MultiPoly& p, const char* what) {
    const auto deg = p.homogeneous_degree();
    if (!deg) throw NotHomogeneous(std::string(what) + " is not homogeneous");
    return *deg;
}

MorphismSpec rename(MorphismSpec spec, std::string name) {
    spec.name = std::move(name);
    return spec;
}

bool margin_ok(const DomainPredicate& dom, std::span<const double> x, double margin) {
    if (!dom.contains(x)) return false;
    for (const MultiPoly& p : dom.excluded_zeros) {
        if (std::abs(p.eval(x)) < margin) return false;
    }
    for (const MultiPoly& p : dom.branch_cuts) {
        const Complex v = p.eval(x);
        if (std::abs(v) < margin) return false;
        if (v.real() <= margin && std::abs(v.imag()) <= margin) return false;
    }
    return true;
}

MultiPoly sum_of_squares(int n_vars, int first, int last) {
    MultiPoly s = MultiPoly::zero(n_vars);
    for (int k = first; k <= last; ++k) {
        ExpVec e(static_cast<size_t>(n_vars), 0u);
        e[k] = 2;
        s.add_term(e, GaussRat(1));
    }
    return s;
}

}  // namespace

double AmbientSpace::hypersurface_constraint(std::span<const double> x) const {
    switch (kind) {
        case SpaceKind::sphere: {
            double s = 0;
            for (double v : x) s += v * v;
            return s - 1.0;
        }
        case SpaceKind::hyperbolic:
            return MetricSignature::lorentz(dimension).norm2(x) + 1.0;
        default:
            throw DomainViolation("flat ambient spaces carry no hypersurface constraint");
    }
}

std::string AmbientSpace::str() const {
    std::ostringstream os;
    switch (kind) {
        case SpaceKind::euclidean: os << "R^" << dimension; break;
        case SpaceKind::lorentzian: os << "R^" << dimension << "_1"; break;
        case SpaceKind::sphere: os << "S^" << dimension - 1 << " in R^" << dimension; break;
        case SpaceKind::hyperbolic: os << "H^" << dimension - 1 << " in R^" << dimension << "_1"; break;
    }
    return os.str();
}

Quintuple canonical_quintuple() {
    return variety_point(GaussRat(3), GaussRat(4), Branch::plus);
}

MultiPoly expand_complex_vars(const MultiPoly& zpoly, int total_real_vars, int offset) {
    const int m = zpoly.n_vars();
    if (offset < 0 || offset + 2 * m > total_real_vars)
        throw DimensionMismatch("complex variables do not fit in the real variable space");
    std::vector<MultiPoly> images;
    images.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        images.push_back(MultiPoly::variable(total_real_vars, offset + 2 * k) +
                         GaussRat::i() * MultiPoly::variable(total_real_vars, offset + 2 * k + 1));
    }
    return zpoly.substitute(images);
}

MultiPoly expand_dual_vars(const MultiPoly& zpoly, int total_real_vars, int offset) {
    const int m = zpoly.n_vars();
    if (offset < 0 || offset + 2 * m > total_real_vars)
        throw DimensionMismatch("complex variables do not fit in the real variable space");
    std::vector<MultiPoly> images;
    images.reserve(static_cast<size_t>(m));
    for (int k = 0; k + 1 < m; ++k) {
        images.push_back(MultiPoly::variable(total_real_vars, offset + 2 * k) +
                         GaussRat::i() * MultiPoly::variable(total_real_vars, offset + 2 * k + 1));
    }
    const int last = offset + 2 * (m - 1);
    images.push_back(MultiPoly::variable(total_real_vars, last) -
                     MultiPoly::variable(total_real_vars, last + 1));
    return zpoly.substitute(images);
}

MorphismSpec linear_isotropic(const std::vector<GaussRat>& c) {
    const int n = static_cast<int>(c.size());
    if (n == 0) throw NotIsotropic("coefficient vector is empty");
    GaussRat sum;
    bool any_nonzero = false;
    MultiPoly p = MultiPoly::zero(n);
    for (int k = 0; k < n; ++k) {
        sum += c[k] * c[k];
        any_nonzero = any_nonzero || !c[k].is_zero();
        p += c[k] * MultiPoly::variable(n, k);
    }
    if (!any_nonzero) throw NotIsotropic("coefficient vector is zero");
    if (!sum.is_zero()) throw NotIsotropic("sum of squared coefficients is " + sum.str());
    RationalFn form(p, MultiPoly::one(n));
    MorphismSpec spec{"linear-isotropic", AmbientSpace{SpaceKind::euclidean, n},
                      ScalarField::from_poly(p),  form,
                      1,                          DomainPredicate::everywhere(),
                      std::nullopt,               {}};
    certify_spec(spec);
    return spec;
}

MorphismSpec linear_isotropic(const std::vector<Complex>& c, double tol) {
    const int n = static_cast<int>(c.size());
    if (n == 0) throw NotIsotropic("coefficient vector is empty");
    Complex sum(0, 0);
    double norm = 0;
    for (const Complex& v : c) {
        sum += v * v;
        norm += std::norm(v);
    }
    if (norm == 0.0) throw NotIsotropic("coefficient vector is zero");
    if (std::abs(sum) > tol) throw NotIsotropic("sum of squared coefficients exceeds tolerance");
    const std::vector<Complex> coeffs = c;
    ScalarField field(n, [coeffs, n](std::span<const double> x) {
        Jet2 acc = Jet2::constant(n, Complex(0, 0));
        for (int k = 0; k < n; ++k) acc += coeffs[k] * Jet2::variable(n, k, x[k]);
        return acc;
    });
    MorphismSpec spec{"linear-isotropic", AmbientSpace{SpaceKind::euclidean, n},
                      std::move(field),  std::nullopt,
                      1,                 DomainPredicate::everywhere(),
                      std::nullopt,      {}};
    certify_spec(spec);
    return spec;
}

MorphismSpec quadric_p(const Quintuple& q) {
    if (!q.satisfied()) throw ConstraintViolation("quintuple residuals are nonzero");
    const MultiPoly p = quadric_poly(q, 3);
    RationalFn form(p, MultiPoly::one(3));
    MorphismSpec spec{"r3-quadric", AmbientSpace{SpaceKind::euclidean, 3},
                      ScalarField::from_poly(p), form,
                      2,           DomainPredicate::everywhere(),
                      q,           {}};
    certify_spec(spec);
    return spec;
}

std::pair<MorphismSpec, MorphismSpec> holo_pair(const MultiPoly& P, const MultiPoly& Q) {
    if (P.is_zero() || Q.is_zero()) throw NotHomogeneous("holomorphic pair entries must be nonzero");
    if (P.n_vars() != Q.n_vars())
        throw DimensionMismatch("holomorphic pair entries use different variable counts");
    const int dP = require_homogeneous(P, "P_d");
    const int dQ = require_homogeneous(Q, "Q_d");
    if (dP != dQ) throw DegreeMismatch("holomorphic pair degrees differ");
    if (dP < 1) throw DegreeMismatch("degree must be positive");
    if (linearly_dependent(P, Q)) throw LinearlyDependent("holomorphic pair is linearly dependent");

    const int n = P.n_vars();
    const int N = 2 * n;
    const MultiPoly Pr = expand_complex_vars(P, N, 0);
    const MultiPoly Qr = expand_complex_vars(Q, N, 0);

    // Holomorphic polynomials over paired real coordinates always satisfy
    // tau = 0 and kappa = 0; this guards the expansion itself.
    const EigenReport eigen =
        verify_eigen_pair(Pr, Qr, GaussRat(0), GaussRat(0), MetricSignature::euclidean(N));
    if (!eigen.holds)
        throw ConstraintViolation("holomorphic expansion failed the eigenfamily identity: " +
                                  eigen.witness_name);

    auto make = [&](const MultiPoly& poly) {
        RationalFn form(poly, MultiPoly::one(N));
        MorphismSpec spec{"holo-component", AmbientSpace{SpaceKind::euclidean, N},
                          ScalarField::from_poly(poly), form,
                          dP,               DomainPredicate::everywhere(),
                          std::nullopt,     {}};
        certify_spec(spec);
        return spec;
    };
    return {make(Pr), make(Qr)};
}

namespace {

/// Shared validation for the composite constructors.  Returns the number
/// of complex variables.
int composite_checks(const Quintuple& q, const MultiPoly& P_d, const MultiPoly& Q_d, int d) {
    if (d < 1) throw DegreeMismatch("degree d must be positive");
    if (!q.satisfied()) throw ConstraintViolation("quintuple residuals are nonzero");
    if (Q_d.is_zero()) throw DegenerateParameters("Q_d must be nonzero");
    if (require_homogeneous(Q_d, "Q_d") != d) throw DegreeMismatch("Q_d degree differs from d");
    if (!P_d.is_zero()) {
        if (P_d.n_vars() != Q_d.n_vars())
            throw DimensionMismatch("P_d and Q_d use different variable counts");
        if (require_homogeneous(P_d, "P_d") != d) throw DegreeMismatch("P_d degree differs from d");
        if (linearly_dependent(P_d, Q_d))
            throw LinearlyDependent("P_d and Q_d are linearly dependent");
    }
    return Q_d.n_vars();
}

std::string composite_name(const char* prefix, int d, int n) {
    std::ostringstream os;
    os << prefix << ":d=" << d << ",n=" << n;
    return os.str();
}

}  // namespace

MorphismSpec composite_phi_hat(const Quintuple& q, const MultiPoly& P_d, const MultiPoly& Q_d,
                               int d) {
    const int n = composite_checks(q, P_d, Q_d, d);
    const int N = 2 * n + 3;
    const MultiPoly p_emb = quadric_poly(q, N);
    const MultiPoly Q_emb = expand_complex_vars(Q_d, N, 3);
    const MultiPoly P_emb =
        P_d.is_zero() ? MultiPoly::zero(N) : expand_complex_vars(P_d, N, 3);
    const AmbientSpace ambient{SpaceKind::euclidean, N};

    if (d % 2 == 0) {
        const MultiPoly num = p_emb.pow(static_cast<unsigned>(d / 2)) + P_emb;
        RationalFn form(num, Q_emb);
        ScalarField field = ScalarField::from_ratfn(form);
        DomainPredicate dom = field.domain();
        MorphismSpec spec{composite_name("phi-even", d, n), ambient, std::move(field), form, 0,
                          std::move(dom),                   q,       {}};
        certify_spec(spec);
        return spec;
    }

    DomainPredicate dom;
    dom.excluded_zeros.push_back(Q_emb);
    dom.branch_cuts.push_back(p_emb);
    const unsigned du = static_cast<unsigned>(d);
    ScalarField field(
        N,
        [p_emb, P_emb, Q_emb, du](std::span<const double> x) {
            Jet2 num = poly_jet(p_emb, x).sqrt_principal().pow(du);
            if (!P_emb.is_zero()) num += poly_jet(P_emb, x);
            return num / poly_jet(Q_emb, x);
        },
        dom);
    MorphismSpec spec{composite_name("phi-odd", d, n), ambient, std::move(field), std::nullopt, 0,
                      std::move(dom),                  q,       {}};
    certify_spec(spec);
    return spec;
}

MorphismSpec hyperbolic_dual(const Quintuple& q, const MultiPoly& P_d, const MultiPoly& Q_d,
                             int d) {
    const int n = composite_checks(q, P_d, Q_d, d);
    const int N = 2 * n + 3;
    const MultiPoly p_emb = quadric_poly(q, N);
    const MultiPoly Q_emb = expand_dual_vars(Q_d, N, 3);
    const MultiPoly P_emb = P_d.is_zero() ? MultiPoly::zero(N) : expand_dual_vars(P_d, N, 3);
    const AmbientSpace ambient{SpaceKind::lorentzian, N};

    DomainPredicate cone;
    cone.require_cone = true;
    cone.sig = MetricSignature::lorentz(N);

    if (d % 2 == 0) {
        const MultiPoly num = p_emb.pow(static_cast<unsigned>(d / 2)) + P_emb;
        RationalFn form(num, Q_emb);
        ScalarField field = ScalarField::from_ratfn(form);
        DomainPredicate dom = field.domain().intersect(cone);
        MorphismSpec spec{composite_name("phi-dual", d, n), ambient, std::move(field), form, 0,
                          std::move(dom),                   q,       {}};
        certify_spec(spec);
        return spec;
    }

    DomainPredicate formula_dom;
    formula_dom.excluded_zeros.push_back(Q_emb);
    formula_dom.branch_cuts.push_back(p_emb);
    const unsigned du = static_cast<unsigned>(d);
    ScalarField field(
        N,
        [p_emb, P_emb, Q_emb, du](std::span<const double> x) {
            Jet2 num = poly_jet(p_emb, x).sqrt_principal().pow(du);
            if (!P_emb.is_zero()) num += poly_jet(P_emb, x);
            return num / poly_jet(Q_emb, x);
        },
        formula_dom);
    DomainPredicate dom = formula_dom.intersect(cone);
    MorphismSpec spec{composite_name("phi-dual", d, n), ambient, std::move(field), std::nullopt, 0,
                      std::move(dom),                   q,       {}};
    certify_spec(spec);
    return spec;
}

MorphismSpec sphere_restriction(const MorphismSpec& spec) {
    if (spec.ambient.kind != SpaceKind::euclidean)
        throw ConstraintViolation("sphere restriction needs a flat Euclidean spec");
    if (spec.degree != 0)
        throw NotHomogeneousDegreeZero("restriction needs a degree-0 homogeneous spec");
    MorphismSpec out = spec;
    out.ambient.kind = SpaceKind::sphere;
    out.domain.exclude_origin = true;
    out.name += "|sphere";
    return out;
}

MorphismSpec hyperbolic_restriction(const MorphismSpec& spec) {
    if (spec.ambient.kind != SpaceKind::lorentzian)
        throw ConstraintViolation("hyperbolic restriction needs a flat Lorentzian spec");
    if (spec.degree != 0)
        throw NotHomogeneousDegreeZero("restriction needs a degree-0 homogeneous spec");
    MorphismSpec out = spec;
    out.ambient.kind = SpaceKind::hyperbolic;
    if (!out.domain.require_cone) {
        out.domain.require_cone = true;
        out.domain.sig = MetricSignature::lorentz(out.ambient.dimension);
    }
    out.name += "|hyperbolic";
    return out;
}

MorphismSpec hopf() {
    const MultiPoly z1 = MultiPoly::variable(2, 0);
    const MultiPoly z2 = MultiPoly::variable(2, 1);
    auto [num_spec, den_spec] = holo_pair(z1, z2);
    const MultiPoly u1 = MultiPoly::variable(2, 0);
    const MultiPoly u2 = MultiPoly::variable(2, 1);
    MorphismSpec quotient = rational_combination({num_spec, den_spec}, u1, u2);
    return rename(sphere_restriction(quotient), "hopf");
}

MorphismSpec hopf_dual() {
    const int N = 4;
    const MultiPoly num = MultiPoly::variable(N, 0) + GaussRat::i() * MultiPoly::variable(N, 1);
    const MultiPoly den = MultiPoly::variable(N, 2) - MultiPoly::variable(N, 3);
    RationalFn form(num, den);
    ScalarField field = ScalarField::from_ratfn(form);
    DomainPredicate dom = field.domain();
    MorphismSpec spec{"hopf-dual-flat", AmbientSpace{SpaceKind::lorentzian, N},
                      std::move(field), form,
                      0,                std::move(dom),
                      std::nullopt,     {}};
    certify_spec(spec);
    return rename(hyperbolic_restriction(spec), "hopf-dual");
}

MorphismSpec rational_combination(const std::vector<MorphismSpec>& specs, const MultiPoly& P,
                                  const MultiPoly& Q) {
    const int m = static_cast<int>(specs.size());
    if (m == 0) throw DimensionMismatch("eigenfamily is empty");
    if (P.n_vars() != m || Q.n_vars() != m)
        throw DimensionMismatch("P, Q arity must equal the number of component maps");
    if (P.is_zero() || Q.is_zero()) throw LinearlyDependent("P and Q must be nonzero");
    const int dP = require_homogeneous(P, "P");
    const int dQ = require_homogeneous(Q, "Q");
    if (dP != dQ) throw DegreeMismatch("P and Q degrees differ");
    if (dP < 1) throw DegreeMismatch("P and Q must have positive degree");
    if (linearly_dependent(P, Q)) throw LinearlyDependent("P and Q are linearly dependent");

    const AmbientSpace ambient = specs[0].ambient;
    const int comp_degree = specs[0].degree;
    for (const MorphismSpec& s : specs) {
        if (!(s.ambient == ambient))
            throw DimensionMismatch("component maps live on different ambient spaces");
        if (s.degree != comp_degree)
            throw DegreeMismatch("component homogeneity degrees differ");
    }
    const MetricSignature sig = ambient.metric();

    // Exact route: every component is polynomial (constant denominator).
    bool all_poly = true;
    for (const MorphismSpec& s : specs) {
        if (!s.exact_form || s.exact_form->den().total_degree() != 0) {
            all_poly = false;
            break;
        }
    }

    if (all_poly) {
        std::vector<MultiPoly> images;
        images.reserve(specs.size());
        for (const MorphismSpec& s : specs) {
            const GaussRat c = s.exact_form->den().coeff(
                ExpVec(static_cast<size_t>(s.exact_form->den().n_vars()), 0u));
            images.push_back((GaussRat(1) / c) * s.exact_form->num());
        }
        // Eigenfamily identity with lambda = mu = 0 for every pair.
        for (size_t i = 0; i < images.size(); ++i) {
            if (!poly_tension(images[i], sig).is_zero())
                throw NotEigenfamily("component " + std::to_string(i + 1) + " is not harmonic");
            for (size_t j = i; j < images.size(); ++j) {
                if (!poly_conformality(images[i], images[j], sig).is_zero())
                    throw NotEigenfamily("conformality fails for components " +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1));
            }
        }
        const MultiPoly num = P.substitute(images);
        const MultiPoly den = Q.substitute(images);
        if (den.is_zero())
            throw DegenerateParameters("quotient denominator collapses to the zero polynomial");
        RationalFn form(num, den);
        DomainPredicate extra;
        for (const MorphismSpec& s : specs) extra = extra.intersect(s.domain);
        ScalarField field = ScalarField::from_ratfn(form, extra);
        DomainPredicate dom = field.domain();
        MorphismSpec spec{"rational-combination", ambient, std::move(field), form, 0,
                          std::move(dom),         std::nullopt, {}};
        certify_spec(spec);
        return spec;
    }

    // Numeric route: compose jets of the component fields.
    std::vector<ScalarField> comps;
    comps.reserve(specs.size());
    DomainPredicate dom;
    for (const MorphismSpec& s : specs) {
        comps.push_back(s.field);
        dom = dom.intersect(s.domain);
    }
    const MultiPoly Pc = P;
    const MultiPoly Qc = Q;
    ScalarField field(
        ambient.dimension,
        [comps, Pc, Qc](std::span<const double> x) {
            std::vector<Jet2> vals;
            vals.reserve(comps.size());
            for (const ScalarField& f : comps) vals.push_back(f.eval_raw(x));
            return poly_jet_of(Pc, vals) / poly_jet_of(Qc, vals);
        },
        dom);
    MorphismSpec spec{"rational-combination", ambient, std::move(field), std::nullopt, 0,
                      dom,                    std::nullopt, {}};

    // Sampled eigenfamily identity before certifying the quotient itself.
    Sampler sampler(kCertificationSeed);
    for (int t = 0; t < 100; ++t) {
        const PointR x = sample_domain_point(spec, sampler);
        for (size_t i = 0; i < comps.size(); ++i) {
            if (std::abs(tension(comps[i], x, sig)) > 1e-9)
                throw NotEigenfamily("component " + std::to_string(i + 1) + " is not harmonic");
            for (size_t j = i; j < comps.size(); ++j) {
                if (std::abs(conformality(comps[i], comps[j], x, sig)) > 1e-9)
                    throw NotEigenfamily("conformality fails for components " +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1));
            }
        }
    }
    certify_spec(spec);
    return spec;
}

ConeDefinednessProof dual_denominator_cone_proof(int n) {
    if (n < 1) throw DimensionMismatch("n must be positive");
    const int N = 2 * n + 3;
    MultiPoly lorentz_norm = sum_of_squares(N, 0, N - 2);
    {
        ExpVec e(static_cast<size_t>(N), 0u);
        e[N - 1] = 2;
        lorentz_norm.add_term(e, GaussRat(-1));
    }
    std::vector<MultiPoly> images;
    images.reserve(static_cast<size_t>(N));
    for (int k = 0; k < N; ++k)
        images.push_back(MultiPoly::variable(N, k == N - 1 ? N - 2 : k));
    const MultiPoly restricted = lorentz_norm.substitute(images);
    const MultiPoly expected = sum_of_squares(N, 0, N - 3);

    ConeDefinednessProof proof;
    proof.certified = restricted == expected;
    std::ostringstream os;
    os << "substituting x" << N << " := x" << N - 1 << " into <x,x>_L yields x1^2+...+x" << N - 2
       << "^2 >= 0, so the plane x" << N - 1 << " = x" << N
       << " does not meet the cone <x,x>_L < 0";
    proof.identity = os.str();
    return proof;
}

MorphismSpec catalog(const std::string& name) {
    const Quintuple q0 = canonical_quintuple();
    if (name == "hopf") return hopf();
    if (name == "hopf-dual") return hopf_dual();
    if (name == "linear-c3")
        return rename(linear_isotropic(std::vector<GaussRat>{GaussRat(3), GaussRat(4),
                                                             GaussRat(mpq_class(0), mpq_class(5))}),
                      "linear-c3");
    if (name == "r3-quadric") return quadric_p(q0);
    if (name == "s4-quadric")
        return rename(sphere_restriction(catalog("phi-even:d=2,n=1")), "s4-quadric");
    if (name == "h4-quadric")
        return rename(hyperbolic_restriction(catalog("phi-dual:d=2,n=1")), "h4-quadric");

    static const std::regex param_re(R"(^(phi-even|phi-odd|phi-dual):d=(\d+),n=(\d+)$)");
    std::smatch match;
    if (std::regex_match(name, match, param_re)) {
        const std::string kind = match[1];
        const int d = std::stoi(match[2]);
        const int n = std::stoi(match[3]);
        if (d < 1 || n < 1) throw ParseError("d and n must be positive in " + name);
        if (kind == "phi-even" && d % 2 != 0)
            throw ParseError("phi-even requires an even degree, got " + name);
        if (kind == "phi-odd" && d % 2 != 1)
            throw ParseError("phi-odd requires an odd degree, got " + name);
        const unsigned du = static_cast<unsigned>(d);
        MultiPoly P = MultiPoly::zero(n);
        MultiPoly Q = MultiPoly::zero(n);
        if (n == 1) {
            ExpVec e{du};
            Q.add_term(e, GaussRat(1));
        } else {
            ExpVec e1(static_cast<size_t>(n), 0u), e2(static_cast<size_t>(n), 0u);
            e1[0] = du;
            e2[1] = du;
            P.add_term(e1, GaussRat(1));
            Q.add_term(e2, GaussRat(1));
        }
        if (kind == "phi-dual") return hyperbolic_dual(q0, P, Q, d);
        return composite_phi_hat(q0, P, Q, d);
    }
    throw UnknownCatalogEntry("no catalog entry named '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"linear-c3",  "r3-quadric",       "hopf",
            "hopf-dual",  "s4-quadric",       "h4-quadric",
            "phi-even:d=2,n=1", "phi-even:d=2,n=2", "phi-odd:d=3,n=2",
            "phi-dual:d=2,n=1"};
}

PointR sample_domain_point(const MorphismSpec& spec, Sampler& sampler, double margin,
                           int max_tries) {
    const int N = spec.ambient.dimension;
    for (int t = 0; t < max_tries; ++t) {
        PointR x;
        switch (spec.ambient.kind) {
            case SpaceKind::euclidean:
                x = spec.degree == 0 ? sampler.unit_sphere(N) : sampler.box(N, 1.25);
                break;
            case SpaceKind::sphere:
                x = sampler.unit_sphere(N);
                break;
            case SpaceKind::lorentzian:
            case SpaceKind::hyperbolic:
                x = sampler.hyperboloid(N);
                break;
        }
        if (margin_ok(spec.domain, x, margin)) return x;
    }
    throw NoConvergence("domain sampling exhausted its rejection budget for " + spec.name);
}

Certification certify_spec(MorphismSpec& spec, int points, double tol, std::uint64_t seed) {
    Certification cert;
    cert.seed = seed;
    const MetricSignature sig = spec.ambient.metric();

    if (spec.exact_form) {
        cert.exact = true;
        const MultiPoly tension_num = ratfn_tension_num(*spec.exact_form, sig);
        const MultiPoly conf_num = ratfn_conf_num(*spec.exact_form, sig);
        cert.passed = tension_num.is_zero() && conf_num.is_zero();
        if (!cert.passed)
            throw ConstraintViolation("exact certification failed for " + spec.name);
        // The jet evaluator must agree with the exact form it claims to
        // implement.
        Sampler sampler(seed);
        for (int t = 0; t < 50; ++t) {
            const PointR x = sample_domain_point(spec, sampler);
            const Complex via_jets = spec.field.eval_raw(x).value();
            const Complex via_form = spec.exact_form->eval(x);
            if (std::abs(via_jets - via_form) > 1e-10 * (1.0 + std::abs(via_form)))
                throw ConstraintViolation("field and exact form disagree for " + spec.name);
        }
        cert.points = 50;
    } else {
        Sampler sampler(seed);
        cert.points = points;
        for (int t = 0; t < points; ++t) {
            const PointR x = sample_domain_point(spec, sampler);
            cert.max_tension = std::max(cert.max_tension, std::abs(tension(spec.field, x, sig)));
            cert.max_conformality = std::max(
                cert.max_conformality, std::abs(conformality(spec.field, spec.field, x, sig)));
        }
        cert.passed = cert.max_tension <= tol && cert.max_conformality <= tol;
        if (!cert.passed)
            throw ConstraintViolation("sampled certification failed for " + spec.name);
    }
    spec.certification = cert;
    return cert;
}

}  // namespace minimorph
