#include <doctest.h>

#include <cmath>
#include <complex>

#include "minimorph/polyops.hpp"
#include "minimorph/sampling.hpp"
#include "minimorph/variety.hpp"

using namespace minimorph;

namespace {

MultiPoly x(int n, int k) { return MultiPoly::variable(n, k); }

/// Central-difference tension of a rational function, the brute-force
/// oracle for the quotient-rule numerators.
std::complex<double> fd_tension(const RationalFn& r, PointR p, const MetricSignature& sig,
                                double h = 1e-5) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < sig.dimension; ++k) {
        PointR hi = p, lo = p;
        hi[static_cast<size_t>(k)] += h;
        lo[static_cast<size_t>(k)] -= h;
        acc += sig.weight(k) * (r.eval(hi) - 2.0 * r.eval(p) + r.eval(lo)) / (h * h);
    }
    return acc;
}

}  // namespace

TEST_CASE("tension of harmonic and non-harmonic basis elements") {
    const MetricSignature e2 = MetricSignature::euclidean(2);
    CHECK(poly_tension(x(2, 0).pow(2) - x(2, 1).pow(2), e2).is_zero());
    CHECK(poly_tension(x(2, 0).pow(2) + x(2, 1).pow(2), e2) == MultiPoly::constant(2, GaussRat(4)));

    // The Lorentzian operator flips the last weight.
    const MetricSignature l2 = MetricSignature::lorentz(2);
    CHECK(poly_tension(x(2, 0).pow(2) + x(2, 1).pow(2), l2).is_zero());
}

TEST_CASE("conformality of the isotropic linear map vanishes") {
    const MultiPoly f = x(2, 0) + GaussRat::i() * x(2, 1);
    const MetricSignature e2 = MetricSignature::euclidean(2);
    CHECK(poly_conformality(f, f, e2).is_zero());
    CHECK(poly_conformality(x(2, 0), x(2, 1), e2).is_zero());
    // Symmetry in the two arguments.
    const MultiPoly g = x(2, 0).pow(2);
    CHECK(poly_conformality(f, g, e2) == poly_conformality(g, f, e2));
}

TEST_CASE("conformality of the a,b quadric pencil") {
    // p = a(x1^2 - x2^2) + b x1 x2: kappa(p,p) = (4a^2 + b^2)(x1^2 + x2^2).
    const GaussRat a = GaussRat::ratio(2, 3);
    const GaussRat b = GaussRat::ratio(-1, 2);
    const MultiPoly p = a * (x(2, 0).pow(2) - x(2, 1).pow(2)) + b * (x(2, 0) * x(2, 1));
    const MultiPoly expected =
        (GaussRat(4) * a * a + b * b) * (x(2, 0).pow(2) + x(2, 1).pow(2));
    CHECK(poly_conformality(p, p, MetricSignature::euclidean(2)) == expected);
}

TEST_CASE("quotient-rule tension numerator for x1^2/x2") {
    const RationalFn r(x(2, 0).pow(2), x(2, 1));
    const MetricSignature e2 = MetricSignature::euclidean(2);
    const MultiPoly n = ratfn_tension_num(r, e2);
    // tau(x1^2/x2) = 2/x2 + 2 x1^2/x2^3 = (2 x1^2 + 2 x2^2)/x2^3.
    CHECK(n == GaussRat(2) * x(2, 0).pow(2) + GaussRat(2) * x(2, 1).pow(2));

    // The numerator is consistent with finite differences of the quotient.
    Sampler smp(7);
    for (int t = 0; t < 20; ++t) {
        PointR p = smp.box(2, 1.0);
        if (std::abs(p[1]) < 0.3) continue;
        const std::complex<double> lhs = fd_tension(r, p, e2);
        const std::complex<double> den = r.den().eval(p);
        const std::complex<double> rhs = n.eval(p) / (den * den * den);
        CHECK(std::abs(lhs - rhs) < 1e-4 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("quotient-rule numerators on random rational functions") {
    // N/Q^3 must equal tau(P/Q) and M/Q^4 must equal kappa(P/Q, P/Q)
    // wherever Q is bounded away from zero.
    Sampler smp(11);
    const MetricSignature e3 = MetricSignature::euclidean(3);
    int tested = 0;
    while (tested < 100) {
        MultiPoly P(3), Q(3);
        for (int t = 0; t < 3; ++t) {
            ExpVec ep = {static_cast<unsigned>(smp.raw() % 3), static_cast<unsigned>(smp.raw() % 2),
                         static_cast<unsigned>(smp.raw() % 2)};
            ExpVec eq = {static_cast<unsigned>(smp.raw() % 2), static_cast<unsigned>(smp.raw() % 2),
                         static_cast<unsigned>(smp.raw() % 2)};
            P.add_term(ep, GaussRat::ratio(static_cast<long>(smp.raw() % 9) - 4, 1,
                                           static_cast<long>(smp.raw() % 9) - 4, 1));
            Q.add_term(eq, GaussRat::ratio(static_cast<long>(smp.raw() % 9) - 4, 1,
                                           static_cast<long>(smp.raw() % 9) - 4, 1));
        }
        if (Q.is_zero()) continue;
        const RationalFn r(P, Q);
        const MultiPoly n = ratfn_tension_num(r, e3);
        const PointR p = smp.box(3, 1.0);
        const std::complex<double> qv = Q.eval(p);
        if (std::abs(qv) < 0.5) continue;
        ++tested;
        const std::complex<double> lhs = fd_tension(r, p, e3);
        const std::complex<double> rhs = n.eval(p) / (qv * qv * qv);
        CHECK(std::abs(lhs - rhs) <= 1e-3 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("conformality numerator of a constant quotient is the square") {
    // r = x1/1: M = kappa(x1,x1) * 1 = 1.
    const RationalFn r(x(2, 0), MultiPoly::one(2));
    CHECK(ratfn_conf_num(r, MetricSignature::euclidean(2)) == MultiPoly::one(2));
}

TEST_CASE("eigenfamily verification accepts and rejects correctly") {
    const MetricSignature e2 = MetricSignature::euclidean(2);
    const MultiPoly f = x(2, 0) + GaussRat::i() * x(2, 1);
    const EigenReport good = verify_eigen_pair(f, f, GaussRat(0), GaussRat(0), e2);
    CHECK(good.holds);

    const EigenReport bad =
        verify_eigen_pair(x(2, 0).pow(2), x(2, 0).pow(2), GaussRat(0), GaussRat(0), e2);
    CHECK(!bad.holds);
    CHECK(!bad.witness_name.empty());
}

TEST_CASE("dualization exchanges Euclidean and Lorentzian harmonicity") {
    // x1^2 + x2^2 is not Euclidean-harmonic but its dual x1^2 - x2^2 is
    // Lorentzian-harmonic, and vice versa.
    const MultiPoly sum = x(2, 0).pow(2) + x(2, 1).pow(2);
    const MultiPoly dual = dualize(sum);
    CHECK(dual == x(2, 0).pow(2) - x(2, 1).pow(2));
    CHECK(!poly_tension(sum, MetricSignature::euclidean(2)).is_zero());
    CHECK(!poly_tension(dual, MetricSignature::lorentz(2)).is_zero());

    const MultiPoly harm = x(2, 0) * x(2, 1);
    CHECK(poly_tension(harm, MetricSignature::euclidean(2)).is_zero());
    CHECK(poly_tension(dualize(harm), MetricSignature::lorentz(2)).is_zero());

    // Applying the substitution twice negates the odd part; tension zero
    // sets are preserved both ways.
    CHECK(dualize(dualize(harm)) == -harm);
}

TEST_CASE("dualized quadric stays Lorentzian-harmonic and conformal") {
    const Quintuple q0 = variety_point(GaussRat(3), GaussRat(4), Branch::plus);
    const MultiPoly p = quadric_poly(q0, 3);
    const MetricSignature e3 = MetricSignature::euclidean(3);
    const MetricSignature l3 = MetricSignature::lorentz(3);
    CHECK(poly_tension(p, e3).is_zero());
    CHECK(poly_conformality(p, p, e3).is_zero());
    CHECK(poly_tension(dualize(p), l3).is_zero());
    CHECK(poly_conformality(dualize(p), dualize(p), l3).is_zero());
}
