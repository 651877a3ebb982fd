#include <doctest.h>

#include <complex>

#include "minimorph/errors.hpp"
#include "minimorph/sampling.hpp"
#include "minimorph/variety.hpp"

using namespace minimorph;

TEST_CASE("variety point from the 3-4-5 parameters") {
    const Quintuple q = variety_point(GaussRat(3), GaussRat(4), Branch::plus);
    CHECK(q.a1 == GaussRat::ratio(0, 1, 5, 1));
    CHECK(q.a2 == GaussRat::ratio(0, 1, 16, 5));
    CHECK(q.b1 == GaussRat(3));
    CHECK(q.b2 == GaussRat(4));
    CHECK(q.b3 == GaussRat::ratio(0, 1, -12, 5));
    CHECK(q.satisfied());
    CHECK(q.regular());

    // The minus branch flips a1 and the dependent entries.
    const Quintuple m = variety_point(GaussRat(3), GaussRat(4), Branch::minus);
    CHECK(m.a1 == -q.a1);
    CHECK(m.satisfied());
}

TEST_CASE("variety point from the 5-12-13 parameters") {
    const Quintuple q = variety_point(GaussRat(5), GaussRat(12), Branch::plus);
    CHECK(q.a1 == GaussRat::ratio(0, 1, 13, 1));
    CHECK(q.satisfied());
    CHECK(q.regular());
}

TEST_CASE("degenerate and irrational parameters are rejected") {
    CHECK_THROWS_AS(variety_point(GaussRat(1), GaussRat::i(), Branch::plus),
                    DegenerateParameters);
    // b1^2 + b2^2 = 2 is not a rational square, so a1 leaves the field.
    CHECK_THROWS_AS(variety_point(GaussRat(1), GaussRat(1), Branch::plus),
                    NotExactlyRepresentable);
}

TEST_CASE("numeric variety point covers irrational parameters") {
    const QuintupleN q = variety_point_numeric({1.0, 0.0}, {1.0, 0.0}, Branch::plus);
    CHECK(q.max_residual() < 1e-12);
    CHECK(q.regular(1e-12));
    // a1 = sqrt(-2) = i*sqrt(2) on the plus branch.
    CHECK(q.a1.real() == doctest::Approx(0.0));
    CHECK(q.a1.imag() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("regularity fails when b1 vanishes") {
    const Quintuple q = variety_point(GaussRat(0), GaussRat(1), Branch::plus);
    CHECK(q.satisfied());
    CHECK(!q.regular());
    CHECK(criticality_det(q) == GaussRat(0));
}

TEST_CASE("criticality determinant matches its closed form") {
    const Quintuple q0 = variety_point(GaussRat(3), GaussRat(4), Branch::plus);
    CHECK(criticality_det(q0) == GaussRat::ratio(0, 1, 240, 1));

    // The identity det = 4*a1*b1*b2 holds for free entries, not only on
    // the variety.
    Sampler smp(3);
    for (int t = 0; t < 25; ++t) {
        auto r = [&smp]() {
            return GaussRat::ratio(static_cast<long>(smp.raw() % 19) - 9,
                                   1 + static_cast<long>(smp.raw() % 7),
                                   static_cast<long>(smp.raw() % 19) - 9,
                                   1 + static_cast<long>(smp.raw() % 7));
        };
        const Quintuple q{r(), r(), r(), r(), r()};
        CHECK(criticality_det(q) == GaussRat(4) * q.a1 * q.b1 * q.b2);
    }
}

TEST_CASE("quadric polynomial embeds into larger variable spaces") {
    const Quintuple q0 = variety_point(GaussRat(3), GaussRat(4), Branch::plus);
    const MultiPoly p3 = quadric_poly(q0, 3);
    const MultiPoly p5 = quadric_poly(q0, 5);
    CHECK(p3.n_vars() == 3);
    CHECK(p5.n_vars() == 5);
    CHECK(p5.homogeneous_degree() == 2);
    // Coefficient spot checks: x1^2 carries a1, x2x3 carries 2*b3.
    CHECK(p5.coeff(ExpVec{2, 0, 0, 0, 0}) == q0.a1);
    CHECK(p5.coeff(ExpVec{0, 1, 1, 0, 0}) == GaussRat(2) * q0.b3);
    CHECK(p5.coeff(ExpVec{0, 0, 2, 0, 0}) == -q0.a2);
}
