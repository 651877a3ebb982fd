#include <doctest.h>

#include <array>
#include <complex>

#include "minimorph/poly.hpp"

using namespace minimorph;

namespace {

MultiPoly x(int n, int k) { return MultiPoly::variable(n, k); }

}  // namespace

TEST_CASE("polynomial arithmetic and structural equality") {
    const MultiPoly p = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    const MultiPoly q = (x(2, 0) - x(2, 1)) * (x(2, 0) + x(2, 1));
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.total_degree() == 2);
    CHECK(p.num_terms() == 2);
}

TEST_CASE("zero coefficients are never stored") {
    MultiPoly p(2);
    p.add_term(ExpVec{1, 0}, GaussRat(3));
    p.add_term(ExpVec{1, 0}, GaussRat(-3));
    CHECK(p.is_zero());
    CHECK(p.num_terms() == 0);
}

TEST_CASE("derivative is exact") {
    // d/dx1 (x1^3 x2) = 3 x1^2 x2, d/dx2 = x1^3.
    const MultiPoly p = x(2, 0).pow(3) * x(2, 1);
    CHECK(p.derivative(0) == GaussRat(3) * (x(2, 0).pow(2) * x(2, 1)));
    CHECK(p.derivative(1) == x(2, 0).pow(3));
    CHECK(p.derivative(0).derivative(1) == GaussRat(3) * x(2, 0).pow(2));
}

TEST_CASE("substitution composes polynomials") {
    // p(u) = u^2 with u = x1 + x2 gives (x1+x2)^2.
    const MultiPoly u = x(2, 0) + x(2, 1);
    const MultiPoly p = MultiPoly::monomial(1, ExpVec{2}, GaussRat(1));
    CHECK(p.substitute({u}) == u * u);
}

TEST_CASE("homogeneous degree detection") {
    CHECK(x(2, 0).pow(2).homogeneous_degree() == 2);
    CHECK((x(2, 0) * x(2, 1)).homogeneous_degree() == 2);
    CHECK(!(x(2, 0) + x(2, 1).pow(2)).homogeneous_degree().has_value());
    // The zero polynomial has no single degree; the optional is empty.
    CHECK(!MultiPoly::zero(2).homogeneous_degree().has_value());
}

TEST_CASE("numeric evaluation matches exact evaluation") {
    const MultiPoly p =
        GaussRat::i() * x(2, 0).pow(2) + GaussRat::ratio(1, 2) * x(2, 1);
    const std::array<double, 2> pt = {2.0, 3.0};
    const std::complex<double> v = p.eval(pt);
    CHECK(v.real() == doctest::Approx(1.5));
    CHECK(v.imag() == doctest::Approx(4.0));

    const std::array<GaussRat, 2> pt_exact = {GaussRat(2), GaussRat(3)};
    CHECK(p.eval_exact(pt_exact) == GaussRat::ratio(3, 2, 4, 1));
}

TEST_CASE("rational functions reject a zero denominator") {
    CHECK_THROWS(RationalFn(x(2, 0), MultiPoly::zero(2)));
    const RationalFn r(x(2, 0) * x(2, 0), x(2, 1));
    const std::array<double, 2> pt = {3.0, 2.0};
    CHECK(r.eval(pt).real() == doctest::Approx(4.5));
}
