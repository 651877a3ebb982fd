#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "minimorph/field.hpp"
#include "minimorph/sampling.hpp"

using namespace minimorph;

namespace {

MultiPoly x(int n, int k) { return MultiPoly::variable(n, k); }

}  // namespace

TEST_CASE("tension of the harmonic basis elements") {
    const MetricSignature e2 = MetricSignature::euclidean(2);
    const ScalarField diff = ScalarField::from_poly(x(2, 0).pow(2) - x(2, 1).pow(2));
    const ScalarField sum = ScalarField::from_poly(x(2, 0).pow(2) + x(2, 1).pow(2));
    Sampler smp(5);
    for (int t = 0; t < 10; ++t) {
        const PointR p = smp.box(2, 2.0);
        CHECK(std::abs(tension(diff, p, e2)) < 1e-13);
        CHECK(std::abs(tension(sum, p, e2) - Complex(4, 0)) < 1e-13);
    }
}

TEST_CASE("lorentzian tension flips the last weight") {
    const MetricSignature l2 = MetricSignature::lorentz(2);
    const ScalarField sum = ScalarField::from_poly(x(2, 0).pow(2) + x(2, 1).pow(2));
    const std::array<double, 2> p = {0.3, -0.8};
    CHECK(std::abs(tension(sum, p, l2)) < 1e-13);
}

TEST_CASE("conformality examples") {
    const MetricSignature e2 = MetricSignature::euclidean(2);
    const ScalarField iso =
        ScalarField::from_poly(x(2, 0) + GaussRat::i() * x(2, 1));
    const ScalarField f1 = ScalarField::from_poly(x(2, 0));
    const ScalarField f2 = ScalarField::from_poly(x(2, 1));
    const std::array<double, 2> p = {1.4, -0.6};
    CHECK(std::abs(conformality(iso, iso, p, e2)) < 1e-14);
    CHECK(std::abs(conformality(f1, f2, p, e2)) < 1e-14);
    CHECK(std::abs(conformality(f1, f1, p, e2) - Complex(1, 0)) < 1e-14);
}

TEST_CASE("gradient of x1*x2 at (2,3)") {
    const ScalarField f = ScalarField::from_poly(x(3, 0) * x(3, 1));
    const std::array<double, 3> p = {2.0, 3.0, 7.0};
    const Eigen::VectorXcd g = grad_complex(f, p, MetricSignature::euclidean(3));
    CHECK(g(0) == Complex(3, 0));
    CHECK(g(1) == Complex(2, 0));
    CHECK(g(2) == Complex(0, 0));
}

TEST_CASE("lorentzian gradient negates the last component") {
    const ScalarField f = ScalarField::from_poly(x(2, 0) * x(2, 1));
    const std::array<double, 2> p = {2.0, 3.0};
    const Eigen::VectorXcd g = grad_complex(f, p, MetricSignature::lorentz(2));
    CHECK(g(0) == Complex(3, 0));
    CHECK(g(1) == Complex(-2, 0));
}

TEST_CASE("tension equals the weighted hessian trace") {
    const RationalFn r(x(2, 0).pow(3), MultiPoly::constant(2, GaussRat(2)) + x(2, 1).pow(2));
    const ScalarField f = ScalarField::from_ratfn(r);
    const std::array<double, 2> p = {0.9, 0.4};
    for (const MetricSignature& sig :
         {MetricSignature::euclidean(2), MetricSignature::lorentz(2)}) {
        const Jet2 j = eval_jet2(f, p);
        Complex trace = 0;
        for (int k = 0; k < 2; ++k) trace += sig.weight(k) * j.hessian()(k, k);
        CHECK(std::abs(tension(f, p, sig) - trace) == 0.0);
    }
}

TEST_CASE("excluded zero sets raise domain violations") {
    const RationalFn r(x(2, 0), x(2, 1));
    const ScalarField f = ScalarField::from_ratfn(r);
    const std::array<double, 2> ok = {1.0, 2.0};
    const std::array<double, 2> bad = {1.0, 0.0};
    CHECK(eval_jet2(f, ok).value() == Complex(0.5, 0));
    CHECK(!f.in_domain(bad));
    CHECK_THROWS_AS(eval_jet2(f, bad), DomainViolation);
}

TEST_CASE("branch cuts exclude the non-positive real axis with a guard band") {
    DomainPredicate dom;
    dom.branch_cuts.push_back(x(2, 0) + GaussRat::i() * x(2, 1));
    const std::array<double, 2> on_cut = {-1.0, 0.0};
    const std::array<double, 2> at_branch_point = {0.0, 0.0};
    const std::array<double, 2> off_cut = {-1.0, 0.5};
    const std::array<double, 2> positive_axis = {1.0, 0.0};
    CHECK(!dom.contains(on_cut));
    CHECK(!dom.contains(at_branch_point));
    CHECK(dom.contains(off_cut));
    CHECK(dom.contains(positive_axis));
}

TEST_CASE("cone and origin predicates") {
    DomainPredicate dom;
    dom.require_cone = true;
    dom.sig = MetricSignature::lorentz(2);
    const std::array<double, 2> inside = {0.1, 1.0};
    const std::array<double, 2> outside = {1.0, 0.1};
    CHECK(dom.contains(inside));
    CHECK(!dom.contains(outside));

    DomainPredicate origin;
    origin.exclude_origin = true;
    const std::array<double, 2> zero = {0.0, 0.0};
    CHECK(!origin.contains(zero));
    CHECK(origin.contains(inside));
}

TEST_CASE("predicate intersection is a conjunction") {
    DomainPredicate a;
    a.excluded_zeros.push_back(x(2, 0));
    DomainPredicate b;
    b.exclude_origin = true;
    const DomainPredicate both = a.intersect(b);
    const std::array<double, 2> on_a = {0.0, 1.0};
    const std::array<double, 2> fine = {1.0, 1.0};
    CHECK(!both.contains(on_a));
    CHECK(both.contains(fine));
    CHECK(both.exclude_origin);
}

TEST_CASE("radial invariance holds for quotients and fails for polynomials") {
    const RationalFn quotient(x(2, 0), x(2, 1));
    const ScalarField q = ScalarField::from_ratfn(quotient);
    const ScalarField p = ScalarField::from_poly(x(2, 0).pow(2));
    const std::array<double, 2> pt = {0.7, 1.3};
    const std::array<double, 3> scales = {0.5, 2.0, 7.25};
    CHECK(check_radial_invariance(q, pt, scales));
    CHECK(!check_radial_invariance(p, pt, scales));
}

TEST_CASE("pullback by harmonic test functions") {
    // phi = x1 + i x2 is a harmonic morphism on R^2; every harmonic h
    // composes to a harmonic function.
    const ScalarField phi = ScalarField::from_poly(x(2, 0) + GaussRat::i() * x(2, 1));
    const MetricSignature e2 = MetricSignature::euclidean(2);
    Sampler smp(17);
    for (const HarmonicTest h : kHarmonicTests) {
        const ScalarField pb = pullback(phi, h);
        for (int t = 0; t < 5; ++t) {
            PointR p = smp.box(2, 1.0);
            if (h == HarmonicTest::re_inv_w && std::hypot(p[0], p[1]) < 0.3) continue;
            CHECK(std::abs(tension(pb, p, e2)) < 1e-9);
        }
    }

    // Values compose as expected.
    const std::array<double, 2> pt = {0.6, 0.8};
    const Complex w(0.6, 0.8);
    CHECK(std::abs(eval_jet2(pullback(phi, HarmonicTest::re_w), pt).value() - Complex(w.real(), 0)) <
          1e-14);
    CHECK(std::abs(eval_jet2(pullback(phi, HarmonicTest::im_w2), pt).value() -
                   Complex((w * w).imag(), 0)) < 1e-14);
    CHECK(std::abs(eval_jet2(pullback(phi, HarmonicTest::re_inv_w), pt).value() -
                   Complex((1.0 / w).real(), 0)) < 1e-14);
}

TEST_CASE("overflow in evaluation is reported") {
    // Pole points are excluded by the predicate and raise DomainViolation;
    // an evaluator returning inf at an allowed point raises OverflowError.
    const RationalFn r(MultiPoly::one(1), x(1, 0));
    const ScalarField f = ScalarField::from_ratfn(r);
    const std::array<double, 1> pole = {0.0};
    CHECK_THROWS_AS(eval_jet2(f, pole), DomainViolation);

    const ScalarField raw(1, [](std::span<const double>) {
        return Jet2::constant(1, Complex(std::numeric_limits<double>::infinity(), 0));
    });
    const std::array<double, 1> p = {1.0};
    CHECK_THROWS_AS(eval_jet2(raw, p), OverflowError);
}
