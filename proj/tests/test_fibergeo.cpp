#include <doctest.h>

#include <cmath>
#include <complex>

#include "minimorph/fibergeo.hpp"

using namespace minimorph;

namespace {

FiberSample find_base(const FiberProblem& prob, const MorphismSpec& spec, std::uint64_t seed) {
    Sampler smp(seed);
    for (int t = 0; t < 200; ++t) {
        try {
            return project_to_fiber(prob, sample_domain_point(spec, smp));
        } catch (const Error&) {
        }
    }
    throw NoConvergence("no fiber seed found in test");
}

FiberSample torus_base() {
    const FiberProblem prob = FiberProblem::torus_control(0.5, 0.375);
    const double s = std::sqrt(0.375);
    const PointR seed = {0.5, s, 0.0, s, 0.0};
    return project_to_fiber(prob, seed);
}

}  // namespace

TEST_CASE("fiber problem constructor validation") {
    const MorphismSpec s4 = catalog("s4-quadric");
    CHECK_THROWS_AS(FiberProblem(s4, Complex(0, 0)), AlphaZero);
    CHECK_THROWS_AS(FiberProblem(catalog("phi-even:d=2,n=1"), Complex(0, 5)),
                    ConstraintViolation);
    CHECK_THROWS_AS(FiberProblem::torus_control(0.9, 0.5), DegenerateParameters);
    CHECK_THROWS_AS(FiberProblem::torus_control(0.5, 0.0), DegenerateParameters);
}

TEST_CASE("projection lands on the fiber") {
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    const FiberSample base = find_base(prob, s4, 424242);
    CHECK(base.residual_norm <= 1e-10);
    double n2 = 0;
    for (double c : base.point) n2 += c * c;
    CHECK(std::abs(n2 - 1.0) < 1e-10);
    const Complex v = eval_jet2(s4.field, base.point).value();
    CHECK(std::abs(v - Complex(0, 5)) < 1e-9);
}

TEST_CASE("frames are orthonormal and annihilate the jacobian") {
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    const FiberSample base = find_base(prob, s4, 424242);
    const MetricSignature& sig = prob.sig();
    const PointR* vecs[4] = {&base.tangent[0], &base.tangent[1], &base.normal[0],
                             &base.normal[1]};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double expected = a == b ? 1.0 : 0.0;
            CHECK(std::abs(sig.inner(*vecs[a], *vecs[b]) - expected) < 1e-9);
        }
    Eigen::VectorXd x(5);
    for (int k = 0; k < 5; ++k) x(k) = base.point[k];
    const auto J = prob.jacobian(x);
    for (const PointR* t : {&base.tangent[0], &base.tangent[1]}) {
        Eigen::VectorXd v(5);
        for (int k = 0; k < 5; ++k) v(k) = (*t)[k];
        CHECK((J * v).norm() < 1e-7);
    }
}

TEST_CASE("hyperbolic frames are orthonormal under the lorentzian metric") {
    const MorphismSpec h4 = catalog("h4-quadric");
    const FiberProblem prob(h4, Complex(0, 5));
    CHECK(prob.hyperbolic());
    const FiberSample base = find_base(prob, h4, 424242);
    const MetricSignature& sig = prob.sig();
    CHECK(std::abs(sig.norm2(base.point) + 1.0) < 1e-10);
    const PointR* vecs[4] = {&base.tangent[0], &base.tangent[1], &base.normal[0],
                             &base.normal[1]};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double expected = a == b ? 1.0 : 0.0;
            CHECK(std::abs(sig.inner(*vecs[a], *vecs[b]) - expected) < 1e-9);
        }
}

TEST_CASE("frame extraction fails where the gradient vanishes") {
    // On the (x4,x5)-plane the map's gradient is zero, so the residual
    // jacobian loses rank.
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    const PointR on_plane = {0.0, 0.0, 0.0, 0.6, 0.8};
    CHECK_THROWS_AS(tangent_frame(prob, on_plane), RankDeficient);
}

TEST_CASE("torus control has mean curvature near 1/sqrt(3)") {
    const FiberProblem prob = FiberProblem::torus_control(0.5, 0.375);
    const FiberSample base = torus_base();
    CHECK(base.residual_norm <= 1e-12);
    const auto [H, norm] = mean_curvature(prob, base, 1e-3);
    const double expected = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(norm - expected) < 0.05);
    REQUIRE(H.size() == 5);
}

TEST_CASE("curvature discretization error shrinks with the step") {
    const FiberProblem prob = FiberProblem::torus_control(0.5, 0.375);
    const FiberSample base = torus_base();
    const double expected = 1.0 / std::sqrt(3.0);
    const double e_big = std::abs(mean_curvature(prob, base, 0.02).second - expected);
    const double e_small = std::abs(mean_curvature(prob, base, 0.005).second - expected);
    CHECK(e_small < 0.8 * e_big + 1e-6);
    CHECK_THROWS_AS(mean_curvature(prob, base, 0.0), DomainViolation);
}

TEST_CASE("patch tracing invariants on the sphere") {
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    const FiberSample base = find_base(prob, s4, 424242);
    SurfacePatch patch = trace_patch(prob, base, {5, 5}, 0.02);
    CHECK(patch.si == 5);
    CHECK(patch.sj == 5);
    CHECK(!patch.truncated);
    CHECK(patch.count() == 25);
    CHECK(patch.min_frame_overlap >= 0.9);
    CHECK(patch.at(patch.ci, patch.cj).has_value());
    for (int i = 0; i < patch.si; ++i)
        for (int j = 0; j < patch.sj; ++j) {
            REQUIRE(patch.at(i, j).has_value());
            const FiberSample& s = *patch.at(i, j);
            CHECK(s.residual_norm <= 1e-9);
            for (double c : s.point) {
                CHECK(c >= -1.0 - 1e-12);
                CHECK(c <= 1.0 + 1e-12);
            }
        }
}

TEST_CASE("patch tracing validates its inputs") {
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    const FiberSample base = find_base(prob, s4, 424242);
    CHECK_THROWS_AS(trace_patch(prob, base, {3, 3}, 0.0), DomainViolation);
    CHECK_THROWS_AS(trace_patch(prob, base, {3, 3}, 0.2), DomainViolation);
    CHECK_THROWS_AS(trace_patch(prob, base, {0, 3}, 0.02), DimensionMismatch);
}

TEST_CASE("curvature report over a small minimal patch") {
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    const FiberSample base = find_base(prob, s4, 424242);
    SurfacePatch patch = trace_patch(prob, base, {3, 3}, 0.02);
    const CurvatureReport rep = curvature_report(prob, patch, 1e-3, 5e-4);
    CHECK(rep.verdict);
    CHECK(rep.samples == patch.count());
    CHECK(rep.failed_nodes == 0);
    CHECK(rep.max_norm <= 5e-4);
    CHECK(rep.mean_norm <= rep.max_norm);
    // The report writes the norms back into the nodes.
    CHECK(std::isfinite(patch.at(patch.ci, patch.cj)->mean_curvature_norm));
}

TEST_CASE("compactness diagnostic on sphere patches") {
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    const FiberSample base = find_base(prob, s4, 424242);
    SurfacePatch patch = trace_patch(prob, base, {5, 5}, 0.02);
    const CompactnessReport rep = compactness_diagnostic(patch);
    CHECK(rep.sphere_case);
    CHECK(rep.verdict == "bounded");
    CHECK(rep.samples == patch.count());
    CHECK(rep.max_constraint_violation <= 1e-10);
    CHECK(rep.diameter <= 2.0 + 1e-9);
    CHECK(rep.max_coordinate <= 1.0 + 1e-12);
}

TEST_CASE("compactness diagnostic needs data") {
    SurfacePatch empty;
    empty.si = 3;
    empty.sj = 3;
    empty.nodes.resize(9);
    const CompactnessReport rep = compactness_diagnostic(empty);
    CHECK(rep.samples == 0);
    CHECK(rep.verdict == "insufficient data");
}

TEST_CASE("critical scan requires a flat quadric spec") {
    CHECK_THROWS_AS(critical_scan(catalog("hopf"), 10, 1), ConstraintViolation);
}

TEST_CASE("critical scan finds no interior zeros of the gradient") {
    const MorphismSpec spec = catalog("phi-even:d=2,n=1");
    const CriticalScanReport rep = critical_scan(spec, 500, 99);
    CHECK(rep.violations == 0);
    CHECK(rep.samples_off_plane > 0);
    CHECK(rep.samples_on_plane > 0);
    CHECK(rep.min_grad_off_plane > 0.0);
    CHECK(rep.max_grad_on_plane <= 1e-12);
    CHECK(rep.max_value_on_plane <= 1e-12);
    CHECK(rep.det_certificate_available);
    CHECK(std::abs(rep.det_value - Complex(0, 240)) < 1e-9);
}
