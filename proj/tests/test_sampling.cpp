#include <doctest.h>

#include <cmath>

#include "minimorph/metric.hpp"
#include "minimorph/sampling.hpp"

using namespace minimorph;

TEST_CASE("identical seeds give identical streams") {
    Sampler a(99), b(99);
    for (int t = 0; t < 50; ++t) {
        CHECK(a.raw() == b.raw());
        CHECK(a.uniform01() == b.uniform01());
        CHECK(a.gaussian() == b.gaussian());
        const PointR pa = a.box(4, 2.0);
        const PointR pb = b.box(4, 2.0);
        REQUIRE(pa.size() == pb.size());
        for (size_t k = 0; k < pa.size(); ++k) CHECK(pa[k] == pb[k]);
    }
}

TEST_CASE("different seeds diverge") {
    Sampler a(1), b(2);
    int same = 0;
    for (int t = 0; t < 20; ++t)
        if (a.raw() == b.raw()) ++same;
    CHECK(same == 0);
}

TEST_CASE("uniform and box respect their ranges") {
    Sampler smp(7);
    for (int t = 0; t < 200; ++t) {
        const double u = smp.uniform(-3.0, 5.0);
        CHECK(u >= -3.0);
        CHECK(u < 5.0);
        const PointR p = smp.box(3, 1.25);
        REQUIRE(p.size() == 3);
        for (double c : p) {
            CHECK(c >= -1.25);
            CHECK(c <= 1.25);
        }
    }
}

TEST_CASE("unit sphere samples have norm one") {
    Sampler smp(11);
    for (int t = 0; t < 100; ++t) {
        const PointR p = smp.unit_sphere(5);
        double n2 = 0;
        for (double c : p) n2 += c * c;
        CHECK(std::abs(n2 - 1.0) < 1e-12);
    }
}

TEST_CASE("hyperboloid samples satisfy the lorentzian constraint") {
    Sampler smp(13);
    const MetricSignature l5 = MetricSignature::lorentz(5);
    for (int t = 0; t < 100; ++t) {
        const PointR p = smp.hyperboloid(5);
        REQUIRE(p.size() == 5);
        CHECK(std::abs(l5.norm2(p) + 1.0) < 1e-12);
        // Both sheets occur; on either one the last coordinate dominates.
        CHECK(std::abs(p[4]) >= 1.0 - 1e-12);
    }
}
