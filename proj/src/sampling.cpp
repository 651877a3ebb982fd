#include "minimorph/sampling.hpp"

#include <cmath>
#include <numbers>

#include "minimorph/errors.hpp"

namespace minimorph {

double Sampler::gaussian() {
    // u in (0,1] so the log is finite.
    const double u = 1.0 - uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

PointR Sampler::box(int n, double half_width) {
    PointR x(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) x[k] = uniform(-half_width, half_width);
    return x;
}

std::vector<double> Sampler::gaussian_vec(int n) {
    std::vector<double> x(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) x[k] = gaussian();
    return x;
}

PointR Sampler::unit_sphere(int n) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        PointR x = gaussian_vec(n);
        double norm2 = 0.0;
        for (double v : x) norm2 += v * v;
        if (norm2 < 1e-12) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& v : x) v *= inv;
        return x;
    }
    throw NoConvergence("sphere sampling failed to produce a nonzero vector");
}

PointR Sampler::hyperboloid(int n, double half_width) {
    const MetricSignature sig = MetricSignature::lorentz(n);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        PointR x = box(n, half_width);
        // Keep the last coordinate dominant so the cone test passes often.
        x[n - 1] = uniform(1.0, half_width + 1.0) * (uniform01() < 0.5 ? -1.0 : 1.0);
        const double q = sig.norm2(x);
        if (!(q < -1e-6)) continue;
        const double inv = 1.0 / std::sqrt(-q);
        for (double& v : x) v *= inv;
        return x;
    }
    throw NoConvergence("hyperboloid sampling exhausted its rejection budget");
}

}  // namespace minimorph
