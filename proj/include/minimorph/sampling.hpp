#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "minimorph/metric.hpp"

namespace minimorph {

/// Deterministic sampler.  All randomness in the library flows through this
/// class; the value sequence for a given seed is part of the artifact's
/// reproducibility contract, so the uniform and gaussian transforms are
/// spelled out here instead of delegating to std:: distributions (whose
/// output is not pinned by the standard).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller (one value per call; pairs are not
    /// cached so the stream is position-independent).
    double gaussian();

    /// Uniform point in the cube [-half_width, half_width]^n.
    PointR box(int n, double half_width);

    std::vector<double> gaussian_vec(int n);

    /// Uniform point on the unit sphere in R^n.
    PointR unit_sphere(int n);

    /// Point on the unit hyperboloid <x,x>_L = -1 (last coordinate positive
    /// or negative with equal probability), obtained by rejection inside a
    /// box followed by normalization.
    PointR hyperboloid(int n, double half_width = 2.0);

private:
    std::mt19937_64 rng_;
};

}  // namespace minimorph
