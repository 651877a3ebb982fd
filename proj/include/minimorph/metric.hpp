#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "minimorph/errors.hpp"

namespace minimorph {

/// A point of the flat ambient space, stored in real coordinates.
using PointR = std::vector<double>;

/// Flat diagonal metric: all weights +1, or (+1,...,+1,-1) with the
/// negative weight on the last coordinate.
struct MetricSignature {
    int dimension = 0;
    bool lorentzian = false;

    static MetricSignature euclidean(int n) { return {n, false}; }
    static MetricSignature lorentz(int n) { return {n, true}; }

    /// Diagonal weight of coordinate k (0-based).
    double weight(int k) const { return (lorentzian && k == dimension - 1) ? -1.0 : 1.0; }

    /// Same weight as an exact integer, for symbolic use.
    int weight_int(int k) const { return (lorentzian && k == dimension - 1) ? -1 : 1; }

    /// <x,y> under this signature.
    double inner(std::span<const double> x, std::span<const double> y) const {
        double s = 0;
        for (int k = 0; k < dimension; ++k) s += weight(k) * x[k] * y[k];
        return s;
    }

    double norm2(std::span<const double> x) const { return inner(x, x); }

    bool operator==(const MetricSignature&) const = default;
};

inline void require_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v)) throw DomainViolation("point has non-finite coordinates");
}

}  // namespace minimorph
