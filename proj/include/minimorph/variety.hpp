#pragma once

#include <array>
#include <complex>

#include "minimorph/poly.hpp"
#include "minimorph/rational.hpp"

namespace minimorph {

enum class Branch { plus, minus };

/// Coefficients (a1, a2, b1, b2, b3) of the quadric
///   p(x) = a1(x1^2-x2^2) + a2(x2^2-x3^2) + 2b1 x1x2 + 2b2 x1x3 + 2b3 x2x3
/// subject to a1^2+b1^2+b2^2 = 0, a1*a2 = -b2^2, a1*b3 = b1*b2.  The
/// mixed terms carry weight 2 (b_k are the off-diagonal entries of the
/// quadratic form); exactly then the three constraints above are the
/// conditions kappa(p, p) = 0, and tau(p) = 0 holds for free entries.
struct Quintuple {
    GaussRat a1, a2, b1, b2, b3;

    /// (a1^2+b1^2+b2^2, a1*a2+b2^2, a1*b3-b1*b2); all zero on the variety.
    std::array<GaussRat, 3> residuals() const;
    bool satisfied() const;

    /// a1*b1*b2 != 0; needed for the critical-set determinant certificate.
    bool regular() const;
};

/// Floating-point quintuple for parameters whose square root is not a
/// Gaussian rational.
struct QuintupleN {
    std::complex<double> a1, a2, b1, b2, b3;

    std::array<std::complex<double>, 3> residuals() const;
    double max_residual() const;
    bool regular(double tol = 0.0) const;
};

/// Point of the coefficient variety from free parameters (b1, b2):
///   a1 = branch * sqrt(-(b1^2+b2^2)),  a2 = -b2^2/a1,  b3 = b1*b2/a1.
/// "+" takes the principal square root, "-" its negation.
/// Throws DegenerateParameters when b1^2+b2^2 = 0 and
/// NotExactlyRepresentable when the square root leaves the Gaussian
/// rationals (use the numeric variant then).
Quintuple variety_point(const GaussRat& b1, const GaussRat& b2, Branch branch);

QuintupleN variety_point_numeric(std::complex<double> b1, std::complex<double> b2, Branch branch);

/// det [[2a1,b1,b2],[a1,2b1,b2],[a1,b1,2b2]] by cofactor expansion;
/// cross-checked internally against the closed form 4*a1*b1*b2.
GaussRat criticality_det(const Quintuple& q);
std::complex<double> criticality_det(const QuintupleN& q);

/// The quadric p itself, as an exact polynomial in x1,x2,x3 (optionally
/// embedded as the first three of n_vars variables).
MultiPoly quadric_poly(const Quintuple& q, int n_vars = 3);

}  // namespace minimorph
