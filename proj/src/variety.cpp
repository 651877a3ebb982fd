#include "minimorph/variety.hpp"

#include <algorithm>
#include <cmath>

#include "minimorph/errors.hpp"

namespace minimorph {

std::array<GaussRat, 3> Quintuple::residuals() const {
    return {a1 * a1 + b1 * b1 + b2 * b2, a1 * a2 + b2 * b2, a1 * b3 - b1 * b2};
}

bool Quintuple::satisfied() const {
    for (const auto& r : residuals())
        if (!r.is_zero()) return false;
    return true;
}

bool Quintuple::regular() const { return !(a1 * b1 * b2).is_zero(); }

std::array<std::complex<double>, 3> QuintupleN::residuals() const {
    return {a1 * a1 + b1 * b1 + b2 * b2, a1 * a2 + b2 * b2, a1 * b3 - b1 * b2};
}

double QuintupleN::max_residual() const {
    double m = 0;
    for (const auto& r : residuals()) m = std::max(m, std::abs(r));
    return m;
}

bool QuintupleN::regular(double tol) const { return std::abs(a1 * b1 * b2) > tol; }

Quintuple variety_point(const GaussRat& b1, const GaussRat& b2, Branch branch) {
    GaussRat s = -(b1 * b1 + b2 * b2);
    if (s.is_zero()) throw DegenerateParameters("b1^2 + b2^2 = 0");
    auto root = s.sqrt_exact();
    if (!root)
        throw NotExactlyRepresentable("sqrt(-(b1^2+b2^2)) is not a Gaussian rational");
    GaussRat a1 = (branch == Branch::plus) ? *root : -*root;
    Quintuple q{a1, -(b2 * b2) / a1, b1, b2, (b1 * b2) / a1};
    return q;
}

QuintupleN variety_point_numeric(std::complex<double> b1, std::complex<double> b2, Branch branch) {
    std::complex<double> s = -(b1 * b1 + b2 * b2);
    if (std::abs(s) == 0.0) throw DegenerateParameters("b1^2 + b2^2 = 0");
    // Negating a real sum leaves imag = -0.0, which std::sqrt treats as
    // the lower side of the cut; clear the sign so "+" really is the
    // principal branch.
    if (s.imag() == 0.0) s = {s.real(), 0.0};
    std::complex<double> a1 = std::sqrt(s);
    if (branch == Branch::minus) a1 = -a1;
    return {a1, -(b2 * b2) / a1, b1, b2, (b1 * b2) / a1};
}

namespace {

template <typename T>
T det3_cofactor(const T m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

GaussRat criticality_det(const Quintuple& q) {
    const GaussRat two(2);
    const GaussRat m[3][3] = {{two * q.a1, q.b1, q.b2},
                              {q.a1, two * q.b1, q.b2},
                              {q.a1, q.b1, two * q.b2}};
    GaussRat det = det3_cofactor(m);
    if (!(det == GaussRat(4) * q.a1 * q.b1 * q.b2))
        throw std::logic_error("criticality determinant identity violated");
    return det;
}

std::complex<double> criticality_det(const QuintupleN& q) {
    const std::complex<double> m[3][3] = {{2.0 * q.a1, q.b1, q.b2},
                                          {q.a1, 2.0 * q.b1, q.b2},
                                          {q.a1, q.b1, 2.0 * q.b2}};
    return det3_cofactor(m);
}

MultiPoly quadric_poly(const Quintuple& q, int n_vars) {
    if (n_vars < 3) throw DimensionMismatch("quadric needs at least three variables");
    auto mono = [&](int i, int j, const GaussRat& c) {
        ExpVec e(n_vars, 0);
        e[i] += 1;
        e[j] += 1;
        return MultiPoly::monomial(n_vars, std::move(e), c);
    };
    // Mixed monomials carry weight 2: expanding kappa(p, p) with that
    // normalization yields exactly the three residuals of
    // Quintuple::residuals(), and on the variety p factors as
    // (a1 x1 + b1 x2 + b2 x3)^2 / a1.
    const GaussRat two(2);
    MultiPoly p(n_vars);
    p += mono(0, 0, q.a1);
    p += mono(1, 1, q.a2 - q.a1);
    p += mono(2, 2, -q.a2);
    p += mono(0, 1, two * q.b1);
    p += mono(0, 2, two * q.b2);
    p += mono(1, 2, two * q.b3);
    return p;
}

}  // namespace minimorph
