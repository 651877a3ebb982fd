#pragma once

#include <Eigen/Dense>
#include <complex>

namespace minimorph {

using Complex = std::complex<double>;

/// Value, gradient and Hessian of a complex-valued field at a point,
/// propagated by second-order forward differentiation with respect to the
/// real coordinates.  The Hessian is built symmetrically, so symmetry is
/// exact, not approximate.
class Jet2 {
public:
    Jet2() = default;
    Jet2(int dim, Complex value)
        : val_(value), grad_(Eigen::VectorXcd::Zero(dim)), hess_(Eigen::MatrixXcd::Zero(dim, dim)) {}

    static Jet2 constant(int dim, Complex c) { return {dim, c}; }
    static Jet2 variable(int dim, int k, double x) {
        Jet2 j(dim, x);
        j.grad_(k) = 1.0;
        return j;
    }

    int dim() const { return static_cast<int>(grad_.size()); }
    Complex value() const { return val_; }
    const Eigen::VectorXcd& gradient() const { return grad_; }
    const Eigen::MatrixXcd& hessian() const { return hess_; }

    bool finite() const;

    Jet2 operator-() const;
    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    friend Jet2 operator/(const Jet2& a, const Jet2& b);

    friend Jet2 operator*(Complex c, Jet2 j);
    friend Jet2 operator+(Complex c, Jet2 j);

    /// Integer power by repeated multiplication (e >= 0).
    Jet2 pow(unsigned e) const;

    /// Principal branch; the caller is responsible for staying off the cut.
    Jet2 sqrt_principal() const;

    /// Real-linear projections.
    Jet2 real_part() const;
    Jet2 imag_part() const;

private:
    Complex val_{};
    Eigen::VectorXcd grad_;
    Eigen::MatrixXcd hess_;
};

}  // namespace minimorph
