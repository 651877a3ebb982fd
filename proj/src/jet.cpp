#include "minimorph/jet.hpp"

#include <cmath>

namespace minimorph {

bool Jet2::finite() const {
    auto ok = [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
    if (!ok(val_)) return false;
    for (int i = 0; i < grad_.size(); ++i)
        if (!ok(grad_(i))) return false;
    for (int i = 0; i < hess_.rows(); ++i)
        for (int j = 0; j < hess_.cols(); ++j)
            if (!ok(hess_(i, j))) return false;
    return true;
}

Jet2 Jet2::operator-() const {
    Jet2 r = *this;
    r.val_ = -r.val_;
    r.grad_ = -r.grad_;
    r.hess_ = -r.hess_;
    return r;
}

Jet2& Jet2::operator+=(const Jet2& o) {
    val_ += o.val_;
    grad_ += o.grad_;
    hess_ += o.hess_;
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
    val_ -= o.val_;
    grad_ -= o.grad_;
    hess_ -= o.hess_;
    return *this;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.val_ = a.val_ * b.val_;
    r.grad_ = a.grad_ * b.val_ + b.grad_ * a.val_;
    r.hess_ = a.hess_ * b.val_ + b.hess_ * a.val_ + a.grad_ * b.grad_.transpose() +
              b.grad_ * a.grad_.transpose();
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
    // w = a/b resolved from a = w*b, order one then order two.
    Jet2 w;
    w.val_ = a.val_ / b.val_;
    w.grad_ = (a.grad_ - w.val_ * b.grad_) / b.val_;
    w.hess_ = (a.hess_ - w.grad_ * b.grad_.transpose() - b.grad_ * w.grad_.transpose() -
               w.val_ * b.hess_) /
              b.val_;
    return w;
}

Jet2 operator*(Complex c, Jet2 j) {
    j.val_ *= c;
    j.grad_ *= c;
    j.hess_ *= c;
    return j;
}

Jet2 operator+(Complex c, Jet2 j) {
    j.val_ += c;
    return j;
}

Jet2 Jet2::pow(unsigned e) const {
    Jet2 acc = Jet2::constant(dim(), 1.0);
    Jet2 base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        if (e >>= 1u) base = base * base;
    }
    return acc;
}

Jet2 Jet2::sqrt_principal() const {
    Jet2 w;
    w.val_ = std::sqrt(val_);
    w.grad_ = grad_ / (2.0 * w.val_);
    w.hess_ = (hess_ - 2.0 * (w.grad_ * w.grad_.transpose())) / (2.0 * w.val_);
    return w;
}

Jet2 Jet2::real_part() const {
    Jet2 r = *this;
    r.val_ = val_.real();
    r.grad_ = grad_.real().cast<Complex>();
    r.hess_ = hess_.real().cast<Complex>();
    return r;
}

Jet2 Jet2::imag_part() const {
    Jet2 r = *this;
    r.val_ = val_.imag();
    r.grad_ = grad_.imag().cast<Complex>();
    r.hess_ = hess_.imag().cast<Complex>();
    return r;
}

}  // namespace minimorph
