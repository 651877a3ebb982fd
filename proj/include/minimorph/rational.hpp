#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace minimorph {

/// Exact Gaussian rational a + b*i with mpq components.
/// Denominators stay positive and in lowest terms (mpq canonical form);
/// no operation ever rounds.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}                       // NOLINT(google-explicit-constructor)
    GaussRat(const mpq_class& re) : re_(re), im_(0) {}         // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return {mpq_class(0), mpq_class(1)}; }

    /// num/den + (inum/iden) i, canonicalized.
    static GaussRat ratio(long num, long den, long inum = 0, long iden = 1);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
    GaussRat conj() const { return {re_, mpq_class(-im_)}; }

    /// |z|^2 = re^2 + im^2, exact.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }

    GaussRat pow(unsigned e) const;

    /// Multiply by i^e (used by the Euclidean <-> Lorentzian substitution).
    GaussRat times_i_pow(unsigned e) const;

    /// Principal square root if it is again a Gaussian rational:
    /// Re >= 0, and Im >= 0 when Re == 0. nullopt otherwise.
    std::optional<GaussRat> sqrt_exact() const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Compact exact rendering, e.g. "16/5*i", "3-2*i".
    std::string str() const;

private:
    mpq_class re_, im_;
};

/// sqrt of a non-negative rational when exactly representable.
std::optional<mpq_class> sqrt_rational_exact(const mpq_class& q);

}  // namespace minimorph
