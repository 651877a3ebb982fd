#include "minimorph/rational.hpp"

#include <sstream>

namespace minimorph {

GaussRat GaussRat::ratio(long num, long den, long inum, long iden) {
    mpq_class re(num, den), im(inum, iden);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    mpq_class n2 = o.norm2();
    if (n2 == 0) throw std::domain_error("GaussRat: division by zero");
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n2;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat GaussRat::pow(unsigned e) const {
    GaussRat acc(1);
    GaussRat base = *this;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

GaussRat GaussRat::times_i_pow(unsigned e) const {
    switch (e % 4) {
        case 0: return *this;
        case 1: return {mpq_class(-im_), re_};
        case 2: return -*this;
        default: return {im_, mpq_class(-re_)};
    }
}

std::optional<mpq_class> sqrt_rational_exact(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);  // already in lowest terms
}

std::optional<GaussRat> GaussRat::sqrt_exact() const {
    if (im_ == 0) {
        if (re_ >= 0) {
            auto r = sqrt_rational_exact(re_);
            if (!r) return std::nullopt;
            return GaussRat(*r);
        }
        auto r = sqrt_rational_exact(mpq_class(-re_));
        if (!r) return std::nullopt;
        return GaussRat(mpq_class(0), *r);
    }
    // w = u + v i with u^2 - v^2 = re, 2uv = im.  Then u^2 = (|z| + re)/2.
    auto mod = sqrt_rational_exact(norm2());
    if (!mod) return std::nullopt;
    mpq_class u2 = (*mod + re_) / 2;
    auto u = sqrt_rational_exact(u2);
    if (!u || *u == 0) return std::nullopt;
    mpq_class v = im_ / (2 * (*u));
    // u > 0 here, so this is the principal root.
    GaussRat w(*u, v);
    if (!(w * w == *this)) return std::nullopt;  // guards imperfect |z|
    return w;
}

std::string GaussRat::str() const {
    std::ostringstream os;
    if (im_ == 0) {
        os << re_;
    } else if (re_ == 0) {
        os << im_ << "*i";
    } else {
        os << re_ << (im_ > 0 ? "+" : "") << im_ << "*i";
    }
    return os.str();
}

}  // namespace minimorph
