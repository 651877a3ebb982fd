#include "minimorph/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minimorph/errors.hpp"

namespace minimorph {

MultiPoly::MultiPoly(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw DimensionMismatch("MultiPoly needs at least one variable");
}

MultiPoly MultiPoly::constant(int n_vars, const GaussRat& c) {
    MultiPoly p(n_vars);
    p.add_term(ExpVec(n_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n_vars, int k) {
    if (k < 0 || k >= n_vars) throw DimensionMismatch("variable index out of range");
    ExpVec e(n_vars, 0);
    e[k] = 1;
    return monomial(n_vars, std::move(e), GaussRat(1));
}

MultiPoly MultiPoly::monomial(int n_vars, ExpVec exp, const GaussRat& c) {
    if (static_cast<int>(exp.size()) != n_vars)
        throw DimensionMismatch("exponent vector length != n_vars");
    MultiPoly p(n_vars);
    p.add_term(exp, c);
    return p;
}

GaussRat MultiPoly::coeff(const ExpVec& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? GaussRat(0) : it->second;
}

void MultiPoly::add_term(const ExpVec& exp, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_vars_ != o.n_vars_) throw DimensionMismatch("polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (n_vars_ != o.n_vars_) throw DimensionMismatch("polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_vars_ != b.n_vars_) throw DimensionMismatch("polynomial variable counts differ");
    MultiPoly r(a.n_vars_);
    ExpVec e(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.n_vars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const GaussRat& c, const MultiPoly& p) {
    MultiPoly r(p.n_vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = one(n_vars_);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        if (e >>= 1u) base = base * base;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(int k) const {
    if (k < 0 || k >= n_vars_) throw DimensionMismatch("derivative index out of range");
    MultiPoly r(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        ExpVec de = e;
        de[k] -= 1;
        r.add_term(de, GaussRat(static_cast<long>(e[k])) * c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != n_vars_)
        throw DimensionMismatch("substitute: one image per variable required");
    const int m = images.empty() ? 1 : images[0].n_vars();
    for (const auto& im : images)
        if (im.n_vars() != m) throw DimensionMismatch("substitute: images in different spaces");
    MultiPoly r(m);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(m, c);
        for (int k = 0; k < n_vars_; ++k)
            if (e[k] > 0) term = term * images[k].pow(e[k]);
        r += term;
    }
    return r;
}

std::complex<double> MultiPoly::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_vars_) throw DimensionMismatch("eval: wrong point size");
    std::complex<double> acc = 0;
    for (const auto& [e, c] : terms_) {
        double mono = 1;
        for (int k = 0; k < n_vars_; ++k)
            for (unsigned j = 0; j < e[k]; ++j) mono *= x[k];
        acc += c.to_complex() * mono;
    }
    return acc;
}

std::complex<double> MultiPoly::eval_c(std::span<const std::complex<double>> x) const {
    if (static_cast<int>(x.size()) != n_vars_) throw DimensionMismatch("eval: wrong point size");
    std::complex<double> acc = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> mono = 1;
        for (int k = 0; k < n_vars_; ++k)
            for (unsigned j = 0; j < e[k]; ++j) mono *= x[k];
        acc += c.to_complex() * mono;
    }
    return acc;
}

GaussRat MultiPoly::eval_exact(std::span<const GaussRat> x) const {
    if (static_cast<int>(x.size()) != n_vars_) throw DimensionMismatch("eval: wrong point size");
    GaussRat acc(0);
    for (const auto& [e, c] : terms_) {
        GaussRat mono(1);
        for (int k = 0; k < n_vars_; ++k)
            if (e[k] > 0) mono *= x[k].pow(e[k]);
        acc += c * mono;
    }
    return acc;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return deg;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k = 0; k < n_vars_; ++k) {
            if (e[k] == 0) continue;
            os << "*x" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
        }
    }
    return os.str();
}

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.n_vars() != den_.n_vars())
        throw DimensionMismatch("rational function parts in different spaces");
    if (den_.is_zero()) throw DegenerateParameters("zero denominator polynomial");
}

std::complex<double> RationalFn::eval(std::span<const double> x) const {
    return num_.eval(x) / den_.eval(x);
}

std::string RationalFn::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

}  // namespace minimorph
