#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minimorph/rational.hpp"

namespace minimorph {

/// Exponent vector of a monomial, one entry per variable.
using ExpVec = std::vector<unsigned>;

/// Exact multivariate polynomial over Gaussian rationals.
/// Terms are kept in a sorted map keyed by exponent vector, zero
/// coefficients are never stored, so equality is structural.
class MultiPoly {
public:
    explicit MultiPoly(int n_vars);

    static MultiPoly zero(int n_vars) { return MultiPoly(n_vars); }
    static MultiPoly constant(int n_vars, const GaussRat& c);
    static MultiPoly one(int n_vars) { return constant(n_vars, GaussRat(1)); }
    /// x_k (0-based index).
    static MultiPoly variable(int n_vars, int k);
    static MultiPoly monomial(int n_vars, ExpVec exp, const GaussRat& c);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<ExpVec, GaussRat>& terms() const { return terms_; }

    /// Coefficient of a monomial (zero if absent).
    GaussRat coeff(const ExpVec& exp) const;

    void add_term(const ExpVec& exp, const GaussRat& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const GaussRat& c, const MultiPoly& p);
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const {
        return n_vars_ == o.n_vars_ && terms_ == o.terms_;
    }

    /// d/dx_k, exact.
    MultiPoly derivative(int k) const;

    /// Substitute every variable x_k by images[k]; the images all live in a
    /// common variable space, which becomes the result's space.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    std::complex<double> eval(std::span<const double> x) const;
    std::complex<double> eval_c(std::span<const std::complex<double>> x) const;
    GaussRat eval_exact(std::span<const GaussRat> x) const;

    int total_degree() const;  // -1 for the zero polynomial
    /// Degree if every term has the same total degree, nullopt otherwise.
    std::optional<int> homogeneous_degree() const;

    std::string str() const;

private:
    int n_vars_;
    std::map<ExpVec, GaussRat> terms_;
};

/// Quotient of two exact polynomials; the denominator is nonzero.
class RationalFn {
public:
    RationalFn(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int n_vars() const { return num_.n_vars(); }

    std::complex<double> eval(std::span<const double> x) const;

    std::string str() const;

private:
    MultiPoly num_, den_;
};

}  // namespace minimorph
