#pragma once

#include <optional>
#include <string>

#include "minimorph/metric.hpp"
#include "minimorph/poly.hpp"

namespace minimorph {

/// Outcome of checking tau(phi) = lambda*phi, kappa(phi,psi) = mu*phi*psi
/// for a pair of polynomials.
struct EigenReport {
    GaussRat lambda, mu;
    bool holds = false;
    std::optional<MultiPoly> witness;  // first nonzero residual, if any
    std::string witness_name;          // which residual failed
};

/// Signature-weighted sum of pure second partials, exact.
MultiPoly poly_tension(const MultiPoly& p, const MetricSignature& sig);

/// Signature-weighted sum of products of first partials, exact.
/// Symmetric in (p, q).
MultiPoly poly_conformality(const MultiPoly& p, const MultiPoly& q, const MetricSignature& sig);

/// Numerator N of tau(P/Q) = N / Q^3 away from the zero set of Q:
///   N = tau(P) Q^2 - 2 kappa(P,Q) Q - P tau(Q) Q + 2 P kappa(Q,Q).
MultiPoly ratfn_tension_num(const RationalFn& r, const MetricSignature& sig);

/// Numerator M of kappa(P/Q, P/Q) = M / Q^4 away from the zero set of Q:
///   M = kappa(P,P) Q^2 - 2 P Q kappa(P,Q) + P^2 kappa(Q,Q).
MultiPoly ratfn_conf_num(const RationalFn& r, const MetricSignature& sig);

EigenReport verify_eigen_pair(const MultiPoly& p, const MultiPoly& q, const GaussRat& lambda,
                              const GaussRat& mu, const MetricSignature& sig);

/// Substitute x_n -> i*x_n in the last variable: each coefficient picks up
/// i^e where e is the last exponent.  Exchanges Euclidean and Lorentzian
/// harmonicity/conformality.
MultiPoly dualize(const MultiPoly& p);

}  // namespace minimorph
