#include "minimorph/polyops.hpp"

#include "minimorph/errors.hpp"

namespace minimorph {

namespace {

void check_dims(const MultiPoly& p, const MetricSignature& sig) {
    if (p.n_vars() != sig.dimension)
        throw DimensionMismatch("polynomial and signature dimensions differ");
}

}  // namespace

MultiPoly poly_tension(const MultiPoly& p, const MetricSignature& sig) {
    check_dims(p, sig);
    MultiPoly acc(p.n_vars());
    for (int k = 0; k < p.n_vars(); ++k) {
        MultiPoly dd = p.derivative(k).derivative(k);
        if (sig.weight_int(k) < 0)
            acc -= dd;
        else
            acc += dd;
    }
    return acc;
}

MultiPoly poly_conformality(const MultiPoly& p, const MultiPoly& q, const MetricSignature& sig) {
    check_dims(p, sig);
    check_dims(q, sig);
    MultiPoly acc(p.n_vars());
    for (int k = 0; k < p.n_vars(); ++k) {
        MultiPoly prod = p.derivative(k) * q.derivative(k);
        if (sig.weight_int(k) < 0)
            acc -= prod;
        else
            acc += prod;
    }
    return acc;
}

MultiPoly ratfn_tension_num(const RationalFn& r, const MetricSignature& sig) {
    const MultiPoly& P = r.num();
    const MultiPoly& Q = r.den();
    MultiPoly Q2 = Q * Q;
    return poly_tension(P, sig) * Q2 - GaussRat(2) * (poly_conformality(P, Q, sig) * Q) -
           P * poly_tension(Q, sig) * Q + GaussRat(2) * (P * poly_conformality(Q, Q, sig));
}

MultiPoly ratfn_conf_num(const RationalFn& r, const MetricSignature& sig) {
    const MultiPoly& P = r.num();
    const MultiPoly& Q = r.den();
    return poly_conformality(P, P, sig) * (Q * Q) -
           GaussRat(2) * (P * Q * poly_conformality(P, Q, sig)) +
           P * P * poly_conformality(Q, Q, sig);
}

EigenReport verify_eigen_pair(const MultiPoly& p, const MultiPoly& q, const GaussRat& lambda,
                              const GaussRat& mu, const MetricSignature& sig) {
    EigenReport rep;
    rep.lambda = lambda;
    rep.mu = mu;

    const std::pair<std::string, MultiPoly> residuals[] = {
        {"tension(p) - lambda*p", poly_tension(p, sig) - lambda * p},
        {"tension(q) - lambda*q", poly_tension(q, sig) - lambda * q},
        {"conf(p,p) - mu*p^2", poly_conformality(p, p, sig) - mu * (p * p)},
        {"conf(p,q) - mu*p*q", poly_conformality(p, q, sig) - mu * (p * q)},
        {"conf(q,q) - mu*q^2", poly_conformality(q, q, sig) - mu * (q * q)},
    };
    for (const auto& [name, res] : residuals) {
        if (!res.is_zero()) {
            rep.holds = false;
            rep.witness = res;
            rep.witness_name = name;
            return rep;
        }
    }
    rep.holds = true;
    return rep;
}

MultiPoly dualize(const MultiPoly& p) {
    const int last = p.n_vars() - 1;
    MultiPoly r(p.n_vars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.times_i_pow(e[last]));
    return r;
}

}  // namespace minimorph
