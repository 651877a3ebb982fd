#include "minimorph/fibergeo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "minimorph/errors.hpp"

namespace minimorph {

namespace {

Eigen::VectorXd to_eigen(std::span<const double> x) {
    return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

PointR to_point(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

void axpy(PointR& v, double a, const PointR& w) {
    for (size_t k = 0; k < v.size(); ++k) v[k] += a * w[k];
}

/// Align the child frame to the parent's by the orthogonal 2x2 mix that
/// maximizes their inner-product overlap (orthogonal Procrustes).
void align_frames(const FiberSample& parent, FiberSample& child, const MetricSignature& sig,
                  double& overlap_min) {
    auto align_pair = [&](const std::array<PointR, 2>& P, std::array<PointR, 2>& C, bool track) {
        Eigen::Matrix2d M;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) M(a, b) = sig.inner(C[a], P[b]);
        Eigen::JacobiSVD<Eigen::Matrix2d> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const Eigen::Matrix2d R = svd.matrixU() * svd.matrixV().transpose();
        std::array<PointR, 2> out{PointR(C[0].size(), 0.0), PointR(C[0].size(), 0.0)};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) axpy(out[a], R(b, a), C[b]);
        C = out;
        if (track)
            for (int a = 0; a < 2; ++a) overlap_min = std::min(overlap_min, sig.inner(C[a], P[a]));
    };
    align_pair(parent.tangent, child.tangent, true);
    align_pair(parent.normal, child.normal, false);
}

}  // namespace

FiberProblem::FiberProblem(const MorphismSpec& spec, Complex alpha) {
    if (alpha == Complex(0.0, 0.0))
        throw AlphaZero("alpha must be nonzero; 0 is the critical value");
    if (!spec.ambient.curved())
        throw ConstraintViolation("fiber problems need a Sphere or Hyperbolic spec");
    if (spec.ambient.dimension != 5)
        throw DimensionMismatch("fiber tracing is implemented for ambient dimension 5");

    sig_ = spec.ambient.metric();
    dim_ = spec.ambient.dimension;
    name_ = spec.name;
    alpha_ = alpha;
    const double target = sig_.lorentzian ? -1.0 : 1.0;
    const ScalarField field = spec.field;
    const MetricSignature sig = sig_;

    residual_ = [field, alpha, sig, target](const Eigen::VectorXd& x) {
        const std::span<const double> xs(x.data(), static_cast<size_t>(x.size()));
        const Complex v = field.eval_raw(xs).value() - alpha;
        Eigen::Vector3d r;
        r << v.real(), v.imag(), sig.norm2(xs) - target;
        return r;
    };
    jacobian_ = [field, sig](const Eigen::VectorXd& x) {
        const std::span<const double> xs(x.data(), static_cast<size_t>(x.size()));
        const Jet2 jet = field.eval_raw(xs);
        Eigen::Matrix<double, 3, Eigen::Dynamic> J(3, x.size());
        for (Eigen::Index k = 0; k < x.size(); ++k) {
            J(0, k) = jet.gradient()(k).real();
            J(1, k) = jet.gradient()(k).imag();
            J(2, k) = 2.0 * sig.weight(static_cast<int>(k)) * x(k);
        }
        return J;
    };
    const DomainPredicate dom = spec.domain;
    domain_ = [dom](std::span<const double> x) { return dom.contains(x); };
}

FiberProblem FiberProblem::torus_control(double c1, double c) {
    if (!(c > 0.0) || !(c1 * c1 + c < 1.0))
        throw DegenerateParameters("torus control needs c > 0 and c1^2 + c < 1");
    FiberProblem prob;
    prob.sig_ = MetricSignature::euclidean(5);
    prob.dim_ = 5;
    prob.name_ = "torus-control";
    prob.control_ = true;
    prob.residual_ = [c1, c](const Eigen::VectorXd& x) {
        Eigen::Vector3d r;
        r << x(0) - c1, x(1) * x(1) + x(2) * x(2) - c, x.squaredNorm() - 1.0;
        return r;
    };
    prob.jacobian_ = [](const Eigen::VectorXd& x) {
        Eigen::Matrix<double, 3, Eigen::Dynamic> J(3, x.size());
        J.setZero();
        J(0, 0) = 1.0;
        J(1, 1) = 2.0 * x(1);
        J(1, 2) = 2.0 * x(2);
        for (Eigen::Index k = 0; k < x.size(); ++k) J(2, k) = 2.0 * x(k);
        return J;
    };
    prob.domain_ = [](std::span<const double> x) {
        for (double v : x)
            if (!std::isfinite(v)) return false;
        return true;
    };
    return prob;
}

Eigen::Vector3d FiberProblem::residual(const Eigen::VectorXd& x) const { return residual_(x); }

Eigen::Matrix<double, 3, Eigen::Dynamic> FiberProblem::jacobian(const Eigen::VectorXd& x) const {
    return jacobian_(x);
}

bool FiberProblem::in_domain(std::span<const double> x) const { return domain_(x); }

FiberSample project_to_fiber(const FiberProblem& prob, const PointR& seed,
                             const NewtonConfig& cfg) {
    if (static_cast<int>(seed.size()) != prob.dim())
        throw DimensionMismatch("seed dimension does not match the problem");
    require_finite(seed);

    Eigen::VectorXd x = to_eigen(seed);
    Eigen::Vector3d r = prob.residual(x);
    if (!r.allFinite()) throw NoConvergence("residual is not finite at the seed");
    double rn = r.norm();

    for (int iter = 0; iter < cfg.max_iter && rn > cfg.tol; ++iter) {
        const Eigen::MatrixXd J = prob.jacobian(x);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd step = svd.solve(r);
        double mu = 1.0;
        bool accepted = false;
        while (mu >= 1e-14) {
            const Eigen::VectorXd xn = x - mu * step;
            const Eigen::Vector3d rv = prob.residual(xn);
            const double rn_new =
                rv.allFinite() ? rv.norm() : std::numeric_limits<double>::infinity();
            if (rn_new < rn || rn_new <= cfg.tol) {
                x = xn;
                r = rv;
                rn = rn_new;
                accepted = true;
                break;
            }
            mu *= cfg.damping;
        }
        if (!accepted) break;
    }
    if (!(rn <= cfg.tol))
        throw NoConvergence("Gauss-Newton stalled at residual " + std::to_string(rn) + " for " +
                            prob.name());

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(prob.jacobian(x));
    const double smin = svd.singularValues()(2);
    if (smin < cfg.min_singular_value)
        throw ConvergedToCritical("residual Jacobian nearly rank-deficient at the solution");

    PointR pt = to_point(x);
    if (!prob.in_domain(pt)) throw NoConvergence("solution left the domain predicate");
    auto [tans, nors] = tangent_frame(prob, pt, cfg);
    FiberSample out;
    out.point = std::move(pt);
    out.residual_norm = rn;
    out.tangent = std::move(tans);
    out.normal = std::move(nors);
    out.min_singular_value = smin;
    return out;
}

std::pair<std::array<PointR, 2>, std::array<PointR, 2>> tangent_frame(const FiberProblem& prob,
                                                                      const PointR& x,
                                                                      const NewtonConfig& cfg) {
    const MetricSignature& sig = prob.sig();
    const Eigen::MatrixXd J = prob.jacobian(to_eigen(x));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
    if (svd.singularValues()(2) < cfg.min_singular_value)
        throw RankDeficient("residual Jacobian has rank < 3");
    const Eigen::MatrixXd V = svd.matrixV();

    auto normalize = [&](PointR& v) {
        const double q = sig.norm2(v);
        // Null directions of fiber Jacobians are spacelike on both the
        // sphere and the hyperboloid; a non-positive square signals a
        // degenerate configuration.
        if (!(q > 1e-14)) throw RankDeficient("frame vector has non-positive square norm");
        const double inv = 1.0 / std::sqrt(q);
        for (double& c : v) c *= inv;
    };

    PointR t1 = to_point(V.col(3));
    PointR t2 = to_point(V.col(4));
    normalize(t1);
    axpy(t2, -sig.inner(t2, t1), t1);
    normalize(t2);

    const double gxx = sig.norm2(x);
    if (std::abs(gxx) < 0.5)
        throw RankDeficient("point is too far from the hypersurface for a frame");
    std::array<PointR, 2> normals{PointR(x.size(), 0.0), PointR(x.size(), 0.0)};
    int found = 0;
    for (size_t k = 0; k < x.size() && found < 2; ++k) {
        PointR u(x.size(), 0.0);
        u[k] = 1.0;
        axpy(u, -sig.inner(u, x) / gxx, x);
        axpy(u, -sig.inner(u, t1), t1);
        axpy(u, -sig.inner(u, t2), t2);
        for (int j = 0; j < found; ++j) axpy(u, -sig.inner(u, normals[j]), normals[j]);
        const double q = sig.norm2(u);
        if (q > 1e-10) {
            const double inv = 1.0 / std::sqrt(q);
            for (double& c : u) c *= inv;
            normals[found++] = std::move(u);
        }
    }
    if (found < 2) throw RankDeficient("could not span the normal space");
    return {std::array<PointR, 2>{std::move(t1), std::move(t2)}, std::move(normals)};
}

int SurfacePatch::count() const {
    int c = 0;
    for (const auto& n : nodes) c += n.has_value() ? 1 : 0;
    return c;
}

SurfacePatch trace_patch(const FiberProblem& prob, const FiberSample& base,
                         std::pair<int, int> steps, double h, const NewtonConfig& cfg) {
    const auto [si, sj] = steps;
    if (si < 1 || sj < 1) throw DimensionMismatch("grid extents must be positive");
    if (!(h > 0.0) || h > 0.1) throw DomainViolation("h out of range (0, 0.1]");

    SurfacePatch patch;
    patch.si = si;
    patch.sj = sj;
    patch.ci = (si - 1) / 2;
    patch.cj = (sj - 1) / 2;
    patch.h = h;
    patch.spec_name = prob.name();
    patch.alpha = prob.alpha();
    patch.seed_point = base.point;
    patch.hyperbolic = prob.hyperbolic();
    patch.nodes.assign(static_cast<size_t>(si) * static_cast<size_t>(sj), std::nullopt);

    const MetricSignature& sig = prob.sig();
    auto try_extend = [&](const FiberSample& parent, int axis,
                          double sign) -> std::optional<FiberSample> {
        const PointR& t = parent.tangent[static_cast<size_t>(axis)];
        double tnorm2 = 0.0;
        for (double c : t) tnorm2 += c * c;
        const double pred_len = h * std::sqrt(tnorm2);
        PointR pred = parent.point;
        axpy(pred, sign * h, t);
        try {
            FiberSample child = project_to_fiber(prob, pred, cfg);
            double d2 = 0.0;
            for (size_t k = 0; k < pred.size(); ++k) {
                const double dk = child.point[k] - parent.point[k];
                d2 += dk * dk;
            }
            // Adjacency bound: corrected nodes must stay within twice the
            // predictor displacement of the node they extend.  Tangents
            // are unit for the ambient signature, so their Euclidean
            // length, and with it the displacement, grows far out on the
            // hyperboloid.
            if (std::sqrt(d2) > 2.0 * pred_len) return std::nullopt;
            align_frames(parent, child, sig, patch.min_frame_overlap);
            return child;
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    patch.at(patch.ci, patch.cj) = base;
    for (int i = patch.ci + 1; i < si; ++i) {
        const auto& parent = patch.at(i - 1, patch.cj);
        auto child = try_extend(*parent, 0, 1.0);
        if (!child) {
            patch.truncated = true;
            break;
        }
        patch.at(i, patch.cj) = std::move(*child);
    }
    for (int i = patch.ci - 1; i >= 0; --i) {
        const auto& parent = patch.at(i + 1, patch.cj);
        auto child = try_extend(*parent, 0, -1.0);
        if (!child) {
            patch.truncated = true;
            break;
        }
        patch.at(i, patch.cj) = std::move(*child);
    }
    for (int i = 0; i < si; ++i) {
        if (!patch.at(i, patch.cj)) continue;
        for (int j = patch.cj + 1; j < sj; ++j) {
            const auto& parent = patch.at(i, j - 1);
            auto child = try_extend(*parent, 1, 1.0);
            if (!child) {
                patch.truncated = true;
                break;
            }
            patch.at(i, j) = std::move(*child);
        }
        for (int j = patch.cj - 1; j >= 0; --j) {
            const auto& parent = patch.at(i, j + 1);
            auto child = try_extend(*parent, 1, -1.0);
            if (!child) {
                patch.truncated = true;
                break;
            }
            patch.at(i, j) = std::move(*child);
        }
    }
    return patch;
}

std::pair<PointR, double> mean_curvature(const FiberProblem& prob, const FiberSample& s, double h,
                                         const NewtonConfig& cfg) {
    if (!(h > 0.0)) throw DomainViolation("curvature step h must be positive");
    const MetricSignature& sig = prob.sig();
    std::array<double, 2> coef{0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        PointR xp = s.point;
        PointR xm = s.point;
        axpy(xp, h, s.tangent[static_cast<size_t>(i)]);
        axpy(xm, -h, s.tangent[static_cast<size_t>(i)]);
        const FiberSample sp = project_to_fiber(prob, xp, cfg);
        const FiberSample sm = project_to_fiber(prob, xm, cfg);
        PointR dd(s.point.size());
        for (size_t k = 0; k < dd.size(); ++k)
            dd[k] = (sp.point[k] + sm.point[k] - 2.0 * s.point[k]) / (h * h);
        for (size_t j = 0; j < 2; ++j) coef[j] += 0.5 * sig.inner(dd, s.normal[j]);
    }
    PointR vec(s.point.size(), 0.0);
    for (size_t j = 0; j < 2; ++j) axpy(vec, coef[j], s.normal[j]);
    // The normal pair is orthonormal and spacelike under the ambient inner
    // product, so the coefficient square sum is the metric norm.
    const double norm = std::sqrt(coef[0] * coef[0] + coef[1] * coef[1]);
    return {std::move(vec), norm};
}

CurvatureReport curvature_report(const FiberProblem& prob, SurfacePatch& patch, double h,
                                 double tol, const NewtonConfig& cfg) {
    CurvatureReport rep;
    rep.h = h;
    rep.tol = tol;
    double sum = 0.0;
    for (auto& node : patch.nodes) {
        if (!node) continue;
        try {
            const auto [vec, norm] = mean_curvature(prob, *node, h, cfg);
            node->mean_curvature_norm = norm;
            rep.samples += 1;
            sum += norm;
            rep.max_norm = std::max(rep.max_norm, norm);
        } catch (const Error&) {
            rep.failed_nodes += 1;
        }
    }
    if (rep.samples > 0) rep.mean_norm = sum / rep.samples;
    rep.verdict = rep.samples > 0 && rep.failed_nodes == 0 && rep.max_norm <= tol;
    return rep;
}

CriticalScanReport critical_scan(const MorphismSpec& spec, int n_samples, std::uint64_t seed,
                                 double zero_tol) {
    if (spec.ambient.dimension != 5 || !spec.quintuple)
        throw ConstraintViolation("critical scan needs an R^5 quadric spec");
    CriticalScanReport rep;
    rep.seed = seed;
    rep.det_certificate_available = spec.quintuple->regular();
    rep.det_value = criticality_det(*spec.quintuple).to_complex();

    const DomainPredicate& dom = spec.field.domain();
    auto formula_ok = [&](const PointR& x) {
        for (const MultiPoly& p : dom.excluded_zeros)
            if (std::abs(p.eval(x)) < 0.05) return false;
        for (const MultiPoly& p : dom.branch_cuts) {
            const Complex v = p.eval(x);
            if (std::abs(v) < 0.05) return false;
            if (v.real() <= 0.05 && std::abs(v.imag()) <= 0.05) return false;
        }
        return true;
    };

    Sampler sampler(seed);
    long attempts = 0;
    const long max_attempts = 1000L * std::max(n_samples, 1);
    while (rep.samples_off_plane < n_samples && attempts < max_attempts) {
        ++attempts;
        const PointR x = sampler.box(5, 1.0);
        if (std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) < 0.1) continue;
        if (!formula_ok(x)) continue;
        const Jet2 jet = spec.field.eval_raw(x);
        if (!jet.finite()) continue;
        const double gn = jet.gradient().norm();
        rep.samples_off_plane += 1;
        rep.min_grad_off_plane = std::min(rep.min_grad_off_plane, gn);
        if (gn <= zero_tol) rep.violations += 1;
    }

    for (int k = 0; k < 100; ++k) {
        const double theta = 2.0 * std::numbers::pi * (k + 0.37) / 100.0;
        const PointR x{0.0, 0.0, 0.0, std::cos(theta), std::sin(theta)};
        if (!formula_ok(x)) continue;
        const Jet2 jet = spec.field.eval_raw(x);
        rep.samples_on_plane += 1;
        rep.max_grad_on_plane = std::max(rep.max_grad_on_plane, jet.gradient().norm());
        rep.max_value_on_plane = std::max(rep.max_value_on_plane, std::abs(jet.value()));
    }
    return rep;
}

CompactnessReport compactness_diagnostic(const SurfacePatch& patch) {
    CompactnessReport rep;
    rep.sphere_case = !patch.hyperbolic;
    rep.samples = patch.count();
    if (rep.samples == 0) {
        rep.verdict = "insufficient data";
        return rep;
    }
    const MetricSignature sig =
        patch.hyperbolic ? MetricSignature::lorentz(5) : MetricSignature::euclidean(5);
    const double target = patch.hyperbolic ? -1.0 : 1.0;

    std::vector<const FiberSample*> present;
    present.reserve(patch.nodes.size());
    for (const auto& node : patch.nodes)
        if (node) present.push_back(&*node);
    for (const FiberSample* s : present) {
        rep.max_constraint_violation =
            std::max(rep.max_constraint_violation, std::abs(sig.norm2(s->point) - target));
        for (double v : s->point) rep.max_coordinate = std::max(rep.max_coordinate, std::abs(v));
    }

    if (rep.sphere_case) {
        for (size_t a = 0; a < present.size(); ++a) {
            for (size_t b = a + 1; b < present.size(); ++b) {
                double d2 = 0.0;
                for (size_t k = 0; k < present[a]->point.size(); ++k) {
                    const double dk = present[a]->point[k] - present[b]->point[k];
                    d2 += dk * dk;
                }
                rep.diameter = std::max(rep.diameter, std::sqrt(d2));
            }
        }
        rep.verdict = rep.max_constraint_violation <= 1e-9 ? "bounded" : "growth-monitored";
        rep.note = "all samples lie on the unit sphere, so the surface is bounded";
        return rep;
    }

    const int rings = std::max(std::max(patch.ci, patch.si - 1 - patch.ci),
                               std::max(patch.cj, patch.sj - 1 - patch.cj));
    rep.ray_growth.assign(static_cast<size_t>(rings) + 1, 0.0);
    for (int i = 0; i < patch.si; ++i) {
        for (int j = 0; j < patch.sj; ++j) {
            const auto& node = patch.at(i, j);
            if (!node) continue;
            const int r = std::max(std::abs(i - patch.ci), std::abs(j - patch.cj));
            double m = 0.0;
            for (double v : node->point) m = std::max(m, std::abs(v));
            auto& slot = rep.ray_growth[static_cast<size_t>(r)];
            slot = std::max(slot, m);
        }
    }
    rep.monotone_growth = true;
    for (size_t r = 1; r < rep.ray_growth.size(); ++r)
        if (rep.ray_growth[r] + 1e-12 < rep.ray_growth[r - 1]) rep.monotone_growth = false;
    rep.boundary_hit = patch.truncated;
    rep.verdict = "growth-monitored";
    rep.note = "hyperbolic case: coordinate growth is a diagnostic, not a completeness certificate";
    return rep;
}

}  // namespace minimorph
