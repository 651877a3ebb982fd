#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minimorph/morphisms.hpp"

namespace minimorph {

/// Level-set problem for one fiber: three real residuals
/// (Re(phi - alpha), Im(phi - alpha), hypersurface constraint) in five
/// unknowns.  Also covers the non-minimal torus control surface, which
/// swaps in its own residuals but reuses every downstream routine.
class FiberProblem {
public:
    FiberProblem(const MorphismSpec& spec, Complex alpha);

    /// Control surface {x1 = c1, x2^2+x3^2 = c} on S^4; its fibers are flat
    /// tori with known nonzero mean curvature, giving the curvature
    /// estimator a positive control.
    static FiberProblem torus_control(double c1, double c);

    Eigen::Vector3d residual(const Eigen::VectorXd& x) const;
    Eigen::Matrix<double, 3, Eigen::Dynamic> jacobian(const Eigen::VectorXd& x) const;

    const MetricSignature& sig() const { return sig_; }
    int dim() const { return dim_; }
    bool hyperbolic() const { return sig_.lorentzian; }
    bool in_domain(std::span<const double> x) const;
    const std::string& name() const { return name_; }
    Complex alpha() const { return alpha_; }
    bool is_control() const { return control_; }

private:
    FiberProblem() = default;

    std::function<Eigen::Vector3d(const Eigen::VectorXd&)> residual_;
    std::function<Eigen::Matrix<double, 3, Eigen::Dynamic>(const Eigen::VectorXd&)> jacobian_;
    std::function<bool(std::span<const double>)> domain_;
    MetricSignature sig_{};
    int dim_ = 5;
    std::string name_;
    Complex alpha_{};
    bool control_ = false;
};

/// One accepted point of the fiber with its frames.  Frames are
/// orthonormal under the ambient inner product (Lorentzian on the
/// hyperboloid, where the induced form is positive definite).
struct FiberSample {
    PointR point;
    double residual_norm = 0.0;
    std::array<PointR, 2> tangent;
    std::array<PointR, 2> normal;
    double mean_curvature_norm = std::numeric_limits<double>::quiet_NaN();
    double min_singular_value = 0.0;
};

struct NewtonConfig {
    double tol = 1e-12;
    int max_iter = 100;
    double damping = 0.5;
    double min_singular_value = 1e-8;
};

/// Gauss-Newton with a pseudoinverse step; the step is halved while the
/// residual norm increases.
FiberSample project_to_fiber(const FiberProblem& prob, const PointR& seed,
                             const NewtonConfig& cfg = {});

/// Orthonormal frames at a converged point: tangent = null space of the
/// residual Jacobian, normal = its complement inside the hypersurface
/// tangent space, both under the ambient inner product.
std::pair<std::array<PointR, 2>, std::array<PointR, 2>> tangent_frame(const FiberProblem& prob,
                                                                      const PointR& x,
                                                                      const NewtonConfig& cfg = {});

/// Grid of samples from predictor-corrector continuation.  Nodes that fail
/// to converge are left empty and `truncated` is set.
struct SurfacePatch {
    int si = 0, sj = 0;      // grid extents
    int ci = 0, cj = 0;      // index of the seed node
    double h = 0.0;
    std::string spec_name;
    Complex alpha{};
    PointR seed_point;
    bool hyperbolic = false;
    bool truncated = false;
    double min_frame_overlap = 1.0;
    std::vector<std::optional<FiberSample>> nodes;  // row-major, si*sj entries

    const std::optional<FiberSample>& at(int i, int j) const {
        return nodes[static_cast<size_t>(i) * static_cast<size_t>(sj) + static_cast<size_t>(j)];
    }
    std::optional<FiberSample>& at(int i, int j) {
        return nodes[static_cast<size_t>(i) * static_cast<size_t>(sj) + static_cast<size_t>(j)];
    }
    int count() const;
};

/// steps = grid extents (si, sj); the base sample sits at the center node.
/// h must lie in (0, 0.1].
SurfacePatch trace_patch(const FiberProblem& prob, const FiberSample& base,
                         std::pair<int, int> steps, double h, const NewtonConfig& cfg = {});

/// Second-difference estimate: step +-h along each tangent direction,
/// correct back to the fiber, project (x+ + x- - 2x)/h^2 onto the normal
/// pair and average over the two directions.  Discretization error is
/// O(h).
std::pair<PointR, double> mean_curvature(const FiberProblem& prob, const FiberSample& s, double h,
                                         const NewtonConfig& cfg = {});

struct CurvatureReport {
    int samples = 0;
    int failed_nodes = 0;
    double max_norm = 0.0;
    double mean_norm = 0.0;
    double h = 0.0;
    double tol = 0.0;
    bool verdict = false;  // max_norm <= tol and no failed nodes
};

/// Runs mean_curvature over every node, writing the norms back into the
/// patch samples.
CurvatureReport curvature_report(const FiberProblem& prob, SurfacePatch& patch, double h,
                                 double tol, const NewtonConfig& cfg = {});

struct CriticalScanReport {
    std::uint64_t seed = 0;
    int samples_off_plane = 0;
    int violations = 0;  // gradient numerically zero away from the plane
    double min_grad_off_plane = std::numeric_limits<double>::infinity();
    int samples_on_plane = 0;
    double max_grad_on_plane = 0.0;
    double max_value_on_plane = 0.0;
    bool det_certificate_available = false;  // quintuple regular
    Complex det_value{};
};

/// Samples the gradient of an R^5 quadric spec: away from the
/// (x4,x5)-plane the gradient must not vanish; on the punctured plane it
/// must vanish along with the value.
CriticalScanReport critical_scan(const MorphismSpec& spec, int n_samples, std::uint64_t seed,
                                 double zero_tol = 1e-10);

struct CompactnessReport {
    int samples = 0;
    std::string verdict;  // "bounded", "growth-monitored", "insufficient data"
    bool sphere_case = true;
    double diameter = 0.0;
    double max_constraint_violation = 0.0;
    double max_coordinate = 0.0;
    std::vector<double> ray_growth;  // max coordinate magnitude per ring
    bool monotone_growth = false;
    bool boundary_hit = false;
    std::string note;
};

/// Sphere case: membership plus diameter (boundedness witness).
/// Hyperbolic case: coordinate growth along rings from the seed node;
/// explicitly a diagnostic, not a completeness certificate.
CompactnessReport compactness_diagnostic(const SurfacePatch& patch);

}  // namespace minimorph
