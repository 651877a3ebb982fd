#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minimorph/fibergeo.hpp"
#include "minimorph/morphisms.hpp"
#include "minimorph/serialize.hpp"
#include "minimorph/variety.hpp"

namespace minimorph {

/// Schema version stamped into every JSON artifact.
inline constexpr const char* kReportVersion = "1";

/// Shared configuration for all commands.  Every tolerance and step is
/// configuration, not a constant; the seed is recorded in every artifact
/// so reports are reproducible from their header alone.
struct RunConfig {
    std::uint64_t seed = kCertificationSeed;
    double zero_tol = 1e-10;      // slack for identities that hold exactly
    double cert_tol = 1e-9;       // sampled harmonic-morphism certification
    double pullback_tol = 1e-8;   // tension of h(phi) for harmonic h
    double newton_tol = 1e-12;    // Gauss-Newton convergence
    double curvature_tol = 5e-4;  // max mean-curvature norm for minimality
    double fd_h = 1e-3;           // curvature finite-difference step
    double step_h = 0.02;         // continuation step along the fiber
    int grid_i = 21;              // patch extents
    int grid_j = 21;
    int cert_points = 200;
    int pullback_points = 100;
    int scan_points = 10000;
    bool timing = false;  // timing fields are excluded from the determinism contract
    std::string out_dir = ".";

    /// Throws DegenerateParameters unless every tolerance, step and count
    /// is positive.
    void validate() const;

    NewtonConfig newton() const { return {newton_tol, 100, 0.5, 1e-8}; }

    /// Default config with the MINIMORPH_SEED environment override applied.
    static RunConfig from_env();

    Json to_json() const;
};

enum class Verdict { pass, fail, skipped };
std::string verdict_str(Verdict v);

/// One named check inside a report.  `identity` states, in words, which
/// equation or property was tested; `residual` is the largest deviation
/// observed (0 for exact checks).
struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::fail;
    double residual = 0.0;
    std::string identity;
    std::string detail;
};

struct Report {
    std::string command;
    RunConfig config;
    std::vector<CheckResult> checks;
    std::vector<std::string> artifacts;  // files written while running
    Json extra = Json::object();         // command-specific payload
    double elapsed_seconds = -1.0;       // filled only when config.timing

    /// True iff every non-skipped check passed.
    bool passed() const;

    Json to_json() const;
};

void write_report(const Report& rep, const std::string& path);

enum class VerifyMode { automatic, exact, numeric };

/// Full identity suite for one catalog entry: harmonic-morphism residuals
/// (exact when available and requested, sampled otherwise), radial
/// invariance for restrictions, and the pullback property for the five
/// harmonic test functions.
Report run_verify(const std::string& catalog_name, VerifyMode mode, const RunConfig& cfg);

/// Quadric coefficient point from free parameters: emits the quintuple,
/// its variety residuals, the regularity flag and the criticality
/// determinant with its closed form.
Report run_variety(const GaussRat& b1, const GaussRat& b2, Branch branch, const RunConfig& cfg);

/// Seeds a point on the fiber phi = alpha, traces a grid patch, estimates
/// mean curvature, runs the compactness diagnostic, and writes PLY, CSV
/// and JSON artifacts into cfg.out_dir.
Report run_trace(const std::string& catalog_name, Complex alpha, const RunConfig& cfg);

/// Runs the whole acceptance suite and bundles it into one report.
Report run_report_all(const RunConfig& cfg);

/// The acceptance suite itself: one CheckResult per criterion, in a fixed
/// order, all driven by cfg.
std::vector<CheckResult> run_acceptance(const RunConfig& cfg);

/// Parse an exact Gaussian rational written as `a+bi` with rational
/// components, e.g. "3", "-4/5", "i", "2i", "1/2-3/4i".
GaussRat parse_gaussrat(const std::string& text);

/// Parse a complex number written as `a+bi` with decimal components,
/// e.g. "5i", "1.5", "-2+0.25i".
Complex parse_complex(const std::string& text);

}  // namespace minimorph
