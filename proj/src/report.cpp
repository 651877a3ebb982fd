#include "minimorph/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "minimorph/polyops.hpp"

namespace minimorph {

namespace {

mpq_class rational_token(const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty()) throw ParseError("empty rational component");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw ParseError("invalid rational component '" + tok + "'");
    q.canonicalize();
    return q;
}

struct ComplexTokens {
    std::string re, im;
    bool has_im = false;
};

/// Split "a+bi" at the last '+'/'-' that is neither the leading sign nor
/// part of a decimal exponent.
ComplexTokens split_complex(std::string s, bool allow_exponent) {
    std::erase(s, ' ');
    if (s.empty()) throw ParseError("empty complex literal");
    ComplexTokens t;
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        int split = -1;
        for (int k = static_cast<int>(s.size()) - 1; k >= 1; --k) {
            const char c = s[static_cast<size_t>(k)];
            if (c != '+' && c != '-') continue;
            const char prev = s[static_cast<size_t>(k - 1)];
            if (allow_exponent && (prev == 'e' || prev == 'E')) continue;
            split = k;
            break;
        }
        if (split < 0) {
            t.im = s;
        } else {
            t.re = s.substr(0, static_cast<size_t>(split));
            t.im = s.substr(static_cast<size_t>(split));
        }
        if (t.im.empty() || t.im == "+") t.im = "1";
        if (t.im == "-") t.im = "-1";
        t.has_im = true;
    } else {
        t.re = s;
    }
    return t;
}

double double_token(const std::string& tok) {
    if (tok.empty()) return 0.0;
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("invalid numeric component '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("trailing characters in numeric component '" + tok + "'");
    return v;
}

std::string sanitize_filename(std::string name) {
    for (char& c : name)
        if (c == ':' || c == ',' || c == '=' || c == '/') c = '_';
    return name;
}

CheckResult make_check(std::string name, bool ok, double residual, std::string identity,
                       std::string detail = "") {
    return {std::move(name), ok ? Verdict::pass : Verdict::fail, residual, std::move(identity),
            std::move(detail)};
}

CheckResult skipped_check(std::string name, std::string identity, std::string detail) {
    return {std::move(name), Verdict::skipped, 0.0, std::move(identity), std::move(detail)};
}

Json check_to_json(const CheckResult& c) {
    return Json{{"name", c.name},
                {"verdict", verdict_str(c.verdict)},
                {"residual", c.residual},
                {"identity", c.identity},
                {"detail", c.detail}};
}

Json spec_summary(const MorphismSpec& spec) {
    Json j{{"name", spec.name},
           {"ambient", spec.ambient.str()},
           {"degree", spec.degree},
           {"exact_form", spec.has_exact_form()},
           {"certification",
            Json{{"exact", spec.certification.exact},
                 {"passed", spec.certification.passed},
                 {"points", spec.certification.points},
                 {"max_tension", spec.certification.max_tension},
                 {"max_conformality", spec.certification.max_conformality},
                 {"seed", spec.certification.seed}}}};
    if (spec.quintuple) j["quintuple"] = to_json(*spec.quintuple);
    return j;
}

/// Sampled harmonic-morphism residuals of the field itself.
CheckResult check_numeric_morphism(const MorphismSpec& spec, const RunConfig& cfg) {
    Sampler smp(cfg.seed);
    const MetricSignature sig = spec.ambient.metric();
    double worst = 0.0;
    for (int k = 0; k < cfg.cert_points; ++k) {
        const PointR x = sample_domain_point(spec, smp);
        worst = std::max(worst, std::abs(tension(spec.field, x, sig)));
        worst = std::max(worst, std::abs(conformality(spec.field, spec.field, x, sig)));
    }
    return make_check("harmonic-morphism.numeric", worst <= cfg.cert_tol, worst,
                      "tau(phi) = 0 and kappa(phi,phi) = 0 under the ambient signature, "
                      "sampled over the domain",
                      std::to_string(cfg.cert_points) + " points, tol " +
                          std::to_string(cfg.cert_tol));
}

/// Exact route: the quotient-rule numerators vanish identically, and the
/// jet evaluator matches the rational form at sampled points.
std::vector<CheckResult> check_exact_morphism(const MorphismSpec& spec, const RunConfig& cfg) {
    std::vector<CheckResult> out;
    const RationalFn& r = *spec.exact_form;
    const MetricSignature sig = spec.ambient.metric();
    const MultiPoly tn = ratfn_tension_num(r, sig);
    const MultiPoly cn = ratfn_conf_num(r, sig);
    const bool zero = tn.is_zero() && cn.is_zero();
    out.push_back(make_check(
        "harmonic-morphism.exact", zero, 0.0,
        "the numerators of tau(P/Q) and kappa(P/Q, P/Q) are the zero polynomial",
        zero ? "both numerators vanish identically"
             : "nonzero numerator: " + (tn.is_zero() ? cn.str() : tn.str())));

    Sampler smp(cfg.seed);
    double worst = 0.0;
    const int points = 50;
    for (int k = 0; k < points; ++k) {
        const PointR x = sample_domain_point(spec, smp);
        const Complex a = eval_jet2(spec.field, x).value();
        const Complex b = r.eval(x);
        const double err = std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
        worst = std::max(worst, err);
    }
    out.push_back(make_check("field-matches-exact-form", worst <= cfg.zero_tol, worst,
                             "the jet evaluator agrees with the exact rational form",
                             std::to_string(points) + " points"));
    return out;
}

CheckResult check_radial(const MorphismSpec& spec, const RunConfig& cfg) {
    if (!spec.ambient.curved())
        return skipped_check("radial-invariance",
                             "phi(s*x) = phi(x) for s > 0 (degree-0 homogeneity)",
                             "flat ambient space: restriction invariance not applicable");
    Sampler smp(cfg.seed + 1);
    const std::array<double, 3> scales = {0.5, 2.0, 7.25};
    bool ok = true;
    int points = 0;
    for (int k = 0; k < 100; ++k) {
        const PointR x = sample_domain_point(spec, smp);
        ++points;
        if (!check_radial_invariance(spec.field, x, scales, cfg.zero_tol)) {
            ok = false;
            break;
        }
    }
    return make_check("radial-invariance", ok, 0.0,
                      "phi(s*x) = phi(x) for s in {0.5, 2, 7.25} (degree-0 homogeneity)",
                      std::to_string(points) + " points, tol " + std::to_string(cfg.zero_tol));
}

CheckResult check_pullback(const MorphismSpec& spec, const RunConfig& cfg) {
    Sampler smp(cfg.seed + 2);
    const MetricSignature sig = spec.ambient.metric();
    double worst = 0.0;
    for (const HarmonicTest h : kHarmonicTests) {
        const ScalarField pb = pullback(spec.field, h);
        for (int k = 0; k < cfg.pullback_points; ++k) {
            PointR x = sample_domain_point(spec, smp);
            if (h == HarmonicTest::re_inv_w) {
                // 1/w needs the image bounded away from 0.
                int tries = 0;
                while (std::abs(eval_jet2(spec.field, x).value()) < 0.1 && ++tries < 1000)
                    x = sample_domain_point(spec, smp);
                if (tries >= 1000) continue;
            }
            worst = std::max(worst, std::abs(tension(pb, x, sig)));
        }
    }
    return make_check("pullback-harmonicity", worst <= cfg.pullback_tol, worst,
                      "tau(h(phi)) = 0 for harmonic h in {Re w, Im w, Re w^2, Im w^2, Re 1/w}",
                      std::to_string(cfg.pullback_points) + " points per test function, tol " +
                          std::to_string(cfg.pullback_tol));
}

}  // namespace

void RunConfig::validate() const {
    const double tols[] = {zero_tol, cert_tol, pullback_tol, newton_tol,
                           curvature_tol, fd_h,    step_h};
    for (double t : tols)
        if (!(t > 0.0)) throw DegenerateParameters("tolerances and steps must be positive");
    const int counts[] = {grid_i, grid_j, cert_points, pullback_points, scan_points};
    for (int c : counts)
        if (c <= 0) throw DegenerateParameters("grid extents and sample counts must be positive");
}

RunConfig RunConfig::from_env() {
    RunConfig cfg;
    if (const char* env = std::getenv("MINIMORPH_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw ParseError(std::string("MINIMORPH_SEED is not an integer: '") + env + "'");
        cfg.seed = static_cast<std::uint64_t>(v);
    }
    return cfg;
}

Json RunConfig::to_json() const {
    return Json{{"seed", seed},
                {"zero_tol", zero_tol},
                {"cert_tol", cert_tol},
                {"pullback_tol", pullback_tol},
                {"newton_tol", newton_tol},
                {"curvature_tol", curvature_tol},
                {"fd_h", fd_h},
                {"step_h", step_h},
                {"grid", Json::array({grid_i, grid_j})},
                {"cert_points", cert_points},
                {"pullback_points", pullback_points},
                {"scan_points", scan_points},
                {"out_dir", out_dir}};
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "fail";
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.verdict != Verdict::fail; });
}

Json Report::to_json() const {
    Json j{{"version", kReportVersion}, {"command", command}, {"config", config.to_json()}};
    Json checks_json = Json::array();
    for (const CheckResult& c : checks) checks_json.push_back(check_to_json(c));
    j["checks"] = checks_json;
    j["artifacts"] = artifacts;
    j["extra"] = extra;
    j["passed"] = passed();
    if (config.timing && elapsed_seconds >= 0.0) j["elapsed_seconds"] = elapsed_seconds;
    return j;
}

void write_report(const Report& rep, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    os << rep.to_json().dump(2) << "\n";
    if (!os) throw Error("write failed for '" + path + "'");
}

GaussRat parse_gaussrat(const std::string& text) {
    const ComplexTokens t = split_complex(text, false);
    mpq_class re(0), im(0);
    if (!t.re.empty()) re = rational_token(t.re);
    if (t.has_im) im = rational_token(t.im);
    return {re, im};
}

Complex parse_complex(const std::string& text) {
    const ComplexTokens t = split_complex(text, true);
    return {double_token(t.re), t.has_im ? double_token(t.im) : 0.0};
}

Report run_verify(const std::string& catalog_name, VerifyMode mode, const RunConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    MorphismSpec spec = catalog(catalog_name);
    if (mode == VerifyMode::exact && !spec.has_exact_form())
        throw ExactModeUnavailable("'" + catalog_name +
                                   "' has no exact rational form (its defining formula uses the "
                                   "principal square root); use numeric mode");
    const bool use_exact =
        mode == VerifyMode::exact || (mode == VerifyMode::automatic && spec.has_exact_form());

    Report rep;
    rep.command = "verify";
    rep.config = cfg;
    if (use_exact) {
        for (CheckResult& c : check_exact_morphism(spec, cfg)) rep.checks.push_back(std::move(c));
    } else {
        rep.checks.push_back(check_numeric_morphism(spec, cfg));
    }
    rep.checks.push_back(check_radial(spec, cfg));
    rep.checks.push_back(check_pullback(spec, cfg));
    rep.extra = Json{{"spec", spec_summary(spec)}, {"mode", use_exact ? "exact" : "numeric"}};
    if (cfg.timing)
        rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Report run_variety(const GaussRat& b1, const GaussRat& b2, Branch branch, const RunConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const Quintuple q = variety_point(b1, b2, branch);

    Report rep;
    rep.command = "variety";
    rep.config = cfg;

    const auto res = q.residuals();
    rep.checks.push_back(make_check(
        "variety-residuals", q.satisfied(), 0.0,
        "a1^2 + b1^2 + b2^2 = 0, a1*a2 = -b2^2, a1*b3 = b1*b2, exactly",
        "residuals: " + res[0].str() + ", " + res[1].str() + ", " + res[2].str()));

    const GaussRat det = criticality_det(q);
    const GaussRat closed = GaussRat(4) * q.a1 * q.b1 * q.b2;
    rep.checks.push_back(make_check(
        "determinant-identity", det == closed, 0.0,
        "the 3x3 coefficient determinant equals 4*a1*b1*b2, exactly",
        "det = " + det.str()));

    rep.extra = Json{{"b1", b1.str()},
                     {"b2", b2.str()},
                     {"branch", branch == Branch::plus ? "+" : "-"},
                     {"quintuple", to_json(q)},
                     {"quintuple_str",
                      Json{{"a1", q.a1.str()},
                           {"a2", q.a2.str()},
                           {"b1", q.b1.str()},
                           {"b2", q.b2.str()},
                           {"b3", q.b3.str()}}},
                     {"residuals", Json::array({res[0].str(), res[1].str(), res[2].str()})},
                     {"criticality_det", det.str()},
                     {"regular", q.regular()}};
    if (cfg.timing)
        rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Report run_trace(const std::string& catalog_name, Complex alpha, const RunConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const MorphismSpec spec = catalog(catalog_name);
    const FiberProblem prob(spec, alpha);

    Report rep;
    rep.command = "trace";
    rep.config = cfg;

    Sampler smp(cfg.seed);
    std::optional<FiberSample> base;
    std::string last_error;
    int attempts = 0;
    const int max_attempts = 40;
    while (attempts < max_attempts && !base) {
        ++attempts;
        try {
            const PointR seed_pt = sample_domain_point(spec, smp);
            base = project_to_fiber(prob, seed_pt, cfg.newton());
        } catch (const Error& e) {
            last_error = e.what();
        }
    }
    if (!base) {
        rep.checks.push_back(make_check(
            "fiber-seed", false, 0.0,
            "Gauss-Newton projection of a random domain point onto the fiber phi = alpha",
            "no seed converged after " + std::to_string(max_attempts) +
                " attempts; alpha possibly not attained in the sampled region (last error: " +
                last_error + ")"));
        rep.extra = Json{{"spec", spec_summary(spec)}, {"alpha", format_complex(alpha)}};
        return rep;
    }
    rep.checks.push_back(make_check(
        "fiber-seed", true, base->residual_norm,
        "Gauss-Newton projection of a random domain point onto the fiber phi = alpha",
        "converged after " + std::to_string(attempts) + " seed attempt(s)"));

    SurfacePatch patch =
        trace_patch(prob, *base, {cfg.grid_i, cfg.grid_j}, cfg.step_h, cfg.newton());
    const CurvatureReport curv = curvature_report(prob, patch, cfg.fd_h, cfg.curvature_tol,
                                                  cfg.newton());
    const CompactnessReport comp = compactness_diagnostic(patch);

    double worst_residual = 0.0;
    for (const auto& node : patch.nodes)
        if (node) worst_residual = std::max(worst_residual, node->residual_norm);
    rep.checks.push_back(make_check(
        "fiber-membership", worst_residual <= cfg.zero_tol, worst_residual,
        "phi = alpha and the hypersurface constraint hold at every accepted sample",
        std::to_string(patch.count()) + " samples"));

    rep.checks.push_back(make_check(
        "grid-completeness", !patch.truncated, 0.0,
        "every grid node of the continuation patch converged onto the fiber",
        std::to_string(patch.count()) + " of " + std::to_string(cfg.grid_i * cfg.grid_j) +
            " nodes"));

    rep.checks.push_back(make_check(
        "frame-consistency", patch.min_frame_overlap >= 0.9, 1.0 - patch.min_frame_overlap,
        "transported tangent frames at adjacent nodes overlap by at least 0.9",
        "min overlap " + std::to_string(patch.min_frame_overlap)));

    rep.checks.push_back(make_check(
        "minimality", curv.verdict, curv.max_norm,
        "max mean-curvature norm over the patch is at most the tolerance "
        "(second-difference estimator, O(h) error)",
        std::to_string(curv.samples) + " samples, " + std::to_string(curv.failed_nodes) +
            " failed, fd_h " + std::to_string(curv.h) + ", tol " + std::to_string(curv.tol)));

    if (comp.sphere_case) {
        rep.checks.push_back(make_check(
            "compactness", comp.samples > 0 && comp.max_constraint_violation <= cfg.zero_tol,
            comp.max_constraint_violation,
            "every sample lies on the unit sphere (bounded, closed level set)",
            "diameter " + std::to_string(comp.diameter) + "; " + comp.note));
    } else {
        rep.checks.push_back(make_check(
            "completeness-diagnostic", comp.samples > 0, 0.0,
            "coordinate growth along continuation rays on the hyperboloid; "
            "diagnostic only, not a completeness certificate",
            comp.verdict + "; max coordinate " + std::to_string(comp.max_coordinate) + "; " +
                comp.note));
    }

    std::filesystem::create_directories(cfg.out_dir);
    const std::string stem = cfg.out_dir + "/" + sanitize_filename(catalog_name) + "-patch";
    write_patch_ply(patch, stem + ".ply");
    write_patch_csv(patch, stem + ".csv");
    {
        std::ofstream os(stem + ".json");
        if (!os) throw Error("cannot open '" + stem + ".json' for writing");
        Json pj = patch_to_json(patch);
        pj["seed"] = cfg.seed;
        os << pj.dump(2) << "\n";
    }
    rep.artifacts = {stem + ".ply", stem + ".csv", stem + ".json"};

    rep.extra = Json{{"spec", spec_summary(spec)},
                     {"alpha", format_complex(alpha)},
                     {"patch",
                      Json{{"grid", Json::array({patch.si, patch.sj})},
                           {"step_h", patch.h},
                           {"samples", patch.count()},
                           {"truncated", patch.truncated},
                           {"min_frame_overlap", patch.min_frame_overlap}}},
                     {"curvature", to_json(curv)},
                     {"compactness", to_json(comp)}};
    if (cfg.timing)
        rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Report run_report_all(const RunConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "report-all";
    rep.config = cfg;
    rep.checks = run_acceptance(cfg);
    int passed_count = 0;
    for (const CheckResult& c : rep.checks)
        if (c.verdict == Verdict::pass) ++passed_count;
    rep.extra = Json{{"criteria", static_cast<int>(rep.checks.size())},
                     {"criteria_passed", passed_count}};
    if (cfg.timing)
        rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace minimorph
