// Command-line entry point: verify / variety / trace / report-all.
// Every command writes a JSON report into --out and prints one line per
// check; the exit status is 0 iff every non-skipped check passed.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "minimorph/report.hpp"

namespace {

std::string sanitize(std::string name) {
    for (char& c : name)
        if (c == ':' || c == ',' || c == '=' || c == '/') c = '_';
    return name;
}

void print_report(const minimorph::Report& rep, const std::string& path) {
    for (const minimorph::CheckResult& c : rep.checks)
        std::printf("%-7s %-40s residual %.3g\n", minimorph::verdict_str(c.verdict).c_str(),
                    c.name.c_str(), c.residual);
    std::printf("%s: %s (report: %s)\n", rep.command.c_str(),
                rep.passed() ? "all checks passed" : "CHECKS FAILED", path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    using namespace minimorph;

    CLI::App app{
        "minimorph: complex-valued harmonic morphisms and their minimal fibers.\n"
        "Complex arguments are written a+bi. 'variety' takes exact rational\n"
        "components (3, -4/5, i, 2i, 1/2-3/4i); 'trace --alpha' takes decimal\n"
        "components (5i, 1.5, -2+0.25i). The seed defaults to 424242, can be\n"
        "overridden by the MINIMORPH_SEED environment variable, and by --seed\n"
        "on top of that; it is recorded in every artifact."};
    app.require_subcommand(1);
    // Global tolerances may be written after the subcommand name; let
    // unmatched subcommand arguments fall through to the parent parser.
    app.fallthrough();

    RunConfig cfg;
    try {
        cfg = RunConfig::from_env();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    app.add_option("--seed", cfg.seed, "random seed recorded in every artifact");
    app.add_option("--out", cfg.out_dir, "output directory for reports and geometry files")
        ->capture_default_str();
    app.add_flag("--timing", cfg.timing,
                 "record wall-clock timing (excluded from the byte-identical rerun contract)");
    app.add_option("--zero-tol", cfg.zero_tol, "slack for identities that hold exactly")
        ->capture_default_str();
    app.add_option("--cert-tol", cfg.cert_tol, "sampled harmonic-morphism certification tolerance")
        ->capture_default_str();
    app.add_option("--pullback-tol", cfg.pullback_tol, "pullback harmonicity tolerance")
        ->capture_default_str();
    app.add_option("--newton-tol", cfg.newton_tol, "Gauss-Newton convergence tolerance")
        ->capture_default_str();
    app.add_option("--curvature-tol", cfg.curvature_tol,
                   "max mean-curvature norm accepted as minimal")
        ->capture_default_str();
    app.add_option("--fd-h", cfg.fd_h, "curvature finite-difference step")
        ->capture_default_str();

    std::string verify_name;
    bool mode_exact = false, mode_numeric = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the identity suite for a catalog entry (see --list for names)");
    verify->add_option("name", verify_name, "catalog entry, e.g. s4-quadric or phi-even:d=2,n=1");
    verify->add_flag("--exact", mode_exact,
                     "require the exact polynomial route (error if unavailable)");
    verify->add_flag("--numeric", mode_numeric, "force the sampled route");
    bool list_names = false;
    verify->add_flag("--list", list_names, "print the catalog names and exit");

    std::string b1_str, b2_str, branch_str = "+";
    CLI::App* variety = app.add_subcommand(
        "variety", "quadric coefficient point from free parameters (b1, b2)");
    variety->add_option("b1", b1_str, "exact complex, e.g. 3 or 1/2-3/4i");
    variety->add_option("b2", b2_str, "exact complex, e.g. 4 or i");
    variety->add_option("branch", branch_str, "square-root branch, + or -")
        ->capture_default_str();

    std::string trace_name, alpha_str, grid_str;
    CLI::App* trace = app.add_subcommand(
        "trace", "extract a fiber patch on S^4 or H^4 and certify its minimality");
    // The step option is spelled --h, so trace keeps only the long help
    // flag; a short -h would collide.
    trace->set_help_flag("--help", "print this help message and exit");
    trace->add_option("name", trace_name, "catalog entry, s4-quadric or h4-quadric")->required();
    trace->add_option("--alpha", alpha_str, "fiber value a+bi, nonzero (e.g. 5i)")->required();
    trace->add_option("--grid", grid_str, "grid extents NxM (default 21x21)");
    trace->add_option("--h", cfg.step_h, "continuation step, in (0, 0.1]")
        ->capture_default_str();

    CLI::App* report_all = app.add_subcommand(
        "report-all", "run the whole acceptance suite and write one consolidated report");

    CLI11_PARSE(app, argc, argv);

    try {
        Report rep;
        std::string out_path;
        if (*verify) {
            if (list_names) {
                for (const std::string& n : catalog_names()) std::printf("%s\n", n.c_str());
                return 0;
            }
            if (verify_name.empty())
                throw ParseError("verify needs a catalog entry name (see verify --list)");
            if (mode_exact && mode_numeric)
                throw ParseError("--exact and --numeric are mutually exclusive");
            const VerifyMode mode = mode_exact ? VerifyMode::exact
                                   : mode_numeric ? VerifyMode::numeric
                                                  : VerifyMode::automatic;
            rep = run_verify(verify_name, mode, cfg);
            out_path = cfg.out_dir + "/verify-" + sanitize(verify_name) + ".json";
        } else if (*variety) {
            if (b1_str.empty() || b2_str.empty())
                throw ParseError("variety needs both free parameters b1 and b2");
            Branch branch;
            if (branch_str == "+")
                branch = Branch::plus;
            else if (branch_str == "-")
                branch = Branch::minus;
            else
                throw ParseError("branch must be + or -, got '" + branch_str + "'");
            rep = run_variety(parse_gaussrat(b1_str), parse_gaussrat(b2_str), branch, cfg);
            out_path = cfg.out_dir + "/variety.json";
        } else if (*trace) {
            if (!grid_str.empty()) {
                int gi = 0, gj = 0;
                if (std::sscanf(grid_str.c_str(), "%dx%d", &gi, &gj) != 2 || gi < 1 || gj < 1)
                    throw ParseError("--grid expects NxM with positive extents, got '" +
                                     grid_str + "'");
                cfg.grid_i = gi;
                cfg.grid_j = gj;
            }
            rep = run_trace(trace_name, parse_complex(alpha_str), cfg);
            out_path = cfg.out_dir + "/trace-" + sanitize(trace_name) + ".json";
        } else if (*report_all) {
            rep = run_report_all(cfg);
            out_path = cfg.out_dir + "/report.json";
        }
        std::filesystem::create_directories(cfg.out_dir);
        write_report(rep, out_path);
        print_report(rep, out_path);
        return rep.passed() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
