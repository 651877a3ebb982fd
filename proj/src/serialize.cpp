#include "minimorph/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "minimorph/errors.hpp"

namespace minimorph {

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_str(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("invalid rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string format_complex(Complex v) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", v.real(), v.imag());
    return buf;
}

Json to_json(const GaussRat& v) {
    return Json{{"re", rational_str(v.re())}, {"im", rational_str(v.im())}};
}

GaussRat gaussrat_from_json(const Json& j) {
    return {rational_from_str(j.at("re").get<std::string>()),
            rational_from_str(j.at("im").get<std::string>())};
}

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [exp, coef] : p.terms()) {
        Json e = Json::array();
        for (unsigned v : exp) e.push_back(v);
        terms.push_back(Json{{"exp", e}, {"coef", to_json(coef)}});
    }
    return Json{{"n_vars", p.n_vars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const Json& j) {
    MultiPoly p(j.at("n_vars").get<int>());
    for (const auto& term : j.at("terms")) {
        ExpVec exp;
        for (const auto& e : term.at("exp")) exp.push_back(e.get<unsigned>());
        if (static_cast<int>(exp.size()) != p.n_vars())
            throw ParseError("exponent vector length does not match n_vars");
        p.add_term(exp, gaussrat_from_json(term.at("coef")));
    }
    return p;
}

Json to_json(const Quintuple& q) {
    return Json{{"a1", to_json(q.a1)},
                {"a2", to_json(q.a2)},
                {"b1", to_json(q.b1)},
                {"b2", to_json(q.b2)},
                {"b3", to_json(q.b3)}};
}

Quintuple quintuple_from_json(const Json& j) {
    return Quintuple{gaussrat_from_json(j.at("a1")), gaussrat_from_json(j.at("a2")),
                     gaussrat_from_json(j.at("b1")), gaussrat_from_json(j.at("b2")),
                     gaussrat_from_json(j.at("b3"))};
}

Json to_json(const CurvatureReport& rep) {
    return Json{{"samples", rep.samples},
                {"failed_nodes", rep.failed_nodes},
                {"max_mean_curvature_norm", rep.max_norm},
                {"mean_mean_curvature_norm", rep.mean_norm},
                {"fd_h", rep.h},
                {"curvature_tol", rep.tol},
                {"verdict", rep.verdict ? "pass" : "fail"}};
}

Json to_json(const CompactnessReport& rep) {
    Json j{{"samples", rep.samples},
           {"verdict", rep.verdict},
           {"sphere_case", rep.sphere_case},
           {"diameter", rep.diameter},
           {"max_constraint_violation", rep.max_constraint_violation},
           {"max_coordinate", rep.max_coordinate},
           {"monotone_growth", rep.monotone_growth},
           {"boundary_hit", rep.boundary_hit},
           {"note", rep.note}};
    Json growth = Json::array();
    for (double g : rep.ray_growth) growth.push_back(g);
    j["ray_growth"] = growth;
    return j;
}

Json to_json(const CriticalScanReport& rep) {
    return Json{{"seed", rep.seed},
                {"samples_off_plane", rep.samples_off_plane},
                {"violations", rep.violations},
                {"min_grad_off_plane", rep.min_grad_off_plane},
                {"samples_on_plane", rep.samples_on_plane},
                {"max_grad_on_plane", rep.max_grad_on_plane},
                {"max_value_on_plane", rep.max_value_on_plane},
                {"det_certificate_available", rep.det_certificate_available},
                {"det_value", format_complex(rep.det_value)}};
}

void write_patch_ply(const SurfacePatch& patch, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    const int n = patch.count();
    os << "ply\n";
    os << "format ascii 1.0\n";
    os << "comment surface patch: fiber of a complex-valued harmonic morphism\n";
    os << "comment identity: P(x1,x2,x3) = alpha * Q(x4,x5) on the unit "
       << (patch.hyperbolic ? "hyperboloid <x,x>_L = -1" : "sphere |x|^2 = 1") << "\n";
    os << "comment spec " << patch.spec_name << "\n";
    os << "comment alpha " << format_complex(patch.alpha) << "\n";
    os << "comment step_h " << fmt_double(patch.h) << "\n";
    os << "comment grid " << patch.si << "x" << patch.sj << "\n";
    os << "comment seed_point";
    for (double v : patch.seed_point) os << " " << fmt_double(v);
    os << "\n";
    os << "element vertex " << n << "\n";
    for (int k = 1; k <= 5; ++k) os << "property float x" << k << "\n";
    os << "property float mean_curvature\n";
    os << "end_header\n";
    for (const auto& node : patch.nodes) {
        if (!node) continue;
        for (double v : node->point) os << fmt_double(v) << " ";
        const double c = std::isfinite(node->mean_curvature_norm) ? node->mean_curvature_norm : 0.0;
        os << fmt_double(c) << "\n";
    }
    if (!os) throw Error("write failed for '" + path + "'");
}

void write_patch_csv(const SurfacePatch& patch, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    os << "x1,x2,x3,x4,x5,residual,mean_curvature_norm\n";
    for (const auto& node : patch.nodes) {
        if (!node) continue;
        for (double v : node->point) os << fmt_double(v) << ",";
        os << fmt_double(node->residual_norm) << ",";
        const double c = std::isfinite(node->mean_curvature_norm) ? node->mean_curvature_norm : 0.0;
        os << fmt_double(c) << "\n";
    }
    if (!os) throw Error("write failed for '" + path + "'");
}

Json patch_to_json(const SurfacePatch& patch) {
    Json j{{"spec", patch.spec_name},
           {"alpha", format_complex(patch.alpha)},
           {"grid", Json::array({patch.si, patch.sj})},
           {"center", Json::array({patch.ci, patch.cj})},
           {"step_h", patch.h},
           {"hyperbolic", patch.hyperbolic},
           {"truncated", patch.truncated},
           {"min_frame_overlap", patch.min_frame_overlap},
           {"samples", patch.count()}};
    Json seed = Json::array();
    for (double v : patch.seed_point) seed.push_back(v);
    j["seed_point"] = seed;
    Json nodes = Json::array();
    for (int i = 0; i < patch.si; ++i) {
        for (int jj = 0; jj < patch.sj; ++jj) {
            const auto& node = patch.at(i, jj);
            if (!node) continue;
            Json pt = Json::array();
            for (double v : node->point) pt.push_back(v);
            nodes.push_back(Json{{"i", i},
                                 {"j", jj},
                                 {"point", pt},
                                 {"residual", node->residual_norm},
                                 {"mean_curvature_norm",
                                  std::isfinite(node->mean_curvature_norm)
                                      ? Json(node->mean_curvature_norm)
                                      : Json(nullptr)},
                                 {"min_singular_value", node->min_singular_value}});
        }
    }
    j["nodes"] = nodes;
    return j;
}

}  // namespace minimorph
