#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "minimorph/serialize.hpp"

using namespace minimorph;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("gaussian rational json round trip is exact") {
    // 1/3 is not a dyadic rational; a float detour would corrupt it.
    const GaussRat v = GaussRat::ratio(1, 3, -7, 11);
    const Json j = to_json(v);
    CHECK(j.at("re").get<std::string>() == "1/3");
    CHECK(j.at("im").get<std::string>() == "-7/11");
    CHECK(gaussrat_from_json(j) == v);
}

TEST_CASE("polynomial json round trip preserves terms") {
    const MultiPoly x1 = MultiPoly::variable(3, 0);
    const MultiPoly x2 = MultiPoly::variable(3, 1);
    const MultiPoly p =
        GaussRat::ratio(5, 2, 0, 1) * (x1 * x1) - GaussRat::ratio(0, 1, 1, 3) * (x1 * x2);
    const Json j = to_json(p);
    CHECK(j.at("n_vars").get<int>() == 3);
    CHECK(j.at("terms").size() == 2);
    CHECK(multipoly_from_json(j) == p);
    // Exponent vectors must match n_vars.
    Json bad = j;
    bad["terms"][0]["exp"] = Json::array({1, 2});
    CHECK_THROWS_AS(multipoly_from_json(bad), ParseError);
}

TEST_CASE("quintuple json round trip") {
    const Quintuple q = canonical_quintuple();
    const Quintuple back = quintuple_from_json(to_json(q));
    CHECK(back.a1 == q.a1);
    CHECK(back.a2 == q.a2);
    CHECK(back.b1 == q.b1);
    CHECK(back.b2 == q.b2);
    CHECK(back.b3 == q.b3);
}

TEST_CASE("complex formatting") {
    CHECK(format_complex(Complex(0, 240)) == "0+240i");
    CHECK(format_complex(Complex(-1.5, -2.25)) == "-1.5-2.25i");
}

TEST_CASE("patch artifacts") {
    const MorphismSpec s4 = catalog("s4-quadric");
    const FiberProblem prob(s4, Complex(0, 5));
    Sampler smp(424242);
    FiberSample base;
    bool found = false;
    for (int t = 0; t < 200 && !found; ++t) {
        try {
            base = project_to_fiber(prob, sample_domain_point(s4, smp));
            found = true;
        } catch (const Error&) {
        }
    }
    REQUIRE(found);
    SurfacePatch patch = trace_patch(prob, base, {3, 3}, 0.02);
    curvature_report(prob, patch, 1e-3, 5e-4);

    const auto ply_path = temp_file("minimorph_test_patch.ply");
    const auto csv_path = temp_file("minimorph_test_patch.csv");
    write_patch_ply(patch, ply_path.string());
    write_patch_csv(patch, csv_path.string());

    const std::string ply = slurp(ply_path.string());
    CHECK(ply.rfind("ply\n", 0) == 0);
    CHECK(ply.find("element vertex 9") != std::string::npos);
    CHECK(ply.find("property float mean_curvature") != std::string::npos);
    CHECK(ply.find("end_header") != std::string::npos);

    const std::string csv = slurp(csv_path.string());
    CHECK(csv.rfind("x1,x2,x3,x4,x5,residual,mean_curvature_norm\n", 0) == 0);
    // Header plus one row per accepted node.
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + patch.count());

    const Json pj = patch_to_json(patch);
    CHECK(pj.at("spec").get<std::string>() == "s4-quadric");
    CHECK(pj.at("nodes").size() == static_cast<size_t>(patch.count()));
    CHECK(pj.at("grid")[0].get<int>() == 3);

    std::filesystem::remove(ply_path);
    std::filesystem::remove(csv_path);
}

TEST_CASE("ply write failure raises an error") {
    SurfacePatch patch;
    patch.si = patch.sj = 1;
    patch.nodes.resize(1);
    CHECK_THROWS_AS(write_patch_ply(patch, "/nonexistent-dir/x.ply"), Error);
}
