// Python module: thin wrappers over the library's main operations.
// Report-producing calls return JSON strings; the package decodes them.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minimorph/report.hpp"

namespace py = pybind11;
using namespace minimorph;

namespace {

/// Catalog entry bound to python: evaluation and the pointwise operators.
class Morphism {
public:
    explicit Morphism(const std::string& name) : spec_(catalog(name)) {}

    std::string name() const { return spec_.name; }
    std::string ambient() const { return spec_.ambient.str(); }
    int dimension() const { return spec_.ambient.dimension; }
    bool has_exact_form() const { return spec_.has_exact_form(); }
    bool certified() const { return spec_.certification.passed; }

    Complex evaluate(const std::vector<double>& x) const {
        return eval_jet2(spec_.field, x).value();
    }
    Complex tension_at(const std::vector<double>& x) const {
        return tension(spec_.field, x, spec_.ambient.metric());
    }
    Complex conformality_at(const std::vector<double>& x) const {
        return conformality(spec_.field, spec_.field, x, spec_.ambient.metric());
    }
    std::vector<Complex> gradient(const std::vector<double>& x) const {
        const Eigen::VectorXcd g = grad_complex(spec_.field, x, spec_.ambient.metric());
        return {g.data(), g.data() + g.size()};
    }
    bool in_domain(const std::vector<double>& x) const { return spec_.domain.contains(x); }

private:
    MorphismSpec spec_;
};

RunConfig config_with(std::uint64_t seed, const std::string& out_dir) {
    RunConfig cfg = RunConfig::from_env();
    cfg.seed = seed;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    return cfg;
}

Branch parse_branch(const std::string& s) {
    if (s == "+") return Branch::plus;
    if (s == "-") return Branch::minus;
    throw ParseError("branch must be + or -, got '" + s + "'");
}

VerifyMode parse_mode(const std::string& s) {
    if (s == "auto") return VerifyMode::automatic;
    if (s == "exact") return VerifyMode::exact;
    if (s == "numeric") return VerifyMode::numeric;
    throw ParseError("mode must be auto, exact or numeric, got '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_minimorph, m) {
    m.doc() = "complex-valued harmonic morphisms and their minimal fibers";

    py::register_exception<Error>(m, "MinimorphError");

    py::class_<Morphism>(m, "Morphism")
        .def(py::init<const std::string&>(), py::arg("name"))
        .def_property_readonly("name", &Morphism::name)
        .def_property_readonly("ambient", &Morphism::ambient)
        .def_property_readonly("dimension", &Morphism::dimension)
        .def_property_readonly("has_exact_form", &Morphism::has_exact_form)
        .def_property_readonly("certified", &Morphism::certified)
        .def("evaluate", &Morphism::evaluate, py::arg("x"))
        .def("tension", &Morphism::tension_at, py::arg("x"))
        .def("conformality", &Morphism::conformality_at, py::arg("x"))
        .def("gradient", &Morphism::gradient, py::arg("x"))
        .def("in_domain", &Morphism::in_domain, py::arg("x"));

    m.def("catalog_names", &catalog_names, "names accepted by Morphism and verify");

    m.def(
        "_variety_json",
        [](const std::string& b1, const std::string& b2, const std::string& branch,
           std::uint64_t seed) {
            const RunConfig cfg = config_with(seed, "");
            return run_variety(parse_gaussrat(b1), parse_gaussrat(b2), parse_branch(branch), cfg)
                .to_json()
                .dump(2);
        },
        py::arg("b1"), py::arg("b2"), py::arg("branch") = "+",
        py::arg("seed") = kCertificationSeed);

    m.def(
        "_verify_json",
        [](const std::string& name, const std::string& mode, std::uint64_t seed) {
            const RunConfig cfg = config_with(seed, "");
            return run_verify(name, parse_mode(mode), cfg).to_json().dump(2);
        },
        py::arg("name"), py::arg("mode") = "auto", py::arg("seed") = kCertificationSeed);

    m.def(
        "_trace_json",
        [](const std::string& name, Complex alpha, int grid_i, int grid_j, double step_h,
           const std::string& out_dir, std::uint64_t seed) {
            RunConfig cfg = config_with(seed, out_dir);
            cfg.grid_i = grid_i;
            cfg.grid_j = grid_j;
            cfg.step_h = step_h;
            return run_trace(name, alpha, cfg).to_json().dump(2);
        },
        py::arg("name"), py::arg("alpha"), py::arg("grid_i") = 21, py::arg("grid_j") = 21,
        py::arg("step_h") = 0.02, py::arg("out_dir") = ".",
        py::arg("seed") = kCertificationSeed);

    m.def(
        "_report_all_json",
        [](std::uint64_t seed) {
            const RunConfig cfg = config_with(seed, "");
            return run_report_all(cfg).to_json().dump(2);
        },
        py::arg("seed") = kCertificationSeed);
}
