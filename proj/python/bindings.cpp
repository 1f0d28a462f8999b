#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "socdyn/basins.hpp"
#include "socdyn/classify.hpp"
#include "socdyn/cli.hpp"
#include "socdyn/dynamics.hpp"
#include "socdyn/report.hpp"
#include "socdyn/welfare.hpp"

#include <sstream>

namespace py = pybind11;
using namespace socdyn;

namespace {

Params to_params(const py::dict& d) {
    Params p;
    for (auto name : kParamNames) {
        const std::string key(name);
        if (!d.contains(key)) throw py::key_error("missing parameter " + key);
        param_ref(p, name) = d[key.c_str()].cast<double>();
    }
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Four-strategy replicator game: classification, integration, basins";

    py::register_exception<InvalidStateError>(m, "InvalidStateError", PyExc_ValueError);
    py::register_exception<InvalidParamsError>(m, "InvalidParamsError", PyExc_ValueError);
    py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ValueError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

    m.def(
        "payoff_vector",
        [](const std::array<double, 4>& x, const py::dict& p) {
            return payoff_vector(SimplexState::make(x), to_params(p));
        },
        py::arg("x"), py::arg("params"));

    m.def(
        "replicator_rhs",
        [](const std::array<double, 4>& x, const py::dict& p) {
            return replicator_rhs(SimplexState::make(x), to_params(p));
        },
        py::arg("x"), py::arg("params"));

    m.def(
        "nash_vertices",
        [](const py::dict& p, double tol) { return nash_vertices(to_params(p), tol).letters(); },
        py::arg("params"), py::arg("tol") = kDefaultTol);

    m.def("coexistence_payoff", [](const py::dict& p) { return coexistence_payoff(to_params(p)); });

    // Reports cross the boundary as canonical JSON text; the package wraps them in json.loads.
    m.def(
        "validate_json",
        [](const py::dict& p, double tol) {
            return canonical_dump(to_json(validate(to_params(p), tol)));
        },
        py::arg("params"), py::arg("tol") = kDefaultTol);

    m.def(
        "classify_json",
        [](const py::dict& p, double tol) {
            return canonical_dump(to_json(classify_global(to_params(p), tol)));
        },
        py::arg("params"), py::arg("tol") = kDefaultTol);

    m.def(
        "basins_json",
        [](const py::dict& p, std::size_t n, std::uint64_t seed, unsigned jobs) {
            const Params params = to_params(p);
            py::gil_scoped_release release;
            return canonical_dump(
                to_json(estimate_basins(params, n, seed, IntegratorConfig{}, jobs)));
        },
        py::arg("params"), py::arg("n"), py::arg("seed") = 42, py::arg("jobs") = 0);

    m.def(
        "integrate",
        [](const std::array<double, 4>& x0, const py::dict& p, const std::string& method,
           double max_time, double step) {
            IntegratorConfig cfg;
            cfg.method = method == "rk4" ? Method::Rk4 : Method::Rk45;
            cfg.max_time = max_time;
            cfg.step = step;
            const Trajectory t = integrate(SimplexState::make(x0), to_params(p), cfg);
            std::vector<std::array<double, 4>> states;
            for (const auto& s : t.states) states.push_back(s.coords());
            return py::make_tuple(t.times, states, std::string(to_string(t.verdict)));
        },
        py::arg("x0"), py::arg("params"), py::arg("method") = "rk45", py::arg("max_time") = 1e5,
        py::arg("step") = 1e-2);

    m.def(
        "sample_simplex",
        [](std::size_t n, std::uint64_t seed) {
            std::vector<std::array<double, 4>> out;
            for (const auto& s : sample_simplex(n, seed)) out.push_back(s.coords());
            return out;
        },
        py::arg("n"), py::arg("seed") = 42);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
