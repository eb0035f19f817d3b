#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "crepant/cartan.hpp"
#include "crepant/chen_ruan.hpp"
#include "crepant/errors.hpp"
#include "crepant/quantum.hpp"
#include "crepant/verify.hpp"

namespace py = pybind11;
using namespace crepant;

namespace {

std::vector<std::vector<std::string>> rational_rows(const RatMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_crepant, m) {
    m.doc() = "Exact Chen-Ruan and crepant resolution rings for transversal A_n singularities";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

    py::class_<CycNum>(m, "CycNum")
        .def(py::init([](const std::string& text) { return parse_cyc(text); }), py::arg("text"))
        .def_static("zeta", &CycNum::zeta, py::arg("conductor"), py::arg("power") = 1)
        .def_property_readonly("conductor", &CycNum::conductor)
        .def_property_readonly("coeffs",
                               [](const CycNum& c) {
                                   std::vector<std::string> out;
                                   for (const auto& r : c.coeffs()) out.push_back(r.to_string());
                                   return out;
                               })
        .def("inv", &CycNum::inv)
        .def("conj", &CycNum::conj)
        .def("minimized", &CycNum::minimized)
        .def("to_complex", &CycNum::to_complex)
        .def("__add__", [](const CycNum& a, const CycNum& b) { return a + b; })
        .def("__sub__", [](const CycNum& a, const CycNum& b) { return a - b; })
        .def("__mul__", [](const CycNum& a, const CycNum& b) { return a * b; })
        .def("__truediv__", [](const CycNum& a, const CycNum& b) { return a / b; })
        .def("__neg__", [](const CycNum& a) { return -a; })
        .def("__eq__", [](const CycNum& a, const CycNum& b) { return a == b; })
        .def("__str__", &CycNum::to_string)
        .def("__repr__", [](const CycNum& c) { return "CycNum('" + c.to_string() + "')"; });

    m.def("cartan_matrix", [](int n) {
        const auto c = cartan_matrix(n);
        std::vector<std::vector<long>> out(c.rows());
        for (std::size_t i = 0; i < c.rows(); ++i) {
            for (std::size_t j = 0; j < c.cols(); ++j) out[i].push_back(c(i, j));
        }
        return out;
    });
    m.def("cartan_inverse", [](int n) { return rational_rows(cartan_inverse(n)); });
    m.def("age", [](int order, const std::vector<int>& exps) { return age(order, exps).to_string(); });
    m.def("r_poly", [](int i, int j, int k, int n) { return r_poly(i, j, k, n).to_string(); });
    m.def(
        "evaluate_atom",
        [](int r, int s, const std::string& q) -> std::optional<CycNum> {
            const auto count = std::count(q.begin(), q.end(), ',') + 1;
            return atom_value({r, s}, parse_qpoint(q, static_cast<int>(count)));
        },
        py::arg("r"), py::arg("s"), py::arg("q"), "q_r...q_s / (1 - q_r...q_s) at a comma separated q-point; None at a pole.");
    m.def(
        "solve_a2",
        [](int max_order, const std::string& twist) {
            const auto g = Geometry::make(2, BaseRing::projective_space(1), 1, 2, 1);
            const auto report = solve_a2_symmetric(g, max_order, ConventionFlags::parse(twist, 2));
            std::vector<std::tuple<int, int, CycNum, CycNum>> out;
            for (const auto& s : report.solutions) out.emplace_back(s.order, s.power, s.a, s.b);
            return out;
        },
        py::arg("max_order") = 12, py::arg("twist") = "-1/(n+1)",
        "Symmetric A_2 solutions (order, power, a, b) on the default P^1 geometry.");
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a crepant CLI command in-process; returns (exit_code, stdout, stderr).");
}
