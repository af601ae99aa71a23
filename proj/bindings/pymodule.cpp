#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "djones/descend.hpp"
#include "djones/qdiff.hpp"
#include "djones/rmatrix.hpp"
#include "djones/serialize.hpp"
#include "djones/statesum.hpp"

namespace py = pybind11;
using namespace djones;

namespace {

HabiroSequence resolve_knot(const std::string& knot) {
    if (!knot.empty() && knot[0] == '@') return HabiroSequence::from_file(knot.substr(1));
    return HabiroSequence::builtin(knot);
}

ValidatedDiagram resolve_diagram(const std::string& spec) {
    if (!spec.empty() && spec[0] == '{')
        return validate_diagram(diagram_from_json_text(spec));
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::runtime_error("cannot open diagram file: " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return validate_diagram(diagram_from_json_text(ss.str()));
    }
    return validate_diagram(builtin_diagram(spec));
}

py::list matrix_to_py(const CMatrix& m) {
    py::list rows;
    for (long i = 0; i < m.rows(); ++i) {
        py::list row;
        for (long j = 0; j < m.cols(); ++j) row.append(m.at(i, j));
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_djones, mod) {
    mod.doc() =
        "Exact computation of descendant colored Jones invariants and "
        "root-of-unity R-matrix state sums.";

    py::class_<Laurent>(mod, "Laurent")
        .def(py::init<long>())
        .def_static("from_json", &laurent_from_json_text)
        .def("to_json", &laurent_to_json_text)
        .def("__str__", [](const Laurent& p) { return p.str(); })
        .def("str", &Laurent::str, py::arg("var") = std::string("q"),
             "Render with a chosen variable name.")
        .def("__repr__", [](const Laurent& p) { return "Laurent(" + p.str() + ")"; })
        .def("__eq__", [](const Laurent& a, const Laurent& b) { return a == b; })
        .def("__add__", [](const Laurent& a, const Laurent& b) { return a + b; })
        .def("__sub__", [](const Laurent& a, const Laurent& b) { return a - b; })
        .def("__mul__", [](const Laurent& a, const Laurent& b) { return a * b; })
        .def("is_zero", &Laurent::is_zero)
        .def("invert_variable", &Laurent::inverted_variable);

    py::class_<Cyclo>(mod, "Cyclo")
        .def_static("from_json", &cyclo_from_json_text)
        .def("to_json", &cyclo_to_json_text)
        .def("__str__", [](const Cyclo& z) { return z.str(); })
        .def("__repr__", [](const Cyclo& z) { return "Cyclo(" + z.str() + ")"; })
        .def("__eq__", [](const Cyclo& a, const Cyclo& b) { return a == b; })
        .def("__add__", [](const Cyclo& a, const Cyclo& b) { return a + b; })
        .def("__mul__", [](const Cyclo& a, const Cyclo& b) { return a * b; })
        .def("is_zero", &Cyclo::is_zero)
        .def("conj", &Cyclo::conj)
        .def("order", [](const Cyclo& z) { return z.field()->order(); });

    py::class_<CheckLine>(mod, "CheckLine")
        .def_readonly("ok", &CheckLine::pass)
        .def_readonly("label", &CheckLine::label)
        .def_readonly("lhs", &CheckLine::lhs)
        .def_readonly("rhs", &CheckLine::rhs)
        .def("__repr__", [](const CheckLine& l) {
            return std::string(l.pass ? "PASS " : "FAIL ") + l.label;
        });

    py::class_<Report>(mod, "Report")
        .def_readonly("title", &Report::title)
        .def_readonly("lines", &Report::lines)
        .def("all_pass", &Report::all_pass)
        .def("text", &Report::text)
        .def("__bool__", &Report::all_pass)
        .def("__repr__", [](const Report& r) {
            return "<Report " + r.title + ": " + (r.all_pass() ? "pass" : "FAIL") + ">";
        });

    mod.def(
        "jones",
        [](const std::string& knot, long n) { return jones_from_habiro(resolve_knot(knot), n); },
        py::arg("knot"), py::arg("n"),
        "Colored Jones polynomial J_n(q), normalized to 1 at the unknot.");
    mod.def(
        "habiro",
        [](const std::string& knot, long k) { return resolve_knot(knot).h(k); },
        py::arg("knot"), py::arg("k"), "Habiro coefficient H_k(q).");
    mod.def("habiro_recursion_52", &habiro_recursion_52, py::arg("k"));
    mod.def(
        "habiro_from_jones",
        [](const std::vector<Laurent>& js, long k) { return habiro_from_jones(js, k); },
        py::arg("jones"), py::arg("k"),
        "Invert the cyclotomic expansion from J_1..J_{k+1}.");
    mod.def(
        "dj_colored",
        [](const std::string& knot, long m, long n) {
            return dj_colored(resolve_knot(knot), m, n);
        },
        py::arg("knot"), py::arg("m"), py::arg("n"));
    mod.def(
        "dj_habiro",
        [](const std::string& knot, long m, long level) {
            HabiroTruncation t = dj_habiro(resolve_knot(knot), m, level);
            return py::make_tuple(t.level(), t.rep());
        },
        py::arg("knot"), py::arg("m"), py::arg("level"),
        "Truncated Habiro-ring descendant; returns (level, representative).");
    mod.def(
        "dj_eval_root",
        [](const std::string& knot, long m, long N, long twist) {
            return dj_eval_root(resolve_knot(knot), m, N, twist);
        },
        py::arg("knot"), py::arg("m"), py::arg("N"), py::arg("twist") = 1);
    mod.def("dj_ab_52", &dj_ab_52_root, py::arg("a"), py::arg("b"), py::arg("N"),
            py::arg("twist") = 1);
    mod.def("verify_52_identities", &verify_52_identities, py::arg("levels"),
            py::arg("roots"));
    mod.def("verify_relation", &verify_relation, py::arg("knot"), py::arg("m_lo"),
            py::arg("m_hi"), py::arg("n_lo"), py::arg("n_hi"));
    mod.def("verify_relation_truncated", &verify_relation_truncated, py::arg("knot"),
            py::arg("m_lo"), py::arg("m_hi"), py::arg("level"));
    mod.def(
        "classical_limit",
        [](const std::string& knot) { return builtin_relation(knot).lhs.classical_limit(); },
        py::arg("knot"), "Classical limit of the recursion operator, in the variable L.");
    mod.def("span_reduction_check_52", &span_reduction_check_52, py::arg("n_max") = 4);

    mod.def("check_yang_baxter",
            [](long N, long x, long y) { return check_yang_baxter(N, Rat(x), Rat(y)); },
            py::arg("N"), py::arg("x") = 2, py::arg("y") = 3);
    mod.def("check_yang_baxter_at_one", &check_yang_baxter_at_one, py::arg("N"));
    mod.def("check_gauge_identities",
            [](long N, long x, long y) { return check_gauge_identities(N, Rat(x), Rat(y)); },
            py::arg("N"), py::arg("x") = 2, py::arg("y") = 3);
    mod.def("check_fourier_r",
            [](long N, long x) { return check_fourier_r(N, Rat(x)); }, py::arg("N"),
            py::arg("x") = 2);
    mod.def("check_r_at_one", [](long N, long x) { return check_r_at_one(N, Rat(x)); },
            py::arg("N"), py::arg("x") = 2);

    mod.def(
        "contract",
        [](const std::string& diagram, long N, long n) {
            return matrix_to_py(contract(resolve_diagram(diagram), N, n));
        },
        py::arg("diagram"), py::arg("N"), py::arg("color"),
        "State-sum matrix of a diagram given as a built-in name, @file or JSON text.");
    mod.def(
        "naive_sum_41",
        [](long N, long n) { return matrix_to_py(naive_sum_41(N, n)); }, py::arg("N"),
        py::arg("color"));
    mod.def(
        "conjecture2",
        [](const std::string& knot, const std::string& diagram, long N, long n) {
            return conjecture2_check(resolve_knot(knot), resolve_diagram(diagram), N, n);
        },
        py::arg("knot"), py::arg("diagram"), py::arg("N"), py::arg("color"));
    mod.def(
        "invariance",
        [](const std::string& d1, const std::string& d2, long N) {
            return invariance_check(resolve_diagram(d1), resolve_diagram(d2), N);
        },
        py::arg("diagram1"), py::arg("diagram2"), py::arg("N"));
    mod.def(
        "validate_diagram",
        [](const std::string& diagram) {
            resolve_diagram(diagram);
            return true;
        },
        py::arg("diagram"), "Raises ValueError on an inconsistent diagram.");
    mod.def("builtin_diagram_json",
            [](const std::string& name) { return diagram_to_json_text(builtin_diagram(name)); },
            py::arg("name"));

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::out_of_range& e) {
            PyErr_SetString(PyExc_IndexError, e.what());
        }
    });
}
