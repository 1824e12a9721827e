#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynred/corpus.hpp"
#include "dynred/document.hpp"
#include "dynred/minimality.hpp"
#include "dynred/resultant.hpp"
#include "dynred/semistability.hpp"
#include "dynred/verify.hpp"

namespace py = pybind11;
using namespace dynred;

namespace {

// Reports cross the boundary as JSON so Python gets plain dicts and lists.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// Accepts int, str, fractions.Fraction or anything whose str() parses.
BigRational rational_from(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

RationalMatrix matrix_from(const py::sequence& rows) {
    const std::size_t m = rows.size();
    RationalMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto row = rows[i].cast<py::sequence>();
        if (row.size() != m) throw UsageError("matrix must be square");
        for (std::size_t j = 0; j < m; ++j) g(i, j) = rational_from(row[j]);
    }
    return g;
}

MinimalityOptions minimality(unsigned bound, std::uint64_t max_candidates) {
    MinimalityOptions o;
    o.bound = bound;
    o.max_candidates = max_candidates;
    return o;
}

} // namespace

PYBIND11_MODULE(_dynred, m) {
    m.doc() = "Exact reduction theory of endomorphisms of projective space over Q";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Presentation>(m, "Presentation")
        .def(py::init([](unsigned n, unsigned d, const py::sequence& coeffs) {
                 std::vector<BigRational> c;
                 for (const auto& x : coeffs) c.push_back(rational_from(x));
                 return make_presentation(n, d, std::move(c));
             }),
             py::arg("n"), py::arg("d"), py::arg("coeffs"),
             "Coefficients of the n+1 forms, each in descending lexicographic monomial order.")
        .def_static("from_json", [](const std::string& text) { return parse_document(text).presentation; })
        .def("to_json", [](const Presentation& P) { return print_document(MorphismDocument{.presentation = P}); })
        .def_property_readonly("n", &Presentation::dim)
        .def_property_readonly("d", &Presentation::degree)
        .def_property_readonly("coeffs",
                               [](const Presentation& P) {
                                   std::vector<std::string> out;
                                   for (const auto& c : P.coeffs()) out.push_back(to_string(c));
                                   return out;
                               })
        .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; })
        .def("__repr__", [](const Presentation& P) { return "Presentation(" + print_document({.presentation = P}) + ")"; });

    m.def("projectively_equal", &projectively_equal);
    m.def("is_morphism", &is_morphism);
    m.def("resultant", [](const Presentation& P) { return to_string(resultant(P)); }, "Exact resultant as a string.");
    m.def("valuation", [](const Presentation& P, std::uint64_t p) { return to_python(to_json(valuation_report(P, PrimeInt(p)))); },
          py::arg("presentation"), py::arg("p"));
    m.def("conjugate", [](const Presentation& P, const py::sequence& gamma) { return conjugate(P, matrix_from(gamma)); },
          py::arg("presentation"), py::arg("gamma"));
    m.def("primitive_integral", &primitive_integral);
    m.def(
        "semistable",
        [](const Presentation& P, std::uint64_t p, unsigned extension_degree, bool strict) {
            SemistabilityOptions o;
            o.extension_degree = extension_degree;
            o.classify_strict = strict;
            return to_python(to_json(is_semistable_presentation(P, PrimeInt(p), o)));
        },
        py::arg("presentation"), py::arg("p"), py::arg("extension_degree") = 1, py::arg("strict") = false);
    m.def(
        "minimize",
        [](const Presentation& P, std::uint64_t p, unsigned bound, std::uint64_t max_candidates) {
            return to_python(to_json(certify_or_search_minimal(P, PrimeInt(p), minimality(bound, max_candidates))));
        },
        py::arg("presentation"), py::arg("p"), py::arg("bound") = 3, py::arg("max_candidates") = 200000);
    m.def(
        "divisor",
        [](const Presentation& P, unsigned bound) { return to_python(to_json(minimal_resultant_divisor(P, minimality(bound, 200000)))); },
        py::arg("presentation"), py::arg("bound") = 3);
    m.def(
        "globalize",
        [](const Presentation& P, unsigned bound) {
            const auto g = globalize_over_Q(P, minimality(bound, 200000));
            py::dict out = to_python(to_json(g));
            out["minimal"] = g.presentation;
            return out;
        },
        py::arg("presentation"), py::arg("bound") = 3);
    m.def(
        "potential_good_reduction",
        [](const Presentation& P, std::uint64_t p, unsigned bound) {
            return to_python(to_json(potential_good_reduction_status(P, PrimeInt(p), minimality(bound, 200000))));
        },
        py::arg("presentation"), py::arg("p"), py::arg("bound") = 3);
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed, std::size_t count, const std::string& params, unsigned workers) {
            SuiteReport r;
            {
                py::gil_scoped_release release;
                r = run_suite(suite, parse_params(params), seed, count, workers);
            }
            py::dict out;
            out["suite"] = r.suite;
            out["passed"] = r.passed;
            out["failed"] = r.failed;
            out["counterexample"] = r.counterexample ? py::object(py::str(print_document(*r.counterexample))) : py::none();
            out["notes"] = r.notes;
            return out;
        },
        py::arg("suite"), py::arg("seed") = 1, py::arg("count") = 100, py::arg("params") = "n=1,d=2,p=2,3,5,B=3",
        py::arg("workers") = 1);
    m.def(
        "random_corpus",
        [](unsigned n, unsigned d, std::size_t count, std::uint64_t seed) {
            std::vector<Presentation> out;
            for (auto& doc : random_corpus(n, d, count, seed)) out.push_back(std::move(doc.presentation));
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("count"), py::arg("seed"));
}
