// Python bindings: string-oriented wrappers over the exact-arithmetic core.
// Ideals travel as generator-list text ("x*y, y*z"), rings as comma-separated
// variable lists ("x,y,z"), exponents as rational literals ("4/3").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ratpow/decompose.hpp"
#include "ratpow/errors.hpp"
#include "ratpow/ideal.hpp"
#include "ratpow/numeric.hpp"
#include "ratpow/parse.hpp"
#include "ratpow/polyhedron.hpp"
#include "ratpow/powers.hpp"
#include "ratpow/serialize.hpp"
#include "ratpow/theorem_lab.hpp"

namespace py = pybind11;
using namespace ratpow;

namespace {

MonomialIdeal make_ideal(const std::string& ring, const std::string& ideal) {
    return parse_ideal(ideal, parse_ring(ring));
}

Rational make_u(const std::string& u) { return parse_rational(u); }

PowerMethod make_method(const std::string& name) {
    std::optional<PowerMethod> method = method_from_name(name);
    if (!method) throw ParseError("unknown method '" + name + "'", 1, 1);
    return *method;
}

py::int_ integer_to_py(const Integer& n) {
    return py::module_::import("builtins").attr("int")(py::str(int_to_string(n)));
}

py::dict report_to_dict(const CheckReport& report) {
    py::dict out;
    out["theorem"] = theorem_name(report.theorem);
    out["instance"] = report.instance;
    out["pass"] = report.pass;
    out["witness"] = report.witness ? py::object(py::str(*report.witness))
                                    : py::object(py::none());
    out["notes"] = report.notes;
    return out;
}

} // namespace

PYBIND11_MODULE(_ratpow, m) {
    m.doc() = "Exact rational and symbolic powers of monomial ideals";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "closure",
        [](const std::string& ring, const std::string& ideal) {
            return ideal_to_text(integral_closure(make_ideal(ring, ideal)));
        },
        py::arg("ring"), py::arg("ideal"),
        "Integral closure of a monomial ideal, as generator text.");

    m.def(
        "rational_power",
        [](const std::string& ring, const std::string& ideal, const std::string& u) {
            return ideal_to_text(rational_power(make_ideal(ring, ideal), make_u(u)).ideal);
        },
        py::arg("ring"), py::arg("ideal"), py::arg("u"),
        "closure(I^u): lattice points of the scaled Newton polyhedron.");

    m.def(
        "rational_symbolic_power",
        [](const std::string& ring, const std::string& ideal, const std::string& u,
           const std::string& method) {
            return ideal_to_text(rational_symbolic_power(make_ideal(ring, ideal), make_u(u),
                                                         make_method(method))
                                     .ideal);
        },
        py::arg("ring"), py::arg("ideal"), py::arg("u"),
        py::arg("method") = "localization-contraction",
        "closure(I^(u)): the rational symbolic power, by any of the four methods.");

    m.def(
        "rational_symbolic_power_json",
        [](const std::string& ring, const std::string& ideal, const std::string& u) {
            return ideal_to_json(
                rational_symbolic_power(make_ideal(ring, ideal), make_u(u)).ideal);
        },
        py::arg("ring"), py::arg("ideal"), py::arg("u"),
        "closure(I^(u)) as a JSON document with ring and exponent matrix.");

    m.def(
        "differential_power",
        [](const std::string& ring, const std::string& ideal, const std::string& u) {
            return ideal_to_text(differential_power_monomial(make_ideal(ring, ideal), make_u(u)));
        },
        py::arg("ring"), py::arg("ideal"), py::arg("u"),
        "The rational differential power (characteristic zero).");

    m.def(
        "saturated_power",
        [](const std::string& ring, const std::string& ideal, const std::string& u,
           const std::string& k_ideal) {
            MonomialIdeal I = make_ideal(ring, ideal);
            return ideal_to_text(saturated_power(I, make_u(u), make_ideal(ring, k_ideal)));
        },
        py::arg("ring"), py::arg("ideal"), py::arg("u"), py::arg("k_ideal"),
        "closure(I^u) saturated with respect to an auxiliary ideal K.");

    m.def(
        "newton_polyhedron",
        [](const std::string& ring, const std::string& ideal) {
            return polyhedron_to_text(newton_polyhedron(make_ideal(ring, ideal)));
        },
        py::arg("ring"), py::arg("ideal"),
        "Irredundant half-space description of NP(I), one inequality per line.");

    m.def(
        "symbolic_polyhedron",
        [](const std::string& ring, const std::string& ideal) {
            return polyhedron_to_text(symbolic_polyhedron(make_ideal(ring, ideal)));
        },
        py::arg("ring"), py::arg("ideal"),
        "Irredundant half-space description of SP(I), one inequality per line.");

    m.def(
        "waldschmidt",
        [](const std::string& ring, const std::string& ideal,
           const std::optional<std::vector<long long>>& v) {
            MonomialIdeal I = make_ideal(ring, ideal);
            std::vector<Integer> coefficients;
            if (v) {
                for (long long c : *v) coefficients.emplace_back(c);
            } else {
                coefficients.assign(I.ring().size(), Integer(1));
            }
            return rat_to_string(waldschmidt(I, SkewValuation(coefficients)));
        },
        py::arg("ring"), py::arg("ideal"), py::arg("v") = py::none(),
        "Waldschmidt constant along a skew valuation (default all-ones).");

    m.def(
        "associated_primes",
        [](const std::string& ring, const std::string& ideal) {
            std::vector<std::string> out;
            for (const auto& p : associated_primes(make_ideal(ring, ideal)))
                out.push_back(prime_to_text(p));
            return out;
        },
        py::arg("ring"), py::arg("ideal"), "Associated primes, as \"(x,y)\" strings.");

    m.def(
        "minimal_primes",
        [](const std::string& ring, const std::string& ideal) {
            std::vector<std::string> out;
            for (const auto& p : minimal_primes(make_ideal(ring, ideal)))
                out.push_back(prime_to_text(p));
            return out;
        },
        py::arg("ring"), py::arg("ideal"), "Minimal primes, as \"(x,y)\" strings.");

    m.def(
        "primary_decomposition",
        [](const std::string& ring, const std::string& ideal) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& [prime, component] :
                 primary_components_min(make_ideal(ring, ideal)).components)
                out.emplace_back(prime_to_text(prime), ideal_to_text(component));
            return out;
        },
        py::arg("ring"), py::arg("ideal"),
        "Minimal primary decomposition as (prime, component) text pairs.");

    m.def(
        "stability_denominator",
        [](const std::string& ring, const std::string& ideal) {
            return integer_to_py(stability_denominator(make_ideal(ring, ideal)).e);
        },
        py::arg("ring"), py::arg("ideal"),
        "The common denominator e with closure(I^u) constant on [k/e, (k+1)/e).");

    m.def(
        "check_containment",
        [](const std::string& ring, const std::string& ideal, const std::string& u) {
            return report_to_dict(check_containment(make_ideal(ring, ideal), make_u(u)));
        },
        py::arg("ring"), py::arg("ideal"), py::arg("u"),
        "Verify closure(I^(h u)) inside closure(I^u) for the big height h.");

    m.def(
        "standard_suite",
        [](std::size_t instances, std::uint64_t seed) {
            SuiteOptions options;
            options.instances_per_theorem = instances;
            options.seed = seed;
            std::size_t passed = 0;
            std::vector<CheckReport> reports = run_standard_suite(options);
            for (const auto& r : reports)
                if (r.pass) ++passed;
            return std::make_pair(passed, reports.size());
        },
        py::arg("instances") = 200, py::arg("seed") = 20260819,
        "Run the randomized theorem suite; returns (passed, total).");

    m.attr("__version__") = "1.0.0";
}
