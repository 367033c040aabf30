#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reversive/closed_forms.hpp"
#include "reversive/dissection_oracle.hpp"
#include "reversive/exact_arith.hpp"
#include "reversive/lagrange.hpp"
#include "reversive/symbols.hpp"

namespace py = pybind11;

// Integer <-> Python int, through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) {
            return false;
        }
        value.set_str(std::string(py::str(src)), 10);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

reversive::LagrangeStrategy strategy_from(const std::string& name) {
    if (name == "incremental") return reversive::LagrangeStrategy::Incremental;
    if (name == "per_term") return reversive::LagrangeStrategy::PerTermPowers;
    throw py::value_error("strategy must be 'incremental' or 'per_term'");
}

}  // namespace

PYBIND11_MODULE(_reversive, m) {
    using namespace reversive;
    m.doc() = "Reversive symbols, Lagrange inversion and dissection oracles";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "ReversiveError", PyExc_ValueError);
    py::register_exception<DivisibilityViolation>(m, "DivisibilityViolation", base.ptr());
    py::register_exception<ZeroDivisor>(m, "ZeroDivisor", base.ptr());
    py::register_exception<NonIntegerCoefficient>(m, "NonIntegerCoefficient", base.ptr());
    py::register_exception<InvalidSymbol>(m, "InvalidSymbol", base.ptr());
    py::register_exception<InvalidTileSet>(m, "InvalidTileSet", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<UnknownName>(m, "UnknownName", base.ptr());

    py::enum_<SequenceId>(m, "SequenceId")
        .value("TriangleFree", SequenceId::TriangleFree)
        .value("OddTiles", SequenceId::OddTiles)
        .value("EvenTiles", SequenceId::EvenTiles)
        .value("Schroeder", SequenceId::Schroeder)
        .value("Catalan", SequenceId::Catalan)
        .value("Motzkin", SequenceId::Motzkin);

    py::class_<ReversiveSymbol>(m, "ReversiveSymbol")
        .def(py::init([](std::string name, std::vector<mpz_class> num, std::vector<mpz_class> den) {
                 return ReversiveSymbol(std::move(name), Polynomial(std::move(num)),
                                        Polynomial(std::move(den)));
             }),
             py::arg("name"), py::arg("numerator"), py::arg("denominator"))
        .def_property_readonly("name", &ReversiveSymbol::name)
        .def_property_readonly("numerator",
                               [](const ReversiveSymbol& s) { return s.numerator().coeffs(); })
        .def_property_readonly("denominator",
                               [](const ReversiveSymbol& s) { return s.denominator().coeffs(); })
        .def("equivalent", &ReversiveSymbol::equivalent)
        .def("__eq__", [](const ReversiveSymbol& a, const ReversiveSymbol& b) { return a == b; })
        .def("__str__", &format_symbol)
        .def("__repr__", [](const ReversiveSymbol& s) { return "ReversiveSymbol('" + format_symbol(s) + "')"; });

    py::class_<TileRule>(m, "TileRule")
        .def_static("parse", &parse_tile_rule)
        .def("allows", &TileRule::allows)
        .def("describe", &TileRule::describe)
        .def("__str__", &TileRule::describe);

    m.def("binomial", py::overload_cast<const Integer&, long>(&binomial), py::arg("r"), py::arg("k"));
    m.def("exact_div", &exact_div, py::arg("a"), py::arg("b"));

    m.def("catalog", [] {
        py::list out;
        for (const auto& e : catalog()) {
            py::dict d;
            d["id"] = e.id;
            d["symbol"] = e.symbol;
            d["rule"] = e.rule ? py::cast(*e.rule) : py::none();
            out.append(d);
        }
        return out;
    });
    m.def("catalog_symbol", [](const std::string& name) { return catalog_entry(name).symbol; });
    m.def("parse_symbol", &parse_symbol);
    m.def("format_symbol", &format_symbol);
    m.def("symbol_from_tile_rule", [](const std::string& spec) {
        return symbol_from_tile_rule(parse_tile_rule(spec));
    });
    m.def("expand", [](const ReversiveSymbol& s, std::size_t precision) {
        const TruncatedSeries series = expand(s, precision);
        std::vector<std::string> out;
        for (const auto& c : series.coeffs()) {
            out.push_back(c.get_str());
        }
        return out;
    }, "Taylor coefficients as exact rational strings");

    m.def("lagrange_coefficients",
          [](const ReversiveSymbol& s, std::size_t max_index, const std::string& strategy) {
              return lagrange_coefficients(s, max_index, strategy_from(strategy));
          },
          py::arg("symbol"), py::arg("max_index"), py::arg("strategy") = "incremental");
    m.def("reversion_coefficients", &reversion_coefficients, py::arg("symbol"), py::arg("max_index"));
    m.def("verify_inverse", &verify_inverse);
    m.def("verify_tautological", [](const std::string& rule, const std::vector<Integer>& terms) {
        return verify_tautological(parse_tile_rule(rule), terms);
    });

    m.def("triangle_free_term", &triangle_free_term);
    m.def("odd_term", &odd_term);
    m.def("even_term", &even_term);
    m.def("schroeder_term", &schroeder_term);
    m.def("catalan_term", &catalan_term);
    m.def("motzkin_term", &motzkin_term);

    m.def("enumerate_count", [](int n, const std::string& rule, int cap) {
        py::gil_scoped_release release;
        return enumerate_count(n, parse_tile_rule(rule), cap);
    }, py::arg("n"), py::arg("rule"), py::arg("cap") = kDefaultExhaustiveCap);
    m.def("count_by_series", [](int n_max, const std::string& rule) {
        return count_by_series(n_max, parse_tile_rule(rule));
    });
    m.def("count_chord_diagrams", &count_chord_diagrams, py::arg("p"), py::arg("cap") = kDefaultChordCap);
}
