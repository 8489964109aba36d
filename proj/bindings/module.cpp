#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ignatiev/frame.hpp"
#include "ignatiev/logic.hpp"
#include "ignatiev/oracle.hpp"
#include "ignatiev/verify.hpp"

namespace py = pybind11;
using namespace ign;

namespace {

int sign_of(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return -1;
  if (o == std::strong_ordering::greater) return 1;
  return 0;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ordinal arithmetic below epsilon_0, the Ignatiev algebra, and its frame of filters";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ChainViolation>(m, "ChainViolation", PyExc_ValueError);
  py::register_exception<NotSuitable>(m, "NotSuitable", PyExc_ValueError);
  py::register_exception<NoMaximum>(m, "NoMaximum", PyExc_RuntimeError);

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init<>())
      .def(py::init<std::uint64_t>())
      .def_static("parse", &parse_ordinal)
      .def_static("omega", &Ordinal::omega)
      .def("is_zero", &Ordinal::is_zero)
      .def("__str__", &format_ordinal)
      .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + format_ordinal(a) + "')"; })
      .def("__eq__", [](const Ordinal& a, const Ordinal& b) { return a == b; })
      .def("__lt__", [](const Ordinal& a, const Ordinal& b) { return cmp(a, b) < 0; })
      .def("__le__", [](const Ordinal& a, const Ordinal& b) { return cmp(a, b) <= 0; })
      .def("__add__", [](const Ordinal& a, const Ordinal& b) { return add(a, b); })
      .def("__hash__", [](const Ordinal& a) { return py::hash(py::str(format_ordinal(a))); });

  m.def("cmp", [](const Ordinal& a, const Ordinal& b) { return sign_of(cmp(a, b)); });
  m.def("add", [](const Ordinal& a, const Ordinal& b) { return add(a, b); });
  m.def("omega_pow", [](const Ordinal& a) { return omega_pow(a); });
  m.def("ell", [](const Ordinal& a) { return ell(a); });
  m.def("is_limit", [](const Ordinal& a) { return is_limit(a); });
  m.def("is_successor", [](const Ordinal& a) { return is_successor(a); });
  m.def("pred", [](const Ordinal& a) { return pred(a); });
  m.def("omega_tower", &omega_tower, py::arg("height"), py::arg("base"));
  m.def("decompose_last", &decompose_last);
  m.def("parse_ordinal", &parse_ordinal);
  m.def("format_ordinal", &format_ordinal);

  py::class_<ExtOrdinal>(m, "ExtOrdinal")
      .def(py::init<>())
      .def(py::init<Ordinal>())
      .def_static("parse", &parse_ext_ordinal)
      .def_static("epsilon_zero", &ExtOrdinal::epsilon_zero)
      .def("is_epsilon_zero", &ExtOrdinal::is_epsilon_zero)
      .def("ordinal", &ExtOrdinal::ordinal)
      .def("__str__", &format_ext_ordinal)
      .def("__repr__",
           [](const ExtOrdinal& a) { return "ExtOrdinal('" + format_ext_ordinal(a) + "')"; })
      .def("__eq__", [](const ExtOrdinal& a, const ExtOrdinal& b) { return a == b; })
      .def("__lt__", [](const ExtOrdinal& a, const ExtOrdinal& b) { return cmp(a, b) < 0; })
      .def("__le__", [](const ExtOrdinal& a, const ExtOrdinal& b) { return cmp(a, b) <= 0; });

  py::class_<IgnatievPoint>(m, "Point")
      .def(py::init<>())
      .def_static("parse", &parse_point)
      .def_static("top", &IgnatievPoint::top)
      .def_static("make", &IgnatievPoint::make)
      .def("coordinate", &IgnatievPoint::coordinate)
      .def("support", &IgnatievPoint::support)
      .def("is_top", &IgnatievPoint::is_top)
      .def("coords", &IgnatievPoint::coords)
      .def("__str__", &format_point)
      .def("__repr__", [](const IgnatievPoint& p) { return "Point('" + format_point(p) + "')"; })
      .def("__eq__", [](const IgnatievPoint& a, const IgnatievPoint& b) { return a == b; })
      .def("__hash__",
           [](const IgnatievPoint& p) { return py::hash(py::str(format_point(p))); });

  m.def("make_point", &make_point);
  m.def("leq", &leq);
  m.def("glb", &glb);
  m.def("diamond", &diamond, py::arg("n"), py::arg("p"));
  m.def("nabla", &nabla, py::arg("n"), py::arg("p"));
  m.def("parse_point", &parse_point);
  m.def("format_point", &format_point);

  py::enum_<Tail>(m, "Tail")
      .value("ONE", Tail::One)
      .value("EPSILON_ZERO", Tail::EpsilonZero);

  py::class_<SuitableSequence>(m, "SuitableSequence")
      .def_static("parse", &parse_sequence)
      .def_static("make", &SuitableSequence::make)
      .def_static("all_ones", &SuitableSequence::all_ones)
      .def_static("improper", &SuitableSequence::improper)
      .def("at", &SuitableSequence::at)
      .def("prefix", &SuitableSequence::prefix)
      .def("tail", &SuitableSequence::tail)
      .def("__str__", &format_sequence)
      .def("__repr__",
           [](const SuitableSequence& s) { return "SuitableSequence('" + format_sequence(s) + "')"; })
      .def("__eq__",
           [](const SuitableSequence& a, const SuitableSequence& b) { return a == b; });

  m.def("is_suitable", [](const std::string& text) {
    auto [prefix, tail] = parse_raw_sequence(text);
    return is_suitable(prefix, tail);
  });
  m.def("suitability_violation", [](const std::string& text) -> std::optional<std::size_t> {
    auto [prefix, tail] = parse_raw_sequence(text);
    return suitability_violation(prefix, tail);
  });
  m.def("principal_filter_sequence", &principal_filter_sequence);
  m.def("member", &member);
  m.def("sigma", &sigma, py::arg("n"), py::arg("f"));
  m.def("rel_S", &rel_S, py::arg("n"), py::arg("f"), py::arg("g"));
  m.def("rel_R", &rel_R, py::arg("n"), py::arg("f"), py::arg("g"));
  m.def("forces", &forces);
  m.def("witness_R", &witness_R, py::arg("n"), py::arg("f"), py::arg("a"));
  m.def("parse_sequence", &parse_sequence);
  m.def("format_sequence", &format_sequence);

  py::class_<Formula>(m, "Formula")
      .def_static("parse", &parse_formula)
      .def_static("top", &Formula::top)
      .def_static("conj", &Formula::conj)
      .def_static("dia", &Formula::dia)
      .def_static("nabla", &Formula::nabla)
      .def("__str__", &print_formula)
      .def("__repr__", [](const Formula& a) { return "Formula('" + print_formula(a) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; });

  m.def("parse_formula", &parse_formula);
  m.def("print_formula", &print_formula);
  m.def("eval", &eval);
  m.def("entails", &entails);

  py::class_<EnumerationBound>(m, "EnumerationBound")
      .def(py::init([](unsigned height, unsigned terms, unsigned coeff, unsigned support) {
             return EnumerationBound{height, terms, coeff, support};
           }),
           py::arg("max_height") = 3, py::arg("max_terms") = 3, py::arg("max_coeff") = 3,
           py::arg("max_support") = 3)
      .def_readwrite("max_height", &EnumerationBound::max_height)
      .def_readwrite("max_terms", &EnumerationBound::max_terms)
      .def_readwrite("max_coeff", &EnumerationBound::max_coeff)
      .def_readwrite("max_support", &EnumerationBound::max_support);

  m.def("enumerate_ordinals", &enumerate_ordinals);
  m.def("enumerate_points", &enumerate_points);
  m.def("enumerate_suitable_sequences", &enumerate_suitable_sequences);
  m.def("brute_glb",
        [](const IgnatievPoint& p, const IgnatievPoint& q, const EnumerationBound& b) {
          return brute_glb(p, q, b);
        });
  m.def("check_filter_closure",
        [](const SuitableSequence& f, const EnumerationBound& b) {
          auto rep = check_filter_closure(f, b);
          return py::make_tuple(rep.passed, rep.detail);
        });

  m.def("run_suites", [](const std::string& which, const EnumerationBound& b) {
    py::list out;
    for (const auto& r : ign::verify::run_suites(which, b)) {
      out.append(py::make_tuple(r.name, r.passed, r.detail, r.cases));
    }
    return out;
  });
}
