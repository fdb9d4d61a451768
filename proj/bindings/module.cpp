// Python bindings for the core operations: words, normal-form elements
// and their arithmetic, Green's relations, neighborhoods, the extension
// monoid, matrix units, and the verification suites.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polymon/analysis.hpp"
#include "polymon/extension.hpp"
#include "polymon/green.hpp"
#include "polymon/matrix_units.hpp"
#include "polymon/parse.hpp"
#include "polymon/suites.hpp"
#include "polymon/topology.hpp"

namespace py = pybind11;
using namespace polymon;

PYBIND11_MODULE(_polymon, m) {
  m.doc() = "exact arithmetic for polycyclic monoids and their topology";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Word>(m, "Word")
      .def(py::init<Letter>(), py::arg("alphabet"))
      .def(py::init<std::vector<Letter>, Letter>(), py::arg("letters"),
           py::arg("alphabet"))
      .def_property_readonly("alphabet", &Word::alphabet)
      .def_property_readonly("letters", &Word::letters)
      .def("__len__", &Word::size)
      .def("__str__", &Word::str)
      .def("__repr__", [](const Word& w) { return "Word(" + w.str() + ")"; })
      .def("__hash__", [](const Word& w) { return std::hash<Word>{}(w); })
      .def(py::self == py::self)
      .def(py::self < py::self);

  m.def("concat", &concat);
  m.def("strip_suffix", &strip_suffix);
  m.def("strip_head_power", [](const Word& w, Letter g) {
    const HeadPower hp = strip_head_power(w, g);
    return py::make_tuple(hp.count, hp.tail);
  });
  m.def("suffixes", [](const Word& w) {
    const WordSet s = suffixes(w);
    return std::vector<Word>(s.begin(), s.end());
  });
  m.def("enumerate_words", &enumerate_words, py::arg("alphabet"), py::arg("max_len"));

  py::class_<PElement>(m, "PElement")
      .def_static("zero", &PElement::zero, py::arg("alphabet") = 2)
      .def_static("one", &PElement::one, py::arg("alphabet") = 2)
      .def_static("pair", &PElement::pair, py::arg("u"), py::arg("v"))
      .def_property_readonly("is_zero", &PElement::is_zero)
      .def_property_readonly("alphabet", &PElement::alphabet)
      .def_property_readonly("left", &PElement::left)
      .def_property_readonly("right", &PElement::right)
      .def("__str__", &PElement::str)
      .def("__repr__", [](const PElement& x) { return "PElement(" + x.str() + ")"; })
      .def("__hash__", [](const PElement& x) { return std::hash<PElement>{}(x); })
      .def(py::self == py::self)
      .def("__mul__",
           [](const PElement& a, const PElement& b) { return multiply(a, b); })
      .def("inverse", [](const PElement& x) { return invert(x); });

  m.def("multiply", py::overload_cast<const PElement&, const PElement&>(&multiply));
  m.def("invert", py::overload_cast<const PElement&>(&invert));
  m.def("is_idempotent", py::overload_cast<const PElement&>(&is_idempotent));
  m.def("nat_leq", &nat_leq);
  m.def("enumerate_ball", &enumerate_ball, py::arg("alphabet"), py::arg("max_len"));

  m.def("parse_element", [](const std::string& text, Letter alphabet) {
    return eval_expr(parse_expr(text, alphabet));
  }, py::arg("text"), py::arg("alphabet") = 2);
  m.def("render", py::overload_cast<const PElement&>(&render));

  py::class_<BicyclicElem>(m, "BicyclicElem")
      .def(py::init([](std::uint64_t k, std::uint64_t l) {
             return BicyclicElem{k, l};
           }),
           py::arg("k"), py::arg("l"))
      .def_readonly("k", &BicyclicElem::k)
      .def_readonly("l", &BicyclicElem::l)
      .def(py::self == py::self);
  m.def("bicyclic_mul", &bicyclic_mul);
  m.def("embed_bicyclic", &embed_bicyclic);

  m.def("rr", &rr);
  m.def("ll", &ll);
  m.def("green_r", &green_r);
  m.def("green_l", &green_l);
  m.def("green_h", &green_h);
  m.def("green_d", &green_d);

  py::class_<DWitness>(m, "DWitness")
      .def_readonly("b", &DWitness::b)
      .def_readonly("s", &DWitness::s)
      .def_readonly("s_prime", &DWitness::s_prime)
      .def_readonly("t", &DWitness::t)
      .def_readonly("t_prime", &DWitness::t_prime);
  m.def("d_witness", &d_witness);

  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init<Word, Word>(), py::arg("preperiod"), py::arg("period"))
      .def_readonly("preperiod", &ChainSpec::preperiod)
      .def_readonly("period", &ChainSpec::period);
  m.def("chain_prefix", &chain_prefix);
  m.def("is_omega_chain_prefix", &is_omega_chain_prefix);

  py::class_<BElement>(m, "BElement")
      .def_static("zero", &BElement::zero)
      .def_static("unit", &BElement::unit, py::arg("i"), py::arg("j"))
      .def_property_readonly("is_zero", &BElement::is_zero)
      .def_property_readonly("i", &BElement::i)
      .def_property_readonly("j", &BElement::j)
      .def("__str__", &BElement::str)
      .def(py::self == py::self)
      .def("__mul__",
           [](const BElement& a, const BElement& b) { return multiply(a, b); })
      .def("inverse", [](const BElement& x) { return invert(x); });

  py::class_<BasicNbhd>(m, "BasicNbhd")
      .def(py::init([](const std::vector<Word>& words, Letter alphabet) {
             return BasicNbhd{WordSet(words, alphabet)};
           }),
           py::arg("words"), py::arg("alphabet") = 2)
      .def_property_readonly("words",
                             [](const BasicNbhd& a) {
                               return std::vector<Word>(a.words().begin(),
                                                        a.words().end());
                             })
      .def("contains", &BasicNbhd::contains);
  m.def("hausdorff_witness", &hausdorff_witness);
  m.def("right_translation_witness", &right_translation_witness);
  m.def("left_translation_witness", &left_translation_witness);
  m.def("multiplication_witness", &multiplication_witness);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("ok", &CheckResult::ok)
      .def_readonly("counterexample", &CheckResult::counterexample)
      .def_readonly("detail", &CheckResult::detail)
      .def("__bool__", [](const CheckResult& r) { return r.ok; });
  m.def("inversion_witness_check", &inversion_witness_check);
  m.def("coarseness_identity_check", &coarseness_identity_check);

  py::class_<ChainIntersection>(m, "ChainIntersection")
      .def_readonly("hits", &ChainIntersection::hits)
      .def_readonly("misses", &ChainIntersection::misses);
  m.def("chain_intersection_check", &chain_intersection_check);

  py::class_<FilterDesc>(m, "FilterDesc")
      .def(py::init<Word, Word>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &FilterDesc::a)
      .def_property_readonly("b", &FilterDesc::b)
      .def("__str__", &FilterDesc::str)
      .def(py::self == py::self);
  m.def("normalize_filter", &normalize_filter);

  py::class_<SElement>(m, "SElement")
      .def(py::init<PElement>(), py::arg("finite"))
      .def(py::init<FilterDesc>(), py::arg("filter"))
      .def_property_readonly("is_finite", &SElement::is_finite)
      .def_property_readonly("is_filter", &SElement::is_filter)
      .def_property_readonly("is_zero", &SElement::is_zero)
      .def_property_readonly("finite", &SElement::finite)
      .def_property_readonly("filter", &SElement::filter)
      .def("__str__", &SElement::str)
      .def(py::self == py::self)
      .def("__mul__",
           [](const SElement& a, const SElement& b) { return multiply(a, b); })
      .def("inverse", [](const SElement& x) { return invert(x); });

  m.def("s_multiply", py::overload_cast<const SElement&, const SElement&>(&multiply));
  m.def("s_invert", py::overload_cast<const SElement&>(&invert));
  m.def("parse_s_literal", &parse_s_literal);

  py::class_<SNbhd>(m, "SNbhd")
      .def(py::init<FilterDesc, std::size_t>(), py::arg("center"), py::arg("n"))
      .def_property_readonly("center", &SNbhd::center)
      .def_property_readonly("n", &SNbhd::n)
      .def("contains", &SNbhd::contains);

  m.def("right_continuity_witness", &right_continuity_witness);
  m.def("left_continuity_witness", &left_continuity_witness);
  m.def("mul_continuity_witness", &mul_continuity_witness);
  m.def("headfree_index", &headfree_index);
  m.def("headfree_word", &headfree_word);
  m.def("t_isomorphism", &t_isomorphism);
  m.def("density_check", &density_check);
  m.def("dichotomy_check", &dichotomy_check);

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("suite", &SuiteReport::suite)
      .def_readonly("cases", &SuiteReport::cases)
      .def_readonly("failures", &SuiteReport::failures)
      .def_readonly("seed", &SuiteReport::seed)
      .def("passed", &SuiteReport::passed);

  py::enum_<CongruenceStatus>(m, "CongruenceStatus")
      .value("Collapsed", CongruenceStatus::Collapsed)
      .value("Inconclusive", CongruenceStatus::Inconclusive);

  py::class_<CongruenceState>(m, "CongruenceState")
      .def_property_readonly("status", &CongruenceState::status)
      .def_property_readonly("multiplier_depth", &CongruenceState::multiplier_depth)
      .def_property_readonly("touched", &CongruenceState::touched)
      .def("same_class", &CongruenceState::same_class);
  m.def("congruence_saturate", &congruence_saturate, py::arg("x"), py::arg("y"),
        py::arg("ball_len") = 10, py::arg("mult_len") = 4);

  auto checks = m.def_submodule("checks", "verification suites");
  checks.def("oracle_equivalence", &suites::oracle_equivalence, py::arg("max_len") = 3);
  checks.def("inverse_axioms", &suites::inverse_axioms, py::arg("max_len") = 3);
  checks.def("associativity", &suites::associativity, py::arg("samples") = 100000,
             py::arg("seed") = 1);
  checks.def("zero_e_unitary", &suites::zero_e_unitary, py::arg("max_len") = 4);
  checks.def("translation_witnesses", &suites::translation_witnesses,
             py::arg("member_len") = 2, py::arg("max_set") = 3, py::arg("trans_len") = 2,
             py::arg("ball_len") = 6);
  checks.def("coarseness", &suites::coarseness, py::arg("member_len") = 2,
             py::arg("max_set") = 3, py::arg("ball_len") = 6);
  checks.def("chain_intersections", &suites::chain_intersections,
             py::arg("spec_len") = 2, py::arg("member_len") = 2, py::arg("max_set") = 3,
             py::arg("prefix_len") = 50);
  checks.def("extension_cases", &suites::extension_cases, py::arg("max_len") = 6);
  checks.def("extension_limits", &suites::extension_limits, py::arg("word_len") = 3,
             py::arg("n") = 1, py::arg("window") = 10);
  checks.def("extension_mul_continuity", &suites::extension_mul_continuity,
             py::arg("word_len") = 3, py::arg("n") = 1, py::arg("window") = 6);
  checks.def("extension_hausdorff", &suites::extension_hausdorff,
             py::arg("word_len") = 3, py::arg("max_n") = 3, py::arg("window") = 5);
  checks.def("matrix_unit_isomorphism", &suites::matrix_unit_isomorphism,
             py::arg("max_index") = 50);
  checks.def("congruence_collapse", &suites::congruence_collapse,
             py::arg("word_len") = 2, py::arg("ball_len") = 10, py::arg("mult_len") = 4);
  checks.def("omega_chains", &suites::omega_chains, py::arg("prefix_len") = 20);
}
