#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "banach/construct.hpp"
#include "banach/density.hpp"
#include "banach/errors.hpp"
#include "banach/intset.hpp"
#include "banach/sumset.hpp"

namespace py = pybind11;

// Python int <-> BigInt through hexadecimal text, which CPython converts
// without the digit limit it applies to decimal strings.
namespace pybind11::detail {
template <>
struct type_caster<banach::BigInt> {
  PYBIND11_TYPE_CASTER(banach::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    auto num = pybind11::reinterpret_borrow<pybind11::object>(src);
    const bool negative = PyObject_RichCompareBool(num.ptr(), pybind11::int_(0).ptr(), Py_LT) == 1;
    if (negative) num = pybind11::reinterpret_steal<pybind11::object>(PyNumber_Negative(num.ptr()));
    const auto text = pybind11::module_::import("builtins").attr("hex")(num).cast<std::string>();
    value = banach::BigInt(text);
    if (negative) value = -value;
    return true;
  }

  static handle cast(const banach::BigInt& v, return_value_policy, handle) {
    std::ostringstream hex;
    hex << std::hex << (v < 0 ? banach::BigInt(-v) : v);
    const std::string digits = (v < 0 ? "-" : "") + hex.str();
    return PyLong_FromString(digits.c_str(), nullptr, 16);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace banach;

py::object fraction(std::int64_t num, std::int64_t den) {
  return py::module_::import("fractions").attr("Fraction")(num, den);
}

std::vector<BigInt> window_elements(const ExplicitWindow& w) {
  std::vector<BigInt> out;
  for (auto k = w.bits.find_first(); k != boost::dynamic_bitset<>::npos; k = w.bits.find_next(k)) out.push_back(w.base + k);
  return out;
}

ExplicitWindow window_from_elements(const std::vector<BigInt>& elements, const BigInt& base, std::size_t length) {
  ExplicitWindow w(Window(base, length));
  for (const auto& x : elements) {
    if (x < base || x > w.window().last()) throw py::value_error("element " + to_decimal(x) + " lies outside the window");
    w.set(x);
  }
  return w;
}

PartitionScheme scheme_from(const std::string& name) {
  if (name == "residue") return PartitionScheme::Residue;
  if (name == "blocks") return PartitionScheme::Blocks;
  throw py::value_error("scheme must be 'residue' or 'blocks'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integer sets, windowed upper Banach density and sumset constructions";

  auto base = py::register_exception<Error>(m, "BanachError", PyExc_RuntimeError);
  py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());
  py::register_exception<OverlapError>(m, "OverlapError", base.ptr());
  py::register_exception<NegativeResult>(m, "NegativeResult", base.ptr());
  py::register_exception<HorizonExceeded>(m, "HorizonExceeded", base.ptr());
  py::register_exception<BadLength>(m, "BadLength", base.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());
  py::register_exception<EmptySelection>(m, "EmptySelection", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<NoSuitableRun>(m, "NoSuitableRun", base.ptr());
  py::register_exception<DisjointnessViolation>(m, "DisjointnessViolation", base.ptr());

  py::class_<Run>(m, "Run")
      .def(py::init<BigInt, BigInt>(), py::arg("start"), py::arg("length"))
      .def_property_readonly("start", &Run::start)
      .def_property_readonly("length", &Run::len)
      .def_property_readonly("end", &Run::end)
      .def("__contains__", &Run::contains)
      .def(py::self == py::self)
      .def("__repr__", [](const Run& r) {
        return "Run(" + to_decimal(r.start()) + ", " + to_decimal(r.len()) + ")";
      });

  py::class_<Window>(m, "Window")
      .def(py::init<BigInt, std::size_t>(), py::arg("base"), py::arg("length"))
      .def_readonly("base", &Window::base)
      .def_readonly("length", &Window::length)
      .def(py::self == py::self);

  py::class_<ExplicitWindow>(m, "ExplicitWindow")
      .def(py::init(&window_from_elements), py::arg("elements"), py::arg("base"), py::arg("length"))
      .def_readonly("base", &ExplicitWindow::base)
      .def_property_readonly("length", &ExplicitWindow::length)
      .def("elements", &window_elements)
      .def("__contains__", &ExplicitWindow::test)
      .def(py::self == py::self);

  py::class_<IntSet>(m, "IntSet")
      .def(py::init<>())
      .def(py::init<ExplicitWindow>())
      .def_static("pow_runs", &IntSet::pow_runs, py::arg("base"))
      .def_static("poly_runs", &IntSet::poly_runs, py::arg("exponent"))
      .def_static("congruence", &IntSet::congruence, py::arg("modulus"), py::arg("residue"))
      .def_static("full", &IntSet::full)
      .def_static("from_elements", &IntSet::from_elements, py::arg("elements"))
      .def_static("parse", &parse_set, py::arg("text"))
      .def("__contains__", &membership)
      .def("translate", &translate, py::arg("t"))
      .def("dilate", &dilate, py::arg("m"), py::arg("r") = BigInt(0))
      .def(
          "next_run",
          [](const IntSet& s, const BigInt& min_len, const BigInt& lower, std::size_t digit_budget) {
            return next_run(s, min_len, lower, SearchLimits{digit_budget});
          },
          py::arg("min_len"), py::arg("lower_bound") = BigInt(0), py::arg("digit_budget") = 100000)
      .def(
          "materialize", [](const IntSet& s, const BigInt& b, std::size_t len) { return materialize(s, Window(b, len)); },
          py::arg("base"), py::arg("length"))
      .def("is_finite", &IntSet::is_finite)
      .def("serialize", &serialize_set)
      .def("__str__", &serialize_set)
      .def(py::self == py::self)
      .def(py::pickle([](const IntSet& s) { return serialize_set(s); },
                      [](const std::string& text) { return parse_set(text); }));

  m.def("parse_set", &parse_set, py::arg("text"));
  m.def("serialize_set", &serialize_set, py::arg("set"));

  py::class_<WindowProfile>(m, "WindowProfile")
      .def_property_readonly("window", &WindowProfile::window)
      .def_property_readonly("max_length", &WindowProfile::max_length)
      .def("counts", &WindowProfile::counts)
      .def("__getitem__", [](const WindowProfile& p, std::size_t n) {
        if (n > p.max_length()) throw py::index_error("length outside the profile");
        return p[n];
      })
      .def("__len__", &WindowProfile::max_length);

  m.def("f_naive", &f_naive, py::arg("window"), py::arg("n"));
  m.def("f_profile", &f_profile, py::arg("window"));
  m.def(
      "density_estimate",
      [](const WindowProfile& p) {
        const DensityEstimate est = density_estimate(p);
        return py::make_tuple(fraction(est.value.numerator(), est.value.denominator()), est.argmin);
      },
      py::arg("profile"), "Windowed minimum of f[n]/n as (Fraction, smallest argmin).");
  m.def(
      "check_subadditivity",
      [](const WindowProfile& p) {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
        for (const auto& v : check_subadditivity(p)) out.emplace_back(v.n1, v.n2, v.excess);
        return out;
      },
      py::arg("profile"));
  m.def("fekete_qd_check", &fekete_qd_check, py::arg("profile"), py::arg("d"));
  m.def("longest_run", &longest_run, py::arg("window"));
  m.def(
      "check_run_bound",
      [](const ExplicitWindow& w, std::size_t d) { return check_run_bound(w, d).failures; }, py::arg("window"),
      py::arg("d"), "Lengths n where the run-length bound fails (always empty).");

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("status", [](const Verdict& v) { return std::string(to_string(v.status)); })
      .def_readonly("witness", &Verdict::witness)
      .def_readonly("evaluable", &Verdict::evaluable)
      .def_property_readonly("subset",
                             [](const Verdict& v) -> std::optional<std::vector<std::uint32_t>> {
                               if (!v.subset) return std::nullopt;
                               return v.subset->members();
                             })
      .def_readonly("checked", &Verdict::checked)
      .def("passed", &Verdict::passed);

  m.def(
      "run_sum", [](const std::vector<Run>& runs) { return run_sum(runs); }, py::arg("runs"));
  m.def(
      "enumerate_subsets",
      [](std::size_t k) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& s : enumerate_subsets(k)) out.push_back(s.members());
        return out;
      },
      py::arg("k"));
  m.def(
      "verify_containment",
      [](const Run& s, const IntSet& a) { return verify_containment(s, a); }, py::arg("run"), py::arg("set"));
  m.def(
      "verify_containment",
      [](const ExplicitWindow& s, const IntSet& a) { return verify_containment(s, a); }, py::arg("window"),
      py::arg("set"));

  py::class_<BSequence>(m, "BSequence")
      .def(py::init([](std::vector<std::uint64_t> ells, std::vector<BigInt> bs) {
             if (ells.size() != bs.size()) throw py::value_error("ells and bs differ in length");
             BSequence seq;
             seq.ells = std::move(ells);
             seq.bs = std::move(bs);
             return seq;
           }),
           py::arg("ells"), py::arg("bs"))
      .def_readwrite("ells", &BSequence::ells)
      .def_readwrite("bs", &BSequence::bs)
      .def_readonly("certificates", &BSequence::certificates)
      .def("interval", &BSequence::interval, py::arg("j"))
      .def("__len__", &BSequence::size);

  m.def(
      "build_b_sequence",
      [](const IntSet& a, const std::vector<std::uint64_t>& ells, std::optional<std::size_t> k,
         std::size_t digit_budget) {
        return build_b_sequence(a, ells, k.value_or(ells.size()), SearchLimits{digit_budget});
      },
      py::arg("set"), py::arg("ells"), py::arg("k") = py::none(), py::arg("digit_budget") = 100000);
  m.def("verify_b_sequence", &verify_b_sequence, py::arg("seq"), py::arg("set"), py::arg("k_limit"),
        py::arg("brute_span") = 10000);

  py::class_<BFamily>(m, "BFamily")
      .def_readonly("k_sets", &BFamily::k_sets)
      .def_readonly("index_sets", &BFamily::index_sets)
      .def_property_readonly("sets", [](const BFamily& f) {
        std::vector<std::vector<Run>> out;
        for (const auto& s : f.sets) out.push_back(s.runs());
        return out;
      });
  m.def(
      "build_family",
      [](const BSequence& seq, const std::string& scheme, std::size_t k_sets) {
        return build_family(seq, scheme_from(scheme), k_sets);
      },
      py::arg("seq"), py::arg("scheme") = "residue", py::arg("k_sets") = 2);
  m.def("verify_family", &verify_family, py::arg("family"), py::arg("set"), py::arg("brute_span") = 10000);

  py::class_<APReduction>(m, "APReduction")
      .def_readonly("m", &APReduction::m)
      .def_readonly("r", &APReduction::r)
      .def_readonly("derived", &APReduction::derived)
      .def_readonly("evidence_len", &APReduction::evidence_len)
      .def_readonly("derived_longest_run", &APReduction::derived_longest_run);
  m.def("ap_reduce", &ap_reduce, py::arg("window"), py::arg("m0"));

  py::class_<EscapeReport>(m, "EscapeReport")
      .def_readonly("t", &EscapeReport::t)
      .def_readonly("i0", &EscapeReport::i0)
      .def_readonly("i_max", &EscapeReport::i_max)
      .def_readonly("all_escaped", &EscapeReport::all_escaped)
      .def_property_readonly("chain_checks", [](const EscapeReport& r) {
        std::vector<std::tuple<std::uint64_t, bool, bool>> out;
        for (const auto& s : r.steps) out.emplace_back(s.i, s.chain, s.escaped);
        return out;
      });
  m.def("escape_i0", &escape_i0, py::arg("t"));
  m.def("verify_escape", &verify_escape, py::arg("t"), py::arg("i_max"));
}
