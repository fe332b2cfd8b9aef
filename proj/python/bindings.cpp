#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hpd/profile_io.hpp"
#include "hpd/prover.hpp"
#include "hpd/render.hpp"
#include "hpd/synthesis.hpp"

namespace py = pybind11;
using namespace hpd;

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(q.numerator(), q.denominator());
}

std::vector<std::string> box_names(const Region& r) {
  std::vector<std::string> out;
  for (const auto& b : r) out.push_back(to_string(b));
  return out;
}

py::dict report_dict(const DecompositionReport& r) {
  py::list comps;
  for (const auto& c : r.components)
    comps.append(py::make_tuple(c.description, c.euler ? py::cast(*c.euler) : py::none()));
  py::dict d;
  d["target"] = to_string(r.target);
  d["components"] = comps;
  d["omitted"] = r.omitted;
  d["ambient_euler"] = r.ambient_euler();
  d["total"] = r.total_expr();
  return d;
}

RenderOptions options(const std::string& format, int cell) {
  RenderOptions o;
  if (format == "svg") o.format = Format::SVG;
  else if (format != "text") throw RenderError("format must be 'text' or 'svg'");
  o.cell = cell;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lefschetz profiles, chessboard proofs and Euler bookkeeping";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ProfileError>(m, "ProfileError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<SpecMismatch>(m, "SpecMismatch", PyExc_ValueError);
  py::register_exception<SymbolError>(m, "SymbolError", PyExc_ValueError);
  py::register_exception<RenderError>(m, "RenderError", PyExc_ValueError);

  py::class_<LefschetzProfile>(m, "Profile")
      .def_readonly("name", &LefschetzProfile::name)
      .def_readonly("N", &LefschetzProfile::N)
      .def_property_readonly("length", &LefschetzProfile::length)
      .def_property_readonly("evec", &LefschetzProfile::evec)
      .def_property_readonly("labels",
                             [](const LefschetzProfile& p) {
                               std::vector<std::string> out;
                               for (const auto& b : p.blocks) out.push_back(b.label);
                               return out;
                             })
      .def_property_readonly("orientation", [](const LefschetzProfile& p) { return to_string(p.orientation); })
      .def("__eq__", [](const LefschetzProfile& a, const LefschetzProfile& b) { return a == b; })
      .def("__repr__", [](const LefschetzProfile& p) {
        std::string e;
        for (auto x : p.evec()) e += (e.empty() ? "" : ",") + std::to_string(x);
        return "Profile(" + p.name + ", N=" + std::to_string(p.N) + ", e=(" + e + "))";
      });

  m.def(
      "make_profile",
      [](const std::string& name, int N, const std::vector<long long>& e, bool dual, const std::string& prefix) {
        return make_profile(name, N, e, dual ? Orientation::DualLefschetz : Orientation::Lefschetz, prefix);
      },
      py::arg("name"), py::arg("N"), py::arg("e"), py::arg("dual") = false, py::arg("label_prefix") = "a");
  m.def("parse_profile", &parse_profile);
  m.def("serialize_profile", &serialize_profile);
  m.def("validate_profile", [](const LefschetzProfile& p) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : validate_profile(p))
      out.emplace_back(v.severity == Violation::Severity::Error ? "error" : "warning", v.reason);
    return out;
  });
  m.def("is_valid", &is_valid);
  m.def("euler_ambient", &euler_ambient);
  m.def("euler_total", &euler_total);
  m.def("is_rectangular", &is_rectangular);
  m.def("dualize", &dualize);
  m.def("dualize_by_widths", &dualize_by_widths);

  py::class_<ChessboardSpec>(m, "Spec")
      .def(py::init([](const LefschetzProfile& X, const LefschetzProfile& S) {
             ChessboardSpec s{X, S};
             validate_spec(s);
             return s;
           }),
           py::arg("X"), py::arg("S"))
      .def_readonly("X", &ChessboardSpec::X)
      .def_readonly("S", &ChessboardSpec::S)
      .def_property_readonly("i", &ChessboardSpec::i)
      .def_property_readonly("l", &ChessboardSpec::l)
      .def_property_readonly("N", &ChessboardSpec::N);
  m.def("generic_spec", &generic_spec, py::arg("i"), py::arg("l"), py::arg("N"));

  m.def("staircase_pi_T", [](int k, const ChessboardSpec& s) { return box_names(staircase_pi_T(k, s)); });
  m.def("staircase_pi_S", [](int k, const ChessboardSpec& s) { return box_names(staircase_pi_S(k, s)); });
  m.def("staircase_E", [](const ChessboardSpec& s) { return box_names(staircase_E(s)); });
  m.def("mutated_pi_T", [](int k, const ChessboardSpec& s) {
    return box_names(mutate_region(Region{pi_T_source(k, s)}, pi_T_sequence(s), s));
  });
  m.def("mutated_pi_S", [](int k, const ChessboardSpec& s) {
    return box_names(mutate_region(Region{pi_S_source(k, s)}, pi_S_sequence(s), s));
  });
  m.def("hom_vanishes_amb", [](const LefschetzProfile& p, int a, int s, int b, int t) {
    const auto v = hom_vanishes_factor(amb(Side::X, a, s), amb(Side::X, b, t), p);
    return py::make_tuple(v.vanishes(), v.rule);
  });

  py::class_<ProofTrace>(m, "Trace")
      .def_property_readonly("success", &ProofTrace::success)
      .def_property_readonly("failed_count", &ProofTrace::failed_count)
      .def("__len__", [](const ProofTrace& t) { return t.obligations.size(); })
      .def_readonly("notes", &ProofTrace::notes)
      .def("rows",
           [](const ProofTrace& t) {
             py::list out;
             for (const auto& o : t.obligations)
               out.append(py::make_tuple(to_string(o.phase), o.family, o.source_text, o.target_text, o.rule,
                                         o.discharged));
             return out;
           })
      .def("serialize", &serialize_trace)
      .def("reverify", &reverify);
  m.def("check_ff_pi_T", &check_ff_pi_T);
  m.def("check_ff_pi_S", &check_ff_pi_S);
  m.def("check_generation", [](const ChessboardSpec& s) { return check_generation(s); });
  m.def("check_main_theorem", &check_main_theorem);
  m.def(
      "run_sweep",
      [](int i_lo, int i_hi, int l_lo, int l_hi, int n_max, unsigned jobs) {
        std::vector<SweepPoint> pts;
        {
          py::gil_scoped_release release;
          pts = run_sweep(SweepRange{i_lo, i_hi, l_lo, l_hi, n_max, 0}, jobs);
        }
        std::vector<std::tuple<int, int, int, bool, size_t>> out;
        for (const auto& p : pts) out.emplace_back(p.i, p.l, p.N, p.success, p.obligations);
        return out;
      },
      py::arg("i_lo"), py::arg("i_hi"), py::arg("l_lo"), py::arg("l_hi"), py::arg("n_max"), py::arg("jobs") = 1);

  m.def("decompose_Y", [](const LefschetzProfile& p) { return report_dict(decompose_Y(p)); });
  m.def("decompose_T", [](const LefschetzProfile& p) { return report_dict(decompose_T(p)); });
  m.def("intersect_decompositions", [](const LefschetzProfile& X, const LefschetzProfile& S) {
    const auto [xt, ys] = intersect_decompositions(X, S);
    return py::make_tuple(report_dict(xt), report_dict(ys));
  });
  m.def("plucker_check", [](long long x, long long y, long long s, long long t, long long xt, long long ys,
                            long long N) {
    const auto r = plucker_check(x, y, s, t, xt, ys, N);
    return py::make_tuple(r.holds, fraction(r.lhs), fraction(r.rhs));
  });
  m.def("plucker_predict", [](const LefschetzProfile& X, const LefschetzProfile& S, long long chiXT) {
    return fraction(plucker_predict(X, S, chiXT).value);
  });
  m.def("euler_H_consistency", [](const LefschetzProfile& X, const LefschetzProfile& S, long long xt, long long ys) {
    const auto e = euler_H_consistency(X, S, xt, ys);
    return py::make_tuple(e.holds, fraction(e.via_XT), fraction(e.via_YS));
  });
  m.def("find_example", [](const std::string& name) -> py::object {
    const auto r = find_example(builtin_examples(), name);
    if (!r) return py::none();
    py::dict d;
    d["name"] = r->name;
    d["title"] = r->title;
    d["N"] = r->N;
    d["chiX"] = r->chiX;
    d["chiY"] = r->chiY;
    d["chiS"] = r->chiS;
    d["chiT"] = r->chiT;
    d["chiXT"] = r->chiXT ? py::cast(*r->chiXT) : py::none();
    d["chiYS"] = r->chiYS ? py::cast(*r->chiYS) : py::none();
    d["source"] = r->source;
    d["profiles"] = r->profiles ? py::cast(*r->profiles) : py::none();
    return d;
  });
  m.def("example_names", [] {
    std::vector<std::string> out;
    for (const auto& r : builtin_examples()) out.push_back(r.name);
    return out;
  });

  m.def(
      "render_profile",
      [](const LefschetzProfile& p, const std::string& format, int cell) {
        return render_profile_pair(p, options(format, cell));
      },
      py::arg("profile"), py::arg("format") = "text", py::arg("cell") = 24);
  m.def(
      "render_chessboard",
      [](const ChessboardSpec& s, const std::string& format, int cell, bool cl) {
        auto o = options(format, cell);
        o.cl_columns = cl;
        return render_chessboard(s, o);
      },
      py::arg("spec"), py::arg("format") = "text", py::arg("cell") = 24, py::arg("cl_columns") = false);
  m.def(
      "render_trace",
      [](const ProofTrace& t, const std::string& format, int cell) { return render_trace(t, options(format, cell)); },
      py::arg("trace"), py::arg("format") = "text", py::arg("cell") = 24);
}
