// Python bindings: bundle-level access to the main operations. Heavy lifting
// stays in cotwist_core; everything crosses the boundary as documents,
// reports, or plain strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cotwist/catalog.hpp"
#include "cotwist/cocycles.hpp"
#include "cotwist/exprlang.hpp"
#include "cotwist/galois.hpp"
#include "cotwist/theorems.hpp"

namespace py = pybind11;
using namespace cotwist;

namespace {

CheckReport run_check(const std::string& kind, const Bundle& b) {
  if (kind == "hopf") return check_hopf(hopf_from_bundle(b));
  if (kind == "modcoalg") return check_module_coalgebra(modcoalg_from_bundle(b));
  if (kind == "twisting") return check_right_twisting(right_twist_from_bundle(b));
  if (kind == "left-twisting") return check_left_twisting(left_twist_from_bundle(b));
  if (kind == "weak-coaction")
    return check_weak_coaction(weak_coaction_from_bundle(b));
  if (kind == "harrison") return check_harrison(harrison_from_bundle(b));
  if (kind == "twisted-cocycle")
    return check_twisted_cocycle(twisted_cocycle_from_bundle(b));
  if (kind == "witness") return check_witness(witness_from_bundle(b));
  if (kind == "galois") {
    ModuleCoalgebra mc = modcoalg_from_bundle(b);
    CheckReport rep;
    auto res = check_galois(mc);
    if (auto* cert = std::get_if<GaloisCertificate>(&res)) {
      rep.add_pass("beta-bijective");
      rep.merge("diamond", check_diamond(*cert));
    } else {
      rep.add_fail("beta-bijective");
    }
    return rep;
  }
  throw UnknownName("unknown check kind \"" + kind + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations with twistings of module coalgebras, crossed "
            "coproducts and Hopf-Galois coextensions";

  py::register_exception<Error>(m, "CotwistError");

  py::class_<FieldSpec>(m, "FieldSpec")
      .def_static("rationals", &FieldSpec::rationals)
      .def_static("prime", &FieldSpec::prime, py::arg("p"))
      .def_readonly("characteristic", &FieldSpec::characteristic)
      .def("__repr__", [](const FieldSpec& f) { return "FieldSpec(" + f.str() + ")"; })
      .def("__eq__", [](const FieldSpec& a, const FieldSpec& b) { return a == b; });

  py::class_<Bundle>(m, "Bundle")
      .def_static("from_json", &bundle_from_json, py::arg("text"))
      .def("to_json", &bundle_to_json)
      .def("__repr__", [](const Bundle& b) {
        return "Bundle(" + std::to_string(b.spaces.size()) + " spaces, " +
               std::to_string(b.maps.size()) + " maps over " + b.field.str() + ")";
      });

  py::class_<CheckReport>(m, "Report")
      .def("ok", &CheckReport::ok)
      .def("text", &CheckReport::text)
      .def("json", &CheckReport::json_str)
      .def("entries",
           [](const CheckReport& r) {
             std::vector<std::pair<std::string, bool>> out;
             for (const auto& e : r.entries()) out.emplace_back(e.name, e.pass);
             return out;
           })
      .def("__repr__", [](const CheckReport& r) {
        return std::string("Report(") + (r.ok() ? "pass" : "fail") + ", " +
               std::to_string(r.entries().size()) + " checks)";
      });

  m.def("builtin", &builtin, py::arg("name"), py::arg("field"));
  m.def("builtin_names", [] { return builtin_names(); });
  m.def("theorem_ids", [] { return theorem_ids(); });

  m.def("check", &run_check, py::arg("kind"), py::arg("bundle"),
        "run a structure checker; kinds as in the CLI");

  m.def("verify_theorem", &verify_theorem, py::arg("theorem"), py::arg("instance"),
        py::arg("field"));
  m.def(
      "verify_suite",
      [](const std::string& theorem) { return run_suite(default_suite(theorem)); },
      py::arg("theorem"), "run the default per-theorem suite over Q and F5");

  m.def(
      "crossed_to_twisting",
      [](const Bundle& b) {
        return bundle_from_right_twist(twisting_from_crossed(harrison_from_bundle(b)),
                                       "twisting of C (x) H");
      },
      py::arg("harrison"));
  m.def(
      "crossed_build",
      [](const Bundle& b) {
        return bundle_from_modcoalg(build_crossed(harrison_from_bundle(b)).mc,
                                    "crossed coproduct");
      },
      py::arg("harrison"));
  m.def(
      "twist",
      [](const Bundle& mcb, const Bundle& tb) {
        ModuleCoalgebra mc = modcoalg_from_bundle(mcb);
        RightTwist t = right_twist_from_bundle(tb);
        if (!same_module_coalgebra(mc, t.mc))
          throw MalformedDoc("the twisting does not live on the given module coalgebra");
        return bundle_from_modcoalg(twist_coalgebra(t), "twisted module coalgebra");
      },
      py::arg("modcoalg"), py::arg("tau"));
  m.def(
      "invert_twisting",
      [](const Bundle& tb) {
        auto inv = invert_twisting(right_twist_from_bundle(tb));
        if (!inv) throw NotInvertible("twisting has no *-inverse");
        return bundle_from_right_twist(*inv, "inverse twisting");
      },
      py::arg("tau"));
  m.def(
      "transpose",
      [](const std::string& direction, const Bundle& b) {
        if (direction == "rtl")
          return bundle_from_left_twist(
              transpose_rtl(with_inverse(right_twist_from_bundle(b))), "l(tau)");
        if (direction == "ltr")
          return bundle_from_right_twist(
              transpose_ltr(with_inverse(left_twist_from_bundle(b))), "r(gamma)");
        throw UnknownName("transpose direction must be rtl or ltr");
      },
      py::arg("direction"), py::arg("twisting"));
  m.def(
      "cocycle_lift",
      [](const Bundle& b) {
        return bundle_from_twisted_cocycle(
            lift_to_twisted(trivial_harrison_from_bundle(b)), "lift to Z2_tw");
      },
      py::arg("trivial_harrison"));
  m.def(
      "cocycle_restrict",
      [](const Bundle& tcb, const Bundle& baseb) {
        return bundle_from_trivial_harrison(
            restrict_to_harrison(twisted_cocycle_from_bundle(tcb),
                                 modcoalg_from_bundle(baseb)),
            "restriction to Z2_Harr");
      },
      py::arg("twisted_cocycle"), py::arg("base"));
  m.def(
      "eval_equations",
      [](const std::string& text, const std::map<std::string, Bundle>& bindings) {
        Env env;
        for (const auto& [as_name, b] : bindings) {
          for (const auto& mm : b.maps) {
            std::string name = mm.name;
            if (as_name != "C" && name.rfind("C.", 0) == 0)
              name = as_name + name.substr(1);
            env.bind(name, mm.map);
          }
          for (const auto& s : b.spaces)
            env.bind_space(s.name == "C" ? as_name : s.name, s);
          env.bind_space("k", unit_space(b.field));
        }
        env.finalize();
        return check_equation_file(text, env);
      },
      py::arg("equations"), py::arg("env"),
      "check 'LHS == RHS' lines against documents bound by name");
}
