// cotwist: exact checker and constructor for twistings of module coalgebras,
// crossed coproducts, twisted 2-cocycles, twisting equivalences and
// Hopf-Galois coextension certificates.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cotwist/catalog.hpp"
#include "cotwist/cocycles.hpp"
#include "cotwist/exprlang.hpp"
#include "cotwist/galois.hpp"
#include "cotwist/theorems.hpp"

namespace {

using namespace cotwist;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string field_arg;  // "", "Q", or a prime
  bool json = false;
};

FieldSpec effective_field(const Options& opt) {
  std::string spec = opt.field_arg;
  if (spec.empty()) {
    if (const char* env = std::getenv("COTWIST_FIELD")) spec = env;
  }
  if (spec.empty() || spec == "Q" || spec == "0") return FieldSpec::rationals();
  try {
    return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(spec)));
  } catch (const std::exception&) {
    throw UnknownName("cannot parse field \"" + spec + "\" (expected Q or a prime)");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw MalformedDoc("cannot open file \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A bundle argument is a builtin name or a path to a StructureDoc file.
Bundle load_bundle(const std::string& arg, const FieldSpec& field) {
  try {
    return builtin(arg, field);
  } catch (const UnknownName&) {
    return bundle_from_json(slurp(arg));
  }
}

int emit_report(const CheckReport& rep, const Options& opt) {
  std::cout << (opt.json ? rep.json_str() + "\n" : rep.text());
  return rep.ok() ? kExitPass : kExitFail;
}

void write_output(const Bundle& b, const std::string& out_path) {
  std::string text = bundle_to_json(b);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out.good()) throw MalformedDoc("cannot write \"" + out_path + "\"");
    out << text;
  }
}

Bundle generic_map_bundle(const ModuleCoalgebra& mc, const std::string& name,
                          const LinMap& m, const std::vector<std::string>& dom,
                          const std::vector<std::string>& cod,
                          const std::string& provenance) {
  Bundle b = bundle_from_modcoalg(mc, provenance);
  b.add_map(name, "", dom, cod, m);
  return b;
}

CheckReport run_check(const std::string& kind, const Bundle& b) {
  if (kind == "hopf") return check_hopf(hopf_from_bundle(b));
  if (kind == "modcoalg") return check_module_coalgebra(modcoalg_from_bundle(b));
  if (kind == "twisting") return check_right_twisting(right_twist_from_bundle(b));
  if (kind == "left-twisting") return check_left_twisting(left_twist_from_bundle(b));
  if (kind == "weak-coaction") return check_weak_coaction(weak_coaction_from_bundle(b));
  if (kind == "harrison") return check_harrison(harrison_from_bundle(b));
  if (kind == "twisted-cocycle")
    return check_twisted_cocycle(twisted_cocycle_from_bundle(b));
  if (kind == "witness") return check_witness(witness_from_bundle(b));
  if (kind == "galois") {
    ModuleCoalgebra mc = modcoalg_from_bundle(b);
    CheckReport rep = check_module_coalgebra(mc);
    auto res = check_galois(mc);
    if (auto* cert = std::get_if<GaloisCertificate>(&res)) {
      rep.add_pass("beta-bijective (dim " + std::to_string(cert->beta.cols()) + ")");
      rep.merge("diamond", check_diamond(*cert));
    } else {
      auto& ng = std::get<NotGalois>(res);
      Witness w;
      w.input_label = "rank " + std::to_string(ng.rank) + ", dim C(x)H " +
                      std::to_string(ng.dim_ch) + ", dim cotensor " +
                      std::to_string(ng.dim_w);
      if (ng.kernel_vector) w.lhs = *ng.kernel_vector;
      rep.add_fail("beta-bijective", w);
    }
    return rep;
  }
  throw UnknownName("unknown check kind \"" + kind + "\"");
}

void bind_bundle(Env& env, const std::string& as_name, const Bundle& b) {
  for (const auto& m : b.maps) {
    std::string name = m.name;
    if (as_name != "C" && name.rfind("C.", 0) == 0)
      name = as_name + name.substr(1);
    env.bind(name, m.map);
  }
  for (const auto& s : b.spaces) {
    std::string name = s.name == "C" ? as_name : s.name;
    env.bind_space(name, s);
  }
  env.bind_space("k", unit_space(b.field));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cotwist: exact computations with twistings of module coalgebras,\n"
      "crossed coproducts and Hopf-Galois coextensions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field_arg,
                 "ground field: Q (default) or a prime p; COTWIST_FIELD is the "
                 "environment fallback");
  app.add_flag("--json", opt.json, "machine-readable reports");

  std::string kind, out_path, instance, suite_path;
  std::vector<std::string> args;

  auto* c_check = app.add_subcommand("check", "run a structure checker on documents");
  c_check->add_option("kind", kind,
                      "hopf|modcoalg|twisting|left-twisting|weak-coaction|harrison|"
                      "twisted-cocycle|witness|galois")
      ->required();
  c_check->add_option("inputs", args, "builtin names or document files")->required();

  auto* c_twist = app.add_subcommand("twist", "twist a module coalgebra: C^tau");
  c_twist->add_option("C", instance, "module coalgebra (builtin or file)")->required();
  c_twist->add_option("tau", kind, "twisting document")->required();
  c_twist->add_option("--out", out_path, "output file (default stdout)");

  auto* c_inv = app.add_subcommand("invert-twisting", "compute the *-inverse");
  c_inv->add_option("tau", kind, "twisting document")->required();
  c_inv->add_option("--out", out_path, "output file");

  auto* c_tr =
      app.add_subcommand("transpose", "the l / r bijection between twisting sides");
  c_tr->add_option("direction", kind, "rtl (right-to-left) or ltr")->required();
  c_tr->add_option("t", instance, "twisting document (inverse attached or computable)")
      ->required();
  c_tr->add_option("--out", out_path, "output file");

  auto* c_crossed = app.add_subcommand("crossed", "crossed coproduct constructions");
  c_crossed->add_option("op", kind, "build|to-twisting|from-twisting|iso")->required();
  c_crossed->add_option("inputs", args, "documents (see README)")->required();
  c_crossed->add_option("--out", out_path, "output file");

  auto* c_cocycle = app.add_subcommand("cocycle", "twisted 2-cocycles and Z2_Harr");
  c_cocycle->add_option("op", kind, "lift|restrict|to-twisting")->required();
  c_cocycle->add_option("inputs", args, "documents")->required();
  c_cocycle->add_option("--out", out_path, "output file");

  auto* c_equiv = app.add_subcommand("equiv", "equivalence of twistings");
  c_equiv->add_option("op", kind, "check|psi|transfer-inverse|from-iso|to-iso")
      ->required();
  c_equiv->add_option("inputs", args, "documents")->required();
  c_equiv->add_option("--out", out_path, "output file");

  auto* c_galois = app.add_subcommand("galois", "Hopf-Galois coextension certification");
  c_galois->add_option("op", kind, "cert|diamond|thm32|extract")->required();
  c_galois->add_option("inputs", args, "documents")->required();
  c_galois->add_option("--out", out_path, "output file");

  std::vector<std::string> env_binds;
  auto* c_eval = app.add_subcommand("eval", "check equation files in the wiring language");
  c_eval->add_option("file", instance, "equation file (LHS == RHS per line)")->required();
  c_eval->add_option("--env", env_binds, "NAME=builtin-or-file bindings")->required();

  auto* c_verify = app.add_subcommand("verify", "run a per-theorem verification suite");
  c_verify->add_option("theorem", kind,
                       "prop1.2|lemma1.4|prop2.2|prop2.3|lemma2.4a|thm2.5|prop3.4|"
                       "thm3.5|lemma3.1|thm3.2|thm3.3")
      ->required();
  c_verify->add_option("--instance", instance, "run a single named instance");
  c_verify->add_option("--suite", suite_path, "run a suite file instead of the default");

  auto* c_list = app.add_subcommand("list", "list builtin structures and theorem ids");

  auto* c_dump = app.add_subcommand("dump", "write a builtin structure document");
  c_dump->add_option("name", instance, "builtin name")->required();
  c_dump->add_option("--out", out_path, "output file (default stdout)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    FieldSpec field = effective_field(opt);

    if (*c_check) {
      CheckReport all;
      for (const auto& a : args) all.merge(a, run_check(kind, load_bundle(a, field)));
      return emit_report(all, opt);
    }

    if (*c_twist) {
      ModuleCoalgebra mc = modcoalg_from_bundle(load_bundle(instance, field));
      RightTwist t = right_twist_from_bundle(load_bundle(kind, field));
      if (!same_module_coalgebra(mc, t.mc))
        throw MalformedDoc("the twisting does not live on the given module coalgebra");
      CheckReport rep = check_right_twisting(t);
      if (!rep.ok()) {
        emit_report(rep, opt);
        return kExitFail;
      }
      write_output(bundle_from_modcoalg(twist_coalgebra(t), "twist of " + instance),
                   out_path);
      return kExitPass;
    }

    if (*c_inv) {
      RightTwist t = right_twist_from_bundle(load_bundle(kind, field));
      CheckReport rep = check_right_twisting(t);
      std::optional<RightTwist> inv;
      if (rep.ok()) inv = invert_twisting(t);
      if (inv)
        rep.add_pass("invertible");
      else
        rep.add_fail("invertible");
      if (!rep.ok()) return emit_report(rep, opt);
      write_output(bundle_from_right_twist(*inv, "inverse twisting"), out_path);
      return kExitPass;
    }

    if (*c_tr) {
      Bundle b = load_bundle(instance, field);
      if (kind == "rtl") {
        RightTwist t = with_inverse(right_twist_from_bundle(b));
        write_output(bundle_from_left_twist(transpose_rtl(t), "l(tau)"), out_path);
      } else if (kind == "ltr") {
        LeftTwist l = with_inverse(left_twist_from_bundle(b));
        write_output(bundle_from_right_twist(transpose_ltr(l), "r(gamma)"), out_path);
      } else {
        throw UnknownName("transpose direction must be rtl or ltr");
      }
      return kExitPass;
    }

    if (*c_crossed) {
      if (kind == "build") {
        if (args.size() != 1) throw UnknownName("crossed build takes one document");
        CrossedCoproduct cc =
            build_crossed(harrison_from_bundle(load_bundle(args[0], field)));
        write_output(bundle_from_modcoalg(cc.mc, "crossed coproduct"), out_path);
        return kExitPass;
      }
      if (kind == "to-twisting") {
        if (args.size() != 1)
          throw UnknownName("crossed to-twisting takes one document");
        RightTwist t =
            twisting_from_crossed(harrison_from_bundle(load_bundle(args[0], field)));
        write_output(bundle_from_right_twist(t, "twisting of C (x) H"), out_path);
        return kExitPass;
      }
      if (kind == "from-twisting") {
        if (args.size() != 2)
          throw UnknownName("crossed from-twisting takes <tau> <base-with-C-and-H>");
        RightTwist t = right_twist_from_bundle(load_bundle(args[0], field));
        Bundle base = load_bundle(args[1], field);
        HarrisonCocycle hc = crossed_from_twisting(t, coalgebra_from_bundle(base),
                                                   hopf_from_bundle(base));
        write_output(bundle_from_harrison(hc, "crossed data of a twisting"), out_path);
        return kExitPass;
      }
      if (kind == "iso") {
        if (args.size() != 3)
          throw UnknownName("crossed iso takes <u-doc> <source> <target>");
        ConvElement u = conv_from_bundle(load_bundle(args[0], field), "u");
        CrossedCoproduct source =
            build_crossed(harrison_from_bundle(load_bundle(args[1], field)));
        CrossedCoproduct target =
            build_crossed(harrison_from_bundle(load_bundle(args[2], field)));
        CheckReport rep = check_crossed_iso_data(u, source, target);
        if (!rep.ok()) return emit_report(rep, opt);
        LinMap phi = crossed_iso_from_u(u, source, target);
        rep.merge("phi", check_crossed_morphism(phi, source, target));
        if (!out_path.empty())
          write_output(generic_map_bundle(target.mc, "phi", phi, {"C", "H"},
                                          {"C", "H"}, "Lemma 1.4 isomorphism"),
                       out_path);
        return emit_report(rep, opt);
      }
      throw UnknownName("unknown crossed op \"" + kind + "\"");
    }

    if (*c_cocycle) {
      if (kind == "lift") {
        if (args.size() != 1) throw UnknownName("cocycle lift takes one document");
        TwistedCocycle tc =
            lift_to_twisted(trivial_harrison_from_bundle(load_bundle(args[0], field)));
        write_output(bundle_from_twisted_cocycle(tc, "lift to Z2_tw"), out_path);
        return kExitPass;
      }
      if (kind == "restrict") {
        if (args.size() != 2)
          throw UnknownName("cocycle restrict takes <twisted-doc> <base-mc-doc>");
        TwistedCocycle tc = twisted_cocycle_from_bundle(load_bundle(args[0], field));
        ModuleCoalgebra base = modcoalg_from_bundle(load_bundle(args[1], field));
        TrivialHarrison th = restrict_to_harrison(tc, base);
        write_output(bundle_from_trivial_harrison(th, "restriction to Z2_Harr"),
                     out_path);
        return kExitPass;
      }
      if (kind == "to-twisting") {
        if (args.size() != 1)
          throw UnknownName("cocycle to-twisting takes one document");
        RightTwist t = twisting_from_twisted_cocycle(
            twisted_cocycle_from_bundle(load_bundle(args[0], field)));
        write_output(bundle_from_right_twist(t, "tau_alpha"), out_path);
        return kExitPass;
      }
      throw UnknownName("unknown cocycle op \"" + kind + "\"");
    }

    if (*c_equiv) {
      if (kind == "check") {
        CheckReport all;
        for (const auto& a : args)
          all.merge(a, check_witness(witness_from_bundle(load_bundle(a, field))));
        return emit_report(all, opt);
      }
      if (kind == "psi") {
        if (args.size() != 1) throw UnknownName("equiv psi takes one witness document");
        EquivWitness w = witness_from_bundle(load_bundle(args[0], field));
        LinMap psi = psi_from_witness(w);
        write_output(generic_map_bundle(w.mc, "psi", psi, {"C"}, {"C"},
                                        "Prop 2.3 coalgebra map"),
                     out_path);
        return kExitPass;
      }
      if (kind == "transfer-inverse") {
        if (args.size() != 2)
          throw UnknownName("equiv transfer-inverse takes <witness> <tau-inverse>");
        EquivWitness w = witness_from_bundle(load_bundle(args[0], field));
        RightTwist tau_inv = right_twist_from_bundle(load_bundle(args[1], field));
        RightTwist mu = transfer_inverse(w, tau_inv);
        write_output(bundle_from_right_twist(mu, "Thm 2.5 transferred inverse"),
                     out_path);
        return kExitPass;
      }
      if (kind == "from-iso") {
        if (args.size() != 3)
          throw UnknownName("equiv from-iso takes <u-doc> <source> <target>");
        ConvElement u = conv_from_bundle(load_bundle(args[0], field), "u");
        CrossedCoproduct source =
            build_crossed(harrison_from_bundle(load_bundle(args[1], field)));
        CrossedCoproduct target =
            build_crossed(harrison_from_bundle(load_bundle(args[2], field)));
        EquivWitness w = witness_from_crossed_iso(u, source, target);
        write_output(bundle_from_witness(w, "Thm 3.5 witness"), out_path);
        return kExitPass;
      }
      if (kind == "to-iso") {
        if (args.size() != 2)
          throw UnknownName("equiv to-iso takes <witness> <base-with-C-and-H>");
        EquivWitness w = witness_from_bundle(load_bundle(args[0], field));
        Bundle base = load_bundle(args[1], field);
        HopfAlgebra h = hopf_from_bundle(base);
        ConvElement u = crossed_iso_from_witness(w, coalgebra_from_bundle(base), h);
        write_output(bundle_from_conv(u, h, "Thm 3.5 u"), out_path);
        return kExitPass;
      }
      throw UnknownName("unknown equiv op \"" + kind + "\"");
    }

    if (*c_galois) {
      if (kind == "cert" || kind == "diamond") {
        CheckReport all;
        for (const auto& a : args) {
          ModuleCoalgebra mc = modcoalg_from_bundle(load_bundle(a, field));
          auto res = check_galois(mc);
          CheckReport rep;
          if (auto* cert = std::get_if<GaloisCertificate>(&res)) {
            rep.add_pass("beta-bijective");
            rep.merge("diamond", check_diamond(*cert));
            if (kind == "cert" && !out_path.empty()) {
              Bundle b = bundle_from_modcoalg(mc, "Galois certificate");
              Space w = cert->cotensor.w;
              w.name = "W";
              b.add_space(w);
              b.add_map("beta", "", {"C", "H"}, {"W"}, cert->beta);
              b.add_map("beta_inv", "", {"W"}, {"C", "H"}, cert->beta_inv);
              b.add_map("diamond", "", {"W"}, {"H"}, cert->diamond);
              write_output(b, out_path);
            }
          } else {
            auto& ng = std::get<NotGalois>(res);
            Witness w;
            w.input_label = "rank " + std::to_string(ng.rank) + ", dim C(x)H " +
                            std::to_string(ng.dim_ch) + ", dim cotensor " +
                            std::to_string(ng.dim_w);
            if (ng.kernel_vector) w.lhs = *ng.kernel_vector;
            rep.add_fail("beta-bijective", w);
          }
          all.merge(a, rep);
        }
        return emit_report(all, opt);
      }
      if (kind == "thm32") {
        if (args.size() != 2) throw UnknownName("galois thm32 takes <mc> <tau>");
        ModuleCoalgebra mc = modcoalg_from_bundle(load_bundle(args[0], field));
        RightTwist t =
            with_inverse(right_twist_from_bundle(load_bundle(args[1], field)));
        return emit_report(thm32_check(mc, t), opt);
      }
      if (kind == "extract") {
        if (args.size() != 3)
          throw UnknownName("galois extract takes <tau> <lambda> <psi-doc>");
        RightTwist tau = right_twist_from_bundle(load_bundle(args[0], field));
        RightTwist lam = right_twist_from_bundle(load_bundle(args[1], field));
        Bundle pb = load_bundle(args[2], field);
        auto res = check_galois(tau.mc);
        auto* cert = std::get_if<GaloisCertificate>(&res);
        if (!cert) throw NotGaloisError("the base coextension is not Galois");
        EquivWitness w = extract_witness(pb.map("psi"), tau, lam, *cert);
        write_output(bundle_from_witness(w, "Thm 3.3 extracted witness"), out_path);
        return kExitPass;
      }
      throw UnknownName("unknown galois op \"" + kind + "\"");
    }

    if (*c_eval) {
      Env env;
      for (const auto& spec : env_binds) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
          throw UnknownName("--env expects NAME=builtin-or-file, got \"" + spec + "\"");
        bind_bundle(env, spec.substr(0, eq), load_bundle(spec.substr(eq + 1), field));
      }
      env.finalize();
      return emit_report(check_equation_file(slurp(instance), env), opt);
    }

    if (*c_verify) {
      CheckReport rep;
      if (!suite_path.empty())
        rep = run_suite(suite_from_json(slurp(suite_path)));
      else if (!instance.empty())
        rep = verify_theorem(kind, instance, field);
      else
        rep = run_suite(default_suite(kind));
      return emit_report(rep, opt);
    }

    if (*c_list) {
      std::cout << "builtins:\n";
      for (const auto& n : builtin_names()) std::cout << "  " << n << "\n";
      std::cout << "theorems:\n";
      for (const auto& id : theorem_ids()) std::cout << "  " << id << "\n";
      return kExitPass;
    }

    if (*c_dump) {
      write_output(builtin(instance, field), out_path);
      return kExitPass;
    }
  } catch (const NotInvertible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const NotATwisting& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const NotACocycle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const WitnessInvalid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const NotGaloisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const PsiNotColinear& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
