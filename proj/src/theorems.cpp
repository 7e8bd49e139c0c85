#include "cotwist/theorems.hpp"

#include <json.hpp>

#include "cotwist/cocycles.hpp"
#include "cotwist/errors.hpp"
#include "cotwist/galois.hpp"

namespace cotwist {

namespace {

// -- shared instance plumbing -------------------------------------------------

HarrisonCocycle harrison_instance(const std::string& name, FieldSpec field) {
  if (name == "harrison:C2-sign" || name.empty()) return harrison_c2_sign(field);
  throw UnknownName("unknown Harrison-cocycle instance \"" + name + "\"");
}

std::optional<ModuleCoalgebra> try_modcoalg_instance(const std::string& name,
                                                     FieldSpec field) {
  if (name.rfind("regular:", 0) == 0 || name.rfind("trivial:", 0) == 0)
    return modcoalg_from_bundle(builtin(name, field));
  return std::nullopt;
}

/// u = e0 + 2 e1 in Hom(k, H) for H the dual of C2: the canonical transport
/// element used by the equivalence scenarios.
ConvElement bridge_u(const CrossedCoproduct& target, long b = 2) {
  const auto& c = target.coaction.c;
  const auto& h = target.coaction.h;
  LinMap m(h.space, c.space);
  m.set(0, 0, Scalar(1));
  m.set(1, 0, Scalar(b));
  return make_conv(c, h.algebra(), m);
}

struct BridgePair {
  CrossedCoproduct target;  // tau's crossed data
  CrossedCoproduct source;  // lambda's crossed data
  ConvElement u;
  EquivWitness w;
};

BridgePair make_bridge(const HarrisonCocycle& hc, long b = 2) {
  CrossedCoproduct target = build_crossed(hc);
  ConvElement u = bridge_u(target, b);
  CrossedCoproduct source = build_crossed(transport_crossed_data(target, u));
  EquivWitness w = witness_from_crossed_iso(u, source, target);
  return BridgePair{std::move(target), std::move(source), std::move(u), std::move(w)};
}

// -- scenarios ----------------------------------------------------------------

CheckReport scenario_prop12(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  RightTwist tau = with_inverse(twisting_from_crossed(harrison_instance(instance, field)));
  const ModuleCoalgebra& mc = tau.mc;

  rep.add_equal("l(sigma)=sigma'", transpose_rtl(sigma_twist(mc)).map,
                sigma_prime(mc).map);
  rep.add_equal("r(sigma')=sigma", transpose_ltr(sigma_prime(mc)).map,
                sigma_twist(mc).map);

  LeftTwist g = transpose_rtl(tau);
  rep.merge("l(tau)", check_left_twisting(g));
  rep.add_equal("r(l(tau))=tau", transpose_ltr(g).map, tau.map);
  rep.add_equal("l(r(gamma))=gamma", transpose_rtl(transpose_ltr(g)).map, g.map);

  RightTwist tau_inv = *invert_twisting(tau);
  LeftTwist g2 = transpose_rtl(with_inverse(tau_inv));
  rep.add_equal("r(l(tau^-1))=tau^-1", transpose_ltr(g2).map, tau_inv.map);
  return rep;
}

CheckReport scenario_lemma14(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  CrossedCoproduct target = build_crossed(harrison_instance(instance, field));
  ConvElement u = bridge_u(target);
  CrossedCoproduct source = build_crossed(transport_crossed_data(target, u));

  rep.merge("data", check_crossed_iso_data(u, source, target));
  LinMap phi = crossed_iso_from_u(u, source, target);
  rep.merge("phi", check_crossed_morphism(phi, source, target));
  rep.add_equal("extraction-roundtrip", crossed_iso_witness(phi, source, target).map,
                u.map);
  return rep;
}

CheckReport scenario_prop22(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  HarrisonCocycle hc = harrison_instance(instance, field);
  ModuleCoalgebra ck = trivial_module(hc.coaction.h);
  TrivialHarrison th = make_trivial_harrison(ck, hc.alpha);
  TwistedCocycle lifted = lift_to_twisted(th);
  rep.merge("lifted-cocycle", check_twisted_cocycle(lifted));

  RightTwist t = twisting_from_twisted_cocycle(lifted);
  rep.merge("tau_alpha", check_right_twisting(t));
  rep.add_equal("tau_alpha-matches-eq27", t.map,
                twisting_from_crossed(hc).map);

  TwistedCocycle trivial = make_twisted_cocycle(
      t.mc, compose(kronecker(t.mc.h.unit, t.mc.h.unit), t.mc.c.counit));
  rep.add_equal("trivial-alpha-gives-sigma",
                twisting_from_twisted_cocycle(trivial).map, sigma_twist(t.mc).map);
  return rep;
}

CheckReport scenario_prop23(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  BridgePair b = make_bridge(harrison_instance(instance, field));
  rep.merge("witness", check_witness(b.w));
  LinMap psi = psi_from_witness(b.w);
  rep.merge("psi", check_psi_morphism(b.w.tau, b.w.lambda, psi));
  if (rank(psi) == psi.cols())
    rep.add_pass("psi-bijective");
  else
    rep.add_fail("psi-bijective");
  LinMap phi = psi_from_witness(invert_witness(b.w));
  rep.add_equal("psi-inverse-from-inverse-witness", compose(phi, psi),
                LinMap::identity(psi.domain()));
  return rep;
}

CheckReport scenario_lemma24a(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  BridgePair b = make_bridge(harrison_instance(instance, field));
  rep.merge("reflexive", check_witness(reflexive_witness(b.w.tau)));
  EquivWitness back = invert_witness(b.w);
  rep.merge("symmetric", check_witness(back));
  BridgePair b2 = make_bridge(
      HarrisonCocycle{b.source.coaction, b.source.alpha}, 3);
  EquivWitness chained = compose_witness(b.w, b2.w);
  rep.merge("transitive", check_witness(chained));
  rep.add_equal("transitive-endpoints-tau", chained.tau.map, b.w.tau.map);
  rep.add_equal("transitive-endpoints-gamma", chained.lambda.map, b2.w.lambda.map);
  return rep;
}

CheckReport scenario_thm25(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  BridgePair b = make_bridge(harrison_instance(instance, field));
  RightTwist tau_inv = *invert_twisting(b.w.tau);
  RightTwist mu = transfer_inverse(b.w, tau_inv);
  RightTwist sigma = sigma_twist(b.w.mc);
  rep.add_equal("mu*lambda=sigma", star_product(mu, b.w.lambda).map, sigma.map);
  rep.add_equal("lambda*mu=sigma", star_product(b.w.lambda, mu).map, sigma.map);
  rep.add_equal("mu-equals-direct-inverse", mu.map,
                invert_twisting(b.w.lambda)->map);
  return rep;
}

CheckReport scenario_prop34(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  HarrisonCocycle hc = harrison_instance(instance, field);
  ModuleCoalgebra ck = trivial_module(hc.coaction.h);

  TrivialHarrison trivial = make_trivial_harrison(
      ck, compose(kronecker(hc.coaction.h.unit, hc.coaction.h.unit), ck.c.counit));
  TwistedCocycle trivial_lift = lift_to_twisted(trivial);
  rep.add_equal("trivial-lifts-to-trivial", trivial_lift.alpha,
                compose(kronecker(hc.coaction.h.unit, hc.coaction.h.unit),
                        trivial_lift.mc.c.counit));

  TrivialHarrison th = make_trivial_harrison(ck, hc.alpha);
  rep.merge("instance", check_trivial_harrison(th));
  TwistedCocycle lifted = lift_to_twisted(th);
  rep.merge("lift", check_twisted_cocycle(lifted));
  rep.add_equal("restrict(lift)=id", restrict_to_harrison(lifted, ck).alpha, th.alpha);
  rep.add_equal("lift(restrict)=id", lift_to_twisted(restrict_to_harrison(lifted, ck)).alpha,
                lifted.alpha);
  return rep;
}

CheckReport scenario_thm35(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  BridgePair b = make_bridge(harrison_instance(instance, field));
  rep.merge("forward-witness", check_witness(b.w));
  ConvElement u_back =
      crossed_iso_from_witness(b.w, b.target.coaction.c, b.target.coaction.h);
  rep.add_equal("backward-recovers-u", u_back.map, b.u.map);
  LinMap phi = crossed_iso_from_u(b.u, b.source, b.target);
  rep.merge("iso", check_crossed_morphism(phi, b.source, b.target));
  LinMap psi = psi_from_witness(b.w);
  auto psi_inv = inverse(psi);
  if (psi_inv && phi == *psi_inv)
    rep.add_pass("phi-matches-psi-under-identification");
  else
    rep.add_fail("phi-matches-psi-under-identification");
  return rep;
}

CheckReport scenario_lemma31(const std::string& instance, FieldSpec field) {
  if (auto mc = try_modcoalg_instance(instance, field)) return check_lemma31(*mc);
  CheckReport rep;
  RightTwist tau = twisting_from_crossed(harrison_instance(instance, field));
  rep.merge("base", check_lemma31(tau.mc));
  rep.merge("twisted", check_lemma31(twist_coalgebra(tau)));
  rep.merge("not-galois-side", check_lemma31(trivial_module(tau.mc.h)));
  return rep;
}

CheckReport scenario_thm32(const std::string& instance, FieldSpec field) {
  if (auto mc = try_modcoalg_instance(instance, field))
    return thm32_check(*mc, sigma_twist(*mc));
  RightTwist tau = with_inverse(twisting_from_crossed(harrison_instance(instance, field)));
  return thm32_check(tau.mc, tau);
}

CheckReport scenario_thm33(const std::string& instance, FieldSpec field) {
  CheckReport rep;
  if (auto mc = try_modcoalg_instance(instance, field)) {
    auto res = check_galois(*mc);
    auto* cert = std::get_if<GaloisCertificate>(&res);
    if (!cert) throw NotGaloisError("instance is not an H-Galois coextension");
    rep.merge("diamond", check_diamond(*cert));
    auto sigma = sigma_twist(*mc);
    EquivWitness w =
        extract_witness(LinMap::identity(mc->c.space), sigma, sigma, *cert);
    rep.add_equal("identity-extracts-ueps", w.v,
                  compose(mc->h.unit, mc->c.counit));
    return rep;
  }
  BridgePair b = make_bridge(harrison_instance(instance, field));
  auto res = check_galois(b.w.mc);
  auto* cert = std::get_if<GaloisCertificate>(&res);
  if (!cert) throw NotGaloisError("bridge base is not Galois");
  rep.merge("diamond", check_diamond(*cert));
  LinMap psi = psi_from_witness(b.w);
  EquivWitness extracted = extract_witness(psi, b.w.tau, b.w.lambda, *cert);
  rep.merge("extracted-witness", check_witness(extracted));
  rep.add_equal("extract-matches-bridge-v", extracted.v, b.w.v);
  rep.add_equal("rebuild-psi", psi_from_witness(extracted), psi);
  if (extracted.inverse)
    rep.add_pass("v-convolution-invertible");
  else
    rep.add_fail("v-convolution-invertible");
  return rep;
}

using Scenario = CheckReport (*)(const std::string&, FieldSpec);

const std::vector<std::pair<std::string, Scenario>>& scenarios() {
  static const std::vector<std::pair<std::string, Scenario>> table = {
      {"prop1.2", scenario_prop12},   {"lemma1.4", scenario_lemma14},
      {"prop2.2", scenario_prop22},   {"prop2.3", scenario_prop23},
      {"lemma2.4a", scenario_lemma24a}, {"thm2.5", scenario_thm25},
      {"prop3.4", scenario_prop34},   {"thm3.5", scenario_thm35},
      {"lemma3.1", scenario_lemma31}, {"thm3.2", scenario_thm32},
      {"thm3.3", scenario_thm33},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : scenarios()) out.push_back(id);
    return out;
  }();
  return ids;
}

CheckReport verify_theorem(const std::string& id, const std::string& instance,
                           FieldSpec field) {
  for (const auto& [name, fn] : scenarios())
    if (name == id) return fn(instance, field);
  throw UnknownName("unknown theorem id \"" + id + "\"");
}

std::string field_name(const FieldSpec& f) {
  return f.is_rational() ? "Q" : "F" + std::to_string(f.characteristic);
}

FieldSpec field_by_name(const std::string& name) {
  if (name == "Q") return FieldSpec::rationals();
  if (name.size() > 1 && name[0] == 'F') {
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
    } catch (const std::exception&) {
    }
  }
  throw MalformedDoc("unknown field name \"" + name + "\" (expected Q or F<p>)");
}

SuiteSpec default_suite(const std::string& theorem_id) {
  SuiteSpec s;
  s.theorem = theorem_id;
  auto add = [&](const std::string& inst) {
    s.runs.push_back({inst, FieldSpec::rationals()});
    s.runs.push_back({inst, FieldSpec::prime(5)});
  };
  if (theorem_id == "lemma3.1") {
    add("harrison:C2-sign");
    add("regular:sweedler:H4");
    add("trivial:group:C2");
  } else if (theorem_id == "thm3.2") {
    add("harrison:C2-sign");
    add("regular:sweedler:H4");
  } else if (theorem_id == "thm3.3") {
    add("harrison:C2-sign");
    add("regular:sweedler:H4");
  } else {
    add("harrison:C2-sign");
  }
  return s;
}

SuiteSpec suite_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    SuiteSpec s;
    s.theorem = j.at("theorem").get<std::string>();
    for (const auto& r : j.at("runs"))
      s.runs.push_back({r.at("instance").get<std::string>(),
                        field_by_name(r.at("field").get<std::string>())});
    return s;
  } catch (const MalformedDoc&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedDoc(std::string("malformed suite file: ") + e.what());
  }
}

std::string suite_to_json(const SuiteSpec& s) {
  nlohmann::ordered_json j;
  j["theorem"] = s.theorem;
  j["runs"] = nlohmann::ordered_json::array();
  for (const auto& r : s.runs)
    j["runs"].push_back({{"instance", r.instance}, {"field", field_name(r.field)}});
  return j.dump(2) + "\n";
}

CheckReport run_suite(const SuiteSpec& s) {
  CheckReport rep;
  for (const auto& r : s.runs)
    rep.merge(r.instance + "@" + field_name(r.field),
              verify_theorem(s.theorem, r.instance, r.field));
  return rep;
}

}  // namespace cotwist
