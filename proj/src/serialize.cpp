#include "cotwist/serialize.hpp"

#include <json.hpp>

#include "cotwist/errors.hpp"

namespace cotwist {

using nlohmann::ordered_json;

namespace {

constexpr const char* kFormatTag = "cotwist/structuredoc-1";

Space resolve(const Bundle& b, const std::vector<std::string>& names) {
  std::vector<Space> factors;
  for (const auto& n : names) {
    if (n == "k")
      factors.push_back(unit_space(b.field));
    else
      factors.push_back(b.space(n));
  }
  return tensor_all(factors, b.field);
}

}  // namespace

const Space& Bundle::space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name == name) return s;
  throw MalformedDoc("document has no space named \"" + name + "\"");
}

bool Bundle::has_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return true;
  return false;
}

const LinMap& Bundle::map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return m.map;
  throw MalformedDoc("document has no map named \"" + name + "\"");
}

Bundle& Bundle::add_space(const Space& s) {
  spaces.push_back(s);
  return *this;
}

Bundle& Bundle::add_map(std::string name, std::string role, std::vector<std::string> dom,
                        std::vector<std::string> cod, LinMap m) {
  Space want_dom = resolve(*this, dom);
  Space want_cod = resolve(*this, cod);
  if (!m.domain().same(want_dom) || !m.codomain().same(want_cod))
    throw MalformedDoc("map \"" + name + "\" is inconsistent with the declared spaces");
  maps.push_back(NamedMap{std::move(name), std::move(role), std::move(dom),
                          std::move(cod), std::move(m)});
  return *this;
}

Bundle bundle_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw MalformedDoc(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormatTag)
      throw MalformedDoc("unknown document format tag");
    Bundle b;
    const auto& f = j.at("field");
    std::string kind = f.at("kind").get<std::string>();
    if (kind == "rationals")
      b.field = FieldSpec::rationals();
    else if (kind == "prime-field")
      b.field = FieldSpec::prime(f.at("characteristic").get<std::uint32_t>());
    else
      throw MalformedDoc("unknown field kind \"" + kind + "\"");

    for (const auto& s : j.at("spaces")) {
      b.spaces.push_back(make_space(s.at("name").get<std::string>(),
                                    s.at("basis").get<std::vector<std::string>>(),
                                    b.field));
    }
    for (const auto& m : j.at("maps")) {
      std::vector<std::string> dom = m.at("domain").get<std::vector<std::string>>();
      std::vector<std::string> cod = m.at("codomain").get<std::vector<std::string>>();
      Space ds = resolve(b, dom);
      Space cs = resolve(b, cod);
      const auto& rows = m.at("matrix");
      if (static_cast<int>(rows.size()) != cs.dim())
        throw MalformedDoc("matrix row count mismatch in map \"" +
                           m.at("name").get<std::string>() + "\"");
      std::vector<Scalar> entries;
      entries.reserve(static_cast<std::size_t>(cs.dim()) * ds.dim());
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != ds.dim())
          throw MalformedDoc("matrix column count mismatch in map \"" +
                             m.at("name").get<std::string>() + "\"");
        for (const auto& cell : row)
          entries.push_back(parse_scalar(b.field, cell.get<std::string>()));
      }
      b.maps.push_back(NamedMap{m.at("name").get<std::string>(),
                                m.value("role", std::string{}), std::move(dom),
                                std::move(cod),
                                LinMap::from_entries(cs, ds, std::move(entries))});
    }
    if (j.contains("provenance"))
      b.provenance = j.at("provenance").get<std::vector<std::string>>();
    return b;
  } catch (const MalformedDoc&) {
    throw;
  } catch (const Error& e) {
    throw MalformedDoc(e.what());
  } catch (const std::exception& e) {
    throw MalformedDoc(std::string("malformed document: ") + e.what());
  }
}

std::string bundle_to_json(const Bundle& b) {
  ordered_json j;
  j["format"] = kFormatTag;
  if (b.field.is_rational())
    j["field"] = {{"kind", "rationals"}};
  else
    j["field"] = {{"kind", "prime-field"}, {"characteristic", b.field.characteristic}};
  j["spaces"] = ordered_json::array();
  for (const auto& s : b.spaces)
    j["spaces"].push_back({{"name", s.name}, {"basis", s.basis}});
  j["maps"] = ordered_json::array();
  for (const auto& m : b.maps) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.map.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < m.map.cols(); ++c) row.push_back(scalar_str(m.map.at(i, c)));
      rows.push_back(std::move(row));
    }
    j["maps"].push_back({{"name", m.name},
                         {"role", m.role},
                         {"domain", m.domain},
                         {"codomain", m.codomain},
                         {"matrix", std::move(rows)}});
  }
  j["provenance"] = b.provenance;
  return j.dump(2) + "\n";
}

// -- emitters ----------------------------------------------------------------

namespace {

Bundle start(const FieldSpec& field, const std::string& provenance) {
  Bundle b;
  b.field = field;
  if (!provenance.empty()) b.provenance.push_back(provenance);
  return b;
}

// Display name for the carrier coalgebra in documents.
Space named(const Space& s, const std::string& name) {
  Space out = s;
  out.name = name;
  return out;
}

void put_hopf(Bundle& b, const HopfAlgebra& h) {
  b.add_space(named(h.space, "H"));
  b.add_map("H.mult", "mult", {"H", "H"}, {"H"}, h.mult);
  b.add_map("H.unit", "unit", {"k"}, {"H"}, h.unit);
  b.add_map("H.delta", "delta", {"H"}, {"H", "H"}, h.delta);
  b.add_map("H.eps", "eps", {"H"}, {"k"}, h.counit);
  b.add_map("H.S", "antipode", {"H"}, {"H"}, h.antipode);
}

void put_carrier(Bundle& b, const Coalgebra& c) {
  b.add_space(named(c.space, "C"));
  b.add_map("C.delta", "delta", {"C"}, {"C", "C"}, c.delta);
  b.add_map("C.eps", "eps", {"C"}, {"k"}, c.counit);
}

void put_modcoalg(Bundle& b, const ModuleCoalgebra& mc) {
  put_carrier(b, mc.c);
  put_hopf(b, mc.h);
  b.add_map("C.act", "action", {"C", "H"}, {"C"}, mc.action);
}

}  // namespace

Bundle bundle_from_hopf(const HopfAlgebra& h, const std::string& provenance) {
  Bundle b = start(h.space.field, provenance);
  put_hopf(b, h);
  return b;
}

Bundle bundle_from_modcoalg(const ModuleCoalgebra& mc, const std::string& provenance) {
  Bundle b = start(mc.c.space.field, provenance);
  put_modcoalg(b, mc);
  return b;
}

Bundle bundle_from_right_twist(const RightTwist& t, const std::string& provenance) {
  Bundle b = bundle_from_modcoalg(t.mc, provenance);
  b.add_map("tau", "twisting", {"C"}, {"H", "C"}, t.map);
  if (t.inverse) b.add_map("tau_inv", "twisting", {"C"}, {"H", "C"}, *t.inverse);
  return b;
}

Bundle bundle_from_left_twist(const LeftTwist& l, const std::string& provenance) {
  Bundle b = bundle_from_modcoalg(l.mc, provenance);
  b.add_map("lambda", "twisting", {"C"}, {"C", "H"}, l.map);
  if (l.inverse) b.add_map("lambda_inv", "twisting", {"C"}, {"C", "H"}, *l.inverse);
  return b;
}

Bundle bundle_from_harrison(const HarrisonCocycle& hc, const std::string& provenance) {
  Bundle b = start(hc.coaction.c.space.field, provenance);
  put_carrier(b, hc.coaction.c);
  put_hopf(b, hc.coaction.h);
  b.add_map("rho", "coaction", {"C"}, {"H", "C"}, hc.coaction.rho);
  b.add_map("alpha", "cocycle", {"C"}, {"H", "H"}, hc.alpha);
  return b;
}

Bundle bundle_from_trivial_harrison(const TrivialHarrison& th, const std::string& provenance) {
  Bundle b = bundle_from_modcoalg(th.mc, provenance);
  b.add_map("alpha", "cocycle", {"C"}, {"H", "H"}, th.alpha);
  return b;
}

Bundle bundle_from_twisted_cocycle(const TwistedCocycle& tc, const std::string& provenance) {
  Bundle b = bundle_from_modcoalg(tc.mc, provenance);
  b.add_map("alpha", "cocycle", {"C"}, {"H", "H"}, tc.alpha);
  return b;
}

Bundle bundle_from_witness(const EquivWitness& w, const std::string& provenance) {
  Bundle b = bundle_from_modcoalg(w.mc, provenance);
  b.add_map("tau", "twisting", {"C"}, {"H", "C"}, w.tau.map);
  b.add_map("lambda_tw", "twisting", {"C"}, {"H", "C"}, w.lambda.map);
  b.add_map("v", "witness", {"C"}, {"H"}, w.v);
  if (w.inverse) b.add_map("v_inv", "witness", {"C"}, {"H"}, *w.inverse);
  return b;
}

Bundle bundle_from_conv(const ConvElement& u, const HopfAlgebra& h,
                        const std::string& provenance) {
  Bundle b = start(u.c.space.field, provenance);
  put_carrier(b, u.c);
  put_hopf(b, h);
  b.add_map("u", "witness", {"C"}, {"H"}, u.map);
  return b;
}

// -- typed assembly ----------------------------------------------------------

namespace {

LinMap reshaped(const Bundle& b, const std::string& name, const Space& cod,
                const Space& dom) {
  const LinMap& m = b.map(name);
  if (m.rows() != cod.dim() || m.cols() != dom.dim())
    throw MalformedDoc("map \"" + name + "\" has the wrong shape for its role");
  return m.with_spaces(cod, dom);
}

}  // namespace

HopfAlgebra hopf_from_bundle(const Bundle& b) {
  Space h = b.space("H");
  Space hh = tensor_space(h, h);
  Space k = unit_space(b.field);
  return make_hopf(h, reshaped(b, "H.mult", h, hh), reshaped(b, "H.unit", h, k),
                   reshaped(b, "H.delta", hh, h), reshaped(b, "H.eps", k, h),
                   reshaped(b, "H.S", h, h));
}

Coalgebra coalgebra_from_bundle(const Bundle& b) {
  Space c = b.space("C");
  return Coalgebra{c, reshaped(b, "C.delta", tensor_space(c, c), c),
                   reshaped(b, "C.eps", unit_space(b.field), c)};
}

ModuleCoalgebra modcoalg_from_bundle(const Bundle& b) {
  HopfAlgebra h = hopf_from_bundle(b);
  Coalgebra c = coalgebra_from_bundle(b);
  LinMap act = reshaped(b, "C.act", c.space, tensor_space(c.space, h.space));
  return make_module_coalgebra(std::move(c), std::move(h), std::move(act));
}

RightTwist right_twist_from_bundle(const Bundle& b) {
  ModuleCoalgebra mc = modcoalg_from_bundle(b);
  Space hc = tensor_space(mc.h.space, mc.c.space);
  RightTwist t = make_right_twist(mc, reshaped(b, "tau", hc, mc.c.space));
  if (b.has_map("tau_inv")) t.inverse = reshaped(b, "tau_inv", hc, mc.c.space);
  return t;
}

LeftTwist left_twist_from_bundle(const Bundle& b) {
  ModuleCoalgebra mc = modcoalg_from_bundle(b);
  Space ch = tensor_space(mc.c.space, mc.h.space);
  LeftTwist l = make_left_twist(mc, reshaped(b, "lambda", ch, mc.c.space));
  if (b.has_map("lambda_inv")) l.inverse = reshaped(b, "lambda_inv", ch, mc.c.space);
  return l;
}

WeakCoaction weak_coaction_from_bundle(const Bundle& b) {
  HopfAlgebra h = hopf_from_bundle(b);
  Coalgebra c = coalgebra_from_bundle(b);
  LinMap rho = reshaped(b, "rho", tensor_space(h.space, c.space), c.space);
  return make_weak_coaction(std::move(c), std::move(h), std::move(rho));
}

HarrisonCocycle harrison_from_bundle(const Bundle& b) {
  WeakCoaction w = weak_coaction_from_bundle(b);
  LinMap alpha =
      reshaped(b, "alpha", tensor_space(w.h.space, w.h.space), w.c.space);
  return make_harrison(std::move(w), std::move(alpha));
}

TrivialHarrison trivial_harrison_from_bundle(const Bundle& b) {
  ModuleCoalgebra mc = modcoalg_from_bundle(b);
  LinMap alpha =
      reshaped(b, "alpha", tensor_space(mc.h.space, mc.h.space), mc.c.space);
  return make_trivial_harrison(std::move(mc), std::move(alpha));
}

TwistedCocycle twisted_cocycle_from_bundle(const Bundle& b) {
  ModuleCoalgebra mc = modcoalg_from_bundle(b);
  LinMap alpha =
      reshaped(b, "alpha", tensor_space(mc.h.space, mc.h.space), mc.c.space);
  return make_twisted_cocycle(std::move(mc), std::move(alpha));
}

EquivWitness witness_from_bundle(const Bundle& b) {
  ModuleCoalgebra mc = modcoalg_from_bundle(b);
  Space hc = tensor_space(mc.h.space, mc.c.space);
  RightTwist tau = make_right_twist(mc, reshaped(b, "tau", hc, mc.c.space));
  RightTwist lam = make_right_twist(mc, reshaped(b, "lambda_tw", hc, mc.c.space));
  return make_witness(tau, lam, reshaped(b, "v", mc.h.space, mc.c.space));
}

ConvElement conv_from_bundle(const Bundle& b, const std::string& name) {
  HopfAlgebra h = hopf_from_bundle(b);
  Coalgebra c = coalgebra_from_bundle(b);
  LinMap m = reshaped(b, name, h.space, c.space);
  return make_conv(std::move(c), h.algebra(), std::move(m));
}

}  // namespace cotwist
