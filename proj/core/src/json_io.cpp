#include "augframes/json_io.hpp"

#include "augframes/error.hpp"

namespace augframes {

using nlohmann::json;

mpz_class parse_integer(const json& j) {
  try {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      mpz_class out;
      if (s.empty() || out.set_str(s, 10) != 0) throw Error(Errc::ParseError, "bad integer '" + s + "'");
      return out;
    }
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  throw Error(Errc::ParseError, "expected an integer, got " + j.dump());
}

namespace {

mpq_class parse_rational(const json& j) {
  if (!j.is_string()) return mpq_class(parse_integer(j));
  const std::string s = j.get<std::string>();
  mpq_class out;
  if (s.empty() || out.set_str(s, 10) != 0 || out.get_den() == 0) throw Error(Errc::ParseError, "bad rational '" + s + "'");
  out.canonicalize();
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(Errc::ParseError, std::string("missing field '") + name + "'");
  return j.at(name);
}

long as_long(const json& j) {
  mpz_class v = parse_integer(j);
  if (!v.fits_slong_p()) throw Error(Errc::ParseError, "integer out of range");
  return v.get_si();
}

}  // namespace

json to_json(const RingElement& a) { return {{"x", a.x.get_str()}, {"y", a.y.get_str()}}; }

RingElement ring_element_from_json(const json& j) { return {parse_integer(field(j, "x")), parse_integer(field(j, "y"))}; }

json to_json(const FieldElement& a) { return {{"x", a.x.get_str()}, {"y", a.y.get_str()}}; }

FieldElement field_element_from_json(const json& j) {
  return {parse_rational(field(j, "x")), parse_rational(field(j, "y"))};
}

json to_json(const Vector& v) {
  json coords = json::array();
  for (const auto& c : v.coords) coords.push_back(to_json(c));
  return {{"coords", coords}};
}

Vector vector_from_json(const json& j) {
  const json& coords = field(j, "coords");
  if (!coords.is_array()) throw Error(Errc::ParseError, "coords must be an array");
  Vector v;
  for (const auto& c : coords) v.coords.push_back(ring_element_from_json(c));
  return v;
}

json to_json(const Line& l) {
  json j = to_json(l.rep);
  j["key"] = l.key;
  return j;
}

Line line_from_json(const json& j, const Ring& ring) {
  Line l = canonical_line(vector_from_json(j), ring);
  if (j.contains("key") && j.at("key") != l.key) throw Error(Errc::ParseError, "line key does not match its coordinates");
  if (!(l.rep == vector_from_json(j))) throw Error(Errc::ParseError, "line coordinates are not canonical");
  return l;
}

Ring ring_from_spec(const std::string& spec) {
  if (spec.rfind("d=", 0) != 0) throw Error(Errc::ParseError, "ring spec must look like d=<integer>, got '" + spec + "'");
  mpz_class d;
  if (d.set_str(spec.substr(2), 10) != 0 || !d.fits_slong_p()) throw Error(Errc::ParseError, "bad ring spec '" + spec + "'");
  return make_ring(d.get_si());
}

json to_json(const SweepReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json pt = json::array();
    for (const auto& z : f) pt.push_back(to_json(z));
    failures.push_back(f.size() == 1 ? pt[0] : pt);
  }
  return {{"ring", r.ring},
          {"lemma", lemma_name(r.lemma)},
          {"grid_denominator", r.grid_denominator},
          {"tested", r.tested},
          {"failures", failures}};
}

json to_json(const FrameComplex& fc) {
  json vertices = json::array();
  for (const auto& v : fc.vertices) vertices.push_back(to_json(v));
  json simplices = json::object();
  for (std::size_t k = 1; k < fc.cx.faces.size(); ++k) {
    json level = json::array();
    for (const auto& s : fc.cx.faces[k]) level.push_back(s);
    simplices[std::to_string(k)] = level;
  }
  json witnesses = json::array();
  for (const auto& [s, w] : fc.witnesses) {
    witnesses.push_back({{"simplex", s}, {"i", w.i}, {"j", w.j}, {"k", w.k}, {"u1", to_json(w.u1)}, {"u2", to_json(w.u2)}});
  }
  return {{"ring", fc.ring.spec()},
          {"n", fc.n},
          {"m", fc.m},
          {"bound", fc.bound},
          {"kind", frame_kind_name(fc.kind)},
          {"unit_window", fc.unit_window},
          {"windowed", fc.windowed},
          {"vertices", vertices},
          {"simplices", simplices},
          {"witnesses", witnesses}};
}

FrameComplex frame_complex_from_json(const json& j) {
  try {
    FrameComplex fc{ring_from_spec(field(j, "ring").get<std::string>())};
    fc.n = static_cast<int>(as_long(field(j, "n")));
    fc.m = static_cast<int>(as_long(field(j, "m")));
    fc.bound = as_long(field(j, "bound"));
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind != "B" && kind != "BA") throw Error(Errc::ParseError, "kind must be B or BA");
    fc.kind = kind == "B" ? FrameKind::B : FrameKind::BA;
    fc.unit_window = j.contains("unit_window") ? static_cast<int>(as_long(j.at("unit_window"))) : kDefaultUnitWindow;
    fc.windowed = j.value("windowed", fc.kind == FrameKind::BA && !fc.ring.units_finite());
    for (const auto& v : field(j, "vertices")) fc.vertices.push_back(line_from_json(v, fc.ring));
    const std::size_t nv = fc.vertices.size();
    fc.cx.vertex_count = nv;
    fc.cx.faces.assign(1, {});
    for (const auto& [k, level] : field(j, "simplices").items()) {
      const std::size_t deg = std::stoul(k);
      if (deg == 0) continue;
      if (fc.cx.faces.size() <= deg) fc.cx.faces.resize(deg + 1);
      for (const auto& s : level) {
        Simplex simplex = s.get<Simplex>();
        if (simplex.size() != deg + 1) throw Error(Errc::ParseError, "simplex size does not match its degree");
        for (std::size_t v : simplex) {
          if (v >= nv) throw Error(Errc::ParseError, "simplex vertex out of range");
        }
        fc.cx.faces[deg].push_back(std::move(simplex));
      }
    }
    fc.cx.normalize();
    if (j.contains("witnesses")) {
      for (const auto& w : j.at("witnesses")) {
        Simplex s = field(w, "simplex").get<Simplex>();
        fc.witnesses.emplace(s, AdditiveWitness{field(w, "i").get<std::size_t>(), field(w, "j").get<std::size_t>(),
                                                field(w, "k").get<std::size_t>(),
                                                ring_element_from_json(field(w, "u1")),
                                                ring_element_from_json(field(w, "u2"))});
      }
    }
    return fc;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

json to_json(const HomologyProfile& h) {
  json degrees = json::object();
  for (std::size_t k = 0; k < h.degrees.size(); ++k) {
    json torsion = json::array();
    for (const auto& t : h.degrees[k].torsion) torsion.push_back(t.get_str());
    degrees[std::to_string(k)] = {{"betti", h.degrees[k].betti}, {"torsion", torsion}};
  }
  return {{"degrees", degrees}, {"reduced", h.reduced}};
}

json ring_info_json(const Ring& ring) {
  const auto [p, q] = ring.delta_sq();
  const auto nf = ring.norm_form();
  const UnitGroup& g = ring.units();
  json torsion = json::array();
  for (const auto& u : g.torsion) torsion.push_back(to_json(u));
  json j = {{"ring", ring.spec()},
            {"d", ring.d()},
            {"mode", ring.mode() == RingMode::REM1 ? "REM1" : "OTHER"},
            {"delta_sq", {p, q}},
            {"norm_form", {nf.a, nf.b, nf.c}},
            {"norm_euclidean", ring.norm_euclidean()},
            {"units_finite", ring.units_finite()},
            {"generated_by_units", generated_by_units(ring.d())},
            {"torsion", torsion},
            {"span_modulus", g.span_modulus.get_str()}};
  j["fundamental"] = g.fundamental ? to_json(*g.fundamental) : json(nullptr);
  return j;
}

}  // namespace augframes
