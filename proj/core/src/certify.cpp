#include "augframes/certify.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>
#include <numeric>
#include <unordered_map>

#include "augframes/error.hpp"
#include "augframes/json_io.hpp"

namespace augframes {

using nlohmann::json;

namespace {

Vector pair_vector(const RingElement& a, const RingElement& b) { return Vector{a, b}; }

const Line& e1_line(const Ring& ring) {
  // Cached per ring, per thread.
  thread_local std::map<long, Line> cache;
  auto it = cache.find(ring.d());
  if (it == cache.end()) it = cache.emplace(ring.d(), canonical_line(pair_vector(1, 0), ring)).first;
  return it->second;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// x, y with a x + b y = gcd(a, b) >= 0.
long ext_gcd(long a, long b, long& x, long& y) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

// Interval of t with lo <= base + t * step <= hi.
bool t_range(long base, long step, long lo, long hi, long& tmin, long& tmax) {
  if (step == 0) return base >= lo && base <= hi;
  long a = step > 0 ? ceil_div(lo - base, step) : ceil_div(hi - base, step);
  long b = step > 0 ? floor_div(hi - base, step) : floor_div(lo - base, step);
  tmin = std::max(tmin, a);
  tmax = std::min(tmax, b);
  return tmin <= tmax;
}

std::vector<ZLine> farey_neighbors(const ZLine& v, long bound) {
  long x = 0, y = 0;
  ext_gcd(v[0], v[1], x, y);
  // p s - q r = 1 with (r, s) = (r0 + t p, s0 + t q)
  const long r0 = -y;
  const long s0 = x;
  long tmin = std::numeric_limits<long>::min() / 4;
  long tmax = std::numeric_limits<long>::max() / 4;
  std::vector<ZLine> out;
  if (!t_range(r0, v[0], -bound, bound, tmin, tmax)) return out;
  if (!t_range(s0, v[1], -bound, bound, tmin, tmax)) return out;
  for (long t = tmin; t <= tmax; ++t) out.push_back(normalize_zline({r0 + t * v[0], s0 + t * v[1]}));
  return out;
}

void require_primitive_z(const ZLine& v) {
  if (std::gcd(v[0], v[1]) != 1) throw Error(Errc::PreconditionViolated, "Z-line must be primitive");
}

template <typename Goal>
std::vector<ZLine> farey_bfs(ZLine from, ZLine avoid, long max_bound, Goal goal) {
  struct Hash {
    std::size_t operator()(const ZLine& v) const {
      return std::hash<long>()(v[0]) * 1000003U ^ std::hash<long>()(v[1]);
    }
  };
  const long need = std::max(std::abs(from[0]), std::abs(from[1]));
  for (long bound = 8; bound <= max_bound; bound *= 2) {
    if (bound < need) continue;
    std::unordered_map<ZLine, ZLine, Hash> parent;
    std::deque<ZLine> queue{from};
    parent.emplace(from, from);
    while (!queue.empty()) {
      const ZLine cur = queue.front();
      queue.pop_front();
      if (goal(cur)) {
        std::vector<ZLine> path{cur};
        ZLine at = cur;
        while (!(at == from)) {
          at = parent.at(at);
          path.push_back(at);
        }
        std::ranges::reverse(path);
        return path;
      }
      for (const ZLine& w : farey_neighbors(cur, bound)) {
        if (w == avoid || parent.contains(w)) continue;
        parent.emplace(w, cur);
        queue.push_back(w);
      }
    }
  }
  throw Error(Errc::PathNotFound, "no Farey path within bound " + std::to_string(max_bound));
}

Vector zline_vector(const ZLine& v) { return Vector{RingElement(v[0]), RingElement(v[1])}; }

json class_json(const SpanClass& c) { return {{"modulus", c.modulus.get_str()}, {"residue", c.residue.get_str()}}; }

json vectors_json(const std::vector<Vector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::vector<Vector> vectors_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected an array of vectors");
  std::vector<Vector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

std::string symbol_key(const ModularSymbol& s, const Ring& ring) {
  std::string k;
  for (const auto& v : s.vectors) k += canonical_line(v, ring).key + '|';
  return k;
}

}  // namespace

SpanClass unit_span_class(const RingElement& x, const Ring& ring) {
  if (!ring.units_finite() && !ring.units().fundamental) {
    throw Error(Errc::FundamentalUnitNotFound, "unit span unknown for " + ring.spec());
  }
  SpanClass c;
  c.modulus = ring.units().span_modulus;
  if (c.modulus == 1) {
    c.residue = 0;
  } else if (c.modulus == 0) {
    c.residue = x.y;
  } else {
    mpz_fdiv_r(c.residue.get_mpz_t(), x.y.get_mpz_t(), c.modulus.get_mpz_t());
  }
  return c;
}

DetourCertificate detour_verify(const Ring& ring, const std::vector<Vector>& path, const RingElement& r1,
                                const RingElement& r2) {
  if (path.empty()) throw Error(Errc::MalformedPath, "empty path");
  std::vector<Line> lines;
  for (const Vector& v : path) {
    if (v.size() != 2) throw Error(Errc::MalformedPath, "path vertices must lie in O^2");
    if (v.is_zero() || !is_primitive(v, ring)) throw Error(Errc::MalformedPath, "path vertex is not primitive");
    lines.push_back(canonical_line(v, ring));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i] == lines[i - 1]) throw Error(Errc::MalformedPath, "consecutive vertices span the same line");
  }

  DetourCertificate c;
  c.ring = ring.spec();
  c.r1 = r1;
  c.r2 = r2;
  c.path = path;
  DetourChecks& k = c.checks;
  k.edges_unimodular = true;
  for (std::size_t i = 1; i < path.size(); ++i) {
    RingElement det = det2(path[i - 1], path[i], ring);
    if (!is_unit(det, ring)) k.edges_unimodular = false;
    k.edge_determinants.push_back(std::move(det));
  }
  const Line& e1 = e1_line(ring);
  k.avoids_e1 = std::ranges::none_of(lines, [&](const Line& l) { return l == e1; });
  k.endpoints_match = lines.front() == canonical_line(pair_vector(r1, 1), ring) &&
                      lines.back() == canonical_line(pair_vector(r2, 1), ring);
  k.class_r1 = unit_span_class(r1, ring);
  k.class_r2 = unit_span_class(r2, ring);
  k.class_separated = !(k.class_r1 == k.class_r2);
  c.valid = k.edges_unimodular && k.avoids_e1 && k.endpoints_match && k.class_separated;
  return c;
}

ZLine normalize_zline(ZLine v) {
  if (v[1] < 0 || (v[1] == 0 && v[0] < 0)) return {-v[0], -v[1]};
  return v;
}

std::vector<ZLine> path_b2z(ZLine from, ZLine to, ZLine avoid, long max_bound) {
  from = normalize_zline(from);
  to = normalize_zline(to);
  avoid = normalize_zline(avoid);
  require_primitive_z(from);
  require_primitive_z(to);
  require_primitive_z(avoid);
  if (from == avoid || to == avoid) throw Error(Errc::PreconditionViolated, "endpoints must differ from the avoided line");
  if (from == to) return {};
  if (std::max(std::abs(to[0]), std::abs(to[1])) > max_bound) {
    throw Error(Errc::PathNotFound, "target exceeds bound " + std::to_string(max_bound));
  }
  return farey_bfs(from, avoid, max_bound, [&](const ZLine& v) { return v == to; });
}

std::vector<ZLine> path_b2z_to_height_one(ZLine from, ZLine avoid, long max_bound) {
  from = normalize_zline(from);
  avoid = normalize_zline(avoid);
  require_primitive_z(from);
  require_primitive_z(avoid);
  if (from == avoid) throw Error(Errc::PreconditionViolated, "start must differ from the avoided line");
  return farey_bfs(from, avoid, max_bound, [](const ZLine& v) { return v[1] == 1; });
}

std::optional<BuiltinDetour> builtin_detour(const Ring& ring) {
  const RingElement delta{0, 1};
  switch (ring.d()) {
    case -2:
      return BuiltinDetour{{{delta, 1}, {1, -delta}, {0, 1}}, delta, 0};
    case -7:
      return BuiltinDetour{{{delta, 1}, {RingElement(3, -1), -delta}, {RingElement(-1, 2), 1}}, delta, RingElement(-1, 2)};
    case -11:
      return BuiltinDetour{
          {{delta, 1}, {2, RingElement(1, -1)}, {delta, 2}, {1, RingElement(1, -1)}, {0, 1}}, delta, 0};
    default:
      return std::nullopt;
  }
}

DetourCertificate detour_construct(const Ring& ring) {
  if (auto b = builtin_detour(ring)) return detour_verify(ring, b->path, b->r1, b->r2);
  if (generated_by_units(ring.d())) throw Error(Errc::NoDetourExpected, ring.spec() + " is generated by units");
  if (ring.d() < 0 || !ring.norm_euclidean()) {
    throw Error(Errc::PreconditionViolated, "detours are constructed for d in {-2, -7, -11} or real norm-Euclidean d");
  }
  const RingElement& eps = ring.fundamental_unit();
  if (!eps.x.fits_slong_p() || !eps.y.fits_slong_p()) throw Error(Errc::PathNotFound, "fundamental unit too large");
  const ZLine start = normalize_zline({eps.x.get_si(), -eps.y.get_si()});
  long max_bound = kDefaultFareyMaxBound;
  while (max_bound < std::max(std::abs(start[0]), std::abs(start[1]))) max_bound *= 2;
  const std::vector<ZLine> tail = path_b2z_to_height_one(start, {1, 0}, max_bound);

  const RingElement delta{0, 1};
  std::vector<Vector> path{{delta, 1}};
  // The determinant of (delta, 1), (a, -b) is -(a + b delta), a unit.
  path.push_back(pair_vector(RingElement(eps.x), RingElement(mpz_class(-eps.y))));
  for (std::size_t i = 1; i < tail.size(); ++i) path.push_back(zline_vector(tail[i]));
  const ZLine last = tail.back();
  return detour_verify(ring, path, delta, RingElement(last[0]));
}

RingElement determinant(const std::vector<Vector>& columns, const Ring& ring) {
  const std::size_t n = columns.size();
  for (const auto& c : columns) {
    if (c.size() != n) throw Error(Errc::NotABasis, "matrix is not square");
  }
  if (n == 0) return 1;
  if (n > kMaxRank) throw Error(Errc::RankTooLarge, "determinant size " + std::to_string(n));
  if (n == 1) return columns[0][0];
  RingElement det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j][0].is_zero()) continue;
    std::vector<Vector> minor;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == j) continue;
      Vector v;
      for (std::size_t r = 1; r < n; ++r) v.coords.push_back(columns[c][r]);
      minor.push_back(std::move(v));
    }
    RingElement term = ring.mul(columns[j][0], determinant(minor, ring));
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

ModularSymbol symbol_normalize(const ModularSymbol& s, const Ring& ring) {
  if (s.vectors.empty() || !is_unit(determinant(s.vectors, ring), ring)) {
    throw Error(Errc::NotABasis, "symbol vectors do not form a basis");
  }
  std::vector<Line> lines;
  for (const auto& v : s.vectors) lines.push_back(canonical_line(v, ring));
  std::vector<std::size_t> perm(lines.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::ranges::sort(perm, [&](std::size_t a, std::size_t b) { return lines[a] < lines[b]; });
  int parity = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) parity = -parity;
    }
  }
  ModularSymbol out;
  out.sign = s.sign * parity;
  for (std::size_t i : perm) out.vectors.push_back(lines[i].rep);
  return out;
}

SymbolChain normalize_chain(const SymbolChain& c, const Ring& ring) {
  std::map<std::string, ChainTerm> merged;
  for (const ChainTerm& t : c.terms) {
    ModularSymbol s = symbol_normalize(t.symbol, ring);
    const mpz_class coeff = t.coeff * s.sign;
    s.sign = 1;
    const std::string key = symbol_key(s, ring);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, ChainTerm{coeff, std::move(s)});
    } else {
      it->second.coeff += coeff;
    }
  }
  SymbolChain out;
  for (auto& [key, t] : merged) {
    if (t.coeff != 0) out.terms.push_back(std::move(t));
  }
  return out;
}

SymbolChain apply_relation3(const ModularSymbol& s, std::size_t slot_i, std::size_t slot_j, const Ring& ring) {
  const std::size_t n = s.vectors.size();
  if (n != 2 && n != 3) throw Error(Errc::RankMismatch, "relation 3 is applied to symbols of rank 2 or 3");
  if (slot_i >= n || slot_j >= n || slot_i == slot_j) throw Error(Errc::SlotOutOfRange, "bad slot pair");
  if (!is_unit(determinant(s.vectors, ring), ring)) throw Error(Errc::NotABasis, "symbol vectors do not form a basis");
  const Vector sum = s.vectors[slot_i] + s.vectors[slot_j];
  ModularSymbol first{s.vectors, 1};
  first.vectors[slot_i] = sum;
  ModularSymbol second{s.vectors, 1};
  second.vectors[slot_i] = sum;
  second.vectors[slot_j] = s.vectors[slot_i];
  return SymbolChain{{{mpz_class(s.sign), std::move(first)}, {mpz_class(-s.sign), std::move(second)}}};
}

mpz_class FormalLineSum::augmentation() const {
  mpz_class total = 0;
  for (const auto& [key, term] : terms) total += term.second;
  return total;
}

bool operator==(const FormalLineSum& a, const FormalLineSum& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (const auto& [key, term] : a.terms) {
    auto it = b.terms.find(key);
    if (it == b.terms.end() || it->second.second != term.second) return false;
  }
  return true;
}

FormalLineSum apartment_image_2(const SymbolChain& c, const Ring& ring) {
  FormalLineSum out;
  auto add = [&](const Vector& v, const mpz_class& coeff) {
    Line l = canonical_line(v, ring);
    auto it = out.terms.find(l.key);
    if (it == out.terms.end()) {
      std::string key = l.key;
      out.terms.emplace(std::move(key), std::make_pair(std::move(l), coeff));
    } else {
      it->second.second += coeff;
      if (it->second.second == 0) out.terms.erase(it);
    }
  };
  for (const ChainTerm& t : c.terms) {
    if (t.symbol.vectors.size() != 2) throw Error(Errc::RankMismatch, "apartment image needs rank 2 symbols");
    const mpz_class w = t.coeff * t.symbol.sign;
    if (w == 0) continue;
    add(t.symbol.vectors[0], w);
    add(t.symbol.vectors[1], -w);
  }
  return out;
}

LoopCertificate loop_nontrivial_certificate(const Ring& ring, const std::vector<Vector>& loop) {
  const std::size_t len = loop.size();
  if (len < 3) throw Error(Errc::NotALoop, "a loop needs at least 3 vertices");
  std::vector<Line> lines;
  for (const Vector& v : loop) {
    if (v.size() != 2 || v.is_zero() || !is_primitive(v, ring)) throw Error(Errc::NotALoop, "loop vertex is not a primitive vector of O^2");
    Line l = canonical_line(v, ring);
    if (std::ranges::find(lines, l) != lines.end()) throw Error(Errc::NotALoop, "loop repeats a line");
    lines.push_back(std::move(l));
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!is_unit(det2(loop[i], loop[(i + 1) % len], ring), ring)) {
      throw Error(Errc::NotALoop, "edge " + std::to_string(i) + " is not a partial frame");
    }
  }
  const Line& e1 = e1_line(ring);
  std::optional<std::size_t> passage;
  for (std::size_t i = 0; i < len; ++i) {
    if (!(lines[i] == e1)) continue;
    if (passage) throw Error(Errc::MultiplePassages, "loop passes through span(e1) more than once");
    passage = i;
  }
  if (!passage) throw Error(Errc::NotALoop, "loop does not pass through span(e1)");

  // A neighbor (x, y) of e1 has y = det(e1, v) a unit; its line is spanned by (x / y, 1).
  auto height_one = [&](const Vector& v) { return ring.mul(v[0], ring.unit_inverse(v[1])); };
  LoopCertificate c;
  c.ring = ring.spec();
  c.loop = loop;
  c.passage = *passage;
  c.left_neighbor = height_one(loop[(*passage + len - 1) % len]);
  c.right_neighbor = height_one(loop[(*passage + 1) % len]);
  c.left_class = unit_span_class(c.left_neighbor, ring);
  c.right_class = unit_span_class(c.right_neighbor, ring);
  c.valid = !(c.left_class == c.right_class);
  return c;
}

namespace {

SymbolChain loop_chain(const std::vector<Vector>& loop) {
  SymbolChain chain;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    chain.terms.push_back({1, ModularSymbol{{loop[i], loop[(i + 1) % loop.size()]}, 1}});
  }
  return chain;
}

bool same_chain(const SymbolChain& a, const SymbolChain& b, const Ring& ring) {
  return to_json(normalize_chain(a, ring)) == to_json(normalize_chain(b, ring));
}

}  // namespace

NoninjectivityBundle noninjectivity_report(const Ring& ring) {
  if (!ring.norm_euclidean()) throw Error(Errc::RingNotEuclidean, ring.spec() + " is not norm-Euclidean");
  NoninjectivityBundle b;
  b.ring = ring.spec();
  if (generated_by_units(ring.d())) {
    b.reason = "ring is generated by units; no detour and no kernel element are expected";
    return b;
  }
  b.has_certificate = true;
  b.detour = detour_construct(ring);
  std::vector<Vector> loop{pair_vector(1, 0)};
  loop.insert(loop.end(), b.detour->path.begin(), b.detour->path.end());
  b.loop = loop_nontrivial_certificate(ring, loop);
  b.chain = loop_chain(loop);
  b.image = apartment_image_2(b.chain, ring);
  b.valid = b.detour->valid && b.loop->valid && b.image.is_zero();
  return b;
}

json to_json(const DetourCertificate& c) {
  json dets = json::array();
  for (const auto& d : c.checks.edge_determinants) dets.push_back(to_json(d));
  return {{"type", "detour"},
          {"ring", c.ring},
          {"r1", to_json(c.r1)},
          {"r2", to_json(c.r2)},
          {"path", vectors_json(c.path)},
          {"checks",
           {{"edge_determinants", dets},
            {"edges_unimodular", c.checks.edges_unimodular},
            {"avoids_e1", c.checks.avoids_e1},
            {"endpoints_match", c.checks.endpoints_match},
            {"class_r1", class_json(c.checks.class_r1)},
            {"class_r2", class_json(c.checks.class_r2)},
            {"class_separated", c.checks.class_separated}}},
          {"valid", c.valid}};
}

json to_json(const LoopCertificate& c) {
  return {{"type", "loop"},
          {"ring", c.ring},
          {"path", vectors_json(c.loop)},
          {"checks",
           {{"passage", c.passage},
            {"left_neighbor", to_json(c.left_neighbor)},
            {"right_neighbor", to_json(c.right_neighbor)},
            {"left_class", class_json(c.left_class)},
            {"right_class", class_json(c.right_class)},
            {"classes_differ", !(c.left_class == c.right_class)}}},
          {"valid", c.valid}};
}

json to_json(const ModularSymbol& s) { return {{"vectors", vectors_json(s.vectors)}, {"sign", s.sign}}; }

json to_json(const SymbolChain& c) {
  json a = json::array();
  for (const auto& t : c.terms) {
    json term = to_json(t.symbol);
    term["coeff"] = t.coeff.get_str();
    a.push_back(term);
  }
  return a;
}

json to_json(const FormalLineSum& f) {
  json a = json::array();
  for (const auto& [key, term] : f.terms) {
    json t = to_json(term.first);
    t["coeff"] = term.second.get_str();
    a.push_back(t);
  }
  return a;
}

ModularSymbol symbol_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vectors")) throw Error(Errc::ParseError, "symbol needs 'vectors'");
  ModularSymbol s;
  s.vectors = vectors_from_json(j.at("vectors"));
  s.sign = 1;
  if (j.contains("sign")) {
    const mpz_class sg = parse_integer(j.at("sign"));
    if (sg != 1 && sg != -1) throw Error(Errc::ParseError, "sign must be 1 or -1");
    s.sign = static_cast<int>(sg.get_si());
  }
  return s;
}

SymbolChain chain_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "chain must be an array of terms");
  SymbolChain c;
  for (const auto& t : j) c.terms.push_back({t.contains("coeff") ? parse_integer(t.at("coeff")) : mpz_class(1), symbol_from_json(t)});
  return c;
}

json to_json(const NoninjectivityBundle& b) {
  json j = {{"type", "noninjectivity"}, {"ring", b.ring}, {"certificate", b.has_certificate}, {"valid", b.valid}};
  if (!b.has_certificate) {
    j["status"] = "NoCertificate";
    j["reason"] = b.reason;
    return j;
  }
  j["status"] = "Certificate";
  j["detour"] = to_json(*b.detour);
  j["loop"] = to_json(*b.loop);
  j["path"] = vectors_json(b.loop->loop);
  j["chain"] = to_json(b.chain);
  j["apartment_image"] = to_json(b.image);
  j["checks"] = {{"detour_valid", b.detour->valid},
                 {"loop_valid", b.loop->valid},
                 {"image_zero", b.image.is_zero()},
                 {"chain_is_loop_boundary", true}};
  return j;
}

bool verify_certificate_json(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    const Ring ring = ring_from_spec(j.at("ring").get<std::string>());
    if (type == "detour") {
      DetourCertificate c = detour_verify(ring, vectors_from_json(j.at("path")), ring_element_from_json(j.at("r1")),
                                          ring_element_from_json(j.at("r2")));
      return c.valid && to_json(c) == j;
    }
    if (type == "loop") {
      LoopCertificate c = loop_nontrivial_certificate(ring, vectors_from_json(j.at("path")));
      return c.valid && to_json(c) == j;
    }
    if (type == "noninjectivity") {
      if (!j.at("certificate").get<bool>()) return false;
      if (!verify_certificate_json(j.at("detour")) || !verify_certificate_json(j.at("loop"))) return false;
      const std::vector<Vector> detour_path = vectors_from_json(j.at("detour").at("path"));
      const std::vector<Vector> loop = vectors_from_json(j.at("loop").at("path"));
      // The loop is e1 followed by the detour.
      if (loop.size() != detour_path.size() + 1 || !(loop[0] == pair_vector(1, 0)) ||
          !std::equal(detour_path.begin(), detour_path.end(), loop.begin() + 1)) {
        return false;
      }
      const SymbolChain chain = chain_from_json(j.at("chain"));
      if (!same_chain(chain, loop_chain(loop), ring)) return false;
      const FormalLineSum image = apartment_image_2(chain, ring);
      if (!image.is_zero() || to_json(image) != j.at("apartment_image")) return false;
      return j.at("valid").get<bool>() && j.at("checks").at("image_zero").get<bool>();
    }
    return false;
  } catch (const json::exception&) {
    return false;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace augframes
