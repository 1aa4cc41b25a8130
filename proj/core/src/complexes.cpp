#include "augframes/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

#include "augframes/error.hpp"

namespace augframes {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool within_bound(const RingElement& c, const Ring& ring, long bound) {
  if (abs(ring.norm(c)) > bound) return false;
  if (ring.imaginary()) return true;
  return abs(c.x) <= bound && abs(c.y) <= bound;
}

// Ring elements allowed as coordinates at the given bound.
std::vector<RingElement> coordinate_pool(const Ring& ring, long bound) {
  std::vector<RingElement> pool;
  long ymax = bound;
  long xmax = bound;
  if (ring.imaginary()) {
    // N >= (3/4) y^2 and |x + qy/2| <= sqrt(N).
    const long s = static_cast<long>(std::sqrt(static_cast<double>(bound))) + 1;
    ymax = 2 * s;
    xmax = s + ymax;
  }
  for (long x = -xmax; x <= xmax; ++x) {
    for (long y = -ymax; y <= ymax; ++y) {
      RingElement r{x, y};
      if (within_bound(r, ring, bound)) pool.push_back(r);
    }
  }
  return pool;
}

bool in_fixed_span(const Vector& v, int m) {
  for (std::size_t i = static_cast<std::size_t>(m); i < v.size(); ++i) {
    if (!v[i].is_zero()) return false;
  }
  return true;
}

struct Tester {
  const Ring& ring;
  FrameKind kind;
  int window;
  std::vector<Vector> fixed;

  std::optional<FrameSimplex> operator()(const std::vector<const Line*>& lines) const {
    std::vector<Vector> vs;
    for (const Line* l : lines) vs.push_back(l->rep);
    for (const Vector& e : fixed) vs.push_back(e);
    if (kind == FrameKind::BA) return is_augmented_frame(vs, ring, window);
    if (!is_partial_frame(vs, ring)) return std::nullopt;
    FrameSimplex s;
    for (const Vector& v : vs) s.lines.push_back(canonical_line(v, ring));
    return s;
  }
};

std::uint64_t edge_code(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32U) | static_cast<std::uint64_t>(b);
}

}  // namespace

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  const std::size_t k = s.size() - 1;
  if (k >= faces.size()) return false;
  return std::binary_search(faces[k].begin(), faces[k].end(), s);
}

bool SimplicialComplex::downward_closed() const {
  for (std::size_t k = 1; k < faces.size(); ++k) {
    for (const Simplex& s : faces[k]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t t = 0; t < s.size(); ++t) {
          if (t != drop) f.push_back(s[t]);
        }
        if (!contains(f)) return false;
      }
    }
  }
  return true;
}

void SimplicialComplex::normalize() {
  if (faces.empty()) faces.emplace_back();
  faces[0].clear();
  for (std::size_t v = 0; v < vertex_count; ++v) faces[0].push_back({v});
  for (auto& level : faces) {
    for (auto& s : level) std::ranges::sort(s);
    std::ranges::sort(level);
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (faces.size() > 1 && faces.back().empty()) faces.pop_back();
}

SimplicialComplex make_complex(std::size_t vertex_count, std::vector<Simplex> simplices) {
  SimplicialComplex cx;
  cx.vertex_count = vertex_count;
  std::set<Simplex> all;
  for (Simplex& s : simplices) {
    std::ranges::sort(s);
    const std::size_t k = s.size();
    // all nonempty subsets
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex f;
      for (std::size_t t = 0; t < k; ++t) {
        if (mask & (std::uint64_t{1} << t)) f.push_back(s[t]);
      }
      all.insert(std::move(f));
    }
  }
  for (const Simplex& s : all) {
    if (cx.faces.size() < s.size()) cx.faces.resize(s.size());
    cx.faces[s.size() - 1].push_back(s);
  }
  cx.normalize();
  return cx;
}

std::string frame_kind_name(FrameKind k) { return k == FrameKind::B ? "B" : "BA"; }

std::optional<std::size_t> FrameComplex::index_of(const Line& l) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), l);
  if (it != vertices.end() && *it == l) return static_cast<std::size_t>(it - vertices.begin());
  // Fall back to a scan when the ordering does not locate it (e.g. unsorted input).
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == l) return i;
  }
  return std::nullopt;
}

std::vector<Vector> FrameComplex::fixed_lines() const {
  std::vector<Vector> out;
  for (int i = 0; i < m; ++i) out.push_back(standard_basis(static_cast<std::size_t>(n + m), static_cast<std::size_t>(i)));
  return out;
}

FrameComplex build_complex(const Ring& ring, int n, int m, long bound, FrameKind kind, int unit_window,
                           std::size_t vertex_cap) {
  if (n < 0 || m < 0 || n + m < 1) throw Error(Errc::PreconditionViolated, "need n + m >= 1");
  if (n + m > 3) throw Error(Errc::RankTooLarge, "n + m = " + std::to_string(n + m) + " exceeds 3");
  if (bound < 1) throw Error(Errc::PreconditionViolated, "bound must be at least 1");
  if (!ring.norm_euclidean()) throw Error(Errc::RingNotEuclidean, ring.spec() + " is not norm-Euclidean");
  const std::size_t dim = static_cast<std::size_t>(n + m);

  FrameComplex fc{ring};
  fc.n = n;
  fc.m = m;
  fc.bound = bound;
  fc.kind = kind;
  fc.unit_window = unit_window;
  fc.windowed = kind == FrameKind::BA && !ring.units_finite();
  const Tester test{ring, kind, unit_window, fc.fixed_lines()};

  const std::vector<RingElement> pool = coordinate_pool(ring, bound);
  const double total = std::pow(static_cast<double>(pool.size()), static_cast<double>(dim));
  if (total > 4.0e6) throw Error(Errc::BoundTooLarge, "coordinate search space too large at bound " + std::to_string(bound));

  std::map<std::string, Line> found;
  std::vector<std::size_t> digits(dim, 0);
  while (true) {
    Vector v;
    for (std::size_t i = 0; i < dim; ++i) v.coords.push_back(pool[digits[i]]);
    if (!v.is_zero() && !in_fixed_span(v, m) && is_primitive(v, ring)) {
      Line l = canonical_line(v, ring);
      const bool fits = std::ranges::all_of(l.rep.coords, [&](const RingElement& c) { return within_bound(c, ring, bound); });
      if (fits && !found.contains(l.key)) {
        if (test({&l})) found.emplace(l.key, l);
        if (found.size() > vertex_cap) throw Error(Errc::BoundTooLarge, "vertex cap exceeded");
      }
    }
    std::size_t pos = 0;
    while (pos < dim && ++digits[pos] == pool.size()) digits[pos++] = 0;
    if (pos == dim) break;
  }
  for (auto& [key, l] : found) fc.vertices.push_back(std::move(l));
  std::ranges::sort(fc.vertices);

  const std::size_t nv = fc.vertices.size();
  fc.cx.vertex_count = nv;
  fc.cx.faces.assign(1, {});
  const std::size_t max_size = kind == FrameKind::BA ? static_cast<std::size_t>(n) + 1 : static_cast<std::size_t>(n);

  auto record = [&](const Simplex& s, const FrameSimplex& f) {
    if (f.kind == SimplexKind::ADDITIVE && f.witness) fc.witnesses.emplace(s, *f.witness);
  };

  std::unordered_set<std::uint64_t> edges;
  if (max_size >= 2) {
    fc.cx.faces.emplace_back();
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i + 1; j < nv; ++j) {
        if (auto f = test({&fc.vertices[i], &fc.vertices[j]})) {
          fc.cx.faces[1].push_back({i, j});
          edges.insert(edge_code(i, j));
          record({i, j}, *f);
        }
      }
    }
  }
  for (std::size_t size = 3; size <= max_size; ++size) {
    std::vector<Simplex> next;
    for (const Simplex& s : fc.cx.faces[size - 2]) {
      for (std::size_t w = s.back() + 1; w < nv; ++w) {
        const bool adjacent = std::ranges::all_of(s, [&](std::size_t a) { return edges.contains(edge_code(a, w)); });
        if (!adjacent) continue;
        Simplex t = s;
        t.push_back(w);
        std::vector<const Line*> ls;
        for (std::size_t a : t) ls.push_back(&fc.vertices[a]);
        if (auto f = test(ls)) {
          record(t, *f);
          next.push_back(std::move(t));
        }
      }
    }
    if (next.empty()) break;
    fc.cx.faces.push_back(std::move(next));
  }
  fc.cx.normalize();
  return fc;
}

FrameSimplex simplex_frame(const FrameComplex& fc, const Simplex& s) {
  FrameSimplex f;
  for (std::size_t a : s) f.lines.push_back(fc.vertices.at(a));
  for (const Vector& e : fc.fixed_lines()) f.lines.push_back(canonical_line(e, fc.ring));
  f.windowed = fc.windowed;
  if (auto it = fc.witnesses.find(s); it != fc.witnesses.end()) {
    f.kind = SimplexKind::ADDITIVE;
    f.witness = it->second;
  }
  return f;
}

std::vector<std::string> verify_complex(const FrameComplex& fc) {
  std::vector<std::string> problems;
  if (!fc.cx.downward_closed()) problems.emplace_back("not downward closed");
  for (std::size_t i = 0; i < fc.vertices.size(); ++i) {
    if (in_fixed_span(fc.vertices[i].rep, fc.m)) problems.push_back("vertex " + std::to_string(i) + " lies in span(e)");
    if (i > 0 && !(fc.vertices[i - 1] < fc.vertices[i])) problems.push_back("vertex order broken at " + std::to_string(i));
  }
  for (const auto& level : fc.cx.faces) {
    for (const Simplex& s : level) {
      const FrameSimplex f = simplex_frame(fc, s);
      bool ok = false;
      if (f.kind == SimplexKind::ADDITIVE) {
        ok = fc.kind == FrameKind::BA && verify_witness(f, fc.ring);
      } else {
        std::vector<Vector> reps;
        for (const Line& l : f.lines) reps.push_back(l.rep);
        ok = reps.size() <= reps[0].size() && is_partial_frame(reps, fc.ring);
      }
      if (!ok) {
        std::string txt = "simplex {";
        for (std::size_t a : s) txt += std::to_string(a) + ' ';
        problems.push_back(txt + "} fails its frame check");
      }
    }
  }
  return problems;
}

FrameComplex link(const FrameComplex& fc, std::span<const Line> sigma, LinkVariant variant) {
  Simplex sig;
  for (const Line& l : sigma) {
    auto idx = fc.index_of(l);
    if (!idx) throw Error(Errc::NotASimplex, "line is not a vertex");
    sig.push_back(*idx);
  }
  std::ranges::sort(sig);
  if (std::adjacent_find(sig.begin(), sig.end()) != sig.end() || !fc.cx.contains(sig)) {
    throw Error(Errc::NotASimplex, "lines do not form a simplex");
  }

  // Faces tau disjoint from sigma with tau + sigma a simplex.
  std::vector<Simplex> taus;
  if (sig.empty()) {
    for (const auto& level : fc.cx.faces) taus.insert(taus.end(), level.begin(), level.end());
  } else {
    for (std::size_t k = sig.size(); k < fc.cx.faces.size(); ++k) {
      for (const Simplex& s : fc.cx.faces[k]) {
        if (!std::ranges::includes(s, sig)) continue;
        Simplex tau;
        std::ranges::set_difference(s, sig, std::back_inserter(tau));
        taus.push_back(std::move(tau));
      }
    }
  }

  std::set<std::size_t> keep;
  for (const Simplex& t : taus) {
    if (t.size() == 1) keep.insert(t[0]);
  }
  if (variant != LinkVariant::PLAIN) {
    std::vector<Vector> span = fc.fixed_lines();
    for (std::size_t a : sig) span.push_back(fc.vertices[a].rep);
    mpz_class fmax = -1;
    for (std::size_t a : sig) fmax = std::max(fmax, f_value(fc.vertices[a], fc.ring));
    std::erase_if(keep, [&](std::size_t v) {
      if (in_span(fc.vertices[v].rep, span, fc.ring)) return true;
      return variant == LinkVariant::LT && !(f_value(fc.vertices[v], fc.ring) < fmax);
    });
  }

  std::vector<std::size_t> order(keep.begin(), keep.end());
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = i;

  FrameComplex out{fc.ring};
  out.n = fc.n;
  out.m = fc.m;
  out.bound = fc.bound;
  out.kind = fc.kind;
  out.unit_window = fc.unit_window;
  out.windowed = fc.windowed;
  for (std::size_t v : order) out.vertices.push_back(fc.vertices[v]);
  out.cx.vertex_count = order.size();
  for (const Simplex& t : taus) {
    if (!std::ranges::all_of(t, [&](std::size_t v) { return keep.contains(v); })) continue;
    Simplex r;
    for (std::size_t v : t) r.push_back(remap[v]);
    if (out.cx.faces.size() < r.size()) out.cx.faces.resize(r.size());
    if (auto it = fc.witnesses.find(t); it != fc.witnesses.end()) out.witnesses.emplace(r, it->second);
    out.cx.faces[r.size() - 1].push_back(std::move(r));
  }
  out.cx.normalize();
  return out;
}

std::vector<std::vector<std::size_t>> components(const SimplicialComplex& cx) {
  DisjointSets ds(cx.vertex_count);
  if (cx.faces.size() > 1) {
    for (const Simplex& e : cx.faces[1]) ds.unite(e[0], e[1]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < cx.vertex_count; ++v) groups[ds.find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::size_t> component_of(const FrameComplex& fc, const Line& v) {
  auto idx = fc.index_of(v);
  if (!idx) throw Error(Errc::VertexAbsent, "line is not a vertex");
  for (auto& comp : components(fc.cx)) {
    if (std::ranges::binary_search(comp, *idx)) return comp;
  }
  return {};
}

FlagComplexFq build_tits_fq(int q, int n) {
  if (q > 7) throw Error(Errc::QTooLarge, "q = " + std::to_string(q) + " exceeds 7");
  bool prime = q >= 2;
  for (int f = 2; f * f <= q; ++f) prime = prime && q % f != 0;
  if (!prime) {
    throw Error(Errc::PreconditionViolated, "q must be prime");
  }
  if (n != 2 && n != 3) throw Error(Errc::PreconditionViolated, "n must be 2 or 3");

  // Normalized nonzero vectors of F_q^n: first nonzero entry 1.
  std::vector<std::vector<int>> proj;
  for (int lead = 0; lead < n; ++lead) {
    const int free = n - lead - 1;
    int count = 1;
    for (int t = 0; t < free; ++t) count *= q;
    for (int code = 0; code < count; ++code) {
      std::vector<int> v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(lead)] = 1;
      int c = code;
      for (int t = n - 1; t > lead; --t) {
        v[static_cast<std::size_t>(t)] = c % q;
        c /= q;
      }
      proj.push_back(std::move(v));
    }
  }

  FlagComplexFq out;
  out.q = q;
  out.n = n;
  for (const auto& v : proj) out.vertices.push_back({1, v});
  std::vector<Simplex> simplices;
  if (n == 3) {
    // Planes through the origin, by normal vector.
    const std::size_t np = proj.size();
    for (const auto& h : proj) out.vertices.push_back({2, h});
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j) {
        int dot = 0;
        for (std::size_t t = 0; t < 3; ++t) dot += proj[i][t] * proj[j][t];
        if (dot % q == 0) simplices.push_back({i, np + j});
      }
    }
  }
  out.cx = make_complex(out.vertices.size(), std::move(simplices));
  return out;
}

}  // namespace augframes
