#include "augframes/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "augframes/error.hpp"

namespace augframes {

namespace {

void require_euclidean(const Ring& ring) {
  if (!ring.norm_euclidean()) throw Error(Errc::RingNotEuclidean, ring.spec() + " is not norm-Euclidean");
}

std::string hex_key(const Vector& v) {
  std::string text;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) text += ',';
    text += v[i].x.get_str() + ':' + v[i].y.get_str();
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(text.size() * 2);
  for (unsigned char ch : text) {
    out += kDigits[ch >> 4U];
    out += kDigits[ch & 15U];
  }
  return out;
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.size();
}

// Diagonalizes the matrix (rows x cols) by unimodular row and column operations
// driven by Euclidean division. Returns the diagonal, or nullopt if the rank is
// smaller than cols.
std::optional<std::vector<RingElement>> diagonalize(std::vector<std::vector<RingElement>> m, const Ring& ring) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<RingElement> diag;
  for (std::size_t t = 0; t < cols; ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      mpz_class best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j].is_zero()) continue;
          mpz_class n = abs(ring.norm(m[i][j]));
          if (!piv || n < best) {
            piv = {i, j};
            best = n;
          }
        }
      }
      if (!piv) return std::nullopt;
      std::swap(m[t], m[piv->first]);
      for (auto& row : m) std::swap(row[t], row[piv->second]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t].is_zero()) continue;
        RingElement q = euclidean_divide(m[i][t], m[t][t], ring).quotient;
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= ring.mul(q, m[t][j]);
        if (!m[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j].is_zero()) continue;
        RingElement q = euclidean_divide(m[t][j], m[t][t], ring).quotient;
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= ring.mul(q, m[i][t]);
        if (!m[t][j].is_zero()) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(m[t][t]);
  }
  return diag;
}

void require_same_length(std::span<const Vector> vs) {
  for (const Vector& v : vs) {
    if (v.size() != vs[0].size()) throw Error(Errc::PreconditionViolated, "vectors of different lengths");
  }
  if (!vs.empty() && vs[0].size() > kMaxRank) {
    throw Error(Errc::RankTooLarge, "vectors of length " + std::to_string(vs[0].size()));
  }
}

}  // namespace

bool Vector::is_zero() const {
  return std::ranges::all_of(coords, [](const RingElement& c) { return c.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out = a;
  for (auto& c : out.coords) c = -c;
  return out;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

Vector scale(const RingElement& u, const Vector& v, const Ring& ring) {
  Vector out = v;
  for (auto& c : out.coords) c = ring.mul(u, c);
  return out;
}

Vector standard_basis(std::size_t n, std::size_t i) {
  Vector v(std::vector<RingElement>(n, RingElement(0)));
  v[i] = 1;
  return v;
}

bool is_primitive(const Vector& v, const Ring& ring) {
  if (v.is_zero()) throw Error(Errc::ZeroVector, "zero vector");
  require_euclidean(ring);
  RingElement g = 0;
  for (const RingElement& c : v.coords) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd(g, c, ring);
    if (is_unit(g, ring)) return true;
  }
  return is_unit(g, ring);
}

Line canonical_line(const Vector& v, const Ring& ring) {
  if (v.is_zero() || !is_primitive(v, ring)) throw Error(Errc::NotPrimitive, "vector is not primitive");

  Vector best;
  if (ring.units_finite()) {
    best = v;
    for (const RingElement& u : ring.units().torsion) {
      Vector w = scale(u, v, ring);
      if (w < best) best = std::move(w);
    }
  } else {
    const RingElement& eps = ring.fundamental_unit();
    const RingElement eps_inv = ring.unit_inverse(eps);
    const RingElement eps_sq = ring.mul(eps, eps);
    best = v;
    const std::size_t i = first_nonzero(best);
    // sigma1(c)^2 / |N(c)| is the embedding ratio; scaling by eps multiplies it by eps^2.
    auto below = [&](const RingElement& c) {
      mpz_class n = abs(ring.norm(c));
      return ring.real_sign(ring.mul(c, c) - RingElement(n)) < 0;
    };
    auto at_or_above_top = [&](const RingElement& c) {
      mpz_class n = abs(ring.norm(c));
      return ring.real_sign(ring.mul(eps_sq, RingElement(n)) - ring.mul(c, c)) <= 0;
    };
    while (below(best[i])) best = scale(eps, best, ring);
    while (at_or_above_top(best[i])) best = scale(eps_inv, best, ring);
    if (ring.real_sign(best[i]) < 0) best = -best;
  }
  std::string key = hex_key(best);
  return Line{std::move(best), std::move(key)};
}

bool is_partial_frame(std::span<const Vector> vs, const Ring& ring) {
  if (vs.empty()) return true;
  require_same_length(vs);
  require_euclidean(ring);
  for (const Vector& v : vs) {
    if (v.is_zero() || !is_primitive(v, ring)) throw Error(Errc::NotPrimitive, "vector is not primitive");
  }
  const std::size_t n = vs[0].size();
  const std::size_t k = vs.size();
  if (k > n) return false;
  std::vector<std::vector<RingElement>> m(n, std::vector<RingElement>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = vs[j][i];
  }
  auto diag = diagonalize(std::move(m), ring);
  if (!diag) return false;
  return std::ranges::all_of(*diag, [&](const RingElement& e) { return is_unit(e, ring); });
}

std::vector<RingElement> window_units(const Ring& ring, int window) {
  if (ring.units_finite()) return ring.units().torsion;
  std::vector<RingElement> out;
  const RingElement& eps = ring.fundamental_unit();
  const RingElement eps_inv = ring.unit_inverse(eps);
  for (int k = -window; k <= window; ++k) {
    RingElement u = k >= 0 ? ring.pow(eps, static_cast<unsigned>(k)) : ring.pow(eps_inv, static_cast<unsigned>(-k));
    out.push_back(u);
    out.push_back(-u);
  }
  return out;
}

std::optional<std::pair<FieldElement, FieldElement>> solve_pair(const Vector& target, const Vector& v1,
                                                                const Vector& v2, const Ring& ring) {
  const std::size_t n = target.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      RingElement det = ring.mul(v1[r], v2[s]) - ring.mul(v1[s], v2[r]);
      if (det.is_zero()) continue;
      FieldElement fd(det);
      FieldElement a = ring.div(FieldElement(ring.mul(target[r], v2[s]) - ring.mul(target[s], v2[r])), fd);
      FieldElement b = ring.div(FieldElement(ring.mul(v1[r], target[s]) - ring.mul(v1[s], target[r])), fd);
      for (std::size_t i = 0; i < n; ++i) {
        FieldElement lhs = ring.mul(a, FieldElement(v1[i])) + ring.mul(b, FieldElement(v2[i]));
        if (!(lhs == FieldElement(target[i]))) return std::nullopt;
      }
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::optional<FrameSimplex> is_augmented_frame(std::span<const Vector> vs, const Ring& ring, int unit_window) {
  require_same_length(vs);
  FrameSimplex s;
  s.windowed = !ring.units_finite();
  for (const Vector& v : vs) {
    Line l = canonical_line(v, ring);
    if (std::ranges::find(s.lines, l) != s.lines.end()) throw Error(Errc::DegenerateSimplex, "repeated line");
    s.lines.push_back(std::move(l));
  }
  if (vs.empty()) return s;
  const std::size_t n = vs[0].size();
  const std::size_t k = s.lines.size();
  if (k > n + 1) return std::nullopt;

  std::vector<Vector> reps;
  for (const Line& l : s.lines) reps.push_back(l.rep);
  if (k <= n && is_partial_frame(reps, ring)) return s;
  if (k < 3) return std::nullopt;

  const std::vector<RingElement> allowed = window_units(ring, unit_window);
  auto allowed_unit = [&](const FieldElement& f) -> std::optional<RingElement> {
    if (!f.is_integral()) return std::nullopt;
    RingElement r = f.to_ring();
    if (!is_unit(r, ring)) return std::nullopt;
    if (std::ranges::find(allowed, r) == allowed.end()) return std::nullopt;
    return r;
  };

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vector> rest;
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < k; ++t) {
      if (t == i) continue;
      rest.push_back(reps[t]);
      idx.push_back(t);
    }
    if (!is_partial_frame(rest, ring)) continue;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        auto sol = solve_pair(reps[i], reps[idx[a]], reps[idx[b]], ring);
        if (!sol) continue;
        auto u1 = allowed_unit(sol->first);
        auto u2 = allowed_unit(sol->second);
        if (!u1 || !u2) continue;
        s.kind = SimplexKind::ADDITIVE;
        s.witness = AdditiveWitness{i, idx[a], idx[b], *u1, *u2};
        return s;
      }
    }
  }
  return std::nullopt;
}

bool verify_witness(const FrameSimplex& s, const Ring& ring) {
  if (s.kind == SimplexKind::STANDARD) {
    std::vector<Vector> reps;
    for (const Line& l : s.lines) reps.push_back(l.rep);
    return is_partial_frame(reps, ring);
  }
  if (!s.witness) return false;
  const AdditiveWitness& w = *s.witness;
  const std::size_t k = s.lines.size();
  if (w.i >= k || w.j >= k || w.k >= k || w.i == w.j || w.i == w.k || w.j == w.k) return false;
  if (!is_unit(w.u1, ring) || !is_unit(w.u2, ring)) return false;
  Vector combo = scale(w.u1, s.lines[w.j].rep, ring) + scale(w.u2, s.lines[w.k].rep, ring);
  if (!(combo == s.lines[w.i].rep)) return false;
  std::vector<Vector> rest;
  for (std::size_t t = 0; t < k; ++t) {
    if (t != w.i) rest.push_back(s.lines[t].rep);
  }
  return is_partial_frame(rest, ring);
}

std::size_t rank_over_field(std::span<const Vector> columns, const Ring& ring) {
  if (columns.empty()) return 0;
  const std::size_t n = columns[0].size();
  const std::size_t k = columns.size();
  std::vector<std::vector<FieldElement>> m(n, std::vector<FieldElement>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = FieldElement(columns[j][i]);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(m[rank], m[piv]);
    FieldElement inv = ring.inverse(m[rank][col]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      FieldElement f = ring.mul(m[i][col], inv);
      for (std::size_t j = col; j < k; ++j) m[i][j] = m[i][j] - ring.mul(f, m[rank][j]);
    }
    ++rank;
  }
  return rank;
}

bool in_span(const Vector& v, std::span<const Vector> basis, const Ring& ring) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  std::vector<Vector> ext(basis.begin(), basis.end());
  const std::size_t r = rank_over_field(ext, ring);
  ext.push_back(v);
  return rank_over_field(ext, ring) == r;
}

bool line_in_span(const Line& v, std::span<const Vector> basis, const Ring& ring) {
  return in_span(v.rep, basis, ring);
}

mpz_class f_value(const Vector& v, const Ring& ring) {
  if (v.size() == 0) return 0;
  return abs(ring.norm(v[v.size() - 1]));
}

RingElement det2(const Vector& a, const Vector& b, const Ring& ring) {
  if (a.size() != 2 || b.size() != 2) throw Error(Errc::PreconditionViolated, "det2 needs vectors in O^2");
  return ring.mul(a[0], b[1]) - ring.mul(a[1], b[0]);
}

}  // namespace augframes
