#include "augframes/quadring.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "augframes/error.hpp"

namespace augframes {

namespace {

constexpr long kDivisionRowLimit = 4096;

mpz_class round_nearest(const mpq_class& t) {
  // floor(t + 1/2)
  mpq_class s = t + mpq_class(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return out;
}

bool is_perfect_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_square_long(long n) { return n >= 0 && is_perfect_square(mpz_class(n)); }

// Sign of u + v*sqrt(d) for d > 0 not a perfect square.
int sign_surd(const mpz_class& u, const mpz_class& v, long d) {
  int su = sgn(u);
  int sv = sgn(v);
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  mpz_class lhs = u * u;
  mpz_class rhs = v * v * d;
  return lhs > rhs ? su : sv;
}

std::vector<RingElement> torsion_units(long d) {
  if (d == -1) return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (d == -3) {
    // powers of rho = delta: 1, rho, rho - 1, -1, -rho, 1 - rho
    return {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  }
  return {{1, 0}, {-1, 0}};
}

}  // namespace

UnitGroup search_units(const Ring& ring, long search_bound);

const RingElement& Ring::fundamental_unit() const {
  if (!units_->fundamental) {
    throw Error(Errc::FundamentalUnitNotFound, "no fundamental unit known for " + spec());
  }
  return *units_->fundamental;
}

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
  mpz_class yy = a.y * b.y;
  return {a.x * b.x + p_ * yy, a.x * b.y + a.y * b.x + q_ * yy};
}

FieldElement Ring::mul(const FieldElement& a, const FieldElement& b) const {
  mpq_class yy = a.y * b.y;
  return {a.x * b.x + p_ * yy, a.x * b.y + a.y * b.x + q_ * yy};
}

mpz_class Ring::norm(const RingElement& a) const { return a.x * a.x + q_ * a.x * a.y - p_ * a.y * a.y; }

mpq_class Ring::norm(const FieldElement& a) const { return a.x * a.x + q_ * a.x * a.y - p_ * a.y * a.y; }

FieldElement Ring::inverse(const FieldElement& a) const {
  mpq_class n = norm(a);
  if (n == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  FieldElement c = conj(a);
  return {c.x / n, c.y / n};
}

FieldElement Ring::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inverse(b)); }

RingElement Ring::unit_inverse(const RingElement& u) const {
  mpz_class n = norm(u);
  if (n != 1 && n != -1) throw Error(Errc::PreconditionViolated, "unit_inverse of a non-unit");
  RingElement c = conj(u);
  return n == 1 ? c : -c;
}

RingElement Ring::pow(const RingElement& a, unsigned k) const {
  RingElement result{1, 0};
  RingElement base = a;
  while (k != 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

int Ring::real_sign(const RingElement& a) const {
  if (d_ < 0) throw Error(Errc::PreconditionViolated, "real_sign needs d > 0");
  if (mode_ == RingMode::OTHER) return sign_surd(a.x, a.y, d_);
  // x + y(1 + sqrt d)/2 has the sign of (2x + y) + y sqrt d
  return sign_surd(2 * a.x + a.y, a.y, d_);
}

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long n = d < 0 ? static_cast<unsigned long>(-d) : static_cast<unsigned long>(d);
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

bool is_norm_euclidean(long d) { return std::ranges::find(kNormEuclideanD, d) != std::end(kNormEuclideanD); }

Ring make_ring(long d) {
  if (d == 0 || d == 1) throw Error(Errc::DegenerateD, "d must not be 0 or 1, got " + std::to_string(d));
  if (!is_squarefree(d)) throw Error(Errc::NotSquarefree, std::to_string(d) + " is not squarefree");

  Ring r;
  r.d_ = d;
  // C++ % truncates toward zero; ((d % 4) + 4) % 4 is the true residue.
  if (((d % 4) + 4) % 4 == 1) {
    r.mode_ = RingMode::REM1;
    r.p_ = (d - 1) / 4;
    r.q_ = 1;
  } else {
    r.mode_ = RingMode::OTHER;
    r.p_ = d;
    r.q_ = 0;
  }
  r.norm_euclidean_ = is_norm_euclidean(d);
  r.units_ = std::make_shared<const UnitGroup>(search_units(r, kDefaultUnitSearchBound));
  return r;
}

DivisionResult euclidean_divide(const RingElement& a, const RingElement& b, const Ring& ring) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "euclidean_divide by zero");
  if (!ring.norm_euclidean()) throw Error(Errc::NotEuclidean, ring.spec() + " is not norm-Euclidean");

  const FieldElement z = ring.div(FieldElement(a), FieldElement(b));
  const mpz_class qx = round_nearest(z.x);
  const mpz_class qy = round_nearest(z.y);

  // |N(a - qb)| < |N(b)|  <=>  |N(z - q)| < 1
  auto residual = [&](const mpz_class& x, const mpz_class& y) {
    mpq_class n = ring.norm(FieldElement(z.x - x, z.y - y));
    return mpq_class(abs(n));
  };
  auto finish = [&](const mpz_class& x, const mpz_class& y) {
    RingElement q{x, y};
    return DivisionResult{q, a - ring.mul(q, b)};
  };

  if (residual(qx, qy) < 1) return finish(qx, qy);

  for (long box : {2L, 4L}) {
    std::optional<std::pair<long, long>> best;
    mpq_class best_norm;
    for (long dx = -box; dx <= box; ++dx) {
      for (long dy = -box; dy <= box; ++dy) {
        mpq_class n = residual(qx + dx, qy + dy);
        if (n < 1 && (!best || n < best_norm)) {
          best = {dx, dy};
          best_norm = n;
        }
      }
    }
    if (best) return finish(qx + best->first, qy + best->second);
  }
  // Indefinite norms: the region |N| < 1 is a thin hyperbolic band, so walk
  // outwards row by row in y and solve for the admissible x interval.
  if (ring.d() > 0) {
    const auto [p_l, q_l] = ring.delta_sq();
    const double p = static_cast<double>(p_l);
    const double qc = static_cast<double>(q_l);
    for (long r = 0; r <= kDivisionRowLimit; ++r) {
      std::optional<std::pair<mpz_class, mpz_class>> best;
      mpq_class best_norm;
      for (long dy : {r, -r}) {
        const mpz_class y = qy + dy;
        const double t = mpq_class(z.y - y).get_d();
        // N(s, t) < 1 holds strictly between the roots of s^2 + q t s - p t^2 - 1.
        const double disc = qc * qc * t * t + 4 * (p * t * t + 1);
        const double half = std::sqrt(disc) / 2;
        const double lo = -qc * t / 2 - half, hi = -qc * t / 2 + half;
        // s = z.x - x
        const double zx = z.x.get_d();
        const long xmin = static_cast<long>(std::floor(zx - hi)) - 1;
        const long xmax = static_cast<long>(std::ceil(zx - lo)) + 1;
        for (long x = xmin; x <= xmax; ++x) {
          mpq_class n = residual(mpz_class(x), y);
          if (n < 1 && (!best || n < best_norm)) {
            best = std::pair{mpz_class(x), y};
            best_norm = n;
          }
        }
        if (r == 0) break;
      }
      if (best) return finish(best->first, best->second);
    }
  }
  throw Error(Errc::SearchExhausted, "no quotient found for " + ring.spec());
}

RingElement canonical_associate(const RingElement& a, const Ring& ring) {
  if (ring.units_finite()) {
    RingElement best = a;
    for (const RingElement& u : ring.units().torsion) {
      RingElement c = ring.mul(u, a);
      if (c > best) best = c;
    }
    return best;
  }
  if (a.x < 0 || (a.x == 0 && a.y < 0)) return -a;
  return a;
}

RingElement gcd(const RingElement& a, const RingElement& b, const Ring& ring) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  RingElement u = a;
  RingElement v = b;
  while (!v.is_zero()) {
    RingElement r = euclidean_divide(u, v, ring).remainder;
    u = std::move(v);
    v = std::move(r);
  }
  return canonical_associate(u, ring);
}

bool is_unit(const RingElement& a, const Ring& ring) {
  mpz_class n = ring.norm(a);
  return n == 1 || n == -1;
}

UnitGroup search_units(const Ring& ring, long search_bound) {
  UnitGroup g;
  g.torsion = torsion_units(ring.d());
  if (ring.d() < 0) {
    g.span_modulus = (ring.d() == -1 || ring.d() == -3) ? 1 : 0;
    return g;
  }

  // x^2 + B x y + C y^2 = s, s = +-1, solved for x with y fixed.
  const auto [fa, fb, fc] = ring.norm_form();
  (void)fa;
  for (long y = 1; y <= search_bound; ++y) {
    std::vector<RingElement> candidates;
    const mpz_class my(y);
    for (long s : {1L, -1L}) {
      mpz_class disc = fb * fb * my * my - 4 * (fc * my * my - s);
      if (!is_perfect_square(disc)) continue;
      mpz_class root = sqrt(disc);
      for (const mpz_class& num : {mpz_class(-fb * my + root), mpz_class(-fb * my - root)}) {
        if (num % 2 != 0) continue;
        candidates.emplace_back(num / 2, my);
      }
    }
    // The minimal |y| is attained by the fundamental unit (and possibly its
    // square); keep the smallest candidate exceeding 1.
    std::optional<RingElement> best;
    for (const RingElement& c : candidates) {
      if (ring.real_sign(c - RingElement(1)) <= 0) continue;
      if (!best || ring.real_sign(c - *best) < 0) best = c;
    }
    if (best) {
      g.fundamental = *best;
      g.span_modulus = abs(best->y);
      return g;
    }
  }
  return g;
}

UnitGroup unit_group(const Ring& ring, long search_bound) {
  UnitGroup g = search_units(ring, search_bound);
  if (ring.d() > 0 && !g.fundamental) {
    throw Error(Errc::FundamentalUnitNotFound,
                "no unit with 1 <= |y| <= " + std::to_string(search_bound) + " for " + ring.spec());
  }
  return g;
}

bool generated_by_units(long d) {
  if (d < 0) return d == -1 || d == -3;
  const long shift = (d % 4 == 1) ? 4 : 1;
  return is_square_long(d - shift) || is_square_long(d + shift);
}

std::vector<ClassificationRow> norm_euclidean_classification(long dmin, long dmax) {
  std::vector<ClassificationRow> rows;
  for (long d = dmin; d <= dmax; ++d) {
    if (d == 0 || d == 1 || !is_squarefree(d)) continue;
    rows.push_back({d, is_norm_euclidean(d), generated_by_units(d)});
  }
  return rows;
}

}  // namespace augframes
