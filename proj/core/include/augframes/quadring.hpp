#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace augframes {

// Element x + y*delta of the ring of integers O of Q(sqrt d), in the basis {1, delta}.
struct RingElement {
  mpz_class x;
  mpz_class y;

  RingElement() = default;
  RingElement(mpz_class x_, mpz_class y_) : x(std::move(x_)), y(std::move(y_)) {}
  RingElement(long x_) : x(x_), y(0) {}  // NOLINT(google-explicit-constructor)
  explicit RingElement(const mpz_class& x_) : x(x_), y(0) {}

  bool is_zero() const { return x == 0 && y == 0; }

  RingElement& operator+=(const RingElement& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator-(const RingElement& a) { return {-a.x, -a.y}; }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic on (x, y); only used for deterministic ordering.
  friend std::strong_ordering operator<=>(const RingElement& a, const RingElement& b) {
    if (int c = cmp(a.x, b.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.y, b.y);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

// Element of the fraction field K, same basis, rational coordinates.
struct FieldElement {
  mpq_class x;
  mpq_class y;

  FieldElement() = default;
  FieldElement(mpq_class x_, mpq_class y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit FieldElement(const RingElement& a) : x(a.x), y(a.y) {}

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_integral() const { return x.get_den() == 1 && y.get_den() == 1; }
  // Requires is_integral().
  RingElement to_ring() const { return {x.get_num(), y.get_num()}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend FieldElement operator-(const FieldElement& a) { return {-a.x, -a.y}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.x == b.x && a.y == b.y;
  }
};

enum class RingMode { REM1, OTHER };

struct UnitGroup {
  // All units when the unit group is finite, otherwise {1, -1}.
  std::vector<RingElement> torsion;
  // Smallest unit > 1 in the first real embedding; present iff d > 0.
  std::optional<RingElement> fundamental;
  // The additive span of all units is Z*1 + Z*g*delta. g == 0 means the span
  // is Z; g == 1 means the span is all of O.
  mpz_class span_modulus;
};

inline constexpr long kDefaultUnitSearchBound = 10000;

// The 21 norm-Euclidean quadratic fields.
inline constexpr long kNormEuclideanD[] = {-11, -7, -3, -2, -1, 2,  3,  5,  6,  7,  11,
                                           13,  17, 19, 21, 29, 33, 37, 41, 57, 73};

// Descriptor and arithmetic for O = Z[delta] with delta^2 = p + q*delta.
//
// Mode REM1 (d = 1 mod 4): delta = (1 + sqrt d)/2, delta^2 = (d-1)/4 + delta,
// N(x + y delta) = x^2 + xy + (1-d)/4 y^2. Mode OTHER: delta = sqrt d,
// N = x^2 - d y^2. Copies are cheap; the unit group is shared.
class Ring {
 public:
  long d() const { return d_; }
  RingMode mode() const { return mode_; }
  // delta^2 = delta_sq().first + delta_sq().second * delta
  std::pair<long, long> delta_sq() const { return {p_, q_}; }
  // N(x + y delta) = A x^2 + B xy + C y^2
  struct NormForm {
    long a, b, c;
  };
  NormForm norm_form() const { return {1, q_, -p_}; }
  bool norm_euclidean() const { return norm_euclidean_; }
  bool units_finite() const { return d_ < 0; }
  bool imaginary() const { return d_ < 0; }

  // "d=<integer>"
  std::string spec() const { return "d=" + std::to_string(d_); }

  const UnitGroup& units() const { return *units_; }
  // Throws FundamentalUnitNotFound when the construction-time search failed.
  const RingElement& fundamental_unit() const;

  RingElement mul(const RingElement& a, const RingElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  RingElement conj(const RingElement& a) const { return {a.x + q_ * a.y, -a.y}; }
  FieldElement conj(const FieldElement& a) const { return {a.x + q_ * a.y, -a.y}; }

  mpz_class norm(const RingElement& a) const;
  mpq_class norm(const FieldElement& a) const;

  // Exact quotient in K. Throws DivisionByZero.
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement inverse(const FieldElement& a) const;
  // Inverse of a unit, exactly in O.
  RingElement unit_inverse(const RingElement& u) const;

  RingElement pow(const RingElement& a, unsigned k) const;

  // Sign of the image of a under the real embedding with sqrt d > 0 (d > 0 only).
  int real_sign(const RingElement& a) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.d_ == b.d_; }

 private:
  friend Ring make_ring(long d);
  Ring() = default;

  long d_ = 0;
  RingMode mode_ = RingMode::OTHER;
  long p_ = 0;
  long q_ = 0;
  bool norm_euclidean_ = false;
  std::shared_ptr<const UnitGroup> units_;
};

bool is_squarefree(long d);

// Throws NotSquarefree or DegenerateD (d in {0, 1}).
Ring make_ring(long d);

inline mpz_class norm(const RingElement& a, const Ring& ring) { return ring.norm(a); }

struct DivisionResult {
  RingElement quotient;
  RingElement remainder;
};

// a = q b + r with |N(r)| < |N(b)|. The quotient is the coordinate-wise rounding
// of a/b when that already works, else the best point of a (2C+1)^2 box around
// it, C = 2 and then C = 4.
DivisionResult euclidean_divide(const RingElement& a, const RingElement& b, const Ring& ring);

// Canonical representative of the unit orbit of a (see gcd).
RingElement canonical_associate(const RingElement& a, const Ring& ring);

// Greatest common divisor, normalized with canonical_associate: for finite unit
// groups the associate with lexicographically largest (x, y); for d > 0 only the
// sign is normalized (x > 0, or x == 0 and y > 0).
RingElement gcd(const RingElement& a, const RingElement& b, const Ring& ring);

bool is_unit(const RingElement& a, const Ring& ring);

// Torsion units, fundamental unit (d > 0, brute force over y = 1..search_bound)
// and the modulus of the additive unit span.
UnitGroup unit_group(const Ring& ring, long search_bound = kDefaultUnitSearchBound);

// Ashrafi-Vamos criterion: d < 0 -> d in {-3, -1}; d > 0, d != 1 mod 4 ->
// d = a^2 +- 1; d > 0, d = 1 mod 4 -> d = a^2 +- 4.
bool generated_by_units(long d);

bool is_norm_euclidean(long d);

struct ClassificationRow {
  long d;
  bool norm_euclidean;
  bool generated_by_units;
};

// One row per squarefree d in [dmin, dmax], d not in {0, 1}.
std::vector<ClassificationRow> norm_euclidean_classification(long dmin, long dmax);

}  // namespace augframes
