#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augframes/quadring.hpp"

namespace augframes {

inline constexpr std::size_t kMaxRank = 4;
inline constexpr int kDefaultUnitWindow = 3;

// Column vector in O^n.
struct Vector {
  std::vector<RingElement> coords;

  Vector() = default;
  explicit Vector(std::vector<RingElement> c) : coords(std::move(c)) {}
  Vector(std::initializer_list<RingElement> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  const RingElement& operator[](std::size_t i) const { return coords[i]; }
  RingElement& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a);
  friend bool operator==(const Vector& a, const Vector& b) = default;
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);
};

Vector scale(const RingElement& u, const Vector& v, const Ring& ring);
Vector standard_basis(std::size_t n, std::size_t i);

// A rank-one free summand of O^n, stored as its canonical primitive generator.
// Lines compare equal iff their keys agree; ordering follows the representative.
struct Line {
  Vector rep;
  std::string key;  // hex encoding of the canonical coordinate text

  friend bool operator==(const Line& a, const Line& b) { return a.key == b.key; }
  friend std::strong_ordering operator<=>(const Line& a, const Line& b) { return a.rep <=> b.rep; }
};

enum class SimplexKind { STANDARD, ADDITIVE };

// Witness for an additive simplex: lines[i].rep = u1 * lines[j].rep + u2 * lines[k].rep.
struct AdditiveWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  RingElement u1;
  RingElement u2;
};

struct FrameSimplex {
  std::vector<Line> lines;
  SimplexKind kind = SimplexKind::STANDARD;
  std::optional<AdditiveWitness> witness;
  // Real quadratic rings: unit pairs were restricted to {+-eps^k : |k| <= K}.
  bool windowed = false;
};

// Throws ZeroVector, RingNotEuclidean.
bool is_primitive(const Vector& v, const Ring& ring);

// Canonical generator of span(v). Throws NotPrimitive.
//
// Finite unit groups: the lexicographically smallest unit multiple. Real
// quadratic rings: scale by +-eps^k so the first nonzero coordinate c has
// sigma1(c)/|sigma2(c)| in [1, eps^2) and sigma1(c) > 0.
Line canonical_line(const Vector& v, const Ring& ring);

// Extendable to a basis of O^n: all invariant factors of the n x k coordinate
// matrix are units. Throws NotPrimitive, RingNotEuclidean, RankTooLarge.
bool is_partial_frame(std::span<const Vector> vs, const Ring& ring);

// STANDARD when the lines form a partial frame, ADDITIVE with a witness when
// one vector is a unit combination of two others and the rest form a partial
// frame, nullopt otherwise. Throws NotPrimitive, DegenerateSimplex.
std::optional<FrameSimplex> is_augmented_frame(std::span<const Vector> vs, const Ring& ring,
                                               int unit_window = kDefaultUnitWindow);

// Re-checks the witness identity of an ADDITIVE simplex exactly.
bool verify_witness(const FrameSimplex& s, const Ring& ring);

// Whether the line lies in the K-span of the given vectors.
bool line_in_span(const Line& v, std::span<const Vector> basis, const Ring& ring);
bool in_span(const Vector& v, std::span<const Vector> basis, const Ring& ring);

// |N(last coordinate)|.
mpz_class f_value(const Vector& v, const Ring& ring);
inline mpz_class f_value(const Line& v, const Ring& ring) { return f_value(v.rep, ring); }

// Determinant of the 2 x 2 matrix with columns a, b.
RingElement det2(const Vector& a, const Vector& b, const Ring& ring);

// Rank over K of the matrix with the given columns.
std::size_t rank_over_field(std::span<const Vector> columns, const Ring& ring);

// Unit list used by additive witnesses: the torsion units for d < 0, and
// {+-eps^k : |k| <= window} for d > 0.
std::vector<RingElement> window_units(const Ring& ring, int window);

// Solves target = a * v1 + b * v2 over K for independent v1, v2.
std::optional<std::pair<FieldElement, FieldElement>> solve_pair(const Vector& target, const Vector& v1,
                                                                const Vector& v2, const Ring& ring);

}  // namespace augframes
