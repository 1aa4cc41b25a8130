#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "augframes/lattice.hpp"
#include "augframes/quadring.hpp"

namespace augframes {

// Residue of an element in O modulo the additive span of the units,
// Z*1 + Z*g*delta. modulus 1: everything is a sum of units; modulus 0: the
// span is Z and the residue is the full delta-coefficient.
struct SpanClass {
  mpz_class modulus;
  mpz_class residue;

  bool trivial() const { return modulus == 1; }
  friend bool operator==(const SpanClass&, const SpanClass&) = default;
};

SpanClass unit_span_class(const RingElement& x, const Ring& ring);

struct DetourChecks {
  std::vector<RingElement> edge_determinants;
  bool edges_unimodular = false;
  bool avoids_e1 = false;
  bool endpoints_match = false;
  bool class_separated = false;
  SpanClass class_r1;
  SpanClass class_r2;
};

struct DetourCertificate {
  std::string ring;
  RingElement r1;
  RingElement r2;
  std::vector<Vector> path;  // vertices of a path in B_2(O), as given
  DetourChecks checks;
  bool valid = false;
};

// Evaluates the four detour checks. Throws MalformedPath (empty path, vectors
// not in O^2, non-primitive vectors, or equal consecutive lines).
DetourCertificate detour_verify(const Ring& ring, const std::vector<Vector>& path, const RingElement& r1,
                                const RingElement& r2);

// Primitive vector of Z^2 taken up to sign.
using ZLine = std::array<long, 2>;

ZLine normalize_zline(ZLine v);

inline constexpr long kDefaultFareyMaxBound = 1024;

// Shortest path in the Farey graph (edges: determinant +-1) from `from` to
// `to` that never visits `avoid`, searched with |entries| <= bound for bound
// = 8, 16, ..., max_bound. Returns the vertices including both ends; empty
// when from == to. Throws PathNotFound, PreconditionViolated.
std::vector<ZLine> path_b2z(ZLine from, ZLine to, ZLine avoid, long max_bound = kDefaultFareyMaxBound);

// Same search, stopping at the first vertex (r, 1) up to sign.
std::vector<ZLine> path_b2z_to_height_one(ZLine from, ZLine avoid, long max_bound = kDefaultFareyMaxBound);

// Detours printed for d = -2, -7, -11; nullopt otherwise.
struct BuiltinDetour {
  std::vector<Vector> path;
  RingElement r1;
  RingElement r2;
};
std::optional<BuiltinDetour> builtin_detour(const Ring& ring);

// d in {-2, -7, -11}: the built-in path. d > 0 norm-Euclidean and not
// generated by units: the edge (delta, 1) - (a, -b) for the fundamental unit
// a + b delta, continued by a Farey path to the nearest line (r, 1) avoiding
// (1, 0); r1 = delta, r2 = r. Throws NoDetourExpected, PathNotFound,
// PreconditionViolated.
DetourCertificate detour_construct(const Ring& ring);

// [[v_1, ..., v_n]] with a sign; the vectors form a basis of O^n.
struct ModularSymbol {
  std::vector<Vector> vectors;
  int sign = 1;
};

// Determinant of the square matrix with the given columns (n <= 4).
RingElement determinant(const std::vector<Vector>& columns, const Ring& ring);

// Canonical line representatives, sorted by line order, sign multiplied by the
// permutation parity. Throws NotABasis.
ModularSymbol symbol_normalize(const ModularSymbol& s, const Ring& ring);

struct ChainTerm {
  mpz_class coeff;
  ModularSymbol symbol;
};

struct SymbolChain {
  std::vector<ChainTerm> terms;
};

// Normalizes every symbol, folds signs into coefficients, merges equal
// symbols and drops zero terms. Idempotent.
SymbolChain normalize_chain(const SymbolChain& c, const Ring& ring);

// s = [[v_i + v_j, v_j, ...]] - [[v_i + v_j, v_i, ...]] with the two slots
// replaced in place. Throws SlotOutOfRange, RankMismatch (n not 2 or 3), NotABasis.
SymbolChain apply_relation3(const ModularSymbol& s, std::size_t slot_i, std::size_t slot_j, const Ring& ring);

// Integer combination of lines, keyed by canonical key.
struct FormalLineSum {
  std::map<std::string, std::pair<Line, mpz_class>> terms;

  bool is_zero() const { return terms.empty(); }
  mpz_class augmentation() const;
  friend bool operator==(const FormalLineSum& a, const FormalLineSum& b);
};

// [[v1, v2]] maps to <v1> - <v2>. Throws RankMismatch.
FormalLineSum apartment_image_2(const SymbolChain& c, const Ring& ring);

struct LoopCertificate {
  std::string ring;
  std::vector<Vector> loop;  // cyclic; loop[passage] spans e_1
  std::size_t passage = 0;
  RingElement left_neighbor;   // x with the previous vertex spanning (x, 1)
  RingElement right_neighbor;  // same for the next vertex
  SpanClass left_class;
  SpanClass right_class;
  bool valid = false;
};

// Throws NotALoop (fewer than 3 vertices, repeated lines, consecutive lines
// not a partial frame, or no passage through e_1) and MultiplePassages.
LoopCertificate loop_nontrivial_certificate(const Ring& ring, const std::vector<Vector>& loop);

struct NoninjectivityBundle {
  std::string ring;
  bool has_certificate = false;
  std::string reason;  // set when has_certificate is false
  std::optional<DetourCertificate> detour;
  std::optional<LoopCertificate> loop;
  SymbolChain chain;  // sum of [[v_i, v_(i+1)]] over the loop's edges
  FormalLineSum image;
  bool valid = false;
};

// Throws RingNotEuclidean; errors from the detour search propagate.
NoninjectivityBundle noninjectivity_report(const Ring& ring);

// JSON forms of the certificates.
nlohmann::json to_json(const DetourCertificate& c);
nlohmann::json to_json(const LoopCertificate& c);
nlohmann::json to_json(const NoninjectivityBundle& b);
nlohmann::json to_json(const ModularSymbol& s);
nlohmann::json to_json(const SymbolChain& c);
nlohmann::json to_json(const FormalLineSum& f);
ModularSymbol symbol_from_json(const nlohmann::json& j);
SymbolChain chain_from_json(const nlohmann::json& j);

// Recomputes every claim of a serialized certificate from its ring, path and
// chain data alone. True iff the recomputation is valid and matches every
// stored check.
bool verify_certificate_json(const nlohmann::json& j);

}  // namespace augframes
