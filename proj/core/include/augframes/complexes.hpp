#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "augframes/lattice.hpp"
#include "augframes/quadring.hpp"

namespace augframes {

// Sorted tuple of vertex indices.
using Simplex = std::vector<std::size_t>;

// Finite abstract simplicial complex on vertices 0..vertex_count-1. faces[k]
// holds the k-simplices in lexicographic order; faces[0] lists every vertex.
struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<Simplex>> faces;

  std::size_t dimension_bound() const { return faces.size(); }  // number of stored degrees
  std::size_t count(std::size_t k) const { return k < faces.size() ? faces[k].size() : 0; }
  bool contains(const Simplex& s) const;
  bool downward_closed() const;
  // Sorts each degree and fills faces[0] with all vertices.
  void normalize();
};

SimplicialComplex make_complex(std::size_t vertex_count, std::vector<Simplex> maximal_or_all);

enum class FrameKind { B, BA };

std::string frame_kind_name(FrameKind k);

// Truncation of B_n^m(O) or BA_n^m(O): lines of O^(n+m) outside the span of
// e_1..e_m whose canonical representative has every coordinate within the
// bound (|N| <= bound, and for d > 0 also |x|, |y| <= bound).
struct FrameComplex {
  Ring ring;
  int n = 0;
  int m = 0;
  long bound = 0;
  FrameKind kind = FrameKind::BA;
  int unit_window = kDefaultUnitWindow;
  bool windowed = false;  // d > 0 and kind BA: additive witnesses were searched in the unit window only
  std::vector<Line> vertices;
  SimplicialComplex cx;
  // Additive simplices. Witness indices address the simplex's lines followed by
  // e_1..e_m (so an index >= simplex size names a fixed standard line).
  std::map<Simplex, AdditiveWitness> witnesses;

  std::optional<std::size_t> index_of(const Line& l) const;
  std::vector<Vector> fixed_lines() const;  // e_1..e_m in O^(n+m)
};

inline constexpr std::size_t kDefaultVertexCap = 50000;

// Throws RankTooLarge (n + m > 3), RingNotEuclidean, BoundTooLarge, PreconditionViolated.
FrameComplex build_complex(const Ring& ring, int n, int m, long bound, FrameKind kind,
                           int unit_window = kDefaultUnitWindow, std::size_t vertex_cap = kDefaultVertexCap);

// Lines of the simplex followed by the fixed lines, with its stored witness.
FrameSimplex simplex_frame(const FrameComplex& fc, const Simplex& s);

// Rechecks downward closure, the span condition on vertices and every witness.
// Returns human-readable problems; empty means consistent.
std::vector<std::string> verify_complex(const FrameComplex& fc);

enum class LinkVariant { PLAIN, HAT, LT };

// PLAIN: simplices disjoint from sigma whose union with sigma is a simplex.
// HAT: full subcomplex on vertices outside span(e_1..e_m, sigma).
// LT: full subcomplex of HAT on vertices v with F(v) < F(w) for some w in sigma.
// Throws NotASimplex.
FrameComplex link(const FrameComplex& fc, std::span<const Line> sigma, LinkVariant variant);

// Components as sorted vertex-index lists, ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> components(const SimplicialComplex& cx);
inline std::vector<std::vector<std::size_t>> components(const FrameComplex& fc) { return components(fc.cx); }
// Throws VertexAbsent.
std::vector<std::size_t> component_of(const FrameComplex& fc, const Line& v);

// Order complex of proper nonzero subspaces of F_q^n.
struct FlagComplexFq {
  int q = 0;
  int n = 0;
  // Each vertex as its dimension and a normalized spanning vector (for points)
  // or normal vector (for planes in F_q^3).
  struct Subspace {
    int dim = 0;
    std::vector<int> coords;
  };
  std::vector<Subspace> vertices;
  SimplicialComplex cx;
};

// Throws QTooLarge (q > 7), PreconditionViolated (q not prime or n not in {2, 3}).
FlagComplexFq build_tits_fq(int q, int n);

}  // namespace augframes
