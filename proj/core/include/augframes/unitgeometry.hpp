#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "augframes/quadring.hpp"

namespace augframes {

// Full subgraph of the unit Cayley graph of O on the open unit ball around center.
struct BallGraph {
  FieldElement center;
  std::vector<RingElement> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, first < second
};

// Lattice points x with N(x - z) < 1, in (y, x) lexicographic order. Throws NotImaginary.
std::vector<RingElement> ball_points(const FieldElement& z, const Ring& ring);

// Throws NotImaginary.
std::pair<bool, BallGraph> ball_graph_connected(const FieldElement& z, const Ring& ring);

// A unit u with N(a - u b) < N(a), for N(a) = N(b) > 0.
// Throws NotImaginary, PreconditionViolated, NoWitness.
RingElement lem0_witness(const RingElement& a, const RingElement& b, const Ring& ring);

// r1, r2 in O with N(z1 - r1), N(z2 - r2) and N((z1 - r1) + (z2 - r2)) all < 1.
// Throws NotImaginary, NoWitness.
std::pair<RingElement, RingElement> lem2_witness(const FieldElement& z1, const FieldElement& z2, const Ring& ring);

enum class LemmaId { LEM0, LEM1, LEM2 };

std::string lemma_name(LemmaId id);

struct SweepReport {
  std::string ring;
  LemmaId lemma = LemmaId::LEM1;
  long grid_denominator = 0;
  std::size_t tested = 0;
  // Each failure lists the tested point(s): z for LEM1, (z1, z2) for LEM2,
  // (a, b) as integral field elements for LEM0.
  std::vector<std::vector<FieldElement>> failures;

  bool passed() const { return failures.empty(); }
};

// Grid points (p + q delta)/D with p, q in [-D, D], ordered by (p, q).
std::vector<FieldElement> sweep_grid(long denominator);

// LEM1 and LEM2 iterate the grid (pairs of grid points for LEM2); LEM0 iterates
// all a, b with N(a) = N(b) in [1, D]. jobs > 1 splits the work across threads;
// failures are reported in the serial order regardless.
SweepReport sweep_lemma(const Ring& ring, LemmaId lemma, long grid_denominator, unsigned jobs = 1);

}  // namespace augframes
