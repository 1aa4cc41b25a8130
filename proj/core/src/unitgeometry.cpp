#include "augframes/unitgeometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "augframes/error.hpp"

namespace augframes {

namespace {

void require_imaginary(const Ring& ring) {
  if (!ring.imaginary()) throw Error(Errc::NotImaginary, ring.spec() + " is not imaginary");
}

mpz_class floor_q(const mpq_class& t) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return out;
}

FieldElement offset(const FieldElement& z, const RingElement& r) { return z - FieldElement(r); }

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
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Runs check(i) for i in [0, count) on up to jobs threads; collects failure
// payloads in index order.
template <typename Check>
std::vector<std::vector<FieldElement>> run_indexed(std::size_t count, unsigned jobs, Check check) {
  jobs = std::max(1U, std::min<unsigned>(jobs, 64));
  std::vector<std::vector<std::pair<std::size_t, std::vector<FieldElement>>>> partial(jobs);
  auto worker = [&](unsigned t) {
    for (std::size_t i = t; i < count; i += jobs) {
      std::vector<FieldElement> fail;
      if (!check(i, fail)) partial[t].emplace_back(i, std::move(fail));
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  std::vector<std::pair<std::size_t, std::vector<FieldElement>>> merged;
  for (auto& p : partial) {
    for (auto& e : p) merged.push_back(std::move(e));
  }
  std::ranges::sort(merged, {}, &std::pair<std::size_t, std::vector<FieldElement>>::first);
  std::vector<std::vector<FieldElement>> out;
  for (auto& e : merged) out.push_back(std::move(e.second));
  return out;
}

}  // namespace

std::vector<RingElement> ball_points(const FieldElement& z, const Ring& ring) {
  require_imaginary(ring);
  // With X = x - z.x and Y = y - z.y, N = (X + qY/2)^2 + |d|/4 Y^2 (times 1 for
  // q = 1, or with |d| >= 1 for q = 0), so |Y| < 2 and |X| < 2.
  const mpz_class x0 = floor_q(z.x);
  const mpz_class y0 = floor_q(z.y);
  std::vector<RingElement> out;
  for (mpz_class y = y0 - 2; y <= y0 + 3; ++y) {
    for (mpz_class x = x0 - 3; x <= x0 + 4; ++x) {
      RingElement r{x, y};
      if (ring.norm(offset(z, r)) < 1) out.push_back(r);
    }
  }
  return out;
}

std::pair<bool, BallGraph> ball_graph_connected(const FieldElement& z, const Ring& ring) {
  BallGraph g;
  g.center = z;
  g.vertices = ball_points(z, ring);
  const std::size_t n = g.vertices.size();
  DisjointSets ds(n);
  std::size_t merges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (is_unit(g.vertices[i] - g.vertices[j], ring)) {
        g.edges.emplace_back(i, j);
        if (ds.unite(i, j)) ++merges;
      }
    }
  }
  const bool connected = n > 0 && merges + 1 == n;
  return {connected, std::move(g)};
}

RingElement lem0_witness(const RingElement& a, const RingElement& b, const Ring& ring) {
  require_imaginary(ring);
  const mpz_class na = ring.norm(a);
  if (na == 0 || na != ring.norm(b)) throw Error(Errc::PreconditionViolated, "need N(a) = N(b) > 0");
  for (const RingElement& u : ring.units().torsion) {
    if (ring.norm(a - ring.mul(u, b)) < na) return u;
  }
  throw Error(Errc::NoWitness, "no unit u with N(a - ub) < N(a) in " + ring.spec());
}

std::pair<RingElement, RingElement> lem2_witness(const FieldElement& z1, const FieldElement& z2, const Ring& ring) {
  const auto b1 = ball_points(z1, ring);
  const auto b2 = ball_points(z2, ring);
  for (const RingElement& r1 : b1) {
    const FieldElement w1 = offset(z1, r1);
    for (const RingElement& r2 : b2) {
      if (ring.norm(w1 + offset(z2, r2)) < 1) return {r1, r2};
    }
  }
  throw Error(Errc::NoWitness, "no residue pair with small sum in " + ring.spec());
}

std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::LEM0:
      return "LEM0";
    case LemmaId::LEM1:
      return "LEM1";
    case LemmaId::LEM2:
      return "LEM2";
  }
  return "?";
}

std::vector<FieldElement> sweep_grid(long denominator) {
  std::vector<FieldElement> grid;
  for (long p = -denominator; p <= denominator; ++p) {
    for (long q = -denominator; q <= denominator; ++q) {
      grid.emplace_back(mpq_class(p, denominator), mpq_class(q, denominator));
    }
  }
  for (auto& z : grid) {
    z.x.canonicalize();
    z.y.canonicalize();
  }
  return grid;
}

SweepReport sweep_lemma(const Ring& ring, LemmaId lemma, long grid_denominator, unsigned jobs) {
  require_imaginary(ring);
  if (grid_denominator <= 0) throw Error(Errc::PreconditionViolated, "grid denominator must be positive");
  SweepReport rep;
  rep.ring = ring.spec();
  rep.lemma = lemma;
  rep.grid_denominator = grid_denominator;

  if (lemma == LemmaId::LEM0) {
    // Elements grouped by norm; N(x + y delta) >= |d|/4 y^2 bounds |y|.
    std::map<long, std::vector<RingElement>> by_norm;
    const long ymax = 2 * static_cast<long>(std::sqrt(static_cast<double>(grid_denominator))) + 2;
    const long xmax = ymax + static_cast<long>(std::sqrt(static_cast<double>(grid_denominator))) + 2;
    for (long y = -ymax; y <= ymax; ++y) {
      for (long x = -xmax; x <= xmax; ++x) {
        RingElement r{x, y};
        mpz_class n = ring.norm(r);
        if (n >= 1 && n <= grid_denominator) by_norm[n.get_si()].push_back(r);
      }
    }
    std::vector<std::pair<RingElement, RingElement>> pairs;
    for (const auto& [n, elems] : by_norm) {
      for (const auto& a : elems) {
        for (const auto& b : elems) pairs.emplace_back(a, b);
      }
    }
    rep.tested = pairs.size();
    rep.failures = run_indexed(pairs.size(), jobs, [&](std::size_t i, std::vector<FieldElement>& fail) {
      try {
        (void)lem0_witness(pairs[i].first, pairs[i].second, ring);
        return true;
      } catch (const Error& e) {
        if (e.code() != Errc::NoWitness) throw;
        fail = {FieldElement(pairs[i].first), FieldElement(pairs[i].second)};
        return false;
      }
    });
    return rep;
  }

  const std::vector<FieldElement> grid = sweep_grid(grid_denominator);
  if (lemma == LemmaId::LEM1) {
    rep.tested = grid.size();
    rep.failures = run_indexed(grid.size(), jobs, [&](std::size_t i, std::vector<FieldElement>& fail) {
      if (ball_graph_connected(grid[i], ring).first) return true;
      fail = {grid[i]};
      return false;
    });
    return rep;
  }

  // LEM2: precompute residues z - r for every grid point.
  std::vector<std::vector<FieldElement>> residues(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (const RingElement& r : ball_points(grid[i], ring)) residues[i].push_back(offset(grid[i], r));
  }
  const std::size_t g = grid.size();
  rep.tested = g * g;
  rep.failures = run_indexed(g * g, jobs, [&](std::size_t idx, std::vector<FieldElement>& fail) {
    const std::size_t i = idx / g;
    const std::size_t j = idx % g;
    for (const FieldElement& w1 : residues[i]) {
      for (const FieldElement& w2 : residues[j]) {
        if (ring.norm(w1 + w2) < 1) return true;
      }
    }
    fail = {grid[i], grid[j]};
    return false;
  });
  return rep;
}

}  // namespace augframes
