#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "augframes/error.hpp"
#include "augframes/homology.hpp"
#include "oracles.hpp"

using namespace augframes;

namespace {

std::vector<long> factors_of(const SmithResult& r) {
  std::vector<long> out;
  for (const auto& f : r.factors) out.push_back(f.get_si());
  return out;
}

std::vector<std::vector<mpz_class>> to_mpz(const std::vector<std::vector<long>>& a) {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& row : a) out.emplace_back(row.begin(), row.end());
  return out;
}

std::vector<std::vector<long>> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long r) {
  std::uniform_int_distribution<long> e(-r, r);
  std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
  for (auto& row : a)
    for (auto& x : row) x = e(rng);
  return a;
}

// Random unimodular row and column operations.
std::vector<std::vector<long>> shuffle(std::mt19937_64& rng, std::vector<std::vector<long>> a, int steps) {
  const std::size_t rows = a.size(), cols = a[0].size();
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<long> mult(-2, 2);
  std::uniform_int_distribution<std::size_t> ri(0, rows - 1), ci(0, cols - 1);
  for (int s = 0; s < steps; ++s) {
    switch (kind(rng)) {
      case 0: {
        std::size_t i = ri(rng), j = ri(rng);
        if (i == j) break;
        long t = mult(rng);
        for (std::size_t c = 0; c < cols; ++c) a[i][c] += t * a[j][c];
        break;
      }
      case 1: {
        std::size_t i = ci(rng), j = ci(rng);
        if (i == j) break;
        long t = mult(rng);
        for (std::size_t r = 0; r < rows; ++r) a[r][i] += t * a[r][j];
        break;
      }
      case 2:
        std::swap(a[ri(rng)], a[ri(rng)]);
        break;
      default: {
        std::size_t i = ci(rng);
        for (std::size_t r = 0; r < rows; ++r) a[r][i] = -a[r][i];
      }
    }
  }
  return a;
}

// Product of two sparse boundary matrices, densely.
bool composes_to_zero(const SparseMatrix& outer, const SparseMatrix& inner) {
  std::vector<std::vector<mpz_class>> a = outer.to_dense(), b = inner.to_dense();
  for (std::size_t i = 0; i < outer.rows; ++i) {
    for (std::size_t j = 0; j < inner.col_count(); ++j) {
      mpz_class s = 0;
      for (std::size_t k = 0; k < inner.rows; ++k) s += a[i][k] * b[k][j];
      if (s != 0) return false;
    }
  }
  return true;
}

SimplicialComplex random_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nv(1, 9);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> v(0, n - 1);
  std::uniform_int_distribution<int> count(0, 12);
  std::vector<Simplex> tops;
  for (int t = count(rng); t > 0; --t) {
    std::set<std::size_t> s{v(rng), v(rng)};
    if (count(rng) % 3 == 0) s.insert(v(rng));
    tops.emplace_back(s.begin(), s.end());
  }
  return make_complex(n, tops);
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("smith normal form examples") {
    CHECK(factors_of(smith_normal_form(to_mpz({{2, 0}, {0, 3}}))) == std::vector<long>{1, 6});
    SmithResult z = smith_normal_form(to_mpz({{0, 0}, {0, 0}}));
    CHECK(z.factors.empty());
    CHECK(z.rank == 0);
    CHECK(factors_of(smith_normal_form(to_mpz({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))) == std::vector<long>{1, 1, 1});
    CHECK(factors_of(smith_normal_form(SparseMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}))) ==
          std::vector<long>{2, 6, 12});
  }

  TEST_CASE("smith normal form matches determinantal divisors") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int t = 0; t < 1000; ++t) {
      auto a = random_matrix(rng, dim(rng), dim(rng), 6);
      SmithResult dense = smith_normal_form(to_mpz(a));
      SmithResult sparse = smith_normal_form(SparseMatrix::from_dense(a));
      auto want = oracle::invariant_factors(a);
      REQUIRE(factors_of(dense) == want);
      REQUIRE(factors_of(sparse) == want);
      REQUIRE(dense.rank == want.size());
      for (std::size_t i = 1; i < want.size(); ++i) REQUIRE(want[i] % want[i - 1] == 0);
    }
  }

  TEST_CASE("smith normal form is invariant under unimodular shuffles") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int t = 0; t < 1000; ++t) {
      auto a = random_matrix(rng, dim(rng), dim(rng), 4);
      auto b = shuffle(rng, a, 12);
      REQUIRE(factors_of(smith_normal_form(SparseMatrix::from_dense(a))) ==
              factors_of(smith_normal_form(SparseMatrix::from_dense(b))));
    }
  }

  TEST_CASE("boundary of a boundary vanishes") {
    std::vector<SimplicialComplex> cxs;
    for (long d : {-1L, -3L, -2L, 7L}) {
      cxs.push_back(build_complex(make_ring(d), 2, 0, 2, FrameKind::BA).cx);
      cxs.push_back(build_complex(make_ring(d), 1, 2, 1, FrameKind::BA).cx);
    }
    cxs.push_back(build_tits_fq(2, 3).cx);
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) cxs.push_back(random_complex(rng));
    for (const auto& cx : cxs) {
      for (std::size_t k = 1; k < cx.faces.size(); ++k) {
        REQUIRE(composes_to_zero(boundary_matrix(cx, k - 1), boundary_matrix(cx, k)));
      }
    }
  }

  TEST_CASE("small complexes") {
    HomologyProfile circle = reduced_homology(make_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(circle.betti(0) == 0);
    CHECK(circle.betti(1) == 1);
    HomologyProfile disk = reduced_homology(make_complex(3, {{0, 1, 2}}));
    CHECK(disk.concentrated_in(99));
    HomologyProfile points = reduced_homology(make_complex(4, {}));
    CHECK(points.betti(0) == 3);
    // Two triangles glued along their boundary: a 2-sphere.
    HomologyProfile sphere = reduced_homology(make_complex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    CHECK(sphere.betti(2) == 1);
    CHECK(sphere.concentrated_in(2));
    CHECK_THROWS_AS(reduced_homology(SimplicialComplex{}), Error);
  }

  TEST_CASE("projective plane triangulation has 2-torsion") {
    // Six-vertex real projective plane.
    HomologyProfile rp2 = reduced_homology(make_complex(
        6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}}));
    CHECK(rp2.betti(1) == 0);
    REQUIRE(rp2.degrees.size() > 1);
    CHECK(rp2.degrees[1].torsion == std::vector<mpz_class>{2});
    CHECK(rp2.betti(2) == 0);
  }

  TEST_CASE("reduced betti_0 plus one counts components") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 200; ++t) {
      SimplicialComplex cx = random_complex(rng);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      if (cx.faces.size() > 1)
        for (const Simplex& e : cx.faces[1]) edges.push_back({e[0], e[1]});
      REQUIRE(reduced_homology(cx).betti(0) + 1 == oracle::component_count(cx.vertex_count, edges));
    }
  }

  TEST_CASE("finite-field buildings are spherical") {
    for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}}) {
      FlagComplexFq t = build_tits_fq(q, n);
      HomologyProfile h = reduced_homology(t);
      CAPTURE(q);
      CAPTURE(n);
      std::size_t top = 1;
      for (int i = 0; i < n * (n - 1) / 2; ++i) top *= static_cast<std::size_t>(q);
      CHECK(h.concentrated_in(static_cast<std::size_t>(n - 2)));
      CHECK(h.betti(static_cast<std::size_t>(n - 2)) == top);
      for (const auto& dg : h.degrees) CHECK(dg.torsion.empty());
      if (n == 3) CHECK(h.betti(1) == t.cx.count(1) - t.cx.count(0) + 1);
    }
  }
}
