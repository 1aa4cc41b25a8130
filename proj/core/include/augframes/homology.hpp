#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "augframes/complexes.hpp"

namespace augframes {

// Sparse integer matrix stored by columns: cols[j] maps row index -> nonzero entry.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::map<std::size_t, mpz_class>> cols;

  std::size_t col_count() const { return cols.size(); }
  static SparseMatrix from_dense(const std::vector<std::vector<long>>& dense);
  std::vector<std::vector<mpz_class>> to_dense() const;
};

struct SmithResult {
  // Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<mpz_class> factors;
  std::size_t rank = 0;
};

// Unit pivots are eliminated sparsely first; the remainder is reduced densely
// with pivots of minimal absolute value.
SmithResult smith_normal_form(const SparseMatrix& m);
SmithResult smith_normal_form(const std::vector<std::vector<mpz_class>>& dense);

// Boundary from k-simplices to (k-1)-simplices; the face dropping position i
// gets sign (-1)^i. k = 0 gives the augmentation row of ones.
SparseMatrix boundary_matrix(const SimplicialComplex& cx, std::size_t k);

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1
};

struct HomologyProfile {
  std::vector<DegreeHomology> degrees;  // index = degree
  bool reduced = true;

  std::size_t betti(std::size_t k) const { return k < degrees.size() ? degrees[k].betti : 0; }
  bool concentrated_in(std::size_t k) const;
};

// Reduced integral homology. Throws EmptyComplex when there are no vertices
// (the reduced homology is then Z in degree -1).
HomologyProfile reduced_homology(const SimplicialComplex& cx);
inline HomologyProfile reduced_homology(const FrameComplex& fc) { return reduced_homology(fc.cx); }
inline HomologyProfile reduced_homology(const FlagComplexFq& fq) { return reduced_homology(fq.cx); }

}  // namespace augframes
