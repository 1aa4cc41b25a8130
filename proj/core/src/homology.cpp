#include "augframes/homology.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>

#include "augframes/error.hpp"

namespace augframes {

namespace {

// Diagonal of a dense integer matrix after unimodular reduction; not yet a
// divisibility chain. Entries are positive.
std::vector<mpz_class> dense_diagonal(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool have_pivot = true;
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          if (!piv || abs(a[i][j]) < abs(a[piv->first][piv->second])) piv = {i, j};
        }
      }
      if (!piv) {
        have_pivot = false;
        break;
      }
      std::swap(a[t], a[piv->first]);
      for (auto& row : a) std::swap(row[t], row[piv->second]);

      bool clean = true;
      const mpz_class p = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) break;
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

void to_divisibility_chain(std::vector<mpz_class>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
  SparseMatrix m;
  m.rows = dense.size();
  const std::size_t c = dense.empty() ? 0 : dense[0].size();
  m.cols.resize(c);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (dense[i][j] != 0) m.cols[j][i] = dense[i][j];
    }
  }
  return m;
}

std::vector<std::vector<mpz_class>> SparseMatrix::to_dense() const {
  std::vector<std::vector<mpz_class>> out(rows, std::vector<mpz_class>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : cols[j]) out[i][j] = v;
  }
  return out;
}

SmithResult smith_normal_form(const SparseMatrix& in) {
  std::vector<std::map<std::size_t, mpz_class>> cols = in.cols;
  const std::size_t nc = cols.size();
  std::vector<std::set<std::size_t>> row_support(in.rows);
  for (std::size_t j = 0; j < nc; ++j) {
    for (auto it = cols[j].begin(); it != cols[j].end();) {
      if (it->second == 0) {
        it = cols[j].erase(it);
      } else {
        row_support[it->first].insert(j);
        ++it;
      }
    }
  }

  std::size_t unit_pivots = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < nc; ++c) {
      if (cols[c].empty()) continue;
      std::optional<std::size_t> r;
      for (const auto& [i, v] : cols[c]) {
        if (v != 1 && v != -1) continue;
        if (!r || row_support[i].size() < row_support[*r].size()) r = i;
      }
      if (!r) continue;
      const mpz_class pv = cols[c].at(*r);
      // Column operations clear row r outside column c.
      std::vector<std::size_t> others(row_support[*r].begin(), row_support[*r].end());
      for (std::size_t j : others) {
        if (j == c) continue;
        const mpz_class f = cols[j].at(*r) * pv;
        for (const auto& [i, v] : cols[c]) {
          mpz_class& e = cols[j][i];
          e -= f * v;
          if (e == 0) {
            cols[j].erase(i);
            row_support[i].erase(j);
          } else {
            row_support[i].insert(j);
          }
        }
      }
      // Row r is now zero except at c, so row operations clear column c
      // without touching anything else: drop both.
      for (const auto& [i, v] : cols[c]) row_support[i].erase(c);
      cols[c].clear();
      ++unit_pivots;
      progress = true;
    }
  }

  // Dense remainder.
  std::vector<std::size_t> live_cols;
  std::set<std::size_t> live_rows;
  for (std::size_t j = 0; j < nc; ++j) {
    if (cols[j].empty()) continue;
    live_cols.push_back(j);
    for (const auto& [i, v] : cols[j]) live_rows.insert(i);
  }
  std::vector<std::size_t> row_list(live_rows.begin(), live_rows.end());
  std::vector<std::vector<mpz_class>> dense(row_list.size(), std::vector<mpz_class>(live_cols.size(), 0));
  for (std::size_t b = 0; b < live_cols.size(); ++b) {
    for (const auto& [i, v] : cols[live_cols[b]]) {
      const auto a = static_cast<std::size_t>(std::lower_bound(row_list.begin(), row_list.end(), i) - row_list.begin());
      dense[a][b] = v;
    }
  }
  std::vector<mpz_class> rest = dense_diagonal(std::move(dense));
  to_divisibility_chain(rest);

  SmithResult out;
  out.factors.assign(unit_pivots, mpz_class(1));
  out.factors.insert(out.factors.end(), rest.begin(), rest.end());
  out.rank = out.factors.size();
  return out;
}

SmithResult smith_normal_form(const std::vector<std::vector<mpz_class>>& dense) {
  std::vector<mpz_class> d = dense_diagonal(dense);
  to_divisibility_chain(d);
  SmithResult out;
  out.rank = d.size();
  out.factors = std::move(d);
  return out;
}

SparseMatrix boundary_matrix(const SimplicialComplex& cx, std::size_t k) {
  SparseMatrix m;
  if (k == 0) {
    m.rows = 1;
    m.cols.resize(cx.vertex_count);
    for (auto& c : m.cols) c[0] = 1;
    return m;
  }
  m.rows = cx.count(k - 1);
  m.cols.resize(cx.count(k));
  if (m.cols.empty()) return m;
  const auto& lower = cx.faces[k - 1];
  for (std::size_t j = 0; j < cx.faces[k].size(); ++j) {
    const Simplex& s = cx.faces[k][j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (t != drop) f.push_back(s[t]);
      }
      auto it = std::lower_bound(lower.begin(), lower.end(), f);
      if (it == lower.end() || *it != f) throw Error(Errc::PreconditionViolated, "complex is not downward closed");
      m.cols[j][static_cast<std::size_t>(it - lower.begin())] = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

bool HomologyProfile::concentrated_in(std::size_t k) const {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i == k) continue;
    if (degrees[i].betti != 0 || !degrees[i].torsion.empty()) return false;
  }
  return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& cx) {
  if (cx.vertex_count == 0) throw Error(Errc::EmptyComplex, "empty complex (reduced homology is Z in degree -1)");
  std::size_t top = 0;
  for (std::size_t k = 0; k < cx.faces.size(); ++k) {
    if (!cx.faces[k].empty()) top = k;
  }
  // smith[k] describes the boundary out of degree k, for k = 0..top+1.
  std::vector<std::future<SmithResult>> jobs;
  for (std::size_t k = 0; k <= top + 1; ++k) {
    jobs.push_back(std::async(std::launch::async, [&cx, k] {
      if (cx.count(k) == 0) return SmithResult{};
      return smith_normal_form(boundary_matrix(cx, k));
    }));
  }
  std::vector<SmithResult> smith;
  for (auto& j : jobs) smith.push_back(j.get());

  HomologyProfile out;
  for (std::size_t k = 0; k <= top; ++k) {
    DegreeHomology h;
    h.betti = cx.count(k) - smith[k].rank - smith[k + 1].rank;
    for (const mpz_class& f : smith[k + 1].factors) {
      if (f > 1) h.torsion.push_back(f);
    }
    out.degrees.push_back(std::move(h));
  }
  return out;
}

}  // namespace augframes
