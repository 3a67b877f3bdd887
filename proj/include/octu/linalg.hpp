#pragma once
// Exact Gaussian elimination over the small finite fields, on fixed-width
// row vectors. Everything is tiny (width <= 9), so the routines favour
// clarity over asymptotics.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "octu/field.hpp"

namespace octu {

template <size_t W>
using Vec = std::array<uint8_t, W>;

template <size_t W>
inline Vec<W> vec_add(const Field& f, const Vec<W>& a, const Vec<W>& b) {
  Vec<W> r{};
  for (size_t i = 0; i < W; ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <size_t W>
inline Vec<W> vec_smul(const Field& f, uint8_t s, const Vec<W>& a) {
  Vec<W> r{};
  for (size_t i = 0; i < W; ++i) r[i] = f.mul(s, a[i]);
  return r;
}

// In-place reduced row-echelon form; returns the rank. Zero rows are
// dropped, pivots are normalised to 1 and cleared above and below, so the
// result is the unique canonical basis of the row space.
template <size_t W>
inline size_t rref(const Field& f, std::vector<Vec<W>>& rows) {
  size_t r = 0;
  for (size_t col = 0; col < W && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    rows[r] = vec_smul(f, f.inv(rows[r][col]), rows[r]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      rows[i] = vec_add(f, rows[i], vec_smul(f, f.neg(rows[i][col]), rows[r]));
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

// residue of v after eliminating against rows in reduced echelon form
template <size_t W>
inline Vec<W> reduce_against(const Field& f, const std::vector<Vec<W>>& rref_rows, Vec<W> v) {
  for (const Vec<W>& row : rref_rows) {
    size_t p = 0;
    while (p < W && row[p] == 0) ++p;
    if (p == W || v[p] == 0) continue;
    v = vec_add(f, v, vec_smul(f, f.neg(v[p]), row));
  }
  return v;
}

template <size_t W>
inline bool in_span(const Field& f, const std::vector<Vec<W>>& rref_rows, const Vec<W>& v) {
  return reduce_against(f, rref_rows, v) == Vec<W>{};
}

// coefficients x with sum_i x_i rows_i = target, if target lies in the span
// (rows need not be echelonised or independent)
template <size_t W>
inline std::optional<std::vector<uint8_t>> solve_in_span(const Field& f,
                                                         const std::vector<Vec<W>>& rows,
                                                         const Vec<W>& target) {
  const size_t k = rows.size();
  // augmented system over the W coordinate equations
  std::vector<std::vector<uint8_t>> m(W, std::vector<uint8_t>(k + 1, 0));
  for (size_t j = 0; j < W; ++j) {
    for (size_t i = 0; i < k; ++i) m[j][i] = rows[i][j];
    m[j][k] = target[j];
  }
  std::vector<size_t> pivot_col(W, k + 1);
  size_t r = 0;
  for (size_t col = 0; col < k && r < W; ++col) {
    size_t piv = r;
    while (piv < W && m[piv][col] == 0) ++piv;
    if (piv == W) continue;
    std::swap(m[r], m[piv]);
    uint8_t s = f.inv(m[r][col]);
    for (size_t j = 0; j <= k; ++j) m[r][j] = f.mul(s, m[r][j]);
    for (size_t i = 0; i < W; ++i) {
      if (i == r || m[i][col] == 0) continue;
      uint8_t c = f.neg(m[i][col]);
      for (size_t j = 0; j <= k; ++j) m[i][j] = f.add(m[i][j], f.mul(c, m[r][j]));
    }
    pivot_col[r] = col;
    ++r;
  }
  for (size_t i = r; i < W; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<uint8_t> x(k, 0);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][k];
  return x;
}

// basis of {v : sum_j v_j rows_i[j] = 0 for all i}, i.e. the right kernel of
// the matrix whose columns index the W coordinates
template <size_t W>
inline std::vector<Vec<W>> null_space(const Field& f, std::vector<Vec<W>> rows) {
  rref(f, rows);
  std::array<bool, W> is_pivot{};
  std::vector<size_t> pivot_of_row;
  for (const Vec<W>& row : rows) {
    size_t p = 0;
    while (p < W && row[p] == 0) ++p;
    is_pivot[p] = true;
    pivot_of_row.push_back(p);
  }
  std::vector<Vec<W>> basis;
  for (size_t free_col = 0; free_col < W; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec<W> v{};
    v[free_col] = 1;
    for (size_t i = 0; i < rows.size(); ++i)
      v[pivot_of_row[i]] = f.neg(rows[i][free_col]);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace octu
