#include "padapt/linalg.hpp"

#include <omp.h>

#include <cassert>
#include <stdexcept>

namespace padapt {

namespace {

// Eliminates column `col` from row `target` using the normalized pivot row.
inline void eliminate(RatVec& target, const RatVec& pivot_row, std::size_t col) {
  if (target[col] == 0) return;
  Rat f = target[col];
  for (std::size_t j = col; j < target.size(); ++j) {
    if (pivot_row[j] != 0) target[j] -= f * pivot_row[j];
  }
}

std::size_t echelon_impl(Mat& m, bool parallel) {
  if (m.empty()) return 0;
  const std::size_t nrows = m.size();
  const std::size_t ncols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[rank], m[piv]);
    Rat inv = 1 / m[rank][col];
    for (std::size_t j = col; j < ncols; ++j)
      if (m[rank][j] != 0) m[rank][j] *= inv;
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (long r = static_cast<long>(rank) + 1; r < static_cast<long>(nrows); ++r)
        eliminate(m[static_cast<std::size_t>(r)], m[rank], col);
    } else {
      for (std::size_t r = rank + 1; r < nrows; ++r) eliminate(m[r], m[rank], col);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t echelon_serial(Mat& m) { return echelon_impl(m, false); }

std::size_t echelon_omp(Mat& m) { return echelon_impl(m, true); }

std::size_t rank_of(Mat m, bool parallel) { return echelon_impl(m, parallel); }

void Echelon::reduce(RatVec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = piv_[r];
    if (v[c] == 0) continue;
    Rat f = v[c];
    const RatVec& row = rows_[r];
    if (parallel_ && ncols_ >= 256) {
#pragma omp parallel for schedule(static)
      for (long j = static_cast<long>(c); j < static_cast<long>(ncols_); ++j)
        if (row[static_cast<std::size_t>(j)] != 0)
          v[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
    } else {
      for (std::size_t j = c; j < ncols_; ++j)
        if (row[j] != 0) v[j] -= f * row[j];
    }
  }
}

bool Echelon::insert(RatVec v) {
  assert(v.size() == ncols_);
  reduce(v);
  std::size_t lead = ncols_;
  for (std::size_t j = 0; j < ncols_; ++j)
    if (v[j] != 0) {
      lead = j;
      break;
    }
  if (lead == ncols_) return false;
  Rat inv = 1 / v[lead];
  for (std::size_t j = lead; j < ncols_; ++j)
    if (v[j] != 0) v[j] *= inv;
  // Keep rows sorted by pivot column.
  std::size_t pos = 0;
  while (pos < piv_.size() && piv_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  piv_.insert(piv_.begin() + pos, lead);
  return true;
}

bool Echelon::contains(RatVec v) const {
  assert(v.size() == ncols_);
  reduce(v);
  return is_zero_vec(v);
}

Rat determinant(Mat m) {
  const std::size_t n = m.size();
  if (n == 0) return Rat(1);
  if (m[0].size() != n) throw std::invalid_argument("determinant: matrix not square");
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[col], m[piv]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    for (std::size_t r = col + 1; r < n; ++r) eliminate(m[r], m[col], col);
  }
  return det;
}

std::optional<RatVec> solve(Mat a, RatVec b) {
  const std::size_t n = a.size();
  if (n == 0) return RatVec{};
  if (a[0].size() != n || b.size() != n)
    throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    Rat inv = 1 / a[col][col];
    for (std::size_t j = col; j <= n; ++j)
      if (a[col][j] != 0) a[col][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      eliminate(a[r], a[col], col);
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<RatVec> coordinates(const std::vector<RatVec>& basis, const RatVec& v) {
  const std::size_t k = basis.size();
  if (k == 0) return is_zero_vec(v) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  const std::size_t n = basis[0].size();
  // Least-squares-free exact approach: solve the Gram system, then verify.
  Mat gram(k, RatVec(k));
  RatVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto c = solve(std::move(gram), std::move(rhs));
  if (!c) return std::nullopt;
  RatVec rec = zero_vec(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) rec[j] += (*c)[i] * basis[i][j];
  if (rec != v) return std::nullopt;
  return c;
}

}  // namespace padapt
