#ifndef PADAPT_LINALG_HPP
#define PADAPT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "padapt/rational.hpp"

namespace padapt {

// Dense exact-rational matrices, row major.
using Mat = std::vector<RatVec>;

// Row echelon form state built incrementally.  Rows are kept normalized
// with leading entry 1.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols, bool parallel = false)
      : ncols_(ncols), parallel_(parallel) {}

  // Reduces v against the current rows; if a nonzero remainder is left, it
  // is inserted as a new pivot row and the rank grows by one.
  // Returns true if the row was independent.
  bool insert(RatVec v);

  // Reduces v against the current rows without inserting.
  // Returns true iff v lies in the row span.
  bool contains(RatVec v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

 private:
  void reduce(RatVec& v) const;

  std::size_t ncols_;
  bool parallel_;
  std::vector<RatVec> rows_;      // pivot-normalized rows
  std::vector<std::size_t> piv_;  // pivot column per row, increasing
};

// Rank of a matrix.  The parallel flag switches the elimination inner loop
// to the OpenMP kernel; results are identical to the serial path.
std::size_t rank_of(Mat m, bool parallel = false);

// In-place fraction-normalized Gaussian elimination to row echelon form.
// Returns the rank.  Serial reference implementation.
std::size_t echelon_serial(Mat& m);

// OpenMP variant: row updates below the pivot run in parallel.
std::size_t echelon_omp(Mat& m);

// Determinant of a square matrix.
Rat determinant(Mat m);

// Solves a.x = b for square nonsingular a; returns nullopt when singular.
std::optional<RatVec> solve(Mat a, RatVec b);

// Expresses v as a linear combination of the given (independent) vectors;
// nullopt if v is outside their span.
std::optional<RatVec> coordinates(const std::vector<RatVec>& basis, const RatVec& v);

}  // namespace padapt

#endif
