#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gnc/rational.hpp"

namespace gnc {

/* Sparse matrix over Q.  Absent entry means zero; setting an entry to zero
   erases it, so equality on the underlying map is honest equality. */
class RatMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // (row, col)

  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rat& value);
  void add_to(std::size_t r, std::size_t c, const Rat& value);

  bool is_zero() const { return entries_.empty(); }
  const std::map<Key, Rat>& entries() const { return entries_; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::map<Key, Rat> entries_;
};

/* Row echelon data.  rows[k] is sparse, sorted by column, normalized to a
   leading 1 at pivot_cols[k]; in the reduced form every pivot column is
   cleared from the other rows, which pins the output uniquely. */
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
};

/* Elimination walks rows in index order and, inside a row, takes the lowest
   remaining column as pivot.  The reduced form is canonical, so every
   downstream basis (kernels, images, cohomology representatives) is
   reproducible across runs. */
Echelon reduced_row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<Rat>> kernel;  // rows, in reduced echelon form
};
RankKernel rank_and_kernel(const RatMatrix& m);

/* Canonical basis of the column space: reduced echelon rows of the
   transpose, returned as dense vectors of length m.rows(). */
std::vector<std::vector<Rat>> column_space_basis(const RatMatrix& m);

/* Least structure that the cohomology code needs: solve sum_j x_j*cols[j] =
   rhs exactly, or report that rhs is outside the span. */
std::optional<std::vector<Rat>> solve_in_span(
    const std::vector<std::vector<Rat>>& cols, const std::vector<Rat>& rhs);

}  // namespace gnc
