#pragma once

// Dense exact linear algebra over a finite field.

#include <cstddef>
#include <optional>
#include <vector>

#include "qj/fields.hpp"

namespace qj {

class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fe& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Fe& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const std::vector<Fe>& row);

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<Fe> a_;
};

/// In-place reduced row echelon form. Pivots are chosen column by column
/// (first nonzero entry), which makes the result canonical. Returns the
/// pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of the right kernel, one vector per free column in increasing order.
std::vector<std::vector<Fe>> kernel(Matrix m);
/// Some solution of m x = b (free variables set to zero), if consistent.
std::optional<std::vector<Fe>> solve(const Matrix& m, const std::vector<Fe>& b);

}  // namespace qj
