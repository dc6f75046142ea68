#pragma once

#include <map>
#include <utility>
#include <vector>

#include "grt/rational.hpp"

namespace grt {

// Sorted by column, no stored zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

// a += s * b
void axpy(SparseVector& a, const Rational& s, const SparseVector& b);

// Incrementally maintained reduced row echelon form over Q. Every stored row
// has a leading 1 at its pivot column (the smallest column in which it is
// nonzero) and zeros in all other pivot columns.
class RowEchelon {
 public:
  explicit RowEchelon(int columns) : columns_(columns) {}

  // Adds v to the row space. Returns true iff the rank grew.
  bool insert(const SparseVector& v);
  // v minus its component along the row space, normalised so that every
  // pivot coordinate is zero.
  SparseVector reduce(const SparseVector& v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int columns() const { return columns_; }
  bool is_pivot(int column) const { return rows_.count(column) != 0; }
  const std::map<int, SparseVector>& rows() const { return rows_; }
  std::vector<int> free_columns() const;
  // Basis of the solution space of rows * x = 0, one vector per free column.
  std::vector<SparseVector> nullspace() const;

 private:
  int columns_;
  std::map<int, SparseVector> rows_;
};

}  // namespace grt
