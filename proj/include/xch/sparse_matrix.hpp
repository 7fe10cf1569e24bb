#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xch/rational.hpp"

namespace xch {

struct Term {
  std::size_t index;
  Rational value;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sorted by index, no duplicates, no stored zeros.
using SparseVector = std::vector<Term>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

SparseVector unit_vector(std::size_t index);

// Sums duplicate indices and drops zeros.
SparseVector canonical_vector(std::vector<Term> terms);

// a + factor * b
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

SparseVector scaled(const SparseVector& v, const Rational& factor);

std::vector<Rational> to_dense(const SparseVector& v, std::size_t size);
SparseVector from_dense(const std::vector<Rational>& dense);

// Immutable sparse matrix over Q, stored both row-major and column-major.
// Equality is structural since the storage is canonical.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);
  static SparseMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense, std::size_t cols);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return row_terms_.size(); }
  bool is_zero() const { return row_terms_.empty(); }

  // Terms of row r carry column indices; terms of column c carry row indices.
  std::span<const Term> row(std::size_t r) const;
  std::span<const Term> column(std::size_t c) const;

  Rational at(std::size_t r, std::size_t c) const;
  std::vector<Triplet> triplets() const;
  std::vector<SparseVector> column_vectors() const;
  std::vector<SparseVector> row_vectors() const;
  std::vector<std::vector<Rational>> to_dense() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  void build_columns();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_start_{0};
  std::vector<Term> row_terms_;
  std::vector<std::size_t> col_start_{0};
  std::vector<Term> col_terms_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const Rational& factor, const SparseMatrix& m);

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kron_power(const SparseMatrix& a, std::size_t power);

// [a b] and [a; b]
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);

// Places block into a rows x cols zero matrix at (row_offset, col_offset).
SparseMatrix embed(const SparseMatrix& block, std::size_t rows, std::size_t cols, std::size_t row_offset,
                   std::size_t col_offset);

}  // namespace xch
