#include "xch/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>

#include "xch/error.hpp"

namespace xch {

SparseVector unit_vector(std::size_t index) { return {Term{index, Rational(1)}}; }

SparseVector canonical_vector(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVector out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().value += t.value;
    } else {
      if (!out.empty() && is_zero(out.back().value)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && is_zero(out.back().value)) out.pop_back();
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  if (is_zero(factor)) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(Term{b[j].index, factor * b[j].value});
      ++j;
    } else {
      Rational v = a[i].value + factor * b[j].value;
      if (!is_zero(v)) out.push_back(Term{a[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Rational& factor) {
  if (is_zero(factor)) return {};
  SparseVector out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(Term{t.index, factor * t.value});
  return out;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t size) {
  std::vector<Rational> out(size);
  for (const auto& t : v) out.at(t.index) = t.value;
  return out;
}

SparseVector from_dense(const std::vector<Rational>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!is_zero(dense[i])) out.push_back(Term{i, dense[i]});
  }
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_start_(rows + 1, 0), col_start_(cols + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw MathError("matrix entry index out of range");
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  SparseMatrix m(rows, cols);
  m.row_terms_.reserve(entries.size());
  std::size_t r = 0;
  std::size_t k = 0;
  while (k < entries.size()) {
    std::size_t row = entries[k].row;
    std::size_t col = entries[k].col;
    Rational sum = entries[k].value;
    ++k;
    while (k < entries.size() && entries[k].row == row && entries[k].col == col) sum += entries[k++].value;
    while (r < row) m.row_start_[++r] = m.row_terms_.size();
    if (!xch::is_zero(sum)) m.row_terms_.push_back(Term{col, std::move(sum)});
  }
  while (r < rows) m.row_start_[++r] = m.row_terms_.size();
  m.build_columns();
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
  std::vector<Triplet> entries;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& t : columns[c]) entries.push_back(Triplet{t.index, c, t.value});
  }
  return from_triplets(rows, columns.size(), std::move(entries));
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& t : rows[r]) entries.push_back(Triplet{r, t.index, t.value});
  }
  return from_triplets(rows.size(), cols, std::move(entries));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense, std::size_t cols) {
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw MathError("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!xch::is_zero(dense[r][c])) entries.push_back(Triplet{r, c, dense[r][c]});
    }
  }
  return from_triplets(dense.size(), cols, std::move(entries));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Triplet> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back(Triplet{i, i, Rational(1)});
  return from_triplets(n, n, std::move(entries));
}

void SparseMatrix::build_columns() {
  col_start_.assign(cols_ + 1, 0);
  for (const auto& t : row_terms_) ++col_start_[t.index + 1];
  for (std::size_t c = 0; c < cols_; ++c) col_start_[c + 1] += col_start_[c];
  col_terms_.assign(row_terms_.size(), Term{0, Rational(0)});
  std::vector<std::size_t> fill(col_start_.begin(), col_start_.end() - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_start_[r]; k < row_start_[r + 1]; ++k) {
      const auto& t = row_terms_[k];
      col_terms_[fill[t.index]++] = Term{r, t.value};
    }
  }
}

std::span<const Term> SparseMatrix::row(std::size_t r) const {
  assert(r < rows_);
  return {row_terms_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
}

std::span<const Term> SparseMatrix::column(std::size_t c) const {
  assert(c < cols_);
  return {col_terms_.data() + col_start_[c], col_start_[c + 1] - col_start_[c]};
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto terms = row(r);
  auto it = std::lower_bound(terms.begin(), terms.end(), c, [](const Term& t, std::size_t i) { return t.index < i; });
  if (it != terms.end() && it->index == c) return it->value;
  return Rational(0);
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& t : row(r)) out.push_back(Triplet{r, t.index, t.value});
  }
  return out;
}

std::vector<SparseVector> SparseMatrix::column_vectors() const {
  std::vector<SparseVector> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    auto col = column(c);
    out[c].assign(col.begin(), col.end());
  }
  return out;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto rw = row(r);
    out[r].assign(rw.begin(), rw.end());
  }
  return out;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& t : row(r)) out[r][t.index] = t.value;
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  t.row_start_ = col_start_;
  t.row_terms_ = col_terms_;
  t.col_start_ = row_start_;
  t.col_terms_ = row_terms_;
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<Term> acc;
  for (const auto& x : v) {
    if (x.index >= cols_) throw MathError("vector index out of range in apply");
    for (const auto& t : column(x.index)) acc.push_back(Term{t.index, t.value * x.value});
  }
  return canonical_vector(std::move(acc));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_start_ == b.row_start_ && a.row_terms_ == b.row_terms_;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw MathError("shape mismatch in matrix product");
  std::vector<SparseVector> cols(b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<Term> acc;
    for (const auto& x : b.column(c)) {
      for (const auto& t : a.column(x.index)) acc.push_back(Term{t.index, t.value * x.value});
    }
    cols[c] = canonical_vector(std::move(acc));
  }
  return SparseMatrix::from_columns(a.rows(), cols);
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw MathError("shape mismatch in matrix sum");
  auto entries = a.triplets();
  for (auto& t : b.triplets()) entries.push_back(std::move(t));
  return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(entries));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Rational(-1) * b; }

SparseMatrix operator*(const Rational& factor, const SparseMatrix& m) {
  auto entries = m.triplets();
  for (auto& e : entries) e.value *= factor;
  return SparseMatrix::from_triplets(m.rows(), m.cols(), std::move(entries));
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<Triplet> entries;
  entries.reserve(a.nnz() * b.nnz());
  for (const auto& x : a.triplets()) {
    for (const auto& y : b.triplets()) {
      entries.push_back(Triplet{x.row * b.rows() + y.row, x.col * b.cols() + y.col, x.value * y.value});
    }
  }
  return SparseMatrix::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), std::move(entries));
}

SparseMatrix kron_power(const SparseMatrix& a, std::size_t power) {
  SparseMatrix out = SparseMatrix::identity(1);
  for (std::size_t i = 0; i < power; ++i) out = kron(out, a);
  return out;
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows()) throw MathError("shape mismatch in hstack");
  auto entries = a.triplets();
  for (auto& t : b.triplets()) entries.push_back(Triplet{t.row, t.col + a.cols(), std::move(t.value)});
  return SparseMatrix::from_triplets(a.rows(), a.cols() + b.cols(), std::move(entries));
}

SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.cols()) throw MathError("shape mismatch in vstack");
  auto entries = a.triplets();
  for (auto& t : b.triplets()) entries.push_back(Triplet{t.row + a.rows(), t.col, std::move(t.value)});
  return SparseMatrix::from_triplets(a.rows() + b.rows(), a.cols(), std::move(entries));
}

SparseMatrix embed(const SparseMatrix& block, std::size_t rows, std::size_t cols, std::size_t row_offset,
                   std::size_t col_offset) {
  auto entries = block.triplets();
  for (auto& e : entries) {
    e.row += row_offset;
    e.col += col_offset;
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(entries));
}

}  // namespace xch
