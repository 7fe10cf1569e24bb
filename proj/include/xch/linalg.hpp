#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "xch/sparse_matrix.hpp"

namespace xch {

std::size_t rank(const SparseMatrix& m);

// Rank after reducing every entry mod p. Throws FieldError if p divides a
// denominator.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p);

// A subspace of k^n held by its reduced row echelon basis. The basis is
// unique for the subspace, so equality is structural.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  std::vector<std::size_t> pivots() const;

  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  // Columns are the basis vectors (ambient x dim).
  SparseMatrix inclusion() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<SparseVector> basis_;
};

Subspace operator+(const Subspace& a, const Subspace& b);

Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);

// Kernel basis from back substitution over a Markowitz elimination. Cheaper
// than kernel() and deterministic, but not in reduced echelon form.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

struct QuotientPresentation {
  std::size_t dim;
  SparseMatrix projection;  // dim x ambient, kernel = sub
  SparseMatrix section;     // ambient x dim, projection * section = I
};

// Coordinates of the quotient are the non-pivot coordinates of sub.
QuotientPresentation quotient_presentation(std::size_t ambient_dim, const Subspace& sub);

// Triangular basis with optional bookkeeping "tags". A tag records, for each
// stored row, a combination of the tags of the vectors that were inserted.
// reduce() returns the remainder and the accumulated tag, which makes the
// class a solver (tags = unit vectors on columns) and a quotient coordinate
// map (tags = unit vectors on representatives, zero on relations).
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim = 0);

  // Batch construction via Markowitz elimination; all tags are zero.
  static EchelonBasis from_spanning(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when v was independent of the stored rows.
  bool insert(const SparseVector& v, const SparseVector& tag = {});

  struct Reduction {
    SparseVector remainder;
    SparseVector tag;
  };
  Reduction reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).remainder.empty(); }

 private:
  struct Row {
    std::size_t pivot;
    SparseVector terms;
    SparseVector tag;
  };

  std::size_t ambient_;
  std::vector<Row> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

// Solves m x = y for many right-hand sides.
class LinearSolver {
 public:
  explicit LinearSolver(const SparseMatrix& m);

  std::optional<SparseVector> solve(const SparseVector& y) const;
  // Throws InternalError when y is not in the column span.
  SparseVector solve_or_throw(const SparseVector& y) const;

 private:
  EchelonBasis basis_;
};

// Z / B for B contained in span Z: representatives are the members of
// `cycles` independent modulo `boundaries`, in input order.
struct Subquotient {
  std::size_t dim;
  std::vector<SparseVector> representatives;
};
Subquotient subquotient(std::size_t ambient_dim, const std::vector<SparseVector>& cycles,
                        const std::vector<SparseVector>& boundaries);

// Inverse of a square invertible matrix; throws MathError otherwise.
SparseMatrix inverse(const SparseMatrix& m);

}  // namespace xch
