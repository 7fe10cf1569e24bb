#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xch/linalg.hpp"
#include "xch/sparse_matrix.hpp"

namespace xch {

// One structure constant: e_i * e_j has coefficient `value` on e_k.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational value;
};

// A bilinear map k^l x k^r -> k^o stored as one sparse vector per basis pair.
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);

  static Bilinear from_constants(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim,
                                 const std::vector<StructureConstant>& constants);

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }

  const SparseVector& on_basis(std::size_t i, std::size_t j) const { return table_[i * right_ + j]; }
  void set(std::size_t i, std::size_t j, SparseVector value) { table_[i * right_ + j] = std::move(value); }
  SparseVector apply(const SparseVector& x, const SparseVector& y) const;

  std::vector<StructureConstant> constants() const;
  bool is_zero() const;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<SparseVector> table_;
};

struct FiniteAlgebra {
  std::string name;
  std::vector<std::string> basis;
  Bilinear mul;

  std::size_t dim() const { return basis.size(); }
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const { return mul.apply(x, y); }
};

FiniteAlgebra make_algebra(std::string name, std::vector<std::string> basis,
                           const std::vector<StructureConstant>& constants);
FiniteAlgebra zero_algebra(std::string name = "0");

// A acting on R: left is A x R -> R, right is R x A -> R.
struct AlgebraAction {
  FiniteAlgebra acting;
  FiniteAlgebra acted;
  Bilinear left;
  Bilinear right;
};

// A acting on itself by multiplication.
AlgebraAction self_action(const FiniteAlgebra& a);

struct CrossedModule {
  std::string name;
  FiniteAlgebra R;
  FiniteAlgebra A;
  SparseMatrix rho;  // dim A x dim R
  Bilinear left;
  Bilinear right;

  AlgebraAction action() const { return AlgebraAction{A, R, left, right}; }
};

struct XModMorphism {
  std::string name;
  CrossedModule source;
  CrossedModule target;
  SparseMatrix mu;  // on R parts
  SparseMatrix nu;  // on A parts
};

// Linearly split extension: kernel -> middle -> quotient with linear
// sections gamma : T -> S and delta : C -> B of the two rows.
struct XModExtension {
  std::string name;
  XModMorphism incl;  // (mu, nu)
  XModMorphism proj;  // (mu', nu')
  SparseMatrix gamma;
  SparseMatrix delta;
};

struct LinearXMod {
  std::size_t source_dim;
  std::size_t target_dim;
  SparseMatrix map;
};

// Axiom failures with witnesses; empty means valid.
struct ValidationReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void merge(const ValidationReport& other, const std::string& prefix = "");
};

ValidationReport validate_algebra(const FiniteAlgebra& a);
ValidationReport validate_action(const AlgebraAction& act);
ValidationReport validate_crossed_module(const CrossedModule& x);
ValidationReport validate_homomorphism(const SparseMatrix& f, const FiniteAlgebra& from, const FiniteAlgebra& to);
ValidationReport validate_morphism(const XModMorphism& m);
// Exact rows plus mu' gamma = 1, nu' delta = 1 and sigma gamma = delta theta.
ValidationReport validate_extension(const XModExtension& e);

FiniteAlgebra semidirect_product(const AlgebraAction& act);
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Span of a r - r a over basis pairs, inside R.
Subspace commutator_space(const AlgebraAction& act);
Subspace commutator_space(const FiniteAlgebra& a);

// Returns a witness "e_i * v_j" when sub is not a two-sided ideal.
std::optional<std::string> ideal_violation(const FiniteAlgebra& a, const Subspace& sub);

struct QuotientAlgebra {
  FiniteAlgebra algebra;
  SparseMatrix projection;  // dim Q x dim A, an algebra homomorphism
  SparseMatrix section;     // linear only
};
QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const Subspace& ideal);

// The ideal as an algebra in its own echelon basis, with its inclusion.
struct SubAlgebra {
  FiniteAlgebra algebra;
  SparseMatrix inclusion;  // dim A x dim I
};
SubAlgebra ideal_algebra(const FiniteAlgebra& a, const Subspace& ideal);

CrossedModule make_inclusion_xmod(const FiniteAlgebra& a, const Subspace& ideal, std::string name = "");
CrossedModule make_identity_xmod(const FiniteAlgebra& a, std::string name = "");
CrossedModule make_zero_xmod(const FiniteAlgebra& a, std::string name = "");
CrossedModule make_bimodule_xmod(const AlgebraAction& act, std::string name = "");
// rho must be surjective with kernel in the two-sided annihilator of R; the
// action a r = r~ r uses a preimage r~ of a.
CrossedModule make_annihilator_xmod(const FiniteAlgebra& r, const FiniteAlgebra& a, const SparseMatrix& rho,
                                    std::string name = "");

// (R/[A,R] -> A/[A,A], induced map).
LinearXMod additive_abelianization(const CrossedModule& x);

// Label of a vector in terms of basis labels, e.g. "e11 - 2*e12".
std::string vector_label(const SparseVector& v, const std::vector<std::string>& basis);

}  // namespace xch
