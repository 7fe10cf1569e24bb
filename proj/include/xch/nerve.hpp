#pragma once

#include <cstddef>
#include <vector>

#include "xch/algebra.hpp"

namespace xch {

struct SimplicialAlgebra {
  std::vector<FiniteAlgebra> levels;
  // faces[n][i]: level n -> level n-1 (faces[0] is empty).
  std::vector<std::vector<SparseMatrix>> faces;
  // degeneracies[n][i]: level n -> level n+1, only for n < max_level.
  std::vector<std::vector<SparseMatrix>> degeneracies;

  std::size_t max_level() const { return levels.size() - 1; }
};

struct AugmentedSimplicialAlgebra {
  SimplicialAlgebra base;
  FiniteAlgebra target;
  SparseMatrix aug;  // level 0 -> target
};

// Level n is R^n + A with basis R_1 block, ..., R_n block, then A. An element
// (r_1, ..., r_n, a) is the composable string whose i-th arrow has source
// rho(r_{i+1} + ... + r_n) + a; the product is componentwise on strings.
SimplicialAlgebra nerve(const CrossedModule& x, std::size_t max_level);
SimplicialAlgebra constant_simplicial(const FiniteAlgebra& a, std::size_t max_level);

// Augmented over Coker rho.
AugmentedSimplicialAlgebra augmented_nerve(const CrossedModule& x, std::size_t max_level);

// Simplicial identities and the homomorphism property of every structure map.
ValidationReport validate_simplicial(const SimplicialAlgebra& s);
ValidationReport validate_augmentation(const AugmentedSimplicialAlgebra& s);

struct MooreComplex {
  // bases[n] has columns spanning N_n inside level n.
  std::vector<SparseMatrix> bases;
  // boundaries[n]: N_n -> N_{n-1} in basis coordinates (boundaries[0] unused).
  std::vector<SparseMatrix> boundaries;

  std::size_t dim(std::size_t n) const { return bases[n].cols(); }
};

MooreComplex moore(const SimplicialAlgebra& s, std::size_t top);

// pi_n for n >= 0 of the simplicial algebra; representatives in level coordinates.
Subquotient homotopy_group(const SimplicialAlgebra& s, std::size_t n);
// Extended groups: n = 0 uses Ker aug, n = -1 is target / Im aug.
Subquotient homotopy_group(const AugmentedSimplicialAlgebra& s, int n);

}  // namespace xch
