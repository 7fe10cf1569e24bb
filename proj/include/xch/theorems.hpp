#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xch/homology.hpp"

namespace xch {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

// Dimensions indexed by degree, e.g. both sides of a comparison.
struct Table {
  std::string name;
  std::size_t first_degree;
  std::vector<std::size_t> dims;
};

struct TheoremReport {
  std::string theorem;
  std::vector<ExactnessReport> sequences;
  std::vector<Check> checks;
  // Statements about what was verified only inside the window.
  std::vector<std::string> qualifiers;
  std::vector<Table> tables;

  bool passed() const;
};

// dims of H_0..H_n_max of the crossed-module complex of the given flavor.
std::vector<std::size_t> xmod_homology(const CrossedModule& x, Flavor flavor, std::size_t n_max);
std::vector<std::size_t> algebra_homology(const FiniteAlgebra& a, Flavor flavor, std::size_t n_max);

// Cotriple cyclic homology: H_{n+1} of the gamma complex, n = 0..n_max.
struct XiHC {
  ChainComplex gamma;
  std::vector<Homology> groups;  // groups[n] = H_{n+1}(gamma)
};
XiHC xi_hc(const CrossedModule& x, std::size_t n_max);

// H_n of Ker(CC(A) -> CC(A/I)), n = 0..n_max.
struct RelativeHC {
  ChainComplex kernel;
  std::vector<Homology> groups;
};
RelativeHC relative_hc(const FiniteAlgebra& a, const Subspace& ideal, std::size_t n_max);

// dim Coker rho - dim [Coker rho, Coker rho].
std::size_t degree_zero_value(const CrossedModule& x);

// Homology I -> HC -> HC[-2] -> HH sequence from 0 -> CC2 -> CC -> CC[2] -> 0.
TheoremReport verify_connes(const CrossedModule& x, std::size_t n_max);

// Both five-term sequences, the identification of their middle term and the
// degree 0 equality.
TheoremReport verify_five_term(const CrossedModule& x);

// For an inclusion crossed module: asphericity of the augmented nerve and
// equality of all four homologies with those of A/I through n_max.
TheoremReport verify_collapse(const CrossedModule& x, std::size_t n_max);

// H_0 beta = H_0 gamma = 0 and H_1 beta = H_1 gamma = R/[A,R].
TheoremReport verify_beta_gamma(const CrossedModule& x);

// Relative cyclic homology against xi HC for the inclusion of an ideal.
TheoremReport verify_relat(const FiniteAlgebra& a, const Subspace& ideal, std::size_t n_max);

// The two long exact sequences relating HC, xi HC and beta.
TheoremReport verify_connection(const CrossedModule& x, std::size_t n_max);

// Hochschild excision for a linearly split extension whose kernel is an
// inclusion crossed module; the bar-acyclicity hypothesis is checked through n_max + 1.
TheoremReport verify_excision(const XModExtension& e, std::size_t n_max);

// dim H_q of k -> (level k)^{(p+1)} against the sum over i_0 + ... + i_p = q of
// products of dim pi_{i_j}, for p <= max_p and q <= max_q.
TheoremReport verify_tensor_homotopy(const CrossedModule& x, std::size_t max_p, std::size_t max_q);

}  // namespace xch
