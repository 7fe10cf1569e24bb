#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xch/nerve.hpp"

namespace xch {

enum class Flavor { C, Cbar, CC2, CC };

const char* flavor_name(Flavor f);

// A block of coordinates: nerve level p, bicomplex column c, tensor length q+1.
struct Cell {
  std::size_t p;
  std::size_t c;
  std::size_t q;
  std::size_t offset;
  std::size_t size;
};

// Degrees 0..hi. diffs[n] : C_n -> C_{n-1}; diffs[0] is the 0 x dims[0] map.
struct ChainComplex {
  std::size_t hi = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> diffs;
  // Provenance, empty for complexes derived by kernels and cokernels.
  std::vector<std::vector<Cell>> cells;
  std::vector<std::vector<std::string>> level_basis;

  std::string label(std::size_t n, std::size_t i) const;
};

struct ChainMap {
  std::vector<SparseMatrix> maps;  // maps[n] : source_n -> target_n
};

ChainComplex zero_complex(std::size_t hi);

// Failures name the first degree where d d != 0.
ValidationReport check_complex(const ChainComplex& c);
ValidationReport check_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);

ChainComplex simplicial_complex(const SimplicialAlgebra& s, Flavor flavor, std::size_t hi);
ChainComplex algebra_complex(const FiniteAlgebra& a, Flavor flavor, std::size_t hi);
ChainComplex xmod_complex(const CrossedModule& x, Flavor flavor, std::size_t hi);

// Largest per-degree dimension of xmod_complex(x, flavor, hi), without building it.
std::size_t estimate_dimension(const CrossedModule& x, Flavor flavor, std::size_t hi);

// Level maps diag(mu, ..., mu, nu) of the induced map of nerves.
std::vector<SparseMatrix> nerve_morphism(const XModMorphism& m, std::size_t max_level);

// Cellwise f_p tensor powers. Cells of source must exist in target.
ChainMap induced_chain_map(const std::vector<SparseMatrix>& level_maps, const ChainComplex& source,
                           const ChainComplex& target);
// Coordinate inclusion of a complex whose cells are a subset of the target's.
ChainMap cell_inclusion(const ChainComplex& sub, const ChainComplex& target);

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_map(const ChainComplex& c);

struct SubComplex {
  ChainComplex complex;
  ChainMap inclusion;
};
SubComplex kernel_complex(const ChainMap& f, const ChainComplex& source);

struct QuotientComplex {
  ChainComplex complex;
  ChainMap projection;
  ChainMap section;  // degree-wise linear section, not a chain map
};
QuotientComplex cokernel_complex(const ChainMap& f, const ChainComplex& target);

// C[k]_n = C_{n-k}, same differentials, cells kept.
ChainComplex shift_complex(const ChainComplex& c, std::size_t k);

struct ComplexSES {
  ChainComplex left;
  ChainComplex mid;
  ChainComplex right;
  ChainMap inj;
  ChainMap proj;
};

// Chain map laws plus degree-wise injectivity, surjectivity and exactness.
ValidationReport check_ses(const ComplexSES& s);

// 0 -> CC2 -> CC -> CC[2] -> 0 for complexes built over the same simplicial algebra.
ComplexSES connes_ses(const ChainComplex& cc2, const ChainComplex& cc);

// 0 -> F(0,A,0) -> F(x) -> cokernel -> 0; section receives the linear
// section of the projection when given.
ComplexSES base_quotient_ses(const CrossedModule& x, Flavor flavor, std::size_t hi, ChainMap* section = nullptr);

struct BetaGamma {
  ComplexSES beta_ses;   // CC2(0,A,0) -> CC2(x) -> beta
  ComplexSES gamma_ses;  // CC(0,A,0) -> CC(x) -> gamma
  ComplexSES shift_ses;  // beta -> gamma -> gamma[2]
};
BetaGamma beta_gamma(const CrossedModule& x, std::size_t hi);

}  // namespace xch
