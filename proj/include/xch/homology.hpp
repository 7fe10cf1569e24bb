#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "xch/chain_complex.hpp"

namespace xch {

// H_n of a complex with a chosen basis of representative cycles. Needs
// degrees n-1..n+1 in the window.
class Homology {
 public:
  Homology(const ChainComplex& c, std::size_t n);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return representatives_.size(); }
  const std::vector<SparseVector>& representatives() const { return representatives_; }

  // Coordinates of the class of a cycle in the representative basis. Throws
  // InternalError when v is not a cycle.
  SparseVector coordinates(const SparseVector& cycle) const;
  bool is_boundary(const SparseVector& cycle) const { return coordinates(cycle).empty(); }

 private:
  std::size_t degree_;
  std::vector<SparseVector> representatives_;
  EchelonBasis cycles_;  // boundaries tagged 0, representatives tagged e_k
};

// H_lo .. H_top, computed degree-parallel.
std::vector<Homology> homology_range(const ChainComplex& c, std::size_t lo, std::size_t top);
std::vector<std::size_t> dims_of(const std::vector<Homology>& hs);

// Matrix of H_n(f) in the representative bases.
SparseMatrix induced_on_homology(const ChainMap& f, std::size_t n, const Homology& source, const Homology& target);

// Snake map H_n(right) -> H_{n-1}(left).
SparseMatrix connecting_map(const ComplexSES& s, std::size_t n, const Homology& right_n, const Homology& left_below);

struct ExactnessPosition {
  std::string label;
  std::size_t dim;
  bool composition_zero;
  std::size_t ker_dim;
  std::size_t im_dim;
  bool exact;
};

struct ExactnessReport {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<ExactnessPosition> positions;  // interior positions only

  bool exact() const;
};

// maps[i] : space i -> space i+1. Exactness is checked at every interior space.
ExactnessReport verify_exact(std::string name, std::vector<std::string> labels, std::vector<std::size_t> dims,
                             const std::vector<SparseMatrix>& maps);

// Labels for H_n of each term, as functions of n.
struct SequenceNames {
  std::function<std::string(std::size_t)> left;
  std::function<std::string(std::size_t)> mid;
  std::function<std::string(std::size_t)> right;
};

// H_top(L) -> H_top(M) -> H_top(R) -> H_{top-1}(L) -> ... -> H_0(R) -> 0. Needs hi >= top + 1.
struct LongExactSequence {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> maps;
};
LongExactSequence long_exact_sequence(const ComplexSES& s, std::size_t top, const SequenceNames& names);

ExactnessReport verify_long_exact(std::string name, const LongExactSequence& les);

}  // namespace xch
