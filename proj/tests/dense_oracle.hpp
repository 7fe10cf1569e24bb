#pragma once

// Reference homology computations on dense rational matrices. Shares no
// code with the library beyond reading structure constants.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "xch/algebra.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

std::size_t dense_rank(Dense m);

// dims of H_0..H_n_max of the Hochschild complex (b on A^{n+1}) and of the
// total cyclic bicomplex.
std::vector<std::size_t> hochschild(const xch::FiniteAlgebra& a, std::size_t n_max);
std::vector<std::size_t> cyclic(const xch::FiniteAlgebra& a, std::size_t n_max);
std::vector<std::size_t> bar(const xch::FiniteAlgebra& a, std::size_t n_max);

}  // namespace oracle
