#pragma once

#include <cstddef>

#include "xch/algebra.hpp"

namespace xch {

// Tensor powers use the lexicographic basis: (i_0, ..., i_n) has index
// i_0 d^n + ... + i_n.
std::size_t tensor_dim(std::size_t dim, std::size_t length);

// A^{(n+1)} -> A^{(n)}, n >= 1.
SparseMatrix hochschild_boundary(const Bilinear& mul, std::size_t n);
SparseMatrix bar_boundary(const Bilinear& mul, std::size_t n);

// On A^{(n+1)}: t(a_0, ..., a_n) = (-1)^n (a_n, a_0, ..., a_{n-1}) and N = 1 + t + ... + t^n.
SparseMatrix cyclic_operator(std::size_t dim, std::size_t n);
SparseMatrix norm_operator(std::size_t dim, std::size_t n);

}  // namespace xch
