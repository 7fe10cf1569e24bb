#pragma once

#include <vector>

#include "xch/algebra.hpp"

// Small algebras and crossed modules used by the tests and shipped as JSON
// under catalog/.
namespace xch::catalog {

FiniteAlgebra K1();  // e.e = e
FiniteAlgebra N1();  // x.x = 0
FiniteAlgebra Z2();  // two-dimensional, zero multiplication
FiniteAlgebra U2();  // upper triangular 2x2 matrices: e11, e12, e22
FiniteAlgebra D2();  // K1 x K1: u, v
FiniteAlgebra K1_cubed();  // K1 x K1 x K1: u, v, w

CrossedModule inclusion_U2();  // span{e12} in U2
CrossedModule inclusion_D2();  // K1 x 0 in K1 x K1
CrossedModule bimodule_N1_K1();
CrossedModule identity_K1();
CrossedModule identity_U2();
CrossedModule zero_K1();
CrossedModule zero_U2();
CrossedModule zero_Z2();
CrossedModule zero_zero();

std::vector<CrossedModule> crossed_modules();

// (K1 x 0 in K1 x K1) -> (span{u,w} in K1^3) -> (K1, K1, 1).
XModExtension excision_extension();

}  // namespace xch::catalog
