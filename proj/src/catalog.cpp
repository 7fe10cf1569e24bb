#include "xch/catalog.hpp"

namespace xch::catalog {

FiniteAlgebra K1() { return make_algebra("K1", {"e"}, {{0, 0, 0, Rational(1)}}); }

FiniteAlgebra N1() { return make_algebra("N1", {"x"}, {}); }

FiniteAlgebra Z2() { return make_algebra("Z2", {"z1", "z2"}, {}); }

FiniteAlgebra U2() {
  return make_algebra("U2", {"e11", "e12", "e22"},
                      {{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 2, 1, Rational(1)}, {2, 2, 2, Rational(1)}});
}

FiniteAlgebra D2() { return make_algebra("D2", {"u", "v"}, {{0, 0, 0, Rational(1)}, {1, 1, 1, Rational(1)}}); }

FiniteAlgebra K1_cubed() {
  return make_algebra("K1^3", {"u", "v", "w"},
                      {{0, 0, 0, Rational(1)}, {1, 1, 1, Rational(1)}, {2, 2, 2, Rational(1)}});
}

CrossedModule inclusion_U2() {
  return make_inclusion_xmod(U2(), Subspace::span(3, {unit_vector(1)}), "X_inc_U2");
}

CrossedModule inclusion_D2() {
  return make_inclusion_xmod(D2(), Subspace::span(2, {unit_vector(0)}), "X_inc_D2");
}

CrossedModule bimodule_N1_K1() {
  const FiniteAlgebra a = K1();
  const FiniteAlgebra m = N1();
  AlgebraAction act{a, m, Bilinear::from_constants(1, 1, 1, {{0, 0, 0, Rational(1)}}),
                    Bilinear::from_constants(1, 1, 1, {{0, 0, 0, Rational(1)}})};
  return make_bimodule_xmod(act, "X_bimod");
}

CrossedModule identity_K1() { return make_identity_xmod(K1(), "X_id_K1"); }
CrossedModule identity_U2() { return make_identity_xmod(U2(), "X_id_U2"); }
CrossedModule zero_K1() { return make_zero_xmod(K1(), "X_zero_K1"); }
CrossedModule zero_U2() { return make_zero_xmod(U2(), "X_zero_U2"); }
CrossedModule zero_Z2() { return make_zero_xmod(Z2(), "X_zero_Z2"); }
CrossedModule zero_zero() { return make_zero_xmod(zero_algebra(), "X_zero_0"); }

std::vector<CrossedModule> crossed_modules() {
  return {inclusion_U2(), inclusion_D2(), bimodule_N1_K1(), identity_K1(), identity_U2(),
          zero_K1(),      zero_U2(),      zero_Z2(),        zero_zero()};
}

XModExtension excision_extension() {
  const CrossedModule kernel = inclusion_D2();
  const CrossedModule middle =
      make_inclusion_xmod(K1_cubed(), Subspace::span(3, {unit_vector(0), unit_vector(2)}), "X_S");
  const CrossedModule quotient = make_identity_xmod(make_algebra("K1", {"w"}, {{0, 0, 0, Rational(1)}}), "X_T");
  auto m = [](std::vector<std::vector<Rational>> rows, std::size_t cols) { return SparseMatrix::from_dense(rows, cols); };
  XModMorphism incl{"incl", kernel, middle, m({{1}, {0}}, 1), m({{1, 0}, {0, 1}, {0, 0}}, 2)};
  XModMorphism proj{"proj", middle, quotient, m({{0, 1}}, 2), m({{0, 0, 1}}, 3)};
  return XModExtension{"E_exc", std::move(incl), std::move(proj), m({{0}, {1}}, 1), m({{0}, {0}, {1}}, 1)};
}

}  // namespace xch::catalog
