#include <doctest.h>

#include "xch/catalog.hpp"
#include "xch/error.hpp"

using namespace xch;

namespace {

bool mentions(const ValidationReport& r, const std::string& text) {
  for (const auto& f : r.failures) {
    if (f.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("catalog algebras are associative") {
    for (const auto& a : {catalog::K1(), catalog::N1(), catalog::Z2(), catalog::U2(), catalog::D2(),
                          catalog::K1_cubed(), zero_algebra()}) {
      CHECK_MESSAGE(validate_algebra(a).ok(), a.name);
    }
  }

  TEST_CASE("non-associative multiplication is reported") {
    // e1 e1 = e2, e2 e1 = e1: (e1 e1) e1 = e1 but e1 (e1 e1) = 0.
    auto a = make_algebra("bad", {"e1", "e2"}, {{0, 0, 1, Rational(1)}, {1, 0, 0, Rational(1)}});
    const auto r = validate_algebra(a);
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, "e1"));
  }

  TEST_CASE("commutators") {
    const auto u2 = catalog::U2();
    CHECK(commutator_space(u2) == Subspace::span(3, {unit_vector(1)}));
    CHECK(commutator_space(catalog::K1()).dim() == 0);
    CHECK(commutator_space(catalog::bimodule_N1_K1().action()).dim() == 0);
    const auto zero_action = make_zero_xmod(u2).action();
    CHECK(commutator_space(zero_action).dim() == 0);
  }

  TEST_CASE("quotients and ideals") {
    const auto u2 = catalog::U2();
    auto q = quotient_algebra(u2, Subspace::span(3, {unit_vector(1)}));
    CHECK(q.algebra.dim() == 2);
    CHECK(validate_algebra(q.algebra).ok());
    CHECK(commutator_space(q.algebra).dim() == 0);
    CHECK(validate_homomorphism(q.projection, u2, q.algebra).ok());
    CHECK(quotient_algebra(u2, Subspace(3)).algebra.dim() == 3);
    CHECK(quotient_algebra(u2, Subspace::full(3)).algebra.dim() == 0);

    const auto e11 = Subspace::span(3, {unit_vector(0)});
    const auto bad = ideal_violation(u2, e11);
    REQUIRE(bad);
    CHECK(bad->find("e12") != std::string::npos);
    CHECK_THROWS_AS(quotient_algebra(u2, e11), MathError);
  }

  TEST_CASE("catalog crossed modules are valid") {
    for (const auto& x : catalog::crossed_modules()) CHECK_MESSAGE(validate_crossed_module(x).ok(), x.name);
  }

  TEST_CASE("Peiffer failure has a witness") {
    const auto k1 = catalog::K1();
    CrossedModule x{"bad", k1, k1, SparseMatrix(1, 1), k1.mul, k1.mul};
    const auto r = validate_crossed_module(x);
    CHECK_FALSE(r.ok());
    CHECK(mentions(r, "(r=e, r'=e)"));
    CHECK(mentions(r, "Peiffer"));
  }

  TEST_CASE("inclusion crossed modules") {
    const auto u2 = catalog::U2();
    const auto full = make_inclusion_xmod(u2, Subspace::full(3));
    CHECK(validate_crossed_module(full).ok());
    CHECK(full.rho == SparseMatrix::identity(3));
    const auto none = make_inclusion_xmod(u2, Subspace(3));
    CHECK(none.R.dim() == 0);
    CHECK(validate_crossed_module(none).ok());
  }

  TEST_CASE("bimodule crossed module needs a null algebra") {
    const auto k1 = catalog::K1();
    AlgebraAction act{k1, k1, k1.mul, k1.mul};
    CHECK_THROWS_AS(make_bimodule_xmod(act), MathError);
    CHECK(validate_crossed_module(catalog::bimodule_N1_K1()).ok());
  }

  TEST_CASE("annihilator crossed module") {
    // R = K1 x N1 -> K1 projecting away the null factor.
    const auto r = make_algebra("R", {"e", "x"}, {{0, 0, 0, Rational(1)}});
    const auto k1 = catalog::K1();
    const auto rho = SparseMatrix::from_dense({{1, 0}}, 2);
    const auto x = make_annihilator_xmod(r, k1, rho, "ann");
    CHECK(validate_crossed_module(x).ok());
    // Here the kernel does not annihilate R.
    const auto r2 = make_algebra("R2", {"e", "x"}, {{0, 0, 0, Rational(1)}, {1, 1, 1, Rational(1)}});
    CHECK_THROWS_AS(make_annihilator_xmod(r2, k1, rho, "bad"), MathError);
  }

  TEST_CASE("semidirect product") {
    for (const auto& x : catalog::crossed_modules()) {
      const auto s = semidirect_product(x.action());
      CHECK(s.dim() == x.R.dim() + x.A.dim());
      CHECK(validate_algebra(s).ok());
    }
  }

  TEST_CASE("additive abelianization") {
    const auto z = additive_abelianization(make_zero_xmod(catalog::U2()));
    CHECK(z.source_dim == 0);
    CHECK(z.target_dim == 2);
    const auto id = additive_abelianization(catalog::identity_U2());
    CHECK(id.source_dim == 2);
    CHECK(id.target_dim == 2);
    CHECK(rank(id.map) == 2);
  }

  TEST_CASE("extension checks") {
    const auto e = catalog::excision_extension();
    CHECK(validate_extension(e).ok());
    auto broken = e;
    broken.gamma = SparseMatrix::from_dense({{1}, {0}}, 1);
    CHECK_FALSE(validate_extension(broken).ok());
  }
}
