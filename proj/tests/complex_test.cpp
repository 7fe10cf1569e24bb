#include <doctest.h>
#include <algorithm>

#include "xch/catalog.hpp"
#include "xch/chain_complex.hpp"
#include "xch/operators.hpp"

using namespace xch;

namespace {

bool is_identity(const SparseMatrix& m) { return m == SparseMatrix::identity(m.rows()); }

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("Hochschild and bar boundaries on small tensors") {
    const auto u = catalog::U2();
    // e11 (x) e12 has index 0 * 3 + 1.
    CHECK(hochschild_boundary(u.mul, 1).apply(unit_vector(1)) == unit_vector(1));
    CHECK(bar_boundary(u.mul, 1).apply(unit_vector(1)) == unit_vector(1));
    // e12 (x) e11: b gives 0 - e12, b' gives 0.
    CHECK(hochschild_boundary(u.mul, 1).apply(unit_vector(3)) == scaled(unit_vector(1), Rational(-1)));
    CHECK(bar_boundary(u.mul, 1).apply(unit_vector(3)).empty());

    const auto k = catalog::K1();
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(hochschild_boundary(k.mul, n).is_zero() == (n % 2 == 1));
      CHECK(bar_boundary(k.mul, n).apply(unit_vector(0)) == (n % 2 == 1 ? unit_vector(0) : SparseVector{}));
    }
    CHECK(bar_boundary(catalog::Z2().mul, 2).is_zero());
    CHECK(hochschild_boundary(catalog::N1().mul, 3).is_zero());
  }

  TEST_CASE("boundaries square to zero") {
    for (const auto& a : {catalog::U2(), catalog::D2(), catalog::Z2()}) {
      for (std::size_t n = 2; n <= 3; ++n) {
        CHECK((hochschild_boundary(a.mul, n - 1) * hochschild_boundary(a.mul, n)).is_zero());
        CHECK((bar_boundary(a.mul, n - 1) * bar_boundary(a.mul, n)).is_zero());
      }
    }
  }

  TEST_CASE("cyclic operator and norm") {
    // t(x (x) y) = -(y (x) x); index of (i, j) is 3 i + j.
    const auto t = cyclic_operator(3, 1);
    CHECK(t.apply(unit_vector(1)) == scaled(unit_vector(3), Rational(-1)));
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto tn = cyclic_operator(2, n);
      SparseMatrix power = SparseMatrix::identity(tn.rows());
      for (std::size_t i = 0; i <= n; ++i) power = tn * power;
      CHECK(is_identity(power));
      const auto one_minus_t = SparseMatrix::identity(tn.rows()) - tn;
      const auto norm = norm_operator(2, n);
      CHECK((one_minus_t * norm).is_zero());
      CHECK((norm * one_minus_t).is_zero());
    }
  }

  TEST_CASE("every catalog complex is a complex") {
    for (const auto& x : catalog::crossed_modules()) {
      for (Flavor f : {Flavor::C, Flavor::Cbar, Flavor::CC2, Flavor::CC}) {
        const auto c = xmod_complex(x, f, 4);
        CHECK_MESSAGE(check_complex(c).ok(), x.name << " " << flavor_name(f));
        CHECK(estimate_dimension(x, f, 4) == *std::max_element(c.dims.begin(), c.dims.end()));
      }
    }
  }

  TEST_CASE("cyclic complex of the ground field") {
    const auto c = algebra_complex(catalog::K1(), Flavor::CC, 4);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(c.dims[n] == n + 1);
  }

  TEST_CASE("CC2 is a subcomplex of CC") {
    const auto x = catalog::identity_U2();
    const auto cc2 = xmod_complex(x, Flavor::CC2, 3);
    const auto cc = xmod_complex(x, Flavor::CC, 3);
    CHECK(check_chain_map(cell_inclusion(cc2, cc), cc2, cc).ok());
    const auto ses = connes_ses(cc2, cc);
    CHECK(check_ses(ses).ok());
    for (std::size_t n = 0; n <= 3; ++n) CHECK(ses.right.dims[n] == (n >= 2 ? cc.dims[n - 2] : 0));
  }

  TEST_CASE("kernels and cokernels") {
    const auto a = catalog::U2();
    const auto c = algebra_complex(a, Flavor::CC, 3);
    const auto id = identity_map(c);
    const auto k = kernel_complex(id, c);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(k.complex.dims[n] == 0);
    const auto q = cokernel_complex(id, c);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(q.complex.dims[n] == 0);

    // Projection to A / A = 0 has the whole complex as kernel.
    const auto z = algebra_complex(zero_algebra(), Flavor::CC, 3);
    ChainMap to_zero;
    for (std::size_t n = 0; n <= 3; ++n) to_zero.maps.push_back(SparseMatrix(0, c.dims[n]));
    const auto whole = kernel_complex(to_zero, c);
    CHECK(whole.complex.dims == c.dims);
    CHECK(check_complex(whole.complex).ok());
    CHECK(check_chain_map(whole.inclusion, whole.complex, c).ok());
  }

  TEST_CASE("shift") {
    const auto c = algebra_complex(catalog::K1(), Flavor::CC, 3);
    const auto s = shift_complex(c, 2);
    CHECK(s.dims[0] == 0);
    CHECK(s.dims[1] == 0);
    CHECK(s.dims[2] == c.dims[0]);
    CHECK(s.dims[3] == c.dims[1]);
    CHECK(check_complex(s).ok());
  }

  TEST_CASE("base quotient") {
    const auto z = catalog::zero_U2();
    const auto ses = base_quotient_ses(z, Flavor::CC, 3);
    CHECK(check_ses(ses).ok());
    for (std::size_t n = 0; n <= 3; ++n) CHECK(ses.right.dims[n] == 0);
    const auto bg = beta_gamma(catalog::bimodule_N1_K1(), 3);
    CHECK(check_ses(bg.beta_ses).ok());
    CHECK(check_ses(bg.gamma_ses).ok());
    CHECK(check_ses(bg.shift_ses).ok());
  }

  TEST_CASE("induced maps along the base inclusion") {
    const auto x = catalog::identity_U2();
    // (0, 1_A) : (0, A, 0) -> x
    XModMorphism m{"base", make_zero_xmod(x.A), x, SparseMatrix(x.R.dim(), 0), SparseMatrix::identity(x.A.dim())};
    CHECK(validate_morphism(m).ok());
    for (Flavor f : {Flavor::C, Flavor::Cbar, Flavor::CC2, Flavor::CC}) {
      const auto src = xmod_complex(m.source, f, 3);
      const auto tgt = xmod_complex(m.target, f, 3);
      const auto map = induced_chain_map(nerve_morphism(m, 3), src, tgt);
      CHECK(check_chain_map(map, src, tgt).ok());
    }
  }

  TEST_CASE("chain map check catches a bad map") {
    const auto c = algebra_complex(catalog::K1(), Flavor::C, 2);
    ChainMap f = identity_map(c);
    for (auto& m : f.maps) m = Rational(2) * m;
    CHECK(check_chain_map(f, c, c).ok());
    // b from degree 2 to 1 is the identity on K1.
    f.maps[1] = SparseMatrix(c.dims[1], c.dims[1]);
    CHECK_FALSE(check_chain_map(f, c, c).ok());
  }
}
