#include <doctest.h>

#include "xch/catalog.hpp"
#include "xch/error.hpp"
#include "xch/nerve.hpp"

using namespace xch;

TEST_SUITE("nerve") {
  TEST_CASE("level dimensions") {
    const auto s = nerve(catalog::identity_K1(), 3);
    CHECK(s.levels[3].dim() == 4);
    const auto u = nerve(catalog::inclusion_U2(), 2);
    CHECK(u.levels[0].dim() == 3);
    CHECK(u.levels[1].dim() == 4);
    CHECK(u.levels[2].dim() == 5);
  }

  TEST_CASE("low faces and degeneracy") {
    // Level 1 basis: R block, then A.
    const auto x = catalog::identity_U2();
    const auto s = nerve(x, 2);
    const auto& d0 = s.faces[1][0];
    const auto& d1 = s.faces[1][1];
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(d0.apply(unit_vector(k)).empty());                  // d_0 (r, 0) = 0
      CHECK(d1.apply(unit_vector(k)) == x.rho.apply(unit_vector(k)));  // d_1 (r, 0) = rho(r)
      CHECK(d0.apply(unit_vector(3 + k)) == unit_vector(k));    // d_0 (0, a) = a
      CHECK(d1.apply(unit_vector(3 + k)) == unit_vector(k));
      CHECK(s.degeneracies[0][0].apply(unit_vector(k)) == unit_vector(3 + k));  // s_0 a = (0, a)
    }
  }

  TEST_CASE("simplicial identities and homomorphisms") {
    for (const auto& x : catalog::crossed_modules()) {
      const auto s = nerve(x, 4);
      CHECK_MESSAGE(validate_simplicial(s).ok(), x.name);
      for (const auto& level : s.levels) CHECK(validate_algebra(level).ok());
      CHECK(validate_augmentation(augmented_nerve(x, 3)).ok());
    }
  }

  TEST_CASE("Moore complex of a nerve") {
    for (const auto& x : catalog::crossed_modules()) {
      const auto s = nerve(x, 4);
      const auto m = moore(s, 4);
      CHECK(m.dim(0) == x.A.dim());
      CHECK(m.dim(1) == x.R.dim());
      for (std::size_t n = 2; n <= 4; ++n) CHECK_MESSAGE(m.dim(n) == 0, x.name);
      // d_1 on N_1 ~ R is rho up to the change of basis.
      CHECK(rank(m.boundaries[1]) == rank(x.rho));
      CHECK(image(m.bases[0] * m.boundaries[1]) == image(x.rho));
    }
  }

  TEST_CASE("constant simplicial algebra") {
    const auto s = constant_simplicial(catalog::U2(), 3);
    CHECK(validate_simplicial(s).ok());
    const auto m = moore(s, 3);
    for (std::size_t n = 1; n <= 3; ++n) CHECK(m.dim(n) == 0);
  }

  TEST_CASE("homotopy groups") {
    const auto b = nerve(catalog::bimodule_N1_K1(), 3);
    CHECK(homotopy_group(b, 0).dim == 1);  // Coker rho = K1
    CHECK(homotopy_group(b, 1).dim == 1);  // Ker rho = N1
    CHECK(homotopy_group(b, 2).dim == 0);
    const auto z = nerve(catalog::zero_U2(), 2);
    CHECK(homotopy_group(z, 0).dim == 3);
    CHECK(homotopy_group(z, 1).dim == 0);
    CHECK_THROWS_AS(homotopy_group(z, 2), WindowError);
  }

  TEST_CASE("augmented nerve of an inclusion is aspherical") {
    for (const auto& x : {catalog::inclusion_U2(), catalog::inclusion_D2(), catalog::identity_U2(), catalog::zero_Z2()}) {
      const auto s = augmented_nerve(x, 4);
      for (int n = -1; n <= 3; ++n) CHECK_MESSAGE(homotopy_group(s, n).dim == 0, x.name << " pi_" << n);
    }
    // Not aspherical when rho has a kernel.
    const auto s = augmented_nerve(catalog::bimodule_N1_K1(), 3);
    CHECK(homotopy_group(s, 1).dim == 1);
  }

  TEST_CASE("multiplication on higher homotopy vanishes") {
    const auto s = nerve(catalog::bimodule_N1_K1(), 3);
    const auto pi1 = homotopy_group(s, 1);
    for (const auto& u : pi1.representatives) {
      for (const auto& v : pi1.representatives) CHECK(s.levels[1].multiply(u, v).empty());
    }
  }
}
