#include <doctest.h>

#include "dense_oracle.hpp"
#include "xch/catalog.hpp"
#include "xch/theorems.hpp"

using namespace xch;

TEST_SUITE("oracle") {
  TEST_CASE("dense oracle on the ground field") {
    const auto k = catalog::K1();
    CHECK(oracle::cyclic(k, 3) == std::vector<std::size_t>{1, 0, 1, 0});
    CHECK(oracle::hochschild(k, 3) == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(oracle::bar(k, 3) == std::vector<std::size_t>{0, 0, 0, 0});
  }

  TEST_CASE("dense oracle on U2 and D2") {
    // U2 and D2 both have the Hochschild homology of k x k.
    CHECK(oracle::hochschild(catalog::U2(), 2) == std::vector<std::size_t>{2, 0, 0});
    CHECK(oracle::cyclic(catalog::U2(), 3) == std::vector<std::size_t>{2, 0, 2, 0});
    CHECK(oracle::cyclic(catalog::D2(), 3) == std::vector<std::size_t>{2, 0, 2, 0});
  }

  TEST_CASE("library agrees with the oracle") {
    for (const auto& a : {catalog::K1(), catalog::N1(), catalog::Z2(), catalog::U2(), catalog::D2()}) {
      CHECK_MESSAGE(algebra_homology(a, Flavor::C, 3) == oracle::hochschild(a, 3), a.name);
      CHECK_MESSAGE(algebra_homology(a, Flavor::CC, 3) == oracle::cyclic(a, 3), a.name);
      CHECK_MESSAGE(algebra_homology(a, Flavor::Cbar, 3) == oracle::bar(a, 3), a.name);
      // (0, A, 0) has the nerve constant at A.
      CHECK_MESSAGE(xmod_homology(make_zero_xmod(a), Flavor::CC, 3) == oracle::cyclic(a, 3), a.name);
    }
  }

  TEST_CASE("dense rank") {
    CHECK(oracle::dense_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(oracle::dense_rank({{0, 1}, {1, 0}}) == 2);
    CHECK(oracle::dense_rank({}) == 0);
  }
}
