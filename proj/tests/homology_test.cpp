#include <doctest.h>

#include "xch/catalog.hpp"
#include "xch/error.hpp"
#include "xch/homology.hpp"

using namespace xch;

namespace {

ChainComplex make_complex(std::vector<std::size_t> dims, std::vector<SparseMatrix> upper) {
  ChainComplex c;
  c.hi = dims.size() - 1;
  c.diffs.push_back(SparseMatrix(0, dims[0]));
  for (auto& d : upper) c.diffs.push_back(std::move(d));
  c.dims = std::move(dims);
  return c;
}

SparseMatrix one() { return SparseMatrix::identity(1); }

// 0 -> (k in degree 0) -> (k -1-> k) -> (k in degree 1) -> 0
ComplexSES interval_ses() {
  ComplexSES s;
  s.left = make_complex({1, 0, 0}, {SparseMatrix(1, 0), SparseMatrix(0, 0)});
  s.mid = make_complex({1, 1, 0}, {one(), SparseMatrix(1, 0)});
  s.right = make_complex({0, 1, 0}, {SparseMatrix(0, 1), SparseMatrix(1, 0)});
  s.inj.maps = {one(), SparseMatrix(1, 0), SparseMatrix(0, 0)};
  s.proj.maps = {SparseMatrix(0, 1), one(), SparseMatrix(0, 0)};
  return s;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("small complexes") {
    const auto acyclic = make_complex({1, 1, 0}, {one(), SparseMatrix(1, 0)});
    CHECK(Homology(acyclic, 0).dim() == 0);
    CHECK(Homology(acyclic, 1).dim() == 0);
    const auto trivial = make_complex({1, 1, 0}, {SparseMatrix(1, 1), SparseMatrix(1, 0)});
    CHECK(Homology(trivial, 0).dim() == 1);
    CHECK(Homology(trivial, 1).dim() == 1);
    CHECK(Homology(zero_complex(3), 2).dim() == 0);
  }

  TEST_CASE("window") {
    const auto c = zero_complex(2);
    CHECK_THROWS_AS(Homology(c, 2), WindowError);
    CHECK_NOTHROW(Homology(c, 1));
  }

  TEST_CASE("rank formula") {
    for (const auto& x : catalog::crossed_modules()) {
      const auto c = xmod_complex(x, Flavor::CC, 3);
      for (std::size_t n = 0; n < 3; ++n) {
        CHECK(Homology(c, n).dim() == c.dims[n] - rank(c.diffs[n]) - rank(c.diffs[n + 1]));
      }
    }
  }

  TEST_CASE("coordinates of cycles") {
    const auto trivial = make_complex({2, 0}, {SparseMatrix(0, 2)});
    const Homology h(trivial, 0);
    CHECK(h.dim() == 2);
    const SparseVector v{{0, Rational(3)}, {1, Rational(-1)}};
    const auto coords = h.coordinates(v);
    SparseVector back;
    for (const auto& t : coords) back = axpy(back, t.value, h.representatives()[t.index]);
    CHECK(back == v);
    const auto acyclic = make_complex({1, 1, 0}, {one(), SparseMatrix(1, 0)});
    CHECK(Homology(acyclic, 0).is_boundary(unit_vector(0)));
    CHECK_THROWS_AS(Homology(acyclic, 1).coordinates(unit_vector(0)), InternalError);
  }

  TEST_CASE("induced maps") {
    const auto c = xmod_complex(catalog::identity_U2(), Flavor::C, 3);
    const Homology h(c, 1);
    const Homology h0(c, 0);
    const auto id = induced_on_homology(identity_map(c), 0, h0, h0);
    CHECK(id == SparseMatrix::identity(h0.dim()));
    const auto z = zero_complex(3);
    ChainMap to_zero;
    for (std::size_t n = 0; n <= 3; ++n) to_zero.maps.push_back(SparseMatrix(0, c.dims[n]));
    CHECK(induced_on_homology(to_zero, 1, h, Homology(z, 1)).rows() == 0);
  }

  TEST_CASE("exactness of short sequences") {
    const auto ok = verify_exact("iso", {"0", "V", "V", "0"}, {0, 2, 2, 0},
                                 {SparseMatrix(2, 0), SparseMatrix::identity(2), SparseMatrix(0, 2)});
    CHECK(ok.exact());
    CHECK(ok.positions.size() == 2);
    const auto bad = verify_exact("gap", {"0", "k", "0", "k", "0"}, {0, 1, 0, 1, 0},
                                  {SparseMatrix(1, 0), SparseMatrix(0, 1), SparseMatrix(1, 0), SparseMatrix(0, 1)});
    CHECK_FALSE(bad.exact());
    CHECK_FALSE(bad.positions[0].exact);
    CHECK(bad.positions[1].exact);
    CHECK_FALSE(bad.positions[2].exact);
    const auto nonzero = verify_exact("square", {"k", "k", "k"}, {1, 1, 1}, {one(), one()});
    CHECK_FALSE(nonzero.positions[0].composition_zero);
    CHECK_THROWS_AS(verify_exact("shape", {"k", "k"}, {1, 2}, {one()}), MathError);
  }

  TEST_CASE("connecting map of an interval") {
    const auto s = interval_ses();
    CHECK(check_ses(s).ok());
    const Homology r1(s.right, 1);
    const Homology l0(s.left, 0);
    const auto delta = connecting_map(s, 1, r1, l0);
    CHECK(rank(delta) == 1);
    const SequenceNames names{[](std::size_t n) { return "H" + std::to_string(n) + "(L)"; },
                              [](std::size_t n) { return "H" + std::to_string(n) + "(M)"; },
                              [](std::size_t n) { return "H" + std::to_string(n) + "(R)"; }};
    const auto les = long_exact_sequence(s, 1, names);
    CHECK(les.labels.front() == "H1(L)");
    CHECK(les.labels.back() == "0");
    CHECK(verify_long_exact("interval", les).exact());
  }

  TEST_CASE("connecting map with a zero right term") {
    const auto c = xmod_complex(catalog::zero_K1(), Flavor::CC, 3);
    ComplexSES s{c, c, zero_complex(3), identity_map(c), {}};
    for (std::size_t n = 0; n <= 3; ++n) s.proj.maps.push_back(SparseMatrix(0, c.dims[n]));
    CHECK(check_ses(s).ok());
    const Homology r(s.right, 2);
    const Homology l(s.left, 1);
    CHECK(connecting_map(s, 2, r, l).cols() == 0);
    const SequenceNames names{[](std::size_t) { return "L"; }, [](std::size_t) { return "M"; },
                              [](std::size_t) { return "R"; }};
    CHECK(verify_long_exact("split", long_exact_sequence(s, 2, names)).exact());
  }

  TEST_CASE("homology does not depend on coordinate order") {
    const auto c = xmod_complex(catalog::identity_U2(), Flavor::CC, 3);
    // Reverse the coordinates of degree 1.
    const std::size_t d = c.dims[1];
    std::vector<Triplet> perm;
    for (std::size_t i = 0; i < d; ++i) perm.push_back({i, d - 1 - i, Rational(1)});
    const auto p = SparseMatrix::from_triplets(d, d, perm);
    ChainComplex q = c;
    q.diffs[1] = c.diffs[1] * p;
    q.diffs[2] = p * c.diffs[2];
    CHECK(check_complex(q).ok());
    for (std::size_t n = 0; n < 3; ++n) CHECK(Homology(q, n).dim() == Homology(c, n).dim());
  }
}
