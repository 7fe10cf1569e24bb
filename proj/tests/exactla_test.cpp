#include <doctest.h>

#include <random>

#include "xch/error.hpp"
#include "xch/field.hpp"
#include "xch/linalg.hpp"

using namespace xch;

namespace {

SparseMatrix dense(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  return SparseMatrix::from_dense(rows, cols);
}

SparseVector vec(std::vector<Rational> v) { return from_dense(v); }

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<int> val(-3, 3);
  std::vector<Triplet> ts;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (coin(rng) < density) ts.push_back({i, j, Rational(val(rng), 1 + coin(rng) % 3)});
    }
  }
  return SparseMatrix::from_triplets(rows, cols, ts);
}

}  // namespace

TEST_SUITE("exactla") {
  TEST_CASE("rank examples") {
    CHECK(rank(dense({{1, 2}, {2, 4}}, 2)) == 1);
    CHECK(rank(SparseMatrix(3, 5)) == 0);
    CHECK(rank(SparseMatrix(0, 4)) == 0);
    CHECK(rank(dense({{Rational(1, 2), 0, 1}, {0, 1, 0}, {1, 2, 2}}, 3)) == 2);
    CHECK(rank(SparseMatrix::identity(7)) == 7);
  }

  TEST_CASE("kernel and image examples") {
    CHECK(kernel(SparseMatrix::identity(3)).dim() == 0);
    CHECK(kernel(SparseMatrix(2, 3)) == Subspace::full(3));
    CHECK(kernel(dense({{1, 2}, {2, 4}}, 2)) == Subspace::span(2, {vec({-2, 1})}));
    CHECK(image(SparseMatrix::identity(4)) == Subspace::full(4));
    CHECK(image(SparseMatrix(3, 2)).dim() == 0);
    CHECK(image(dense({{1, 2}, {2, 4}}, 2)) == Subspace::span(2, {vec({1, 2})}));
  }

  TEST_CASE("quotient presentation") {
    auto q = quotient_presentation(3, Subspace::span(3, {vec({1, 1, 0})}));
    CHECK(q.dim == 2);
    CHECK(q.projection * q.section == SparseMatrix::identity(2));
    CHECK(q.projection.apply(vec({1, 1, 0})).empty());

    auto small = quotient_presentation(2, Subspace::span(2, {vec({1, 0})}));
    CHECK(small.dim == 1);
    auto all = quotient_presentation(3, Subspace::full(3));
    CHECK(all.dim == 0);
    CHECK(all.projection.rows() == 0);
    CHECK(all.projection.cols() == 3);
  }

  TEST_CASE("rank plus nullity equals columns") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 30;
      const std::size_t cols = 1 + rng() % 30;
      const auto m = random_matrix(rng, rows, cols, 15 + trial);
      const auto r = rank(m);
      CHECK(r + kernel(m).dim() == cols);
      CHECK(kernel_basis(m).size() == cols - r);
      for (const auto& z : kernel_basis(m)) CHECK(m.apply(z).empty());
      CHECK(image(m).dim() == r);
      CHECK(rank(m.transpose()) == r);
    }
  }

  TEST_CASE("dense and sparse paths agree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      // 80 x 70 goes through Markowitz, its 40 x 35 corner through the dense kernel.
      const auto m = random_matrix(rng, 80, 70, 5);
      std::vector<Triplet> corner;
      for (const auto& t : m.triplets()) {
        if (t.row < 40 && t.col < 35) corner.push_back(t);
      }
      const auto c = SparseMatrix::from_triplets(40, 35, corner);
      const auto big = vstack(hstack(c, SparseMatrix(40, 35)), hstack(SparseMatrix(40, 35), c));
      CHECK(rank(big) == 2 * rank(c));
    }
  }

  TEST_CASE("rank mod p") {
    CHECK(rank_mod_p(dense({{1, 2}, {2, 4}}, 2), 1000003) == 1);
    CHECK(rank_mod_p(dense({{2, 0}, {0, 3}}, 2), 2) == 1);
    CHECK_THROWS_AS(rank_mod_p(dense({{Rational(1, 5)}}, 1), 5), FieldError);
    std::mt19937_64 rng(3);
    const auto p = random_prime(rng);
    CHECK(p > (std::uint64_t{1} << 59));
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_matrix(rng, 25, 20, 20);
      CHECK(rank_mod_p(m, p) == rank(m));
    }
  }

  TEST_CASE("echelon basis tags") {
    EchelonBasis b(3);
    CHECK(b.insert(vec({1, 1, 0}), unit_vector(0)));
    CHECK(b.insert(vec({0, 1, 1}), unit_vector(1)));
    CHECK_FALSE(b.insert(vec({1, 2, 1}), unit_vector(2)));
    auto red = b.reduce(vec({2, 3, 1}));
    CHECK(red.remainder.empty());
    CHECK(red.tag == vec({2, 1}));
    CHECK_FALSE(b.contains(vec({0, 0, 1})));
  }

  TEST_CASE("solver and inverse") {
    const auto m = dense({{2, 1}, {1, 1}}, 2);
    LinearSolver s(m);
    auto x = s.solve(vec({3, 2}));
    REQUIRE(x);
    CHECK(m.apply(*x) == vec({3, 2}));
    CHECK_FALSE(LinearSolver(dense({{1, 2}, {2, 4}}, 2)).solve(vec({1, 0})));
    CHECK(inverse(m) * m == SparseMatrix::identity(2));
    CHECK_THROWS_AS(inverse(dense({{1, 2}, {2, 4}}, 2)), MathError);
  }

  TEST_CASE("subquotient") {
    auto sq = subquotient(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})}, {vec({1, 0, 0})});
    CHECK(sq.dim == 1);
    CHECK(sq.representatives.front() == vec({0, 1, 0}));
  }

  TEST_CASE("kron and stacking") {
    const auto a = dense({{1, 2}, {3, 4}}, 2);
    const auto i = SparseMatrix::identity(2);
    CHECK(kron(i, a).rows() == 4);
    CHECK(rank(kron(a, a)) == 4);
    CHECK(kron_power(a, 3) == kron(a, kron(a, a)));
    CHECK(kron_power(a, 0) == SparseMatrix::identity(1));
    CHECK(hstack(a, i).cols() == 4);
    CHECK(vstack(a, i).rows() == 4);
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK(to_string(parse_rational("+6/3")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  }
}
