#include "xch/operators.hpp"

#include "xch/error.hpp"

namespace xch {

std::size_t tensor_dim(std::size_t dim, std::size_t length) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < length; ++i) out *= dim;
  return out;
}

namespace {

std::vector<std::size_t> digits(std::size_t index, std::size_t dim, std::size_t length) {
  std::vector<std::size_t> out(length);
  for (std::size_t k = length; k-- > 0;) {
    out[k] = index % dim;
    index /= dim;
  }
  return out;
}

SparseMatrix boundary(const Bilinear& mul, std::size_t n, bool wrap) {
  if (n == 0) throw MathError("boundary needs n >= 1");
  const std::size_t d = mul.left_dim();
  const std::size_t src = tensor_dim(d, n + 1);
  const std::size_t dst = tensor_dim(d, n);
  std::vector<std::size_t> pow(n + 2, 1);
  for (std::size_t k = 1; k < pow.size(); ++k) pow[k] = pow[k - 1] * d;
  std::vector<Triplet> entries;
  for (std::size_t idx = 0; idx < src; ++idx) {
    const auto a = digits(idx, d, n + 1);
    std::size_t prefix = 0;
    for (std::size_t i = 0; i < n; ++i) {
      // (a_0..a_{i-1}) (a_i a_{i+1}) (a_{i+2}..a_n)
      const std::size_t tail_len = n - 1 - i;
      const std::size_t suffix = idx % pow[tail_len];
      const Rational sign = i % 2 == 0 ? 1 : -1;
      for (const auto& t : mul.on_basis(a[i], a[i + 1])) {
        entries.push_back(Triplet{(prefix * d + t.index) * pow[tail_len] + suffix, idx, sign * t.value});
      }
      prefix = prefix * d + a[i];
    }
    if (wrap) {
      const Rational sign = n % 2 == 0 ? 1 : -1;
      const std::size_t middle = (idx / d) % pow[n - 1];
      for (const auto& t : mul.on_basis(a[n], a[0])) {
        entries.push_back(Triplet{t.index * pow[n - 1] + middle, idx, sign * t.value});
      }
    }
  }
  return SparseMatrix::from_triplets(dst, src, std::move(entries));
}

}  // namespace

SparseMatrix hochschild_boundary(const Bilinear& mul, std::size_t n) { return boundary(mul, n, true); }

SparseMatrix bar_boundary(const Bilinear& mul, std::size_t n) { return boundary(mul, n, false); }

SparseMatrix cyclic_operator(std::size_t dim, std::size_t n) {
  const std::size_t size = tensor_dim(dim, n + 1);
  const std::size_t top = tensor_dim(dim, n);
  const Rational sign = n % 2 == 0 ? 1 : -1;
  std::vector<Triplet> entries;
  entries.reserve(size);
  for (std::size_t idx = 0; idx < size; ++idx) entries.push_back(Triplet{(idx % dim) * top + idx / dim, idx, sign});
  return SparseMatrix::from_triplets(size, size, std::move(entries));
}

SparseMatrix norm_operator(std::size_t dim, std::size_t n) {
  const std::size_t size = tensor_dim(dim, n + 1);
  const SparseMatrix t = cyclic_operator(dim, n);
  SparseMatrix power = SparseMatrix::identity(size);
  SparseMatrix sum = power;
  for (std::size_t k = 1; k <= n; ++k) {
    power = t * power;
    sum = sum + power;
  }
  return sum;
}

}  // namespace xch
