#pragma once

#include <cstdint>
#include <random>

#include "xch/rational.hpp"

namespace xch {

// Field adaptors for the elimination kernels. Both expose the same
// vocabulary so the kernels are written once.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return 1 / a; }
  Element from_rational(const Rational& q) const { return q; }
};

// Z/p for a prime p < 2^63.
struct PrimeField {
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t prime) : p(prime) {}

  std::uint64_t p;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Element inv(Element a) const { return pow(a, p - 2); }
  // Throws FieldError when p divides the denominator.
  Element from_rational(const Rational& q) const;
};

// A prime drawn uniformly-ish from [2^(bits-1), 2^bits) via GMP's nextprime.
std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits = 60);

}  // namespace xch
