#pragma once

#include <cstdint>
#include <string>

#include "fusionlab/errors.hpp"

namespace fusionlab {

using Residue = std::uint32_t;

/// A prime modulus. Construction validates primality.
class Prime {
 public:
  explicit Prime(std::uint32_t value) : value_(value) {
    if (!is_prime(value)) {
      throw InvalidInput(std::to_string(value) + " is not a prime");
    }
    if (value >= (1u << 16)) {
      throw InvalidInput("prime " + std::to_string(value) + " exceeds the supported field size");
    }
  }

  std::uint32_t value() const { return value_; }
  operator std::uint32_t() const { return value_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t value_;
};

namespace fp {

inline Residue reduce(std::int64_t v, Prime p) {
  const std::int64_t m = static_cast<std::int64_t>(p.value());
  std::int64_t r = v % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}

inline Residue add(Residue a, Residue b, Prime p) {
  Residue s = a + b;
  return s >= p.value() ? s - p.value() : s;
}

inline Residue sub(Residue a, Residue b, Prime p) {
  return a >= b ? a - b : a + p.value() - b;
}

inline Residue neg(Residue a, Prime p) { return a == 0 ? 0 : p.value() - a; }

inline Residue mul(Residue a, Residue b, Prime p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p.value());
}

inline Residue pow(Residue a, std::uint64_t e, Prime p) {
  Residue result = 1 % p.value();
  Residue base = a % p.value();
  while (e > 0) {
    if (e & 1u) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1u;
  }
  return result;
}

/// Multiplicative inverse of a nonzero residue.
inline Residue inv(Residue a, Prime p) {
  if (a % p.value() == 0) throw InvalidInput("zero has no inverse mod " + std::to_string(p.value()));
  return pow(a, p.value() - 2, p);
}

}  // namespace fp
}  // namespace fusionlab
