#pragma once

#include <cstdint>

#include "segre/errors.hpp"

namespace segre {

/// Arithmetic in GF(p) for a prime p < 2^31. Elements are canonical
/// representatives in [0, p) stored as uint32_t.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
      throw ValueError("modulus " + std::to_string(p) + " is not prime");
    }
    if (p >= (1u << 31)) {
      throw ValueError("modulus must be below 2^31");
    }
  }

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::uint64_t v) const noexcept {
    return static_cast<std::uint32_t>(v % p_);
  }

  /// Reduce a signed integer to its canonical representative.
  std::uint32_t reduce_signed(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const noexcept {
    return a == 0 ? 0 : p_ - a;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % p_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw ValueError("division by zero in GF(p)");
    // Extended Euclid; p prime guarantees a unit.
    long long t = 0, new_t = 1;
    long long r = p_, new_r = a;
    while (new_r != 0) {
      long long q = r / new_r;
      long long tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ != b.p_;
  }

  static bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }

private:
  std::uint32_t p_;
};

}  // namespace segre
