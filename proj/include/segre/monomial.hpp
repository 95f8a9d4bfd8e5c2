#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

#include "segre/errors.hpp"

namespace segre {

/// Hard cap on ring variables. All target workloads live in at most P^7,
/// and the counting rings add one auxiliary variable, so 8 suffices.
inline constexpr int kMaxVars = 8;

/// Exponent vector with cached total degree. Exponents are 16-bit;
/// overflowing that range is a hard error, not a wrap.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint8_t nvars = 0;

  static Monomial one(int n) {
    Monomial m;
    m.nvars = static_cast<std::uint8_t>(n);
    return m;
  }

  static Monomial var(int n, int i, std::uint16_t exp = 1) {
    Monomial m = one(n);
    m.e[static_cast<std::size_t>(i)] = exp;
    m.deg = exp;
    return m;
  }

  bool is_one() const noexcept { return deg == 0; }

  std::uint16_t operator[](int i) const noexcept {
    return e[static_cast<std::size_t>(i)];
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars; ++i) {
      std::uint32_t s = static_cast<std::uint32_t>(r.e[i]) + o.e[i];
      if (s > 0xFFFF) throw ValueError("monomial exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    r.deg += o.deg;
    return r;
  }

  bool divides(const Monomial& o) const noexcept {
    if (deg > o.deg) return false;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }

  /// Quotient o / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& o) const noexcept {
    Monomial r = one(nvars);
    for (int i = 0; i < nvars; ++i) {
      r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
    }
    r.deg = o.deg - deg;
    return r;
  }

  Monomial lcm_with(const Monomial& o) const noexcept {
    Monomial r = one(nvars);
    std::uint32_t d = 0;
    for (int i = 0; i < nvars; ++i) {
      r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  bool coprime_with(const Monomial& o) const noexcept {
    for (int i = 0; i < nvars; ++i) {
      if (e[i] != 0 && o.e[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars == b.nvars && a.deg == b.deg &&
           std::memcmp(a.e.data(), b.e.data(),
                       sizeof(std::uint16_t) * a.nvars) == 0;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept {
    return !(a == b);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ m.deg;
    for (int i = 0; i < m.nvars; ++i) {
      h = (h ^ m.e[i]) * 0x100000001B3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

enum class OrderKind { grevlex, lex, block };

/// Total order on monomials compatible with multiplication.
///  - grevlex: total degree, ties by reverse lexicography on negated exponents.
///  - lex: plain lexicographic on the variable list.
///  - block(k): grevlex on the first k variables, then grevlex on the rest;
///    an elimination order for the leading block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder elimination_block(int k) {
    return {OrderKind::block, k};
  }

  /// Returns <0, 0, >0 when a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind) {
      case OrderKind::grevlex:
        return grevlex_compare(a, b, 0, a.nvars, a.deg, b.deg);
      case OrderKind::lex:
        for (int i = 0; i < a.nvars; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
      case OrderKind::block: {
        std::uint32_t da = 0, db = 0;
        for (int i = 0; i < block; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        int c = grevlex_compare(a, b, 0, block, da, db);
        if (c != 0) return c;
        return grevlex_compare(a, b, block, a.nvars, a.deg - da, b.deg - db);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) > 0;
  }

  friend bool operator==(const MonomialOrder& a,
                         const MonomialOrder& b) noexcept {
    return a.kind == b.kind && (a.kind != OrderKind::block || a.block == b.block);
  }

private:
  static int grevlex_compare(const Monomial& a, const Monomial& b, int lo,
                             int hi, std::uint32_t da,
                             std::uint32_t db) noexcept {
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
  }
};

}  // namespace segre
