#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "segre/errors.hpp"

namespace segre {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the conventions C(a,0)=1 for every integer a
/// and C(a,b)=0 when b<0 or b>a>=0.
inline BigInt binomial(long long a, long long b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a >= 0 && b > a) return 0;
  if (a < 0) return 0;
  BigInt num = 1;
  for (long long k = 0; k < b; ++k) {
    num *= a - k;
    num /= k + 1;  // exact at every step
  }
  return num;
}

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt acc = 1, b = base;
  while (exp) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

/// Integer polynomial in the hyperplane class H, truncated at H^n. Supports
/// the operational calculus on A_*(P^n): products, truncated inverses of
/// unit series, powers with negative exponents.
class HSeries {
public:
  HSeries(int ambient, std::vector<BigInt> coeffs)
      : n_(ambient), c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(n_) + 1);
  }

  static HSeries one(int ambient) { return constant(ambient, 1); }

  static HSeries constant(int ambient, BigInt v) {
    std::vector<BigInt> c(static_cast<std::size_t>(ambient) + 1);
    c[0] = std::move(v);
    return HSeries(ambient, std::move(c));
  }

  /// 1 + e*H.
  static HSeries linear(int ambient, const BigInt& e) {
    std::vector<BigInt> c(static_cast<std::size_t>(ambient) + 1);
    c[0] = 1;
    if (ambient >= 1) c[1] = e;
    return HSeries(ambient, std::move(c));
  }

  int ambient() const noexcept { return n_; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  const BigInt& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  HSeries operator+(const HSeries& o) const {
    require_same(o);
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
    return HSeries(n_, std::move(c));
  }

  HSeries operator-(const HSeries& o) const {
    require_same(o);
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
    return HSeries(n_, std::move(c));
  }

  HSeries operator*(const HSeries& o) const {
    require_same(o);
    std::vector<BigInt> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < c_.size(); ++j) {
        if (o.c_[j] != 0) c[i + j] += c_[i] * o.c_[j];
      }
    }
    return HSeries(n_, std::move(c));
  }

  /// Truncated inverse; requires constant term +-1 so integrality holds.
  HSeries inverse() const {
    if (c_[0] != 1 && c_[0] != -1) {
      throw ValueError("series inverse requires constant term 1 or -1");
    }
    std::vector<BigInt> r(c_.size());
    r[0] = c_[0];  // +-1 is its own inverse
    for (std::size_t k = 1; k < c_.size(); ++k) {
      BigInt acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
      r[k] = -acc * c_[0];
    }
    return HSeries(n_, std::move(r));
  }

  HSeries pow(long long k) const {
    HSeries base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                                 : static_cast<unsigned long long>(k);
    HSeries acc = one(n_);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const HSeries& a, const HSeries& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

private:
  void require_same(const HSeries& o) const {
    if (n_ != o.n_) throw ValueError("ambient dimension mismatch");
  }

  int n_;
  std::vector<BigInt> c_;
};

/// An element of A_*(P^n): the integer combination sum a_i [P^i], stored as
/// the coefficient vector (a_0, ..., a_n). Arbitrary-precision throughout.
class ChowClass {
public:
  explicit ChowClass(int ambient)
      : n_(ambient), a_(static_cast<std::size_t>(ambient) + 1) {
    if (ambient < 0) throw ValueError("ambient dimension must be >= 0");
  }

  ChowClass(int ambient, std::vector<BigInt> coeffs) : ChowClass(ambient) {
    if (coeffs.size() != a_.size()) {
      throw ValueError("coefficient vector must have length n+1");
    }
    a_ = std::move(coeffs);
  }

  static ChowClass zero(int ambient) { return ChowClass(ambient); }

  /// m * [P^i].
  static ChowClass multiple(int ambient, int i, BigInt m) {
    ChowClass c(ambient);
    if (i < 0 || i > ambient) throw ValueError("dimension out of range");
    c.a_[static_cast<std::size_t>(i)] = std::move(m);
    return c;
  }

  static ChowClass fundamental(int ambient) {
    return multiple(ambient, ambient, 1);
  }

  int ambient() const noexcept { return n_; }
  const std::vector<BigInt>& coeffs() const noexcept { return a_; }
  const BigInt& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const BigInt& v : a_) {
      if (v != 0) return false;
    }
    return true;
  }

  ChowClass operator+(const ChowClass& o) const {
    require_same(o);
    ChowClass r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  ChowClass operator-(const ChowClass& o) const {
    require_same(o);
    ChowClass r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  ChowClass operator-() const { return scaled(-1); }

  ChowClass scaled(const BigInt& m) const {
    ChowClass r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * m;
    return r;
  }

  friend bool operator==(const ChowClass& x, const ChowClass& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend bool operator!=(const ChowClass& x, const ChowClass& y) {
    return !(x == y);
  }

  std::string to_string() const {
    std::string out;
    for (int i = n_; i >= 0; --i) {
      const BigInt& v = a_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (out.empty()) {
        out += v < 0 ? "-" : "";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      BigInt mag = v < 0 ? BigInt(-v) : v;
      out += mag.str() + " [P^" + std::to_string(i) + "]";
    }
    return out.empty() ? "0" : out;
  }

private:
  void require_same(const ChowClass& o) const {
    if (n_ != o.n_) throw ValueError("ambient dimension mismatch");
  }

  int n_;
  std::vector<BigInt> a_;
};

/// Caps a class with a series in the hyperplane class: H lowers dimension
/// by one; terms that would drop below dimension zero vanish.
inline ChowClass cap(const ChowClass& alpha, const HSeries& f) {
  if (alpha.ambient() != f.ambient()) {
    throw ValueError("ambient dimension mismatch");
  }
  const int n = alpha.ambient();
  ChowClass r(n);
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    BigInt acc = 0;
    for (int t = 0; i + t <= n; ++t) {
      if (f[t] != 0 && alpha[i + t] != 0) acc += f[t] * alpha[i + t];
    }
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return ChowClass(n, std::move(out));
}

/// Aluffi's tensor action: each codimension-j part is multiplied by the
/// truncated series (1 + e H)^{-j}, the twist of the class by O(eH).
inline ChowClass tensor_line(const ChowClass& alpha, const BigInt& e) {
  const int n = alpha.ambient();
  ChowClass r = ChowClass::zero(n);
  HSeries inv = HSeries::linear(n, e).inverse();
  HSeries factor = HSeries::one(n);
  for (int j = 0; j <= n; ++j) {
    const BigInt& aj = alpha[n - j];  // dimension n-j, codimension j
    if (aj != 0) {
      ChowClass part = cap(ChowClass::multiple(n, n - j, aj), factor);
      r = r + part;
    }
    factor = factor * inv;
  }
  return r;
}

enum class DualVariant { lower, upper };

/// Sign flip of the odd-dimensional components; the upper variant applies a
/// further global sign (-1)^n for the ambient P^n.
inline ChowClass dual(const ChowClass& alpha,
                      DualVariant variant = DualVariant::lower) {
  const int n = alpha.ambient();
  std::vector<BigInt> out(alpha.coeffs());
  for (int i = 1; i <= n; i += 2) out[static_cast<std::size_t>(i)] *= -1;
  ChowClass r(n, std::move(out));
  if (variant == DualVariant::upper && (n & 1)) r = -r;
  return r;
}

/// Segre class of the scheme with ideal (D) * (R), where D is a degree-delta
/// hypersurface and s(R, P^n) is given: ([D] + c(O(-D)) cap s(R)) twisted
/// by O(D).
inline ChowClass residual_segre(int ambient, const BigInt& delta,
                                const ChowClass& s_residual) {
  if (s_residual.ambient() != ambient) {
    throw ValueError("ambient dimension mismatch");
  }
  if (delta < 0) throw ValueError("divisor degree must be >= 0");
  ChowClass divisor =
      ambient >= 1 ? ChowClass::multiple(ambient, ambient - 1, delta)
                   : ChowClass::zero(ambient);
  ChowClass bracket =
      divisor + cap(s_residual, HSeries::linear(ambient, -delta));
  return tensor_line(bracket, delta);
}

/// Segre class of a proper complete intersection of hypersurfaces of the
/// given degrees: (prod d_i) [P^{n-r}] capped with prod (1 + d_i H)^{-1}.
inline ChowClass ci_segre(int ambient, const std::vector<BigInt>& degrees) {
  const int r = static_cast<int>(degrees.size());
  if (r > ambient) {
    throw ValueError("more hypersurfaces than the ambient dimension");
  }
  BigInt prod = 1;
  HSeries series = HSeries::one(ambient);
  for (const BigInt& d : degrees) {
    prod *= d;
    series = series * HSeries::linear(ambient, d).inverse();
  }
  return cap(ChowClass::multiple(ambient, ambient - r, prod), series);
}

/// Degree of the zero-dimensional component.
inline BigInt integral(const ChowClass& alpha) { return alpha[0]; }

/// c(TP^n) cap [P^n], i.e. (1+H)^{n+1} truncated.
inline ChowClass csm_projective_space(int ambient) {
  return cap(ChowClass::fundamental(ambient),
             HSeries::linear(ambient, 1).pow(ambient + 1));
}

}  // namespace segre
