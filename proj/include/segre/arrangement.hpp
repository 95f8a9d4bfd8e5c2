#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segre/characteristic.hpp"
#include "segre/chow.hpp"

namespace segre {

/// Integer polynomial in one variable t, dense coefficient vector c[k] = t^k.
using TPoly = std::vector<BigInt>;

/// A projective hyperplane arrangement: integer-coefficient linear forms in
/// x_0..x_n with multiplicities. Forms are stored primitively (content 1,
/// first nonzero coefficient positive); proportional input forms merge by
/// adding multiplicities.
class Arrangement {
public:
  struct Hyperplane {
    std::vector<BigInt> form;  // length n+1
    std::uint32_t multiplicity = 1;
  };

  explicit Arrangement(int ambient) : n_(ambient) {
    if (ambient < 1) throw ValueError("arrangement ambient must be >= 1");
  }

  int ambient() const noexcept { return n_; }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hs_; }

  std::uint32_t total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const Hyperplane& h : hs_) d += h.multiplicity;
    return d;
  }

  bool is_reduced() const noexcept {
    for (const Hyperplane& h : hs_) {
      if (h.multiplicity != 1) return false;
    }
    return true;
  }

  void add(std::vector<BigInt> form, std::uint32_t multiplicity = 1) {
    if (static_cast<int>(form.size()) != n_ + 1) {
      throw ValueError("linear form has the wrong number of coefficients");
    }
    if (multiplicity < 1) throw ValueError("multiplicity must be >= 1");
    normalize(form);
    bool nonzero = false;
    for (const BigInt& c : form) nonzero = nonzero || c != 0;
    if (!nonzero) throw ValueError("zero linear form");
    for (Hyperplane& h : hs_) {
      if (h.form == form) {
        h.multiplicity += multiplicity;
        return;
      }
    }
    hs_.push_back({std::move(form), multiplicity});
  }

  /// Rank over Q of the stacked coefficient matrix of the selected forms
  /// (fraction-free Gaussian elimination; exact).
  int rank_of(std::uint32_t mask) const {
    std::vector<std::vector<BigInt>> m;
    for (std::size_t i = 0; i < hs_.size(); ++i) {
      if (mask & (1u << i)) m.push_back(hs_[i].form);
    }
    return matrix_rank(std::move(m));
  }

  bool is_essential() const {
    if (hs_.empty()) return n_ + 1 == 0;
    return rank_of((1u << hs_.size()) - 1) == n_ + 1;
  }

  static int matrix_rank(std::vector<std::vector<BigInt>> m) {
    int rank = 0;
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size());
         ++col) {
      std::size_t sel = static_cast<std::size_t>(rank);
      while (sel < m.size() && m[sel][col] == 0) ++sel;
      if (sel == m.size()) continue;
      std::swap(m[sel], m[static_cast<std::size_t>(rank)]);
      const auto& pivot_row = m[static_cast<std::size_t>(rank)];
      for (std::size_t r2 = static_cast<std::size_t>(rank) + 1; r2 < m.size();
           ++r2) {
        if (m[r2][col] == 0) continue;
        BigInt a = pivot_row[col], b = m[r2][col];
        for (std::size_t c2 = 0; c2 < cols; ++c2) {
          m[r2][c2] = m[r2][c2] * a - pivot_row[c2] * b;
        }
      }
      ++rank;
    }
    return rank;
  }

private:
  static void normalize(std::vector<BigInt>& form) {
    BigInt g = 0;
    for (const BigInt& c : form) g = boost::multiprecision::gcd(g, c);
    if (g != 0) {
      for (BigInt& c : form) c /= g;
    }
    for (const BigInt& c : form) {
      if (c != 0) {
        if (c < 0) {
          for (BigInt& v : form) v = -v;
        }
        break;
      }
    }
  }

  int n_;
  std::vector<Hyperplane> hs_;
};

/// Flats of the associated central arrangement in affine (n+1)-space, with
/// exact ranks and Mobius values.
struct IntersectionLattice {
  struct Flat {
    std::uint32_t closure = 0;  // bitmask of member hyperplanes
    int rank = 0;
    BigInt mobius = 0;
  };
  std::vector<Flat> flats;  // sorted by (rank, closure)
};

inline IntersectionLattice build_lattice(const Arrangement& arr) {
  const std::size_t d = arr.hyperplanes().size();
  if (d > 16) {
    throw ValueError("at most 16 hyperplanes are supported");
  }
  // Closure of a subset: every hyperplane whose form lies in its row span.
  auto closure_of = [&](std::uint32_t mask, int rank) {
    std::uint32_t closed = mask;
    for (std::size_t j = 0; j < d; ++j) {
      if (closed & (1u << j)) continue;
      if (arr.rank_of(mask | (1u << j)) == rank) closed |= 1u << j;
    }
    return closed;
  };

  std::map<std::uint32_t, int> seen;  // closure -> rank
  seen[0] = 0;
  std::vector<std::uint32_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t flat : frontier) {
      int rank = seen[flat];
      for (std::size_t j = 0; j < d; ++j) {
        if (flat & (1u << j)) continue;
        std::uint32_t grown = flat | (1u << j);
        std::uint32_t closed = closure_of(grown, rank + 1);
        if (!seen.contains(closed)) {
          seen[closed] = rank + 1;
          next.push_back(closed);
        }
      }
    }
    frontier = std::move(next);
  }

  IntersectionLattice lattice;
  for (const auto& [mask, rank] : seen) {
    lattice.flats.push_back({mask, rank, 0});
  }
  std::sort(lattice.flats.begin(), lattice.flats.end(),
            [](const auto& a, const auto& b) {
              return a.rank != b.rank ? a.rank < b.rank : a.closure < b.closure;
            });
  // Mobius by downward recursion from the bottom flat.
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    auto& f = lattice.flats[i];
    if (f.rank == 0) {
      f.mobius = 1;
      continue;
    }
    BigInt acc = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& g = lattice.flats[j];
      if ((g.closure & f.closure) == g.closure && g.closure != f.closure) {
        acc += g.mobius;
      }
    }
    f.mobius = -acc;
  }
  return lattice;
}

/// Characteristic polynomial of the projective arrangement: the quotient of
/// the central arrangement's polynomial sum mu(F) t^{n+1-rank F} by (t-1).
/// The empty arrangement is assigned t^n + ... + 1, so that the complement
/// P^n gets the CSM class of projective space.
inline TPoly characteristic_polynomial(const Arrangement& arr) {
  const int n = arr.ambient();
  if (arr.hyperplanes().empty()) {
    return TPoly(static_cast<std::size_t>(n) + 1, 1);
  }
  IntersectionLattice lattice = build_lattice(arr);
  TPoly central(static_cast<std::size_t>(n) + 2, 0);
  for (const auto& f : lattice.flats) {
    central[static_cast<std::size_t>(n + 1 - f.rank)] += f.mobius;
  }
  // Exact synthetic division by (t - 1).
  TPoly quotient(static_cast<std::size_t>(n) + 1, 0);
  BigInt carry = 0;
  for (int k = n + 1; k >= 1; --k) {
    carry += central[static_cast<std::size_t>(k)];
    quotient[static_cast<std::size_t>(k - 1)] = carry;
  }
  if (carry + central[0] != 0) {
    throw ConsistencyError("characteristic polynomial not divisible by t-1");
  }
  return quotient;
}

/// Poincare polynomial (-t)^n chi(-1/t); its coefficients are the Betti
/// ranks of the complement.
inline TPoly poincare_polynomial(const Arrangement& arr) {
  if (arr.hyperplanes().empty()) {
    throw ValueError("Poincare polynomial needs a nonempty arrangement");
  }
  const int n = arr.ambient();
  TPoly chi = characteristic_polynomial(arr);
  TPoly pi(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 0; j <= n; ++j) {
    BigInt v = chi[static_cast<std::size_t>(n - j)];
    pi[static_cast<std::size_t>(j)] = (j % 2 == 0) ? v : -v;
  }
  return pi;
}

/// CSM class of the complement P^n minus the arrangement: substitute
/// t -> t+1 in the characteristic polynomial and read t^i as [P^i].
inline ChowClass csm_complement(const Arrangement& arr) {
  const int n = arr.ambient();
  TPoly chi = characteristic_polynomial(arr);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    if (chi[static_cast<std::size_t>(k)] == 0) continue;
    for (int i = 0; i <= k; ++i) {
      coeffs[static_cast<std::size_t>(i)] +=
          chi[static_cast<std::size_t>(k)] * binomial(k, i);
    }
  }
  return ChowClass(n, std::move(coeffs));
}

/// Defining polynomial prod L_i^{m_i} over GF(p).
inline Polynomial arrangement_polynomial(const Arrangement& arr,
                                         const RingPtr& ring) {
  if (ring->nvars() != arr.ambient() + 1) {
    throw ValueError("ring has the wrong number of variables");
  }
  const PrimeField& F = ring->field;
  Polynomial prod = Polynomial::constant(ring, 1);
  for (const auto& h : arr.hyperplanes()) {
    std::vector<Term> ts;
    for (int i = 0; i <= arr.ambient(); ++i) {
      BigInt c = h.form[static_cast<std::size_t>(i)] %
                 static_cast<long long>(F.modulus());
      std::uint32_t cv = F.reduce_signed(static_cast<long long>(c));
      if (cv != 0) ts.push_back({Monomial::var(ring->nvars(), i), cv});
    }
    Polynomial linear = Polynomial::from_terms(ring, std::move(ts));
    if (linear.is_zero()) {
      throw ValueError("linear form vanishes modulo the chosen prime");
    }
    prod = prod * linear.pow(h.multiplicity);
  }
  return prod;
}

/// Betti ranks of the complement recovered from the Segre class of the
/// singularity subscheme of the arrangement hypersurface:
/// rk H^k = sum_{i<=k} C(k,i) (d-1)^{k-i} sigma_i, where
/// [P^n] - s(JA, P^n) = sum sigma_i [P^{n-i}] and d counts multiplicities.
inline std::vector<BigInt> betti_ranks_via_segre(
    const Arrangement& arr, const RandomPlan& plan,
    const EngineOptions& opts = {}, std::uint32_t prime = 32749) {
  if (arr.hyperplanes().empty()) {
    throw ValueError("Betti ranks need a nonempty arrangement");
  }
  const int n = arr.ambient();
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr ring = make_ring(prime, names);
  Polynomial f = arrangement_polynomial(arr, ring);
  const BigInt e = static_cast<long long>(arr.total_degree()) - 1;

  ChowClass s = arr.total_degree() == 1
                    ? ChowClass::zero(n)
                    : segre_class(jacobian_ideal(f), plan, opts);
  std::vector<BigInt> sigma(static_cast<std::size_t>(n) + 1, 0);
  sigma[0] = 1 - s[n];
  for (int i = 1; i <= n; ++i) {
    sigma[static_cast<std::size_t>(i)] = -s[n - i];
  }
  std::vector<BigInt> ranks(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    BigInt acc = 0;
    for (int i = 0; i <= k; ++i) {
      acc += binomial(k, i) * int_pow(e, static_cast<unsigned long>(k - i)) *
             sigma[static_cast<std::size_t>(i)];
    }
    ranks[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return ranks;
}

/// For a reduced arrangement of d hyperplanes, the Segre class of the
/// singularity subscheme inside the arrangement hypersurface has the closed
/// form d * sum_{i=2..n} (-1)^i (d-1)^{i-1} [P^{n-i}].
inline ChowClass sja_closed_form(const Arrangement& arr) {
  if (!arr.is_reduced()) {
    throw ValueError("closed form requires a reduced arrangement");
  }
  const int n = arr.ambient();
  const BigInt d = arr.hyperplanes().size();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 2; i <= n; ++i) {
    BigInt v = d * int_pow(d - 1, static_cast<unsigned long>(i - 1));
    coeffs[static_cast<std::size_t>(n - i)] = (i % 2 == 0) ? v : -v;
  }
  return ChowClass(n, std::move(coeffs));
}

namespace detail {

/// Parses one integer-coefficient linear form in the declared variables,
/// the same grammar as the polynomial parser but evaluated over Z with a
/// degree cap of one.
class LinearFormParser {
public:
  LinearFormParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  std::vector<BigInt> parse() {
    Lin v = expr();
    skip();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    if (!v.constant_part_zero()) {
      throw ParseError("linear form must be homogeneous", 0);
    }
    return std::move(v.c);
  }

private:
  struct Lin {
    BigInt c0;               // constant part
    std::vector<BigInt> c;   // variable coefficients

    bool constant_part_zero() const { return c0 == 0; }
    bool is_constant() const {
      for (const BigInt& v : c) {
        if (v != 0) return false;
      }
      return true;
    }
  };

  Lin make(std::size_t nv) const { return {0, std::vector<BigInt>(nv, 0)}; }

  Lin expr() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Lin acc = term();
    if (neg) negate(acc);
    for (;;) {
      skip();
      char ch = peek();
      if (ch != '+' && ch != '-') return acc;
      ++pos_;
      Lin t = term();
      if (ch == '-') negate(t);
      acc.c0 += t.c0;
      for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] += t.c[i];
    }
  }

  Lin term() {
    Lin acc = factor();
    for (;;) {
      skip();
      if (peek() != '*') return acc;
      ++pos_;
      Lin f = factor();
      acc = multiply(acc, f);
    }
  }

  Lin factor() {
    Lin b = base();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected integer exponent", pos_);
      }
      unsigned long long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long long>(peek() - '0');
        ++pos_;
      }
      if (e == 0) return constant_lin(1);
      if (e == 1) return b;
      if (!b.is_constant()) {
        throw ParseError("linear form cannot contain higher powers", at);
      }
      Lin out = constant_lin(1);
      for (unsigned long long k = 0; k < e; ++k) out.c0 *= b.c0;
      return out;
    }
    return b;
  }

  Lin base() {
    skip();
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Lin inner = expr();
      skip();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      BigInt v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + (peek() - '0');
        ++pos_;
      }
      return constant_lin(std::move(v));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t at = pos_;
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        name += text_[pos_++];
      }
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          Lin out = make(vars_.size());
          out.c[i] = 1;
          return out;
        }
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    throw ParseError("unexpected character", pos_);
  }

  Lin constant_lin(BigInt v) {
    Lin out = make(vars_.size());
    out.c0 = std::move(v);
    return out;
  }

  Lin multiply(const Lin& a, const Lin& b) {
    if (!a.is_constant() && !b.is_constant()) {
      throw ParseError("product of two non-constant factors is not linear",
                       pos_);
    }
    const Lin& k = a.is_constant() ? a : b;
    const Lin& l = a.is_constant() ? b : a;
    Lin out = l;
    out.c0 *= k.c0;
    for (BigInt& v : out.c) v *= k.c0;
    return out;
  }

  static void negate(Lin& v) {
    v.c0 = -v.c0;
    for (BigInt& x : v.c) x = -x;
  }

  void skip() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one arrangement line: a linear form, optionally followed by a
/// final "* k" multiplicity suffix (the last '*' with a bare integer after
/// it is read as a multiplicity, not a coefficient).
inline void parse_arrangement_line(Arrangement& arr, std::string_view line,
                                   const std::vector<std::string>& vars) {
  std::string_view form_text = line;
  std::uint32_t multiplicity = 1;
  std::size_t star = line.rfind('*');
  if (star != std::string_view::npos) {
    std::string_view tail = line.substr(star + 1);
    std::size_t b = 0, e = tail.size();
    while (b < e && std::isspace(static_cast<unsigned char>(tail[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(tail[e - 1]))) --e;
    bool all_digits = e > b;
    for (std::size_t i = b; i < e; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tail[i]))) {
        all_digits = false;
      }
    }
    if (all_digits) {
      unsigned long long m = 0;
      for (std::size_t i = b; i < e; ++i) {
        m = m * 10 + static_cast<unsigned long long>(tail[i] - '0');
      }
      if (m == 0 || m > 0xFFFF) {
        throw ParseError("multiplicity out of range", star + 1);
      }
      multiplicity = static_cast<std::uint32_t>(m);
      form_text = line.substr(0, star);
    }
  }
  arr.add(detail::LinearFormParser(form_text, vars).parse(), multiplicity);
}

}  // namespace segre
