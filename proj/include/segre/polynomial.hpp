#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "segre/monomial.hpp"
#include "segre/prime_field.hpp"

namespace segre {

/// A polynomial ring GF(p)[x_0, ..., x_{n-1}] with an active monomial order.
struct PolyRing {
  PrimeField field;
  std::vector<std::string> vars;
  MonomialOrder order;

  PolyRing(PrimeField f, std::vector<std::string> v, MonomialOrder o)
      : field(f), vars(std::move(v)), order(o) {
    if (vars.empty()) throw ValueError("ring needs at least one variable");
    if (static_cast<int>(vars.size()) > kMaxVars) {
      throw ValueError("at most " + std::to_string(kMaxVars) +
                       " variables are supported");
    }
  }

  int nvars() const noexcept { return static_cast<int>(vars.size()); }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i) {
      if (vars[static_cast<std::size_t>(i)] == name) return i;
    }
    return -1;
  }

  bool same_as(const PolyRing& o) const noexcept {
    return field == o.field && vars == o.vars && order == o.order;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<PolyRing>(PrimeField(p), std::move(vars), order);
}

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;
};

/// Sparse multivariate polynomial over GF(p). Terms are kept strictly
/// decreasing in the ring's order; the zero polynomial has no terms.
/// Values are immutable after construction and freely shareable.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring) {
    Polynomial f;
    f.ring_ = std::move(ring);
    return f;
  }

  static Polynomial constant(RingPtr ring, std::uint32_t c) {
    Polynomial f = zero(std::move(ring));
    c %= f.ring_->field.modulus();
    if (c != 0) f.terms_.push_back({Monomial::one(f.ring_->nvars()), c});
    return f;
  }

  static Polynomial variable(RingPtr ring, int i, std::uint16_t exp = 1) {
    Polynomial f = zero(std::move(ring));
    if (i < 0 || i >= f.ring_->nvars()) throw ValueError("variable index out of range");
    if (exp > 0) f.terms_.push_back({Monomial::var(f.ring_->nvars(), i, exp), 1});
    return f;
  }

  static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t c) {
    Polynomial f = zero(std::move(ring));
    c %= f.ring_->field.modulus();
    if (c != 0) f.terms_.push_back({m, c});
    return f;
  }

  /// Builds a polynomial from unsorted terms, combining duplicates.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> ts) {
    Polynomial f = zero(std::move(ring));
    f.terms_ = normalize(*f.ring_, std::move(ts));
    return f;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw ValueError("zero polynomial has no leading term");
    return terms_.front();
  }

  std::uint32_t total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.deg);
    return d;
  }

  bool is_homogeneous() const noexcept {
    for (const Term& t : terms_) {
      if (t.mono.deg != terms_.front().mono.deg) return false;
    }
    return true;
  }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = ring_->field.neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = zero(ring_);
    r.terms_ = merge(*ring_, terms_, o.terms_, false);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = zero(ring_);
    r.terms_ = merge(*ring_, terms_, o.terms_, true);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(o);
    const PrimeField& F = ring_->field;
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_) {
      for (const Term& b : o.terms_) {
        acc.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
      }
    }
    return from_terms(ring_, std::move(acc));
  }

  Polynomial scaled(std::uint32_t c) const {
    const PrimeField& F = ring_->field;
    c %= F.modulus();
    if (c == 0) return zero(ring_);
    Polynomial r = *this;
    if (c != 1) {
      for (Term& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    }
    return r;
  }

  /// c * m * this, the workhorse of polynomial division.
  Polynomial mono_multiple(const Monomial& m, std::uint32_t c) const {
    const PrimeField& F = ring_->field;
    Polynomial r = zero(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
    }
    return r;
  }

  Polynomial pow(std::uint32_t k) const {
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1) acc = acc * base;
      if (k >>= 1) base = base * base;
    }
    return acc;
  }

  Polynomial derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw ValueError("variable index out of range");
    const PrimeField& F = ring_->field;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      std::uint16_t e = t.mono[var];
      if (e == 0) continue;
      Term d = t;
      d.coeff = F.mul(t.coeff, F.reduce(e));
      if (d.coeff == 0) continue;
      d.mono.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e - 1);
      d.mono.deg -= 1;
      out.push_back(d);
    }
    // Term order is preserved by differentiating a fixed variable only for
    // lex; re-normalize to stay safe under any order.
    return from_terms(ring_, std::move(out));
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_->field.inv(terms_.front().coeff));
  }

  /// Same coefficients re-sorted under another ring (orders may differ;
  /// field and variables must match).
  Polynomial in_ring(RingPtr other) const {
    if (!(ring_->field == other->field) || ring_->vars != other->vars) {
      throw ValueError("incompatible ring for order change");
    }
    return from_terms(std::move(other), terms_);
  }

  /// Substitutes images[i] for variable i. Images live in the target ring.
  Polynomial substitute(const std::vector<Polynomial>& images,
                        RingPtr target) const {
    if (static_cast<int>(images.size()) != ring_->nvars()) {
      throw ValueError("substitute: one image per variable required");
    }
    // Cache powers of each image; exponents at desk scale are small.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      powers[i].push_back(constant(target, 1));
    }
    auto power = [&](std::size_t i, std::uint16_t e) -> const Polynomial& {
      auto& cache = powers[i];
      while (cache.size() <= e) {
        cache.push_back(cache.back() * images[i]);
      }
      return cache[e];
    };
    Polynomial acc = zero(target);
    for (const Term& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (int i = 0; i < ring_->nvars(); ++i) {
        std::uint16_t e = t.mono[i];
        if (e != 0) prod = prod * power(static_cast<std::size_t>(i), e);
      }
      acc = acc + prod;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
      if (!first) out += " + ";
      first = false;
      bool printed = false;
      if (t.coeff != 1 || t.mono.is_one()) {
        out += std::to_string(t.coeff);
        printed = true;
      }
      for (int i = 0; i < ring_->nvars(); ++i) {
        std::uint16_t e = t.mono[i];
        if (e == 0) continue;
        if (printed) out += "*";
        out += ring_->vars[static_cast<std::size_t>(i)];
        if (e > 1) out += "^" + std::to_string(e);
        printed = true;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].coeff != b.terms_[i].coeff ||
          a.terms_[i].mono != b.terms_[i].mono) {
        return false;
      }
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  void require_same_ring(const Polynomial& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) {
      throw ValueError("operands live in different rings");
    }
  }

  /// Merge of two term lists sorted decreasingly; subtracts when negate_b.
  static std::vector<Term> merge(const PolyRing& ring,
                                 const std::vector<Term>& a,
                                 const std::vector<Term>& b, bool negate_b) {
    const PrimeField& F = ring.field;
    const MonomialOrder& ord = ring.order;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = ord.compare(a[i].mono, b[j].mono);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        Term t = b[j++];
        if (negate_b) t.coeff = F.neg(t.coeff);
        out.push_back(t);
      } else {
        std::uint32_t s = negate_b ? F.sub(a[i].coeff, b[j].coeff)
                                   : F.add(a[i].coeff, b[j].coeff);
        if (s != 0) out.push_back({a[i].mono, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      Term t = b[j];
      if (negate_b) t.coeff = F.neg(t.coeff);
      out.push_back(t);
    }
    return out;
  }

private:
  static std::vector<Term> normalize(const PolyRing& ring,
                                     std::vector<Term> ts) {
    const MonomialOrder& ord = ring.order;
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.mono, b.mono);
    });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (const Term& t : ts) {
      std::uint32_t c = t.coeff % ring.field.modulus();
      if (c == 0) continue;
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = ring.field.add(out.back().coeff, c);
        if (out.back().coeff == 0) out.pop_back();
      } else {
        out.push_back({t.mono, c});
      }
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace segre
