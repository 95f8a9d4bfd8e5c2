#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "segre/ideal.hpp"
#include "segre/polynomial.hpp"

namespace segre {

struct GroebnerOptions {
  std::size_t max_basis = 20000;
  std::uint32_t max_degree = 60;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

/// Geobucket accumulator (Yan): keeps partial sums in buckets of
/// geometrically growing capacity so long reduction chains stay close to
/// linear instead of quadratic. Each bucket is sorted decreasingly with a
/// consumed-prefix offset, so popping the head costs O(1).
class Geobucket {
public:
  explicit Geobucket(const PolyRing* ring) : ring_(ring) {}

  void add(std::vector<Term> v) {
    if (v.empty()) return;
    std::size_t i = slot_for(v.size());
    for (;;) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      Bucket& b = buckets_[i];
      if (b.size() == 0) {
        b.terms = std::move(v);
        b.head = 0;
      } else {
        v = merged(b, v);
        b.terms.clear();
        b.head = 0;
        if (v.empty()) return;
        if (v.size() > capacity(i)) {
          ++i;
          continue;
        }
        b.terms = std::move(v);
      }
      return;
    }
  }

  /// Pops the leading term of the represented sum, skipping cancellations.
  std::optional<Term> extract_leading() {
    const MonomialOrder& ord = ring_->order;
    const PrimeField& F = ring_->field;
    for (;;) {
      int best = -1;
      for (int i = 0; i < static_cast<int>(buckets_.size()); ++i) {
        if (buckets_[i].size() == 0) continue;
        if (best < 0 ||
            ord.greater(buckets_[i].front().mono, buckets_[best].front().mono)) {
          best = i;
        }
      }
      if (best < 0) return std::nullopt;
      Monomial m = buckets_[best].front().mono;
      std::uint32_t c = 0;
      for (Bucket& b : buckets_) {
        if (b.size() != 0 && b.front().mono == m) {
          c = F.add(c, b.front().coeff);
          ++b.head;
        }
      }
      if (c != 0) return Term{m, c};
    }
  }

private:
  struct Bucket {
    std::vector<Term> terms;
    std::size_t head = 0;

    std::size_t size() const { return terms.size() - head; }
    const Term& front() const { return terms[head]; }
  };

  std::vector<Term> merged(const Bucket& a, const std::vector<Term>& b) const {
    const PrimeField& F = ring_->field;
    const MonomialOrder& ord = ring_->order;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = a.head, j = 0;
    while (i < a.terms.size() && j < b.size()) {
      int c = ord.compare(a.terms[i].mono, b[j].mono);
      if (c > 0) {
        out.push_back(a.terms[i++]);
      } else if (c < 0) {
        out.push_back(b[j++]);
      } else {
        std::uint32_t s = F.add(a.terms[i].coeff, b[j].coeff);
        if (s != 0) out.push_back({a.terms[i].mono, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  static std::size_t capacity(std::size_t i) { return std::size_t{4} << (2 * i); }

  static std::size_t slot_for(std::size_t len) {
    std::size_t i = 0;
    while (capacity(i) < len) ++i;
    return i;
  }

  const PolyRing* ring_;
  std::vector<Bucket> buckets_;
};

/// Full normal form of the sum held in `bucket` against monic reducers.
inline std::vector<Term> reduce_bucket(Geobucket& bucket,
                                       const std::vector<Polynomial>& reducers) {
  std::vector<Term> out;
  while (auto lead = bucket.extract_leading()) {
    const Polynomial* g = nullptr;
    for (const Polynomial& cand : reducers) {
      if (!cand.is_zero() && cand.leading_term().mono.divides(lead->mono)) {
        g = &cand;
        break;
      }
    }
    if (g == nullptr) {
      out.push_back(*lead);
      continue;
    }
    // lead - (lead.coeff * q) * g cancels the head; push the shifted tail.
    Monomial q = g->leading_term().mono.quotient_of(lead->mono);
    const PrimeField& F = g->ring()->field;
    std::uint32_t c = F.neg(lead->coeff);
    std::vector<Term> shifted;
    shifted.reserve(g->term_count() - 1);
    const auto& ts = g->terms();
    for (std::size_t k = 1; k < ts.size(); ++k) {
      shifted.push_back({ts[k].mono * q, F.mul(ts[k].coeff, c)});
    }
    bucket.add(std::move(shifted));
  }
  return out;
}

}  // namespace detail

/// A reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading monomial of another.
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return basis_; }
  bool is_trivial() const noexcept {  // unit ideal
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
  }

private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
};

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  f.require_same_ring(Polynomial::zero(gb.ring()));
  detail::Geobucket bucket(f.ring().get());
  bucket.add(f.terms());
  return Polynomial::from_terms(f.ring(),
                                detail::reduce_bucket(bucket, gb.elements()));
}

/// Buchberger with the Gebauer-Moller pair pruning and normal selection
/// (smallest lcm in the active order, ties by pair creation order).
inline GroebnerBasis groebner_basis(const Ideal& ideal,
                                    MonomialOrder order,
                                    const GroebnerOptions& opts = {}) {
  RingPtr ring = ideal.ring;
  if (!(ring->order == order)) {
    ring = std::make_shared<PolyRing>(ring->field, ring->vars, order);
  }
  const MonomialOrder& ord = ring->order;

  std::vector<Polynomial> basis;
  std::vector<Monomial> lm;
  auto lead = [&](std::size_t i) -> const Monomial& { return lm[i]; };

  struct Pair {
    Monomial lcm;
    std::uint32_t i, j;  // i < j
  };
  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);

  auto check_budget = [&]() {
    if (basis.size() > opts.max_basis) {
      throw BudgetError("basis size cap exceeded (" +
                        std::to_string(opts.max_basis) + ")");
    }
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) {
      throw BudgetError("time limit exceeded");
    }
  };

  // Becker-Weispfenning UPDATE: prune new pairs by the lcm-divisibility and
  // coprimality criteria, then drop old pairs made redundant by the newcomer.
  auto update_pairs = [&](std::uint32_t t) {
    const Monomial& L = lead(t);
    struct Cand {
      Monomial lcm;
      std::uint32_t i;
      bool coprime;
      bool kept = false;
    };
    std::vector<Cand> cand;
    cand.reserve(t);
    for (std::uint32_t i = 0; i < t; ++i) {
      cand.push_back({lead(i).lcm_with(L), i, lead(i).coprime_with(L)});
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (cand[a].coprime) {
        cand[a].kept = true;  // killer for others; discarded below
        continue;
      }
      bool dominated = false;
      for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b) {
        if (cand[b].lcm.divides(cand[a].lcm)) dominated = true;
      }
      for (std::size_t b = 0; b < a && !dominated; ++b) {
        if (cand[b].kept && cand[b].lcm.divides(cand[a].lcm) &&
            cand[b].lcm != cand[a].lcm) {
          dominated = true;
        }
      }
      cand[a].kept = !dominated;
      if (!dominated) pairs.insert({cand[a].lcm, cand[a].i, t});
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (it->j != t && L.divides(it->lcm) &&
          lead(it->i).lcm_with(L) != it->lcm &&
          lead(it->j).lcm_with(L) != it->lcm) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
  };

  for (const Polynomial& g : ideal.gens) {
    Polynomial h = g.in_ring(ring).monic();
    std::uint32_t t = static_cast<std::uint32_t>(basis.size());
    basis.push_back(std::move(h));
    lm.push_back(basis.back().leading_term().mono);
    update_pairs(t);
  }

  while (!pairs.empty()) {
    check_budget();
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (p.lcm.deg > opts.max_degree) {
      throw BudgetError("degree cap exceeded (" +
                        std::to_string(opts.max_degree) + ")");
    }
    const Polynomial& f = basis[p.i];
    const Polynomial& g = basis[p.j];
    Monomial uf = lead(p.i).quotient_of(p.lcm);
    Monomial ug = lead(p.j).quotient_of(p.lcm);
    detail::Geobucket bucket(ring.get());
    bucket.add(f.mono_multiple(uf, 1).terms());
    bucket.add(g.mono_multiple(ug, ring->field.neg(1)).terms());
    std::vector<Term> r = detail::reduce_bucket(bucket, basis);
    if (r.empty()) continue;
    Polynomial h = Polynomial::from_terms(ring, std::move(r)).monic();
    std::uint32_t t = static_cast<std::uint32_t>(basis.size());
    basis.push_back(std::move(h));
    lm.push_back(basis.back().leading_term().mono);
    update_pairs(t);
  }

  // Minimalize: keep elements whose leading monomial no other one divides.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = ord.compare(lm[a], lm[b]);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lm;
  for (std::size_t i : idx) {
    bool divisible = false;
    for (const Monomial& m : minimal_lm) {
      if (m.divides(lm[i])) {
        divisible = true;
        break;
      }
    }
    if (!divisible) {
      minimal.push_back(basis[i]);
      minimal_lm.push_back(lm[i]);
    }
  }

  // Tail-reduce for the canonical reduced basis.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (const Polynomial& g : minimal) {
    detail::Geobucket bucket(ring.get());
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    bucket.add(std::move(tail));
    std::vector<Term> nf = detail::reduce_bucket(bucket, minimal);
    nf.insert(nf.begin(), g.leading_term());
    reduced.push_back(Polynomial::from_terms(ring, std::move(nf)));
  }
  return GroebnerBasis(ring, std::move(reduced));
}

/// True iff every ring variable has a pure power among the leading
/// monomials; equivalently the quotient is a finite-dimensional vector space.
inline bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (gb.is_trivial()) return true;
  const int n = gb.ring()->nvars();
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const Polynomial& g : gb.elements()) {
    const Monomial& m = g.leading_term().mono;
    int support = -1;
    for (int i = 0; i < n; ++i) {
      if (m[i] != 0) {
        if (support >= 0) {
          support = -2;
          break;
        }
        support = i;
      }
    }
    if (support >= 0) covered[static_cast<std::size_t>(support)] = true;
  }
  for (bool c : covered) {
    if (!c) return false;
  }
  return true;
}

/// Number of standard monomials (those divisible by no leading monomial),
/// i.e. the GF(p)-dimension of the quotient ring. BFS over the staircase,
/// which is downward closed.
inline std::uint64_t quotient_dimension(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) {
    throw ValueError("quotient ring is not finite-dimensional");
  }
  if (gb.is_trivial()) return 0;
  const int n = gb.ring()->nvars();
  std::vector<Monomial> lms;
  lms.reserve(gb.elements().size());
  for (const Polynomial& g : gb.elements()) {
    lms.push_back(g.leading_term().mono);
  }
  auto standard = [&](const Monomial& m) {
    for (const Monomial& l : lms) {
      if (l.divides(m)) return false;
    }
    return true;
  };
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> queue;
  Monomial one = Monomial::one(n);
  if (!standard(one)) return 0;
  seen.insert(one);
  queue.push_back(one);
  constexpr std::uint64_t kCountCap = 1u << 24;
  std::size_t head = 0;
  while (head < queue.size()) {
    Monomial m = queue[head++];
    for (int i = 0; i < n; ++i) {
      Monomial next = m * Monomial::var(n, i);
      if (seen.contains(next) || !standard(next)) continue;
      seen.insert(next);
      queue.push_back(next);
      if (queue.size() > kCountCap) {
        throw BudgetError("standard monomial count cap exceeded");
      }
    }
  }
  return queue.size();
}

/// Exhaustive Buchberger certificate: every S-polynomial reduces to zero.
inline bool certify(const GroebnerBasis& gb) {
  const auto& G = gb.elements();
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const Monomial& mi = G[i].leading_term().mono;
      const Monomial& mj = G[j].leading_term().mono;
      Monomial l = mi.lcm_with(mj);
      Polynomial s = G[i].mono_multiple(mi.quotient_of(l), 1) -
                     G[j].mono_multiple(mj.quotient_of(l), 1);
      if (!normal_form(s, gb).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace segre
