#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "segre/chow.hpp"
#include "segre/groebner.hpp"
#include "segre/ideal.hpp"
#include "segre/rng.hpp"

namespace segre {

struct EngineOptions {
  GroebnerOptions groebner;
  bool parallel = true;
};

/// Projective degrees (g_0, ..., g_n) of the rational map defined by the
/// equal-degree generators of an ideal: g_i counts the points of a generic
/// i-fold slice of the graph over a generic codimension-i linear center,
/// away from the base scheme.
struct ProjectiveDegrees {
  std::vector<std::uint64_t> g;  // length n+1, zero beyond r
  std::uint32_t d = 0;           // common generator degree
  int r = 0;                     // generator count - 1, clamped to n
  int n = 0;                     // ambient projective dimension

  /// Degree of the rational map P^n -> P^r (the top count).
  std::uint64_t map_degree() const { return g.back(); }
};

/// Replaces every generator of degree below the maximum d by its products
/// with all monomials of the missing degree. The result generates an ideal
/// with the same saturation, hence defines the same subscheme.
inline Ideal truncate_to_common_degree(const Ideal& ideal) {
  if (ideal.is_zero()) throw ValueError("cannot truncate the zero ideal");
  if (!ideal.is_homogeneous()) {
    throw ValueError("truncation expects homogeneous generators");
  }
  std::uint32_t d = 0;
  for (const Polynomial& f : ideal.gens) d = std::max(d, f.total_degree());
  const int n = ideal.ring->nvars();
  std::vector<Polynomial> out;
  for (const Polynomial& f : ideal.gens) {
    std::uint32_t gap = d - f.total_degree();
    if (gap == 0) {
      out.push_back(f);
      continue;
    }
    // All monomials of degree `gap`, in a deterministic order.
    std::vector<Monomial> ms;
    Monomial cur = Monomial::one(n);
    std::function<void(int, std::uint32_t)> rec = [&](int var,
                                                      std::uint32_t left) {
      if (var == n - 1) {
        Monomial m = cur;
        m.e[static_cast<std::size_t>(var)] =
            static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(var)] + left);
        m.deg += left;
        ms.push_back(m);
        return;
      }
      for (std::uint32_t take = 0; take <= left; ++take) {
        Monomial saved = cur;
        cur.e[static_cast<std::size_t>(var)] =
            static_cast<std::uint16_t>(cur.e[static_cast<std::size_t>(var)] + take);
        cur.deg += take;
        rec(var + 1, left - take);
        cur = saved;
      }
    };
    rec(0, gap);
    for (const Monomial& m : ms) out.push_back(f.mono_multiple(m, 1));
  }
  return Ideal(ideal.ring, std::move(out));
}

namespace detail {

/// Random GF(p)-combination of the generators.
inline Polynomial random_combination(const std::vector<Polynomial>& gens,
                                     Rng& rng, const RingPtr& ring) {
  Polynomial acc = Polynomial::zero(ring);
  for (const Polynomial& f : gens) {
    acc = acc + f.scaled(rng.below(ring->field.modulus()));
  }
  return acc;
}

/// One slice count: the number of points of {xi_1 = ... = xi_i = 0} cut by
/// n-i generic hyperplanes, away from the base scheme. The generic linear
/// constraints (slice hyperplanes plus an affine chart) are solved exactly
/// and substituted away; the base scheme is excluded by adjoining 1 - T*xi_0
/// for a further random combination xi_0.
inline std::uint64_t slice_count(const std::vector<Polynomial>& gens, int i,
                                 std::uint64_t seed,
                                 const GroebnerOptions& gopts) {
  const RingPtr& ring = gens.front().ring();
  const PrimeField& F = ring->field;
  const std::uint32_t p = F.modulus();
  const int nv = ring->nvars();  // n + 1 homogeneous coordinates
  Rng rng(seed);

  std::vector<Polynomial> xi;
  for (int k = 0; k < i; ++k) {
    xi.push_back(random_combination(gens, rng, ring));
  }
  Polynomial xi0 = random_combination(gens, rng, ring);

  // Linear constraints: nv - 1 - i slice hyperplanes (= 0) and one affine
  // chart (= 1). Solve by Gauss-Jordan over GF(p).
  const int rows = nv - i;
  std::vector<std::vector<std::uint32_t>> m(
      static_cast<std::size_t>(rows),
      std::vector<std::uint32_t>(static_cast<std::size_t>(nv) + 1, 0));
  for (int rIdx = 0; rIdx < rows; ++rIdx) {
    for (int c = 0; c < nv; ++c) {
      m[static_cast<std::size_t>(rIdx)][static_cast<std::size_t>(c)] = rng.below(p);
    }
    m[static_cast<std::size_t>(rIdx)].back() = (rIdx == rows - 1) ? 1 : 0;
  }
  std::vector<int> pivot_col(static_cast<std::size_t>(rows), -1);
  int rank = 0;
  for (int col = 0; col < nv && rank < rows; ++col) {
    int sel = -1;
    for (int rIdx = rank; rIdx < rows; ++rIdx) {
      if (m[static_cast<std::size_t>(rIdx)][static_cast<std::size_t>(col)] != 0) {
        sel = rIdx;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(rank)]);
    auto& row = m[static_cast<std::size_t>(rank)];
    std::uint32_t inv = F.inv(row[static_cast<std::size_t>(col)]);
    for (auto& v : row) v = F.mul(v, inv);
    for (int rIdx = 0; rIdx < rows; ++rIdx) {
      if (rIdx == rank) continue;
      auto& other = m[static_cast<std::size_t>(rIdx)];
      std::uint32_t factor = other[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (std::size_t cIdx = 0; cIdx <= static_cast<std::size_t>(nv); ++cIdx) {
        other[cIdx] = F.sub(other[cIdx], F.mul(factor, row[cIdx]));
      }
    }
    pivot_col[static_cast<std::size_t>(rank)] = col;
    ++rank;
  }
  if (rank < rows) {
    throw GenericityError("random linear constraints are degenerate");
  }

  // Target ring: one variable per free coordinate, plus T.
  std::vector<bool> is_pivot(static_cast<std::size_t>(nv), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::string> names;
  for (int c = 0; c < nv; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      names.push_back("q" + std::to_string(c));
    }
  }
  names.push_back("t_");
  RingPtr target = make_ring(p, names, MonomialOrder::grevlex());

  std::vector<Polynomial> images(
      static_cast<std::size_t>(nv), Polynomial::zero(target));
  int next_free = 0;
  std::vector<int> free_cols;
  for (int c = 0; c < nv; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      images[static_cast<std::size_t>(c)] =
          Polynomial::variable(target, next_free++);
      free_cols.push_back(c);
    }
  }
  for (int rIdx = 0; rIdx < rows; ++rIdx) {
    const auto& row = m[static_cast<std::size_t>(rIdx)];
    // pivot = rhs - sum over free columns
    Polynomial expr = Polynomial::constant(target, row.back());
    for (std::size_t fIdx = 0; fIdx < free_cols.size(); ++fIdx) {
      std::uint32_t coeff = row[static_cast<std::size_t>(free_cols[fIdx])];
      if (coeff != 0) {
        expr = expr - Polynomial::variable(target, static_cast<int>(fIdx))
                          .scaled(coeff);
      }
    }
    images[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(rIdx)])] =
        std::move(expr);
  }

  std::vector<Polynomial> counting;
  for (const Polynomial& f : xi) {
    counting.push_back(f.substitute(images, target));
  }
  Polynomial t_var = Polynomial::variable(target, target->nvars() - 1);
  counting.push_back(Polynomial::constant(target, 1) -
                     t_var * xi0.substitute(images, target));

  GroebnerBasis gb =
      groebner_basis(Ideal(target, std::move(counting)),
                     MonomialOrder::grevlex(), gopts);
  if (!is_zero_dimensional(gb)) {
    throw GenericityError("slice is not zero-dimensional; retry with a new seed");
  }
  return quotient_dimension(gb);
}

}  // namespace detail

/// Computes the projective degrees of the map defined by the generators.
/// All generators must share one degree (run truncate_to_common_degree
/// first). Each count is recomputed `plan.trials` times with independent
/// randomness; disagreement raises GenericityError.
inline ProjectiveDegrees projective_degrees(const Ideal& ideal,
                                            const RandomPlan& plan,
                                            const EngineOptions& opts = {}) {
  if (ideal.is_zero()) throw ValueError("zero ideal has no projective degrees");
  if (!ideal.is_homogeneous()) {
    throw ValueError("projective degrees expect homogeneous generators");
  }
  const std::uint32_t d = ideal.gens.front().total_degree();
  for (const Polynomial& f : ideal.gens) {
    if (f.total_degree() != d) {
      throw ValueError("generators must share one degree; truncate first");
    }
  }
  if (d == 0) throw ValueError("generators must be nonconstant");
  const int n = ideal.ring->nvars() - 1;
  const std::uint32_t p = ideal.ring->field.modulus();
  if (static_cast<std::uint64_t>(p) <= 2ull * d * d) {
    throw ValueError("field characteristic too small for degree " +
                     std::to_string(d) + " genericity (need p > 2d^2)");
  }
  const int r = std::min<int>(static_cast<int>(ideal.gens.size()) - 1, n);

  ProjectiveDegrees pd;
  pd.d = d;
  pd.r = r;
  pd.n = n;
  pd.g.assign(static_cast<std::size_t>(n) + 1, 0);

  struct Task {
    int i;
    int trial;
  };
  std::vector<Task> tasks;
  for (int i = 0; i <= r; ++i) {
    for (int t = 0; t < plan.trials; ++t) tasks.push_back({i, t});
  }
  std::vector<std::uint64_t> counts(tasks.size());
  auto run = [&](const Task& task) {
    return detail::slice_count(
        ideal.gens, task.i,
        derive_seed(plan.seed, {0x5E67Eull, static_cast<std::uint64_t>(task.i),
                                static_cast<std::uint64_t>(task.trial)}),
        opts.groebner);
  };
  if (opts.parallel && tasks.size() > 1) {
    std::vector<std::future<std::uint64_t>> futs;
    futs.reserve(tasks.size());
    for (const Task& task : tasks) {
      futs.push_back(std::async(std::launch::async, run, task));
    }
    for (std::size_t k = 0; k < tasks.size(); ++k) counts[k] = futs[k].get();
  } else {
    for (std::size_t k = 0; k < tasks.size(); ++k) counts[k] = run(tasks[k]);
  }

  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const Task& task = tasks[k];
    if (task.trial == 0) {
      pd.g[static_cast<std::size_t>(task.i)] = counts[k];
    } else if (pd.g[static_cast<std::size_t>(task.i)] != counts[k]) {
      throw GenericityError("slice counts disagree across trials (index " +
                            std::to_string(task.i) + "); retry with a new seed");
    }
  }
  if (pd.g[0] != 1) {
    throw GenericityError("generic full linear slice count is " +
                          std::to_string(pd.g[0]) + ", expected 1");
  }
  return pd;
}

/// Closed form for the push-forward of the Segre class from the projective
/// degrees: on the graph of the map the exceptional divisor is E = dH - h,
/// the pushforward of h^j cap [graph] is g_j [P^{n-j}], and expanding
/// sum (-1)^{k-1} E^k termwise gives the coefficient of [P^{n-k}] as
/// (-1)^{k-1} * sum_j (-1)^j C(k,j) d^{k-j} g_j.
inline ChowClass segre_class_from_degrees(const ProjectiveDegrees& pd) {
  const int n = pd.n;
  ChowClass s = ChowClass::zero(n);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int j = 0; j <= std::min(k, pd.r); ++j) {
      BigInt term = binomial(k, j) * int_pow(pd.d, static_cast<unsigned long>(k - j)) *
                    pd.g[static_cast<std::size_t>(j)];
      acc += (j % 2 == 0) ? term : -term;
    }
    if (k % 2 == 0) acc = -acc;
    coeffs[static_cast<std::size_t>(n - k)] = std::move(acc);
  }
  return ChowClass(n, std::move(coeffs));
}

/// Push-forward to A_*(P^n) of the Segre class of the subscheme cut out by
/// a homogeneous ideal. The zero ideal yields [P^n]; an empty subscheme
/// yields 0.
inline ChowClass segre_class(const Ideal& ideal, const RandomPlan& plan,
                             const EngineOptions& opts = {}) {
  const int n = ideal.ring->nvars() - 1;
  if (ideal.is_zero()) return ChowClass::fundamental(n);
  if (!ideal.is_homogeneous()) {
    throw ValueError("Segre class expects homogeneous generators");
  }
  for (const Polynomial& f : ideal.gens) {
    if (f.is_constant()) return ChowClass::zero(n);  // empty subscheme
  }
  Ideal leveled = truncate_to_common_degree(ideal);
  ProjectiveDegrees pd = projective_degrees(leveled, plan, opts);
  return segre_class_from_degrees(pd);
}

}  // namespace segre
