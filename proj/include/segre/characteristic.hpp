#pragma once

#include <string>
#include <utility>
#include <vector>

#include "segre/chow.hpp"
#include "segre/segre_class.hpp"

namespace segre {

/// A hypersurface of P^n with the Segre class of its singularity subscheme
/// (the scheme of vanishing of all partials) cached; every invariant below
/// is pure class arithmetic on top of it.
struct HypersurfaceData {
  Polynomial f;
  int n = 0;
  std::uint32_t d = 0;
  ChowClass sjx = ChowClass::zero(0);

  static HypersurfaceData compute(const Polynomial& f, const RandomPlan& plan,
                                  const EngineOptions& opts = {}) {
    if (f.is_zero()) throw ValueError("hypersurface polynomial must be nonzero");
    if (!f.is_homogeneous()) {
      throw ValueError("hypersurface polynomial must be homogeneous");
    }
    HypersurfaceData data{f, f.ring()->nvars() - 1, f.total_degree(),
                          ChowClass::zero(f.ring()->nvars() - 1)};
    if (data.d == 0) throw ValueError("hypersurface must have positive degree");
    data.sjx = segre_class(jacobian_ideal(f), plan, opts);
    if (data.sjx[data.n] != 0) {
      throw ConsistencyError("singularity subscheme fills the ambient space");
    }
    return data;
  }
};

/// c(TP^n) cap s(X, P^n); equals c(TX) cap [X] for smooth X.
inline ChowClass chern_fulton(const Ideal& ideal, const RandomPlan& plan,
                              const EngineOptions& opts = {}) {
  const int n = ideal.ring->nvars() - 1;
  return cap(segre_class(ideal, plan, opts),
             HSeries::linear(n, 1).pow(n + 1));
}

/// Chern class of the virtual tangent bundle of a degree-d hypersurface:
/// (1+H)^{n+1}/(1+dH) cap d[P^{n-1}].
inline ChowClass c_virtual(int n, std::uint32_t d) {
  if (d < 1) throw ValueError("hypersurface degree must be >= 1");
  HSeries series =
      HSeries::linear(n, 1).pow(n + 1) * HSeries::linear(n, d).inverse();
  return cap(ChowClass::multiple(n, n - 1, d), series);
}

/// The Chern-Schwartz-MacPherson class of the hypersurface, pushed forward
/// to A_*(P^n): c(TP^n) cap (([X] + (c(O(d)) cap s)^upper-dual) tensor O(d)).
/// Depends only on the support of the hypersurface.
inline ChowClass csm_hypersurface(const HypersurfaceData& x) {
  const int n = x.n;
  ChowClass bracket =
      ChowClass::multiple(n, n - 1, x.d) +
      dual(cap(x.sjx, HSeries::linear(n, x.d)), DualVariant::upper);
  return cap(tensor_line(bracket, x.d), HSeries::linear(n, 1).pow(n + 1));
}

inline ChowClass csm_hypersurface(const Polynomial& f, const RandomPlan& plan,
                                  const EngineOptions& opts = {}) {
  return csm_hypersurface(HypersurfaceData::compute(f, plan, opts));
}

struct SubschemeOptions {
  EngineOptions engine;
  std::uint32_t max_product_degree = 40;
};

/// CSM class of an arbitrary subscheme presented as an intersection of
/// hypersurfaces, by inclusion-exclusion over the 2^r - 1 nonempty subsets;
/// the union over a subset is realized as the product of its generators.
inline ChowClass csm_subscheme(const Ideal& ideal, const RandomPlan& plan,
                               const SubschemeOptions& opts = {}) {
  if (ideal.is_zero()) {
    throw ValueError("inclusion-exclusion needs at least one generator");
  }
  const int n = ideal.ring->nvars() - 1;
  const std::size_t r = ideal.gens.size();
  if (r > 20) throw BudgetError("too many generators for inclusion-exclusion");
  ChowClass acc = ChowClass::zero(n);
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::uint64_t total_degree = 0;
    Polynomial prod = Polynomial::constant(ideal.ring, 1);
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        total_degree += ideal.gens[i].total_degree();
        prod = prod * ideal.gens[i];
      }
    }
    if (total_degree > opts.max_product_degree) {
      throw BudgetError("inclusion-exclusion product degree " +
                        std::to_string(total_degree) + " exceeds cap " +
                        std::to_string(opts.max_product_degree));
    }
    RandomPlan sub{derive_seed(plan.seed, {0xC5Dull, mask}), plan.trials};
    ChowClass term = csm_hypersurface(prod, sub, opts.engine);
    int bits = __builtin_popcount(mask);
    acc = (bits % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

inline BigInt euler_characteristic(const Ideal& ideal, const RandomPlan& plan,
                                   const SubschemeOptions& opts = {}) {
  return integral(csm_subscheme(ideal, plan, opts));
}

/// Milnor class, computed along both published routes:
/// (-1)^{dim X} (c_vir - c_SM) and the localized form
/// (-1)^n c(TP^n) cap ((c(O(d)) cap s)^upper-dual tensor O(d)).
/// The two must agree exactly; disagreement signals an engine bug or a
/// genericity failure upstream. Rejects non-reduced input, which is exactly
/// detected by a divisorial part in s(JX).
inline ChowClass milnor_class(const HypersurfaceData& x) {
  const int n = x.n;
  if (x.sjx[n - 1] != 0) {
    throw ValueError(
        "hypersurface is not reduced (its singular scheme has a divisorial "
        "part); the Milnor class presumes the reduced divisor");
  }
  ChowClass direct = c_virtual(n, x.d) - csm_hypersurface(x);
  if ((n - 1) % 2 != 0) direct = -direct;

  ChowClass localized =
      cap(tensor_line(dual(cap(x.sjx, HSeries::linear(n, x.d)),
                           DualVariant::upper),
                      x.d),
          HSeries::linear(n, 1).pow(n + 1));
  if (n % 2 != 0) localized = -localized;

  if (direct != localized) {
    throw ConsistencyError("Milnor class derivations disagree: " +
                           direct.to_string() + " vs " + localized.to_string());
  }
  return direct;
}

inline ChowClass milnor_class(const Polynomial& f, const RandomPlan& plan,
                              const EngineOptions& opts = {}) {
  return milnor_class(HypersurfaceData::compute(f, plan, opts));
}

/// c(T*P^n tensor O(dH)) as a truncated series: (1+(d-1)H)^{n+1}/(1+dH),
/// from the Euler sequence.
inline HSeries twisted_cotangent_chern(int n, std::uint32_t d) {
  return HSeries::linear(n, static_cast<long long>(d) - 1).pow(n + 1) *
         HSeries::linear(n, d).inverse();
}

/// Parusinski's generalized Milnor number, integral of the mu-class; also
/// the local Euler obstruction of the discriminant at the hypersurface.
inline BigInt parusinski_milnor(const HypersurfaceData& x) {
  return integral(cap(x.sjx, twisted_cotangent_chern(x.n, x.d)));
}

/// Multiplicity of the discriminant hypersurface at the given section:
/// integral of c(O(d)) c(T*P^n tensor O(d)) cap s, where the (1+dH) factors
/// cancel, leaving (1+(d-1)H)^{n+1}.
inline BigInt discriminant_multiplicity(const HypersurfaceData& x) {
  return integral(
      cap(x.sjx, HSeries::linear(x.n, static_cast<long long>(x.d) - 1)
                     .pow(x.n + 1)));
}

/// Sum of the Milnor numbers of a hypersurface with isolated singularities:
/// the point coefficient of s(JX, P^n). Rejects positive-dimensional JX.
inline BigInt milnor_number_sum(const HypersurfaceData& x) {
  for (int i = 1; i <= x.n; ++i) {
    if (x.sjx[i] != 0) {
      throw ValueError("singular locus is positive-dimensional");
    }
  }
  return x.sjx[0];
}

/// Le numbers lambda^k and relative polar numbers gamma^k of a hypersurface,
/// recovered from the degrees s_j of s(JX, P^n).
struct LeData {
  std::vector<BigInt> lambda;  // lambda^0 .. lambda^n
  std::vector<BigInt> gamma;   // gamma^0 .. gamma^n
  std::uint32_t d = 0;
  int n = 0;

  ChowClass le_class() const { return ChowClass(n, lambda); }
};

inline LeData le_data(const HypersurfaceData& x) {
  const int n = x.n;
  const BigInt e = static_cast<long long>(x.d) - 1;
  LeData out;
  out.n = n;
  out.d = x.d;
  out.lambda.assign(static_cast<std::size_t>(n) + 1, 0);
  out.gamma.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    BigInt lam = 0, gam = 0;
    for (int j = k; j <= n; ++j) {
      BigInt w = int_pow(e, static_cast<unsigned long>(j - k)) * x.sjx[j];
      lam += binomial(n - k - 1, j - k) * w;
      gam += binomial(n - k, j - k) * w;
    }
    out.lambda[static_cast<std::size_t>(k)] = lam;
    out.gamma[static_cast<std::size_t>(k)] =
        int_pow(e, static_cast<unsigned long>(n - k)) - gam;
  }

  // The same class via the tensor route; the two must agree.
  ChowClass via_tensor = tensor_line(x.sjx, -e);
  if (out.le_class() != via_tensor) {
    throw ConsistencyError("Le number derivations disagree");
  }
  if (out.lambda[static_cast<std::size_t>(n)] != 0 ||
      out.gamma[static_cast<std::size_t>(n)] != 1) {
    throw ConsistencyError("Le/polar boundary values are off");
  }
  for (int k = 0; k < n; ++k) {
    if (out.lambda[static_cast<std::size_t>(k)] !=
        e * out.gamma[static_cast<std::size_t>(k) + 1] -
            out.gamma[static_cast<std::size_t>(k)]) {
      throw ConsistencyError("Le/polar interlock fails at k=" +
                             std::to_string(k));
    }
  }
  return out;
}

/// Degree of the gradient map of the hypersurface, from its CSM class:
/// (-1)^n - sum_i (-1)^{n-i} deg c_i. Equal to 1 exactly for homaloidal
/// hypersurfaces, and blind to multiplicities of factors.
inline BigInt polar_degree(const HypersurfaceData& x) {
  ChowClass csm = csm_hypersurface(x);
  const int n = x.n;
  BigInt acc = (n % 2 == 0) ? 1 : -1;
  for (int i = 0; i <= n; ++i) {
    BigInt term = csm[i];
    if ((n - i) % 2 != 0) term = -term;
    acc -= term;
  }
  return acc;
}

enum class LmsKind { le, milnor, segre };

/// The dictionary translating the (pushed-forward) Le class, Milnor class,
/// and Segre class of the singularity subscheme into one another, for a
/// degree-d hypersurface in P^n. Composing a conversion with its inverse is
/// the identity.
inline ChowClass lms_convert(const ChowClass& cls, LmsKind from, LmsKind to,
                             int n, std::uint32_t d) {
  if (cls.ambient() != n) throw ValueError("ambient dimension mismatch");
  if (from == to) return cls;
  const BigInt e = static_cast<long long>(d) - 1;
  auto sign = [n](ChowClass c) { return (n % 2 != 0) ? -c : c; };
  switch (from) {
    case LmsKind::segre:
      if (to == LmsKind::le) return tensor_line(cls, -e);
      // segre -> milnor
      return sign(cap(tensor_line(dual(cls, DualVariant::upper), d),
                      HSeries::linear(n, 1).pow(n + 1) *
                          HSeries::linear(n, d).inverse()));
    case LmsKind::le:
      if (to == LmsKind::segre) return tensor_line(cls, e);
      // le -> milnor
      return sign(cap(tensor_line(dual(cls, DualVariant::upper), 1),
                      HSeries::linear(n, 1).pow(n + 1) *
                          HSeries::linear(n, d).inverse()));
    case LmsKind::milnor:
      if (to == LmsKind::segre) {
        return sign(cap(tensor_line(dual(cls, DualVariant::upper), d),
                        HSeries::linear(n, d).pow(n) *
                            HSeries::linear(n, e).pow(-(n + 1))));
      }
      // milnor -> le
      return sign(cap(tensor_line(dual(cls, DualVariant::upper), 1),
                      HSeries::linear(n, 1).pow(n) *
                          HSeries::linear(n, -e)));
  }
  throw ValueError("unreachable conversion");
}

}  // namespace segre
