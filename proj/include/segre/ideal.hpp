#pragma once

#include <utility>
#include <vector>

#include "segre/polynomial.hpp"

namespace segre {

/// A generator list. Zero generators are dropped on construction; the
/// order of the list never influences downstream results.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
    gens.reserve(g.size());
    for (Polynomial& f : g) {
      if (f.is_zero()) continue;
      f.require_same_ring(Polynomial::zero(ring));
      gens.push_back(std::move(f));
    }
  }

  bool is_zero() const noexcept { return gens.empty(); }

  bool is_homogeneous() const noexcept {
    for (const Polynomial& f : gens) {
      if (!f.is_homogeneous()) return false;
    }
    return true;
  }
};

/// Ideal of partial derivatives of a homogeneous polynomial. The polynomial
/// itself is redundant as a generator (Euler relation, valid because the
/// characteristic exceeds the degree), so only the partials are kept; zero
/// partials are dropped.
inline Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_zero()) throw ValueError("jacobian of the zero polynomial");
  if (!f.is_homogeneous()) {
    throw ValueError("jacobian_ideal expects a homogeneous polynomial");
  }
  const RingPtr& ring = f.ring();
  if (ring->field.modulus() <= f.total_degree()) {
    throw ValueError("field characteristic must exceed the degree");
  }
  std::vector<Polynomial> partials;
  partials.reserve(static_cast<std::size_t>(ring->nvars()));
  for (int i = 0; i < ring->nvars(); ++i) {
    partials.push_back(f.derivative(i));
  }
  return Ideal(ring, std::move(partials));
}

}  // namespace segre
