#include <catch2/catch_amalgamated.hpp>

#include "segre/chow.hpp"
#include "segre/rng.hpp"

using namespace segre;

namespace {

ChowClass cls(int n, std::vector<BigInt> a) { return ChowClass(n, std::move(a)); }

ChowClass random_class(Rng& rng, int n, int bound) {
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
  for (auto& v : a) {
    v = static_cast<long long>(rng.below(static_cast<std::uint32_t>(2 * bound + 1))) -
        bound;
  }
  return ChowClass(n, std::move(a));
}

}  // namespace

TEST_CASE("binomial conventions") {
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("series arithmetic") {
  HSeries a = HSeries::linear(3, 2);
  CHECK(a * a.inverse() == HSeries::one(3));
  CHECK(a.pow(-2) * a.pow(2) == HSeries::one(3));
  HSeries b = HSeries::linear(3, -1);
  CHECK(b * b.inverse() == HSeries::one(3));
  CHECK_THROWS_AS(HSeries::constant(3, 2).inverse(), ValueError);
}

TEST_CASE("cap with hyperplane series") {
  // (1+H)^4 on [P^3] is the Chern class of the tangent bundle.
  ChowClass tangent = cap(ChowClass::fundamental(3), HSeries::linear(3, 1).pow(4));
  CHECK(tangent == cls(3, {4, 6, 4, 1}));
  CHECK(csm_projective_space(3) == tangent);

  ChowClass alpha = cls(3, {5, -2, 7, 1});
  CHECK(cap(alpha, HSeries::one(3)) == alpha);

  ChowClass line = ChowClass::multiple(3, 1, 3);
  std::vector<BigInt> h = {0, 1, 0, 0};
  CHECK(cap(line, HSeries(3, h)) == ChowClass::multiple(3, 0, 3));

  CHECK_THROWS_AS(cap(ChowClass::fundamental(2), HSeries::one(3)), ValueError);
}

TEST_CASE("tensor by a line bundle") {
  Rng rng(7);
  ChowClass alpha = random_class(rng, 4, 9);
  CHECK(tensor_line(alpha, 0) == alpha);

  // [X] tensor O(X) for a degree-d divisor is the alternating geometric
  // series dH/(1+dH).
  int n = 4;
  for (long long d : {1, 2, 3}) {
    ChowClass divisor = ChowClass::multiple(n, n - 1, d);
    ChowClass t = tensor_line(divisor, d);
    ChowClass expect = cap(divisor, HSeries::linear(n, d).inverse());
    CHECK(t == expect);
    CHECK(t[n - 1] == d);
    CHECK(t[n - 2] == -d * d);
    CHECK(t[n - 3] == d * d * d);
  }
}

TEST_CASE("tensor is a Pic action") {
  Rng rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (long long a = -5; a <= 5; ++a) {
      for (long long b = -5; b <= 5; ++b) {
        ChowClass alpha = random_class(rng, n, 20);
        CHECK(tensor_line(tensor_line(alpha, a), b) ==
              tensor_line(alpha, a + b));
      }
    }
  }
}

TEST_CASE("tensor interacts with Chern classes of twisted bundles") {
  // For E = O(mH) of rank 1:
  // (c(E) cap a) tensor O(e) = c(E tensor O(e))/c(O(e)) cap (a tensor O(e)).
  Rng rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng.below(4));
    long long m = static_cast<long long>(rng.below(9)) - 4;
    long long e = static_cast<long long>(rng.below(9)) - 4;
    ChowClass alpha = random_class(rng, n, 50);
    ChowClass lhs = tensor_line(cap(alpha, HSeries::linear(n, m)), e);
    HSeries factor =
        HSeries::linear(n, m + e) * HSeries::linear(n, e).inverse();
    ChowClass rhs = cap(tensor_line(alpha, e), factor);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("duality sign conventions") {
  Rng rng(19);
  ChowClass alpha = random_class(rng, 5, 30);
  CHECK(dual(dual(alpha, DualVariant::lower), DualVariant::lower) == alpha);

  ChowClass beta = cls(3, {-1, 3, 0, 0});
  CHECK(dual(beta, DualVariant::lower) == cls(3, {-1, -3, 0, 0}));
  CHECK(dual(beta, DualVariant::upper) == cls(3, {1, 3, 0, 0}));

  // The upper dual squares to the identity in any parity.
  for (int n = 2; n <= 5; ++n) {
    ChowClass gamma = random_class(rng, n, 30);
    CHECK(dual(dual(gamma, DualVariant::upper), DualVariant::upper) == gamma);
  }
}

TEST_CASE("residual Segre formula") {
  // Empty residual scheme: the divisor alone contributes dH/(1+dH).
  for (int n = 2; n <= 4; ++n) {
    for (long long delta : {1, 2, 5}) {
      ChowClass got = residual_segre(n, delta, ChowClass::zero(n));
      ChowClass expect = cap(ChowClass::multiple(n, n - 1, delta),
                             HSeries::linear(n, delta).inverse());
      CHECK(got == expect);
    }
  }

  // The weighted three-plane arrangement: residual of degree 7 against the
  // three coordinate lines reproduces the singular-scheme Segre class.
  ChowClass lines = cls(3, {-10, 3, 0, 0});
  CHECK(residual_segre(3, 7, lines) == cls(3, {270, -46, 7, 0}));

  // Doubled line in the plane: residual route equals the direct geometric
  // series for the degree-2 divisor.
  ChowClass line =
      cap(ChowClass::multiple(2, 1, 1), HSeries::linear(2, 1).inverse());
  ChowClass doubled = residual_segre(2, 1, line);
  ChowClass direct =
      cap(ChowClass::multiple(2, 1, 2), HSeries::linear(2, 2).inverse());
  CHECK(doubled == direct);
  CHECK(doubled == cls(2, {-4, 2, 0}));
}

TEST_CASE("complete intersection Segre classes") {
  ChowClass hyper = ci_segre(4, {BigInt(1)});
  CHECK(hyper == cls(4, {-1, 1, -1, 1, 0}));

  CHECK(ci_segre(3, {BigInt(1), BigInt(2)}) == cls(3, {-6, 2, 0, 0}));
  CHECK(ci_segre(3, {BigInt(2), BigInt(2)}) == cls(3, {-16, 4, 0, 0}));
  CHECK_THROWS_AS(ci_segre(2, {BigInt(1), BigInt(1), BigInt(2)}), ValueError);
}

TEST_CASE("integral reads the point coefficient") {
  CHECK(integral(ChowClass::multiple(3, 0, 1)) == 1);
  CHECK(integral(cap(ChowClass::fundamental(3),
                     HSeries::linear(3, 1).pow(4))) == 4);
  CHECK(integral(cls(3, {-10, 3, 0, 0})) == -10);
}

TEST_CASE("Bezout consistency for complete intersections") {
  Rng rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 2 + static_cast<int>(rng.below(4));
    int r = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
    std::vector<BigInt> degs;
    BigInt prod = 1;
    HSeries chern = HSeries::one(n);
    for (int k = 0; k < r; ++k) {
      long long d = 1 + rng.below(4);
      degs.push_back(d);
      prod *= d;
      chern = chern * HSeries::linear(n, d);
    }
    ChowClass s = ci_segre(n, degs);
    CHECK(cap(s, chern)[n - r] == prod);
  }
}

TEST_CASE("class rendering") {
  CHECK(cls(3, {-10, 3, 0, 0}).to_string() == "3 [P^1] - 10 [P^0]");
  CHECK(ChowClass::zero(2).to_string() == "0");
  CHECK(cls(2, {1, 0, -2}).to_string() == "-2 [P^2] + 1 [P^0]");
}

TEST_CASE("coefficients stay exact at scale") {
  // Repeated tensor operations blow up binomially; exactness must hold.
  ChowClass alpha = ChowClass::multiple(6, 5, 9);
  ChowClass t = tensor_line(alpha, 9);
  CHECK(tensor_line(t, -9) == alpha);
  BigInt big = int_pow(BigInt(12), 40);
  ChowClass huge = ChowClass::multiple(4, 4, big);
  CHECK(tensor_line(tensor_line(huge, 7), -7) == huge);
}
