#include <catch2/catch_amalgamated.hpp>

#include "segre/ideal.hpp"
#include "segre/parse.hpp"
#include "segre/polynomial.hpp"
#include "segre/rng.hpp"

using namespace segre;

namespace {

RingPtr ring_p3(std::uint32_t p = 32749) {
  return make_ring(p, {"x0", "x1", "x2", "x3"});
}

Polynomial pp(const RingPtr& R, const std::string& s) {
  return parse_polynomial(s, R);
}

Polynomial random_poly(const RingPtr& R, Rng& rng, std::uint32_t max_deg,
                       int terms) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(R->nvars());
    std::uint32_t budget = rng.below(max_deg + 1);
    for (std::uint32_t k = 0; k < budget; ++k) {
      int v = static_cast<int>(rng.below(static_cast<std::uint32_t>(R->nvars())));
      m = m * Monomial::var(R->nvars(), v);
    }
    ts.push_back({m, rng.below(R->field.modulus())});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

Polynomial random_homogeneous(const RingPtr& R, Rng& rng, std::uint32_t deg,
                              int terms) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m = Monomial::one(R->nvars());
    for (std::uint32_t k = 0; k < deg; ++k) {
      int v = static_cast<int>(rng.below(static_cast<std::uint32_t>(R->nvars())));
      m = m * Monomial::var(R->nvars(), v);
    }
    ts.push_back({m, 1 + rng.below(R->field.modulus() - 1)});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

}  // namespace

TEST_CASE("prime field basics") {
  PrimeField F(32749);
  CHECK(F.add(32748, 1) == 0);
  CHECK(F.sub(0, 1) == 32748);
  CHECK(F.mul(F.inv(17), 17) == 1);
  CHECK_THROWS_AS(PrimeField(32748), ValueError);
  CHECK_THROWS_AS(F.inv(0), ValueError);
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t a = 1 + rng.below(32748);
    CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("parser produces canonical sparse polynomials") {
  auto R = ring_p3();
  Polynomial f = pp(R, "x1*x2^3*x3^5");
  REQUIRE(f.term_count() == 1);
  CHECK(f.leading_term().mono[0] == 0);
  CHECK(f.leading_term().mono[1] == 1);
  CHECK(f.leading_term().mono[2] == 3);
  CHECK(f.leading_term().mono[3] == 5);
  CHECK(f.leading_term().coeff == 1);

  CHECK(pp(R, "0").is_zero());
  CHECK(pp(R, "0").terms().empty());

  auto xy = make_ring(32749, {"x", "y"});
  Polynomial g = parse_polynomial("(x+y)^2 - x^2 - 2*x*y", xy);
  CHECK(g == parse_polynomial("y^2", xy));

  CHECK(parse_polynomial("-x + x", xy).is_zero());
  CHECK(parse_polynomial("32750", xy) == parse_polynomial("1", xy));
}

TEST_CASE("parser reports positions and unknown names") {
  auto R = ring_p3();
  CHECK_THROWS_AS(pp(R, "x1 + + x2"), ParseError);
  CHECK_THROWS_AS(pp(R, "y0 + x1"), ParseError);
  CHECK_THROWS_AS(pp(R, "x1^70000"), ParseError);
  CHECK_THROWS_AS(pp(R, "x1 x2"), ParseError);
  try {
    pp(R, "x1 + (x2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("ring operations") {
  auto xy = make_ring(32749, {"x", "y"});
  Polynomial x = parse_polynomial("x", xy);
  Polynomial y = parse_polynomial("y", xy);
  CHECK((x + y) * (x - y) == parse_polynomial("x^2 - y^2", xy));
  CHECK((x * Polynomial::zero(xy)).is_zero());

  auto mod5 = make_ring(5, {"x"});
  Polynomial c = parse_polynomial("(x+1)^3", mod5);
  CHECK(c == parse_polynomial("x^3 + 3*x^2 + 3*x + 1", mod5));

  auto other = make_ring(101, {"x", "y"});
  CHECK_THROWS_AS(x + parse_polynomial("x", other), ValueError);
}

TEST_CASE("ring axioms on random samples") {
  auto R = make_ring(101, {"x", "y", "z"});
  Rng rng(2024);
  for (int i = 0; i < 10000; ++i) {
    Polynomial a = random_poly(R, rng, 3, 3);
    Polynomial b = random_poly(R, rng, 3, 3);
    Polynomial c = random_poly(R, rng, 3, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("monomial order axioms") {
  int n = 3;
  MonomialOrder grevlex = MonomialOrder::grevlex();
  MonomialOrder lex = MonomialOrder::lex();
  Rng rng(5);
  auto random_mono = [&] {
    Monomial m = Monomial::one(n);
    for (int k = 0; k < 6; ++k) {
      if (rng.below(2)) m = m * Monomial::var(n, static_cast<int>(rng.below(3)));
    }
    return m;
  };
  for (int i = 0; i < 2000; ++i) {
    Monomial a = random_mono(), b = random_mono(), c = random_mono();
    for (const MonomialOrder& ord : {grevlex, lex}) {
      int cmp = ord.compare(a, b);
      CHECK(cmp == -ord.compare(b, a));
      if (cmp < 0) CHECK(ord.compare(a * c, b * c) < 0);
      if (cmp == 0) CHECK(a == b);
      CHECK(ord.compare(a * c, a) >= (c.is_one() ? 0 : 1));
    }
  }
  // grevlex and lex agree on univariate monomials.
  for (std::uint16_t e1 = 0; e1 < 9; ++e1) {
    for (std::uint16_t e2 = 0; e2 < 9; ++e2) {
      Monomial a = Monomial::var(1, 0, e1);
      Monomial b = Monomial::var(1, 0, e2);
      CHECK(grevlex.compare(a, b) == lex.compare(a, b));
    }
  }
}

TEST_CASE("grevlex tie-breaking") {
  auto R = make_ring(101, {"x", "y", "z"});
  // Same degree: x*z < y^2 in grevlex (larger trailing exponent loses).
  Polynomial f = parse_polynomial("x*z + y^2", R);
  CHECK(f.leading_term().mono == parse_polynomial("y^2", R).leading_term().mono);
  Polynomial g = parse_polynomial("x^2 + x*y + y^2", R);
  CHECK(g.leading_term().mono == parse_polynomial("x^2", R).leading_term().mono);
}

TEST_CASE("parse/print round-trip") {
  auto R = make_ring(32749, {"x0", "x1", "x2"});
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(R, rng, 5, 6);
    CHECK(parse_polynomial(f.to_string(), R) == f);
  }
}

TEST_CASE("partial derivatives") {
  auto R = ring_p3();
  CHECK(pp(R, "x1^2*x2^3*x3^5").derivative(2) == pp(R, "3*x1^2*x2^2*x3^5"));
  CHECK(pp(R, "x0^7").derivative(1).is_zero());

  auto R6 = make_ring(32749, {"x0", "x1", "x2", "x3", "x4", "x5"});
  Polynomial f =
      parse_polynomial("x0^7 - x1^7 - (x2^3+x3^3+x4^3+x5^3)*x0^4", R6);
  Polynomial expect = parse_polynomial(
      "7*x0^6 - 4*(x2^3+x3^3+x4^3+x5^3)*x0^3", R6);
  CHECK(f.derivative(0) == expect);
}

TEST_CASE("Euler relation ties derivatives to arithmetic") {
  auto R = make_ring(32749, {"x0", "x1", "x2"});
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    std::uint32_t d = 1 + rng.below(6);
    Polynomial f = random_homogeneous(R, rng, d, 5);
    Polynomial sum = Polynomial::zero(R);
    for (int v = 0; v < 3; ++v) {
      sum = sum + Polynomial::variable(R, v) * f.derivative(v);
    }
    CHECK(sum == f.scaled(d));
  }
}

TEST_CASE("jacobian ideal") {
  auto R = ring_p3();
  Ideal j1 = jacobian_ideal(pp(R, "x1*x2*x3"));
  REQUIRE(j1.gens.size() == 3);
  std::vector<Polynomial> expect = {pp(R, "x2*x3"), pp(R, "x1*x3"),
                                    pp(R, "x1*x2")};
  for (const Polynomial& e : expect) {
    CHECK(std::find(j1.gens.begin(), j1.gens.end(), e) != j1.gens.end());
  }

  Ideal j2 = jacobian_ideal(pp(R, "x0^5"));
  REQUIRE(j2.gens.size() == 1);
  CHECK(j2.gens[0].monic() == pp(R, "x0^4"));

  auto R2 = make_ring(32749, {"x0", "x1", "x2"});
  Ideal j3 = jacobian_ideal(parse_polynomial("x0^2+x1^2+x2^2", R2));
  REQUIRE(j3.gens.size() == 3);
  CHECK(j3.gens[0].monic() == parse_polynomial("x0", R2));

  CHECK_THROWS_AS(jacobian_ideal(pp(R, "x0^2 + x1")), ValueError);
  CHECK_THROWS_AS(jacobian_ideal(Polynomial::zero(R)), ValueError);
}

TEST_CASE("substitution composes polynomials") {
  auto R = make_ring(101, {"x", "y"});
  auto S = make_ring(101, {"u"});
  Polynomial f = parse_polynomial("x^2 + y^2 + x*y", R);
  std::vector<Polynomial> images = {parse_polynomial("u", S),
                                    parse_polynomial("u + 1", S)};
  CHECK(f.substitute(images, S) ==
        parse_polynomial("3*u^2 + 3*u + 1", S));
}
