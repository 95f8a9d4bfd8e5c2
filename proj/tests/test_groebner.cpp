#include <catch2/catch_amalgamated.hpp>

#include "segre/groebner.hpp"
#include "segre/parse.hpp"
#include "segre/rng.hpp"

using namespace segre;

namespace {

Ideal ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, R));
  return Ideal(R, std::move(ps));
}

}  // namespace

TEST_CASE("groebner basis of a principal ideal") {
  auto R = make_ring(101, {"x", "y"});
  GroebnerBasis gb = groebner_basis(ideal_of(R, {"x"}), MonomialOrder::grevlex());
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == parse_polynomial("x", R));
}

TEST_CASE("one Buchberger step completes x^2+y^2, xy") {
  auto R = make_ring(101, {"x", "y"});
  GroebnerBasis gb =
      groebner_basis(ideal_of(R, {"x^2+y^2", "x*y"}), MonomialOrder::grevlex());
  REQUIRE(gb.elements().size() == 3);
  // Reduced basis, listed by increasing leading monomial.
  std::vector<Polynomial> expect = {parse_polynomial("x*y", R),
                                    parse_polynomial("x^2+y^2", R),
                                    parse_polynomial("y^3", R)};
  CHECK(gb.elements() == expect);
  CHECK(certify(gb));
}

TEST_CASE("lex elimination finds the twisted-cubic relation") {
  auto R = make_ring(32749, {"x", "y", "z"}, MonomialOrder::lex());
  GroebnerBasis gb =
      groebner_basis(ideal_of(R, {"y - x^2", "z - x^3"}), MonomialOrder::lex());
  Polynomial rel = parse_polynomial("y^3 - z^2", gb.ring());
  bool found = false;
  for (const Polynomial& g : gb.elements()) {
    if (g == rel) found = true;
  }
  CHECK(found);
}

TEST_CASE("block order eliminates the leading block") {
  auto R = make_ring(32749, {"x", "y", "z"});
  MonomialOrder elim = MonomialOrder::elimination_block(1);
  GroebnerBasis gb = groebner_basis(ideal_of(R, {"y - x^2", "z - x^3"}), elim);
  bool found = false;
  for (const Polynomial& g : gb.elements()) {
    bool uses_x = false;
    for (const Term& t : g.terms()) {
      if (t.mono[0] != 0) uses_x = true;
    }
    if (!uses_x && !g.is_zero() &&
        g == parse_polynomial("y^3 - z^2", gb.ring())) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("normal form behaviour") {
  auto R = make_ring(101, {"x", "y"});
  GroebnerBasis gx = groebner_basis(ideal_of(R, {"x"}), MonomialOrder::grevlex());
  CHECK(normal_form(parse_polynomial("x^2", R), gx).is_zero());
  CHECK(normal_form(parse_polynomial("x^2 + y", R), gx) ==
        parse_polynomial("y", R));

  // y^3 is irreducible against the raw generators but lands in the ideal
  // once the basis is completed.
  GroebnerBasis raw(R, {parse_polynomial("x^2+y^2", R).monic(),
                        parse_polynomial("x*y", R).monic()});
  CHECK(normal_form(parse_polynomial("y^3", R), raw) ==
        parse_polynomial("y^3", R));
  GroebnerBasis full =
      groebner_basis(ideal_of(R, {"x^2+y^2", "x*y"}), MonomialOrder::grevlex());
  CHECK(normal_form(parse_polynomial("y^3", R), full).is_zero());

  // Idempotence.
  Polynomial f = parse_polynomial("x^3 + x*y + y + 7", R);
  Polynomial nf = normal_form(f, full);
  CHECK(normal_form(nf, full) == nf);
}

TEST_CASE("zero-dimensionality test") {
  auto R = make_ring(101, {"x", "y"});
  GroebnerBasis pure =
      groebner_basis(ideal_of(R, {"x^2", "y^3"}), MonomialOrder::grevlex());
  CHECK(is_zero_dimensional(pure));
  GroebnerBasis curve =
      groebner_basis(ideal_of(R, {"x*y"}), MonomialOrder::grevlex());
  CHECK_FALSE(is_zero_dimensional(curve));
  GroebnerBasis completed =
      groebner_basis(ideal_of(R, {"x^2+y^2", "x*y"}), MonomialOrder::grevlex());
  CHECK(is_zero_dimensional(completed));
}

TEST_CASE("quotient dimension counts standard monomials") {
  auto R = make_ring(101, {"x", "y"});
  CHECK(quotient_dimension(groebner_basis(ideal_of(R, {"x^2", "y^2"}),
                                          MonomialOrder::grevlex())) == 4);
  CHECK(quotient_dimension(groebner_basis(ideal_of(R, {"x^2", "x*y", "y^2"}),
                                          MonomialOrder::grevlex())) == 3);
  auto R1 = make_ring(101, {"x"});
  CHECK(quotient_dimension(groebner_basis(ideal_of(R1, {"x - 1"}),
                                          MonomialOrder::grevlex())) == 1);
  GroebnerBasis curve =
      groebner_basis(ideal_of(R, {"x*y"}), MonomialOrder::grevlex());
  CHECK_THROWS_AS(quotient_dimension(curve), ValueError);
}

TEST_CASE("membership soundness for original generators") {
  auto R = make_ring(32749, {"x", "y", "z"});
  Ideal I = ideal_of(R, {"x^2*y - z^2", "x*z - y^2 + 1", "y^3 + x - 5"});
  GroebnerBasis gb = groebner_basis(I, MonomialOrder::grevlex());
  for (const Polynomial& g : I.gens) {
    CHECK(normal_form(g, gb).is_zero());
  }
  CHECK(certify(gb));
}

TEST_CASE("quotient dimension is order independent") {
  Rng rng(424242);
  auto R = make_ring(32749, {"a", "b", "c"});
  int done = 0;
  while (done < 20) {
    // Random zero-dimensional ideals: one pure power per variable plus noise.
    std::vector<Polynomial> gens;
    for (int v = 0; v < 3; ++v) {
      Polynomial g = Polynomial::variable(R, v, static_cast<std::uint16_t>(
                                                    1 + rng.below(4)));
      for (int extra = 0; extra < 2; ++extra) {
        Monomial m = Monomial::one(3);
        std::uint32_t deg = rng.below(4);
        for (std::uint32_t k = 0; k < deg; ++k) {
          m = m * Monomial::var(3, static_cast<int>(rng.below(3)));
        }
        if (MonomialOrder::grevlex().less(m, g.leading_term().mono)) {
          g = g + Polynomial::monomial(R, m, rng.below(32749));
        }
      }
      gens.push_back(g);
    }
    Ideal I(R, gens);
    GroebnerOptions opts;
    opts.max_degree = 400;  // lex bases climb far higher than grevlex ones
    GroebnerBasis g1 = groebner_basis(I, MonomialOrder::grevlex(), opts);
    if (!is_zero_dimensional(g1)) continue;
    GroebnerBasis g2 = groebner_basis(I, MonomialOrder::lex(), opts);
    REQUIRE(is_zero_dimensional(g2));
    CHECK(quotient_dimension(g1) == quotient_dimension(g2));
    ++done;
  }
}

TEST_CASE("deterministic bases") {
  auto R = make_ring(32749, {"x", "y", "z"});
  Ideal I = ideal_of(R, {"x^2 + y*z", "y^2 - x*z", "z^3 - x*y + 1"});
  GroebnerBasis a = groebner_basis(I, MonomialOrder::grevlex());
  GroebnerBasis b = groebner_basis(I, MonomialOrder::grevlex());
  REQUIRE(a.elements().size() == b.elements().size());
  for (std::size_t i = 0; i < a.elements().size(); ++i) {
    CHECK(a.elements()[i] == b.elements()[i]);
  }
}

TEST_CASE("budget errors are loud") {
  auto R = make_ring(32749, {"x", "y", "z"});
  Ideal I = ideal_of(R, {"x^5*y - z^2 + x", "y^4*z - x^3 + 2", "z^5 - y + x^2"});
  GroebnerOptions opts;
  opts.max_degree = 4;
  CHECK_THROWS_AS(groebner_basis(I, MonomialOrder::grevlex(), opts), BudgetError);
}

TEST_CASE("zero ideal gives the empty basis") {
  auto R = make_ring(101, {"x", "y"});
  Ideal I(R, {});
  GroebnerBasis gb = groebner_basis(I, MonomialOrder::grevlex());
  CHECK(gb.elements().empty());
  CHECK_FALSE(is_zero_dimensional(gb));
  Polynomial f = parse_polynomial("x + y", R);
  CHECK(normal_form(f, gb) == f);
}
