#include <doctest.h>

#include "oracles.hpp"
#include "qcflag/commalg.hpp"
#include "qcflag/toda.hpp"

using namespace qcflag;
using commalg::CoefficientMode;

static Poly P(const char* s) { return Poly::parse(s); }

static std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

TEST_SUITE("commalg") {
  TEST_CASE("order examples") {
    CHECK(commalg::grevlex_compare(Monomial(Var::b(2)), Monomial(Var::b(1))) < 0);
    CHECK(commalg::grevlex_compare(P("b2^2").leading_term().first, P("b2*b1").leading_term().first) < 0);
    CHECK(commalg::grevlex_compare(Monomial(Var::b(1)), Monomial(Var::b(1))) == 0);
  }

  TEST_CASE("n=2") {
    auto gb = commalg::buchberger({P("b1^2 - q1")}, 1, CoefficientMode::Parametric);
    REQUIRE(gb.generators().size() == 1);
    CHECK(gb.generators()[0] == P("b1^2 - q1"));
    CHECK(commalg::normal_form(P("b1^2"), gb) == P("q1"));
    CHECK(strings(commalg::standard_monomials(gb)) == std::vector<std::string>{"1", "b1"});
  }

  TEST_CASE("linear generator") {
    auto gb = commalg::buchberger({P("b1")}, 1, CoefficientMode::Parametric);
    CHECK(gb.generators() == std::vector<Poly>{P("b1")});
    CHECK(commalg::normal_form(P("b1^3 + 4*b1 + q1"), gb) == P("q1"));
  }

  TEST_CASE("n=3 classical basis") {
    const auto rel = toda::quantum_relations(3).relations;
    auto gb = commalg::buchberger(rel, 2, CoefficientMode::Specialized);
    CHECK(strings(commalg::standard_monomials(gb)) ==
          std::vector<std::string>{"1", "b2", "b1", "b2^2", "b1*b2", "b1*b2^2"});
    // a standard monomial is its own normal form
    for (const auto& m : commalg::standard_monomials(gb)) CHECK(commalg::normal_form(Poly(m, 1), gb) == Poly(m, 1));
  }

  TEST_CASE("normal forms agree with textbook division") {
    for (int n = 3; n <= 4; ++n) {
      const auto rel = toda::quantum_relations(n).relations;
      auto gb = commalg::buchberger(rel, n - 1, CoefficientMode::Specialized);
      std::vector<Poly> classical_rel;
      for (const auto& r : rel) classical_rel.push_back(r.at_q_zero());
      std::mt19937 rng(100 + n);
      std::vector<Var> vars;
      for (int i = 1; i < n; ++i) vars.push_back(Var::b(i));
      for (int t = 0; t < 60; ++t) {
        const Poly f = oracle::random_poly(rng, vars, 4, 4);
        CHECK(commalg::normal_form(f, gb) == oracle::divide_remainder(f, gb.generators()));
        // members of the ideal reduce to zero
        Poly member;
        for (const auto& r : classical_rel) member += oracle::random_poly(rng, vars, 2, 2) * r;
        CHECK(commalg::normal_form(member, gb).is_zero());
      }
    }
  }

  TEST_CASE("classical n=3 product with an independent expansion") {
    const auto rel = toda::quantum_relations(3).relations;
    auto gb = commalg::buchberger(rel, 2, CoefficientMode::Specialized);
    const Poly prod = P("b1") * P("b2^2*b1");
    const auto basis = commalg::standard_monomials(gb);
    const auto coords = commalg::coordinates(prod, gb, basis);
    const Poly expected = oracle::divide_remainder(prod, gb.generators());
    Poly rebuilt;
    for (std::size_t k = 0; k < basis.size(); ++k) rebuilt += coords[k] * Poly(basis[k], 1);
    CHECK(rebuilt == expected);
    // in degree 8 everything vanishes classically
    CHECK(expected.is_zero());
  }

  TEST_CASE("parametric n=3 basis") {
    const auto rel = toda::quantum_relations(3).relations;
    auto gb = commalg::buchberger(rel, 2, CoefficientMode::Parametric);
    CHECK(commalg::standard_monomials(gb).size() == 6);
    for (const auto& r : rel) CHECK(commalg::normal_form(r, gb).is_zero());
    // b2 o b2 in the monomial basis
    CHECK(commalg::normal_form(P("b2^2"), gb) == P("b2^2"));
  }

  TEST_CASE("quotient sizes") {
    const int expected[] = {0, 0, 2, 6, 24, 120};
    for (int n = 2; n <= 5; ++n) {
      auto gb = commalg::buchberger(toda::quantum_relations(n).relations, n - 1, CoefficientMode::Specialized);
      CHECK(int(commalg::standard_monomials(gb).size()) == expected[n]);
    }
  }
}
