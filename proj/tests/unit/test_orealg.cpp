#include <doctest.h>

#include "oracles.hpp"
#include "qcflag/connection.hpp"
#include "qcflag/orealg.hpp"
#include "qcflag/toda.hpp"

using namespace qcflag;
using orealg::OreOp;

static Poly P(const char* s) { return Poly::parse(s); }

// Action on functions of q (and h as a constant): D_i f = h q_i df/dq_i.
static Poly act(const OreOp& op, const Poly& f) {
  Poly out;
  for (const auto& [e, c] : op.terms()) {
    Poly g = f;
    for (int i = 0; i < kMaxRank; ++i)
      for (int k = 0; k < e[i]; ++k) g = Poly(Var::h()) * g.t_derivative(i + 1);
    out += c * g;
  }
  return out;
}

static OreOp random_op(std::mt19937& rng, int rank) {
  OreOp op;
  std::uniform_int_distribution<int> ex(0, 2);
  std::vector<Var> coeff_vars{Var::h()};
  for (int i = 1; i <= rank; ++i) coeff_vars.push_back(Var::q(i));
  for (int t = 0; t < 3; ++t) {
    orealg::Exps e{};
    for (int i = 0; i < rank; ++i) e[i] = std::uint16_t(ex(rng));
    op += OreOp::monomial(e, oracle::random_poly(rng, coeff_vars, 2, 2));
  }
  return op;
}

TEST_SUITE("orealg") {
  TEST_CASE("commutation examples") {
    const OreOp d1 = OreOp::d(1);
    CHECK(d1 * OreOp(P("q1")) == OreOp(P("q1")) * d1 + OreOp(P("h*q1")));
    CHECK(d1 * OreOp(P("q2")) == OreOp(P("q2")) * d1);
    CHECK(d1 * d1 * OreOp(P("q1")) ==
          OreOp(P("q1")) * d1 * d1 + OreOp(P("2*h*q1")) * d1 + OreOp(P("h^2*q1")));
  }

  TEST_CASE("products agree with the action on test functions") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
      const OreOp a = random_op(rng, 2), b = random_op(rng, 2);
      const Poly f = oracle::random_poly(rng, {Var::q(1), Var::q(2), Var::h()}, 3, 3);
      CHECK(act(a * b, f) == act(a, act(b, f)));
    }
  }

  TEST_CASE("text and JSON round trips") {
    std::mt19937 rng(41);
    for (int t = 0; t < 50; ++t) {
      const OreOp a = random_op(rng, 3);
      CHECK(OreOp::parse(a.to_string()) == a);
      CHECK(OreOp::from_json(nlohmann::json::parse(a.to_json().dump())) == a);
    }
  }

  TEST_CASE("n=2 normal form") {
    auto gb = orealg::left_buchberger({OreOp::parse("d1^2 - q1")}, 1);
    REQUIRE(gb.elements().size() == 1);
    CHECK(gb.elements()[0] == OreOp::parse("d1^2 - q1"));
    auto nf = orealg::left_normal_form(OreOp::d(1) * OreOp::d(1), gb);
    CHECK(nf.h_power == 0);
    CHECK(nf.remainder == OreOp(P("q1")));
    CHECK(orealg::left_normal_form(OreOp::d(1), gb).remainder == OreOp::d(1));
  }

  TEST_CASE("n=3 basis and one column of omega") {
    auto gb = orealg::left_buchberger(toda::quantize(toda::quantum_relations(3)), 2);
    const auto basis = orealg::standard_operator_basis(gb);
    std::vector<std::string> got;
    for (const auto& s : basis) got.push_back(s.op.to_string());
    CHECK(got == std::vector<std::string>{"1", "d2", "d1", "d2^2", "d1*d2", "d1*d2^2"});

    auto nf = orealg::left_normal_form(OreOp::d(2) * basis[5].op, gb);
    const std::vector<Poly> want{P("q1*q2 + q2^2"), 0, 0, P("-q2"), P("2*q2"), 0};
    for (int k = 0; k < 6; ++k) {
      auto it = nf.remainder.terms().find(basis[k].exponents);
      Poly c = it == nf.remainder.terms().end() ? Poly() : it->second;
      c = c.divided_by_monomial(Monomial(Var::h(), nf.h_power));
      auto parts = c.split_by(Var::h());
      CHECK(parts[0] == want[k]);
    }
  }

  TEST_CASE("non-finite quotient is rejected") {
    auto gb = orealg::left_buchberger({OreOp::parse("d1*d2")}, 2);
    CHECK_THROWS(FlagContext::from_basis(gb));
  }
}
