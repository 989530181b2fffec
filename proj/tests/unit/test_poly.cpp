#include <doctest.h>

#include "oracles.hpp"
#include "qcflag/matrix.hpp"

using namespace qcflag;

static Poly P(const char* s) { return Poly::parse(s); }

TEST_SUITE("polycore") {
  TEST_CASE("ring examples") {
    CHECK(P("b1 + q1") * P("b1 - q1") == P("b1^2 - q1^2"));
    CHECK((Poly() * P("b1^3 + 7*q2")).is_zero());
    CHECK(P("b2^2 - q2") * P("b1") == P("b2^2*b1 - q2*b1"));
  }

  TEST_CASE("weighted degree") {
    CHECK(P("q1*b2").weighted_degree().is(6));
    CHECK(P("b1^2 + q1").weighted_degree().is(4));
    CHECK_FALSE(P("b1 + q1").weighted_degree().homogeneous());
  }

  TEST_CASE("specialization and substitution") {
    CHECK(P("b2^2 - q2").at_q_zero() == P("b2^2"));
    CHECK(P("b1*q1 + 3").substitute({}) == P("b1*q1 + 3"));
    CHECK(P("q1*q2 + q2^2").substitute({{Var::q(1), Poly()}}) == P("q2^2"));
  }

  TEST_CASE("t derivative") {
    CHECK(P("q1^2*q2").t_derivative(1) == P("2*q1^2*q2"));
    CHECK(P("q2").t_derivative(1).is_zero());
    CHECK(P("q1*q2 + q2^2").t_derivative(2) == P("q1*q2 + 2*q2^2"));
  }

  TEST_CASE("grevlex agrees with the definition") {
    CHECK(Monomial(Var::b(2)) < Monomial(Var::b(1)));
    CHECK(Monomial(Var::b(2), 2) < Monomial(Var::b(2)) * Monomial(Var::b(1)));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ex(0, 3);
    const std::vector<Var> vars{Var::b(1), Var::b(2), Var::b(3), Var::q(1), Var::q(2), Var::h()};
    for (int t = 0; t < 2000; ++t) {
      Monomial a, b;
      for (const auto& v : vars) {
        a.set_exponent(v, ex(rng));
        b.set_exponent(v, ex(rng));
      }
      const int want = oracle::grevlex_cmp(a, b);
      const auto got = a <=> b;
      CHECK((got < 0 ? -1 : got > 0 ? 1 : 0) == want);
    }
  }

  TEST_CASE("arithmetic agrees with evaluation at random points") {
    std::mt19937 rng(11);
    const std::vector<Var> vars{Var::b(1), Var::b(2), Var::q(1), Var::q(2), Var::h()};
    for (int t = 0; t < 200; ++t) {
      const Poly f = oracle::random_poly(rng, vars, 5, 2);
      const Poly g = oracle::random_poly(rng, vars, 4, 2);
      const auto pt = oracle::random_point(rng);
      CHECK(oracle::evaluate(f * g, pt) == oracle::evaluate(f, pt) * oracle::evaluate(g, pt));
      CHECK(oracle::evaluate(f + g, pt) == oracle::evaluate(f, pt) + oracle::evaluate(g, pt));
      CHECK(oracle::evaluate(f - g, pt) == oracle::evaluate(f, pt) - oracle::evaluate(g, pt));
      CHECK(oracle::evaluate(f.pow(3), pt) == oracle::evaluate(f * f * f, pt));
    }
  }

  TEST_CASE("text and JSON round trips") {
    std::mt19937 rng(23);
    const std::vector<Var> vars{Var::b(1), Var::b(3), Var::x(2), Var::q(1), Var::q(3), Var::h()};
    for (int t = 0; t < 300; ++t) {
      const Poly f = oracle::random_poly(rng, vars, 6, 3);
      CHECK(Poly::parse(f.to_string()) == f);
      CHECK(Poly::from_json(nlohmann::json::parse(f.to_json().dump())) == f);
    }
    CHECK(P("0").is_zero());
    CHECK(P("-1/3*b1*q2 + 2/5").to_string() == "-1/3*b1*q2 + 2/5");
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(P("b1 +"), ParseError);
    CHECK_THROWS_AS(P("z1"), ParseError);
    CHECK_THROWS_AS(P("b1^"), ParseError);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("product agrees with the triple loop") {
    std::mt19937 rng(5);
    const std::vector<Var> vars{Var::q(1), Var::q(2)};
    for (int t = 0; t < 20; ++t) {
      PolyMatrix a(4, 3), b(3, 5);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = (rng() % 3 == 0) ? Poly() : oracle::random_poly(rng, vars, 2, 2);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) b(i, j) = (rng() % 3 == 0) ? Poly() : oracle::random_poly(rng, vars, 2, 2);
      CHECK(a * b == oracle::naive_product(a, b));
    }
  }

  TEST_CASE("inverses") {
    PolyMatrix u = PolyMatrix::identity(4);
    u(0, 2) = P("q1");
    u(1, 3) = P("q2^2 - q1");
    u(0, 3) = P("3*q1*q2");
    CHECK(u * u.unipotent_inverse() == PolyMatrix::identity(4));
    PolyMatrix c = PolyMatrix::parse({{"1", "0", "0"}, {"0", "-1", "1"}, {"0", "1", "0"}});
    CHECK(c * c.rational_inverse() == PolyMatrix::identity(3));
    CHECK_THROWS(PolyMatrix::parse({{"1", "1"}, {"1", "1"}}).rational_inverse());
  }

  TEST_CASE("JSON round trip") {
    std::mt19937 rng(29);
    PolyMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = oracle::random_poly(rng, {Var::q(1), Var::b(2)}, 3, 2);
    CHECK(PolyMatrix::from_json(nlohmann::json::parse(a.to_json().dump())) == a);
    CHECK(PolyMatrix::parse(a.to_strings()) == a);
  }

  TEST_CASE("block diagonals") {
    BlockPartition blocks({0, 1, 1, 2});
    CHECK(blocks.diagonal_of(0, 3) == 2);
    CHECK(blocks.diagonal_of(3, 0) == -2);
    PolyMatrix m = PolyMatrix::identity(4);
    CHECK(blocks.slices(m).size() == 1);
    CHECK(blocks.slices(m).begin()->first == 0);
    CHECK(blocks.is_triangular(m, 0));
    CHECK_FALSE(blocks.is_triangular(m, 1));
  }

  TEST_CASE("two-slab LaTeX for wide matrices") {
    PolyMatrix w(2, 24);
    const std::string s = w.to_latex_slabs(15);
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = s.find("\\begin{pmatrix}", pos)) != std::string::npos; ++pos) ++count;
    CHECK(count == 2);
    CHECK(s.find("% columns 15-23") != std::string::npos);
    CHECK(PolyMatrix(2, 3).to_latex_slabs(15) == PolyMatrix(2, 3).to_latex());
  }
}
