#include <doctest.h>

#include "oracles.hpp"
#include "qcflag/toda.hpp"

using namespace qcflag;

static Poly P(const char* s) { return Poly::parse(s); }

TEST_SUITE("toda") {
  TEST_CASE("Toda matrices") {
    CHECK(toda::toda_matrix(2).entries == PolyMatrix::parse({{"b1", "q1"}, {"-1", "-b1"}}));
    CHECK(toda::toda_matrix(3).entries ==
          PolyMatrix::parse({{"b1", "q1", "0"}, {"-1", "b2 - b1", "q2"}, {"0", "-1", "-b2"}}));
    for (int n = 2; n <= 5; ++n) {
      const auto& z = toda::toda_matrix(n).entries;
      Poly trace;
      for (int i = 0; i < n; ++i) trace += z(i, i);
      CHECK(trace.is_zero());
    }
  }

  TEST_CASE("characteristic coefficients agree with the Leibniz determinant") {
    // lambda is played by x1, which never occurs in the Toda matrix
    for (int n = 2; n <= 6; ++n) {
      PolyMatrix m = toda::toda_matrix(n).entries;
      for (int i = 0; i < n; ++i) m(i, i) += Poly(Var::x(1));
      const auto by_power = oracle::leibniz_det(m).split_by(Var::x(1));
      const auto coeffs = toda::characteristic_coefficients(toda::toda_matrix(n));
      REQUIRE(int(coeffs.size()) == n + 1);
      for (int k = 0; k <= n; ++k) {
        auto it = by_power.find(k);
        CHECK(coeffs[k] == (it == by_power.end() ? Poly() : it->second));
      }
    }
  }

  TEST_CASE("relations") {
    CHECK(toda::quantum_relations(2).relations == std::vector<Poly>{P("b1^2 - q1")});
    CHECK(toda::quantum_relations(3).relations ==
          std::vector<Poly>{P("b1^2 + b2^2 - b1*b2 - q1 - q2"), P("b1*b2^2 - b1^2*b2 + q1*b2 - q2*b1")});
    for (int n = 2; n <= 5; ++n) {
      const auto rel = toda::quantum_relations(n).relations;
      REQUIRE(int(rel.size()) == n - 1);
      for (int i = 0; i < n - 1; ++i) CHECK(rel[i].weighted_degree().is(2 * (i + 2)));
    }
  }

  TEST_CASE("quantization") {
    const auto ops3 = toda::quantize(toda::quantum_relations(3));
    CHECK(ops3[0] == orealg::OreOp::parse("d1^2 + d2^2 - d1*d2 - q1 - q2"));
    CHECK(ops3[1] == orealg::OreOp::parse("d1*d2^2 - d1^2*d2 + q1*d2 - q2*d1"));
    CHECK(toda::quantize(toda::quantum_relations(2))[0] == orealg::OreOp::parse("d1^2 - q1"));
    for (int n = 2; n <= 5; ++n) {
      const auto rs = toda::quantum_relations(n);
      const auto ops = toda::quantize(rs);
      for (std::size_t i = 0; i < ops.size(); ++i) CHECK(ops[i].symbol() == rs.relations[i]);
    }
  }
}
