#include <doctest.h>

#include <map>
#include <random>

#include "qcflag/pipeline.hpp"

using namespace qcflag;
using schubert::Permutation;

static Poly P(const char* s) { return Poly::parse(s); }

namespace {

// Schubert polynomials from the top one, descending along randomly chosen
// ascents: S_w = d_i S_{w s_i} whenever w(i) < w(i+1).
Poly schubert_by_random_path(Permutation w, std::mt19937& rng, std::map<Permutation, Poly>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const int n = int(w.size());
  std::vector<int> ascents;
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] < w[i + 1]) ascents.push_back(i);
  Poly result;
  if (ascents.empty()) {
    result = Poly(1L);
    for (int k = 1; k < n; ++k) result = result * Poly(Var::x(k), n - k);
  } else {
    const int i = ascents[rng() % ascents.size()];
    Permutation up = w;
    std::swap(up[i], up[i + 1]);
    result = schubert::divided_difference(schubert_by_random_path(up, rng, memo), i + 1);
  }
  memo[w] = result;
  return result;
}

}  // namespace

TEST_SUITE("schubert") {
  TEST_CASE("permutation helpers") {
    CHECK(schubert::length({3, 2, 1}) == 3);
    CHECK(schubert::length({1, 2, 3, 4}) == 0);
    CHECK(schubert::inverse({2, 3, 1}) == Permutation{3, 1, 2});
    CHECK(schubert::lehmer_code({3, 1, 4, 2}) == std::vector<int>{2, 0, 1, 0});
    CHECK(schubert::permutations_by_length(4).size() == 24);
  }

  TEST_CASE("divided differences") {
    CHECK(schubert::divided_difference(P("x1^2"), 1) == P("x1 + x2"));
    CHECK(schubert::divided_difference(P("x1*x2"), 1).is_zero());
    CHECK(schubert::divided_difference(P("x2"), 2) == P("1"));
  }

  TEST_CASE("S3 list") {
    const auto fam = schubert::schubert_polynomials(3);
    std::map<Permutation, Poly> want{{{1, 2, 3}, P("1")},       {{2, 1, 3}, P("x1")},    {{1, 3, 2}, P("x1 + x2")},
                                     {{2, 3, 1}, P("x1*x2")},   {{3, 1, 2}, P("x1^2")}, {{3, 2, 1}, P("x1^2*x2")}};
    REQUIRE(fam.classes.size() == 6);
    for (const auto& c : fam.classes) CHECK(c.x_poly == want.at(c.w));
    std::vector<Permutation> order;
    for (const auto& c : fam.classes) order.push_back(c.w);
    CHECK(order == std::vector<Permutation>{{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});
  }

  TEST_CASE("S4 polynomials do not depend on the path") {
    const auto fam = schubert::schubert_polynomials(4);
    for (unsigned seed = 1; seed <= 5; ++seed) {
      std::mt19937 rng(seed);
      std::map<Permutation, Poly> memo;
      for (const auto& c : fam.classes) CHECK(schubert_by_random_path(c.w, rng, memo) == c.x_poly);
    }
    for (std::size_t k = 1; k < fam.classes.size(); ++k)
      CHECK(schubert::length(fam.classes[k - 1].w) <= schubert::length(fam.classes[k].w));
  }

  TEST_CASE("b variables") {
    CHECK(schubert::to_b_variables(P("x1"), 3) == P("b2"));
    CHECK(schubert::to_b_variables(P("x2"), 3) == P("b1 - b2"));
    CHECK(schubert::to_b_variables(P("x3"), 3) == P("-b1"));
    CHECK(schubert::to_b_variables(P("x1 + x2 + x3 + x4"), 4).is_zero());
  }

  TEST_CASE("six-class example") {
    Pipeline p(3);
    const PolyMatrix want = PolyMatrix::parse({{"1", "0", "0", "0", "0", "0"},
                                               {"0", "1", "0", "0", "0", "0"},
                                               {"0", "0", "1", "0", "0", "0"},
                                               {"0", "0", "0", "-1", "1", "0"},
                                               {"0", "0", "0", "1", "0", "0"},
                                               {"0", "0", "0", "0", "0", "1"}});
    CHECK(p.change_of_basis() == want);
    const auto& qs = p.quantum_schubert();
    CHECK(qs.polynomials == std::vector<Poly>{P("1"), P("b2"), P("b1"), P("-b2^2 + b2*b1 + q2"), P("b2^2 - q2"),
                                              P("b2^2*b1 - q2*b1")});
    CHECK(qs.r == p.lplus().q0_inverse * want);
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k) CHECK(qs.r(k, i).at_q_zero() == want(k, i));
  }

  TEST_CASE("re-running the solver in the Schubert basis conjugates Q0") {
    Pipeline p(3);
    const PolyMatrix& C = p.change_of_basis();
    const ConnectionData moved = schubert::change_connection_basis(p.connection(), C);
    const LPlus lp = solve_lplus(moved);
    CHECK(lp.q[0] == C.rational_inverse() * p.lplus().q[0] * C);
    CHECK(flatness_check(moved).ok());
  }

  TEST_CASE("GL4 quantum Schubert polynomials evaluate to their classes") {
    Pipeline p(4);
    const auto& qs = p.quantum_schubert();
    const PolyMatrix& C = p.change_of_basis();
    CHECK(qs.r == p.lplus().q0_inverse * C);
    for (int i = 0; i < 24; ++i) CHECK(p.ring().evaluate(qs.polynomials[i]) == C.column(i));
  }
}
