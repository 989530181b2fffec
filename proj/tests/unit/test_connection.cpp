#include <doctest.h>

#include <random>

#include "qcflag/birkhoff.hpp"
#include "qcflag/pipeline.hpp"

using namespace qcflag;

TEST_SUITE("connection") {
  TEST_CASE("Poincare block sizes") {
    CHECK(poincare_block_sizes(2) == std::vector<int>{1, 1});
    CHECK(poincare_block_sizes(3) == std::vector<int>{1, 2, 2, 1});
    CHECK(poincare_block_sizes(4) == std::vector<int>{1, 3, 5, 6, 5, 3, 1});
  }

  TEST_CASE("n=2 by hand") {
    // D1 * 1 = D1, D1 * D1 = q1 modulo D1^2 - q1
    Pipeline p(2);
    const auto& cd = p.connection();
    CHECK(cd.omega[0] == PolyMatrix::parse({{"0", "q1"}, {"1", "0"}}));
    CHECK(cd.p() == 0);
    CHECK(cd.theta[0].is_zero());
    CHECK(check_structure(cd, p.context()).ok());
    CHECK(flatness_check(cd).ok());
  }

  TEST_CASE("n=3 and n=4 satisfy every structural law") {
    for (int n = 3; n <= 4; ++n) {
      Pipeline p(n);
      const auto s = check_structure(p.connection(), p.context());
      CHECK_MESSAGE(s.ok(), s.summary());
      const auto f = flatness_check(p.connection());
      CHECK_MESSAGE(f.ok(), f.summary());
    }
    Pipeline p4(4);
    for (int k = 2; k <= 4; ++k) CHECK((p4.connection().p() < k || p4.connection().theta[k].is_zero()));
  }

  TEST_CASE("n=3 omega diagonals") {
    Pipeline p(3);
    const auto& cd = p.connection();
    for (int i = 0; i < 2; ++i) {
      std::vector<int> ks;
      for (const auto& s : diagonal_parts(cd.omega[i], cd.blocks)) ks.push_back(s.j);
      for (int k : ks) CHECK((k == -1 || k == 1 || k == 3));
    }
    std::vector<int> ks;
    for (const auto& s : diagonal_parts(cd.omega[0], cd.blocks)) ks.push_back(s.j);
    CHECK(ks == std::vector<int>{-1, 1, 3});
    CHECK(diagonal_parts(PolyMatrix::identity(6), cd.blocks).size() == 1);
  }

  TEST_CASE("a block below the subdiagonal breaks triangularity") {
    Pipeline p(3);
    ConnectionData cd = p.connection();
    // (block 2, block 0): entry (3, 0) sits on diagonal -2
    REQUIRE(cd.blocks.diagonal_of(3, 0) == -2);
    cd.omega[0](3, 0) = Poly::parse("1");
    const auto rep = check_structure(cd, p.context());
    CHECK_FALSE(rep.ok());
    bool localized = false;
    for (const auto& f : rep.failures) localized |= f.find("below the -1-diagonal") != std::string::npos;
    CHECK(localized);
  }

  TEST_CASE("a perturbed entry breaks flatness") {
    std::mt19937 rng(17);
    Pipeline p(3);
    for (int t = 0; t < 10; ++t) {
      ConnectionData cd = p.connection();
      const int i = int(rng() % 2), r = int(rng() % 6), c = int(rng() % 6);
      cd.omega[i](r, c) += Poly::parse("q1*q2");
      const auto rep = flatness_check(cd);
      CHECK_FALSE(rep.ok());
    }
  }
}
