#include <doctest.h>

#include <map>

#include "qcflag/pipeline.hpp"

using namespace qcflag;

static Poly P(const char* s) { return Poly::parse(s); }

static std::vector<Poly> unit(int d, int k) {
  std::vector<Poly> e(d);
  e[k] = Poly(1L);
  return e;
}

namespace {

using Perm = std::vector<int>;

int inversions(const Perm& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

// Quantum Monk rule for sigma_{s_r} * sigma_w. Schubert polynomials use
// x_1..x_n; the deformation parameter attached to x_j, x_{j+1} is q_{n-j}
// in the b-variable labelling.
std::map<Perm, Poly> quantum_monk(int n, int r, const Perm& w) {
  std::map<Perm, Poly> out;
  const int l = inversions(w);
  for (int a = 1; a <= r; ++a)
    for (int b = r + 1; b <= n; ++b) {
      Perm v = w;
      std::swap(v[a - 1], v[b - 1]);
      const int lv = inversions(v);
      if (lv == l + 1) {
        out[v] += Poly(1L);
      } else if (lv == l - 2 * (b - a) + 1) {
        Poly q(1L);
        for (int j = a; j < b; ++j) q = q * Poly(Var::q(n - j));
        out[v] += q;
      }
    }
  return out;
}

}  // namespace

TEST_SUITE("quantum") {
  TEST_CASE("n=2 products and invariants") {
    Pipeline p(2);
    CHECK(p.evaluation().c_hat == std::vector<Poly>{P("1"), P("b1")});
    CHECK(p.table()(1, 1) == std::vector<Poly>{P("q1"), Poly()});
    const auto recs = gw_invariants(p.table(), p.pairing());
    REQUIRE(recs.size() == 2);
    CHECK(gw_invariant(p.table(), p.pairing(), 0, 0, 1, {0}) == 1);
    CHECK(gw_invariant(p.table(), p.pairing(), 1, 1, 1, {1}) == 1);
    CHECK(gw_invariant(p.table(), p.pairing(), 1, 1, 1, {0}) == 0);
  }

  TEST_CASE("n=3 hatted basis and products") {
    Pipeline p(3);
    CHECK(p.evaluation().c_hat ==
          std::vector<Poly>{P("1"), P("b2"), P("b1"), P("b2^2 - q2"), P("b2*b1"), P("b2^2*b1 - q2*b1")});
    // b2 o b2 = b2^2 + q2
    CHECK(p.ring().evaluate(P("b2^2")) == p.coordinates_of(P("b2^2 + q2")));
    // b2 o b2 o b1 - q2 b1 = b2^2 b1
    CHECK(p.ring().evaluate(P("b2^2*b1 - q2*b1")) == unit(6, 5));
    CHECK(p.table().multiply(p.table()(1, 1), unit(6, 2)) ==
          p.ring().evaluate(P("b2^2*b1")));
  }

  TEST_CASE("the product table obeys the quantum Monk rule") {
    for (int n = 3; n <= 4; ++n) {
      Pipeline p(n);
      const auto& fam = p.schubert_family();
      const PolyMatrix& C = p.change_of_basis();
      const PolyMatrix Cinv = C.rational_inverse();
      const int d = p.context().dim();
      std::map<Perm, int> index;
      for (int k = 0; k < d; ++k) index[fam.classes[k].w] = k;
      for (int r = 1; r < n; ++r) {
        Perm sr(n);
        for (int k = 0; k < n; ++k) sr[k] = k + 1;
        std::swap(sr[r - 1], sr[r]);
        const auto gen = C.column(index.at(sr));
        for (int k = 0; k < d; ++k) {
          const auto prod = p.table().multiply(gen, C.column(k));
          std::vector<Poly> got(d);
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) got[a] += Cinv(a, b) * prod[b];
          std::vector<Poly> want(d);
          for (const auto& [v, c] : quantum_monk(n, r, fam.classes[k].w)) want[index.at(v)] += c;
          CHECK(got == want);
        }
      }
    }
  }

  TEST_CASE("multiplication operators commute and satisfy the relations") {
    Pipeline p(4);
    const auto& ring = p.ring();
    for (const auto& r : p.relations().relations) CHECK(ring.multiplication(r).is_zero());
    const auto a = ring.multiplication(P("b1*b3 + q2"));
    const auto b = ring.multiplication(P("b2^2 - b1"));
    CHECK(a * b == b * a);
  }

  TEST_CASE("q = 0 recovers cup products") {
    Pipeline p(3);
    const auto& ctx = p.context();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        auto v = p.table()(i, j);
        for (auto& x : v) x = x.at_q_zero();
        const Poly prod = commalg::normal_form(ctx.basis[i].symbol * ctx.basis[j].symbol, p.classical_basis());
        Poly rebuilt;
        for (int k = 0; k < 6; ++k) rebuilt += v[k] * ctx.basis[k].symbol;
        CHECK(rebuilt == prod);
      }
  }

  TEST_CASE("invariants are integral and symmetric") {
    Pipeline p(3);
    const auto recs = gw_invariants(p.table(), p.pairing());
    CHECK(recs.size() == 16);
    for (const auto& r : recs) {
      CHECK(r.value.get_den() == 1);
      CHECK(gw_invariant(p.table(), p.pairing(), r.k, r.i, r.j, r.degree) == r.value);
      CHECK(gw_invariant(p.table(), p.pairing(), r.j, r.k, r.i, r.degree) == r.value);
    }
    const auto deg11 = gw_invariants(p.table(), p.pairing(), std::vector<int>{1, 1});
    for (const auto& r : deg11) CHECK(r.degree == std::vector<int>{1, 1});
  }

  TEST_CASE("pairing in the Schubert basis is the duality matrix") {
    Pipeline p(3);
    const PolyMatrix& C = p.change_of_basis();
    PolyMatrix ct(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) ct(i, j) = C(j, i);
    const PolyMatrix s = ct * p.pairing().matrix() * C;
    // classes are listed so that w and w0 w sit at mirrored positions for n=3
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        schubert::Permutation dual(3);
        for (int k = 0; k < 3; ++k) dual[k] = 4 - p.schubert_family().classes[i].w[k];
        CHECK(s(i, j) == Poly(p.schubert_family().classes[j].w == dual ? 1L : 0L));
      }
  }
}
