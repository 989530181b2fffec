#include "qcflag/toda.hpp"

#include <stdexcept>

namespace qcflag::toda {

namespace {

Poly x_in_b(int i, int n) {
  if (i == 1) return Poly(Var::b(1));
  if (i == n) return -Poly(Var::b(n - 1));
  return Poly(Var::b(i)) - Poly(Var::b(i - 1));
}

}  // namespace

TodaMatrix toda_matrix(int n) {
  if (n < 2) throw std::invalid_argument("toda_matrix needs n >= 2");
  if (n - 1 > kMaxRank) throw std::invalid_argument("n exceeds the supported rank");
  TodaMatrix z{n, PolyMatrix(n, n)};
  for (int i = 1; i <= n; ++i) {
    z.entries(i - 1, i - 1) = x_in_b(i, n);
    if (i < n) {
      z.entries(i - 1, i) = Poly(Var::q(i));
      z.entries(i, i - 1) = Poly(-1L);
    }
  }
  return z;
}

std::vector<Poly> characteristic_coefficients(const TodaMatrix& z) {
  // Leading principal minors: f_k = (z_kk + lambda) f_{k-1} - z_{k-1,k} z_{k,k-1} f_{k-2}.
  const int n = z.n;
  std::vector<Poly> prev2{Poly(1L)};
  std::vector<Poly> prev{z.entries(0, 0), Poly(1L)};
  for (int k = 1; k < n; ++k) {
    std::vector<Poly> cur(k + 2);
    const Poly& d = z.entries(k, k);
    for (std::size_t e = 0; e < prev.size(); ++e) {
      cur[e] += d * prev[e];
      cur[e + 1] += prev[e];
    }
    const Poly off = z.entries(k - 1, k) * z.entries(k, k - 1);
    for (std::size_t e = 0; e < prev2.size(); ++e) cur[e] -= off * prev2[e];
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

RelationSet quantum_relations(int n) {
  auto coeffs = characteristic_coefficients(toda_matrix(n));
  if (!coeffs[n - 1].is_zero()) throw std::logic_error("trace of the Toda matrix does not vanish");
  RelationSet rs{n, {}};
  for (int i = 1; i <= n - 1; ++i) {
    Poly r = coeffs[n - 1 - i];
    const Rational* smallest = nullptr;
    for (const auto& [m, c] : r.terms())
      if (!m.has_kind(VarKind::Q)) smallest = &c;  // terms are descending
    if (!smallest) throw std::logic_error("relation without a q-free part");
    if (*smallest < 0) r = -r;
    rs.relations.push_back(std::move(r));
  }
  return rs;
}

std::vector<orealg::OreOp> quantize(const RelationSet& rs) {
  std::vector<orealg::OreOp> out;
  for (const auto& r : rs.relations) out.push_back(orealg::OreOp::quantize(r));
  return out;
}

}  // namespace qcflag::toda
