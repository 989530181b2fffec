#include "qcflag/schubert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qcflag::schubert {

int length(const Permutation& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

Permutation inverse(const Permutation& w) {
  Permutation v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = int(i) + 1;
  return v;
}

std::vector<int> lehmer_code(const Permutation& w) {
  std::vector<int> c(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[j] < w[i]) ++c[i];
  return c;
}

std::vector<Permutation> permutations_by_length(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> all;
  do all.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  std::stable_sort(all.begin(), all.end(), [](const Permutation& a, const Permutation& b) {
    const int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return lehmer_code(inverse(a)) > lehmer_code(inverse(b));
  });
  return all;
}

Poly divided_difference(const Poly& f, int i) {
  const Var xi = Var::x(i), xj = Var::x(i + 1);
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exponent(xi), b = m.exponent(xj);
    if (a == b) continue;
    Monomial rest = m;
    rest.set_exponent(xi, 0);
    rest.set_exponent(xj, 0);
    // (x_i^a x_j^b - x_i^b x_j^a) / (x_i - x_j)
    const int hi = std::max(a, b), lo = std::min(a, b);
    const Rational sign = a > b ? Rational(1) : Rational(-1);
    for (int k = 0; k < hi - lo; ++k) {
      Monomial t = rest;
      t.set_exponent(xi, hi - 1 - k);
      t.set_exponent(xj, lo + k);
      terms.emplace_back(t, sign * c);
    }
  }
  return Poly::from_terms(std::move(terms));
}

Poly to_b_variables(const Poly& x_poly, int n) {
  std::map<Var, Poly> sub;
  // b_0 = b_n = 0
  for (int k = 1; k <= n; ++k) {
    Poly img;
    if (n - k >= 1) img += Poly(Var::b(n - k));
    if (n - k + 1 <= n - 1) img -= Poly(Var::b(n - k + 1));
    sub.emplace(Var::x(k), img);
  }
  return x_poly.substitute(sub);
}

SchubertFamily schubert_polynomials(int n) {
  if (n < 2 || n - 1 > kMaxRank) throw std::invalid_argument("schubert_polynomials: n out of range");
  Permutation w0(n);
  for (int i = 0; i < n; ++i) w0[i] = n - i;
  Monomial top;
  for (int k = 1; k <= n - 1; ++k) top.set_exponent(Var::x(k), n - k);
  std::map<Permutation, Poly> known{{w0, Poly(top, 1)}};
  // descend level by level in length
  std::vector<Permutation> level{w0};
  while (!level.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : level) {
      const Poly& f = known.at(w);
      for (int i = 1; i < n; ++i) {
        if (w[i - 1] < w[i]) continue;
        Permutation v = w;
        std::swap(v[i - 1], v[i]);
        Poly g = divided_difference(f, i);
        auto it = known.find(v);
        if (it == known.end()) {
          known.emplace(v, std::move(g));
          next.push_back(v);
        } else if (it->second != g) {
          throw std::logic_error("divided differences depend on the reduced word");
        }
      }
    }
    level = std::move(next);
  }
  SchubertFamily fam{n, {}};
  for (const auto& w : permutations_by_length(n)) {
    const Poly& x = known.at(w);
    fam.classes.push_back({w, x, to_b_variables(x, n)});
  }
  return fam;
}

PolyMatrix change_of_basis(const SchubertFamily& fam, const FlagContext& ctx, const commalg::GroebnerBasis& classical) {
  const int dim = ctx.dim();
  if (int(fam.classes.size()) != dim) throw std::invalid_argument("family size differs from the basis size");
  std::vector<Monomial> basis;
  for (const auto& s : ctx.basis) basis.push_back(commalg::b_monomial(s.exponents));
  PolyMatrix c(dim, dim);
  for (int i = 0; i < dim; ++i) {
    auto coords = commalg::coordinates(fam.classes[i].b_poly, classical, basis);
    for (int k = 0; k < dim; ++k) {
      if (coords[k].has_kind(VarKind::Q)) throw std::logic_error("classical expansion depends on q");
      c(k, i) = coords[k];
    }
  }
  return c;
}

QuantumSchubert quantum_schubert(const PolyMatrix& change, const LPlus& lp, const FlagContext& ctx) {
  QuantumSchubert out;
  out.r = lp.q0_inverse * change;
  for (int i = 0; i < ctx.dim(); ++i) {
    Poly p;
    for (int k = 0; k < ctx.dim(); ++k)
      if (!out.r(k, i).is_zero()) p += out.r(k, i) * ctx.basis[k].symbol;
    out.polynomials.push_back(std::move(p));
  }
  return out;
}

ConnectionData change_connection_basis(const ConnectionData& cd, const PolyMatrix& change) {
  const PolyMatrix inv = change.rational_inverse();
  auto conj = [&](const BlockMatForm& f) {
    BlockMatForm g;
    for (const auto& m : f.components) g.components.push_back(inv * m * change);
    return g;
  };
  ConnectionData out;
  out.blocks = cd.blocks;
  out.omega = conj(cd.omega);
  for (const auto& t : cd.theta) out.theta.push_back(conj(t));
  return out;
}

}  // namespace qcflag::schubert
