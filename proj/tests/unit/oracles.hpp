#pragma once

// Small reference implementations used as oracles by the unit tests. They
// share nothing with the library beyond the Poly container.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "qcflag/matrix.hpp"
#include "qcflag/poly.hpp"

namespace oracle {

using qcflag::Monomial;
using qcflag::Poly;
using qcflag::Rational;
using qcflag::Var;

inline Rational evaluate(const Poly& p, const std::map<int, Rational>& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (auto [v, e] : m.factors())
      for (int k = 0; k < e; ++k) t *= point.at(v.slot());
    total += t;
  }
  return total;
}

inline Poly random_poly(std::mt19937& rng, const std::vector<Var>& vars, int terms, int max_exp) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4), ex(0, max_exp);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (const auto& v : vars) m.set_exponent(v, ex(rng));
    p += Poly(m, Rational(coef(rng), den(rng)));
  }
  return p;
}

inline std::map<int, Rational> random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::map<int, Rational> pt;
  for (int s = 0; s < qcflag::slots::kCount; ++s) {
    pt[s] = Rational(num(rng), den(rng));
    pt[s].canonicalize();
  }
  return pt;
}

/// Graded reverse lexicographic comparison written from the definition:
/// weighted degree first, then the lowest-ranked variable where the
/// exponents differ decides, a larger exponent making the monomial smaller.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.weighted_degree() != b.weighted_degree()) return a.weighted_degree() < b.weighted_degree() ? -1 : 1;
  for (int s = qcflag::slots::kCount - 1; s >= 0; --s) {
    if (a.exponent_at(s) != b.exponent_at(s)) return a.exponent_at(s) > b.exponent_at(s) ? -1 : 1;
  }
  return 0;
}

/// Textbook multivariate division with rational coefficients; the leading
/// term is the grevlex-largest one.
inline Poly divide_remainder(Poly f, const std::vector<Poly>& divisors) {
  Poly rem;
  while (!f.is_zero()) {
    const auto lt = f.leading_term();
    bool divided = false;
    for (const auto& g : divisors) {
      const auto& lg = g.leading_term();
      if (lg.first.divides(lt.first)) {
        f -= g * Poly(lt.first / lg.first, lt.second / lg.second);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem += Poly(lt.first, lt.second);
      f -= Poly(lt.first, lt.second);
    }
  }
  return rem;
}

inline qcflag::PolyMatrix naive_product(const qcflag::PolyMatrix& a, const qcflag::PolyMatrix& b) {
  qcflag::PolyMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Poly s;
      for (int k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

/// Leibniz expansion of a determinant.
inline Poly leibniz_det(const qcflag::PolyMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Poly det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term(inversions % 2 ? -1L : 1L);
    for (int i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace oracle
