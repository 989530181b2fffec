#pragma once

// Commutative Groebner bases in b_1..b_r over Q, with q and h treated as
// coefficient parameters.

#include <compare>
#include <map>
#include <vector>

#include "qcflag/detail/gb_engine.hpp"
#include "qcflag/poly.hpp"

namespace qcflag::commalg {

enum class CoefficientMode {
  Parametric,   // coefficients in Q[q]; leading coefficients must be rational
  Specialized,  // q specialized to rationals before any arithmetic
};

/// Graded reverse lexicographic order on the b-part of monomials, b_1 > ... > b_r.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(int rank, std::vector<detail::Keyed> elements, std::map<Var, Poly> specialization);

  int rank() const { return rank_; }
  std::vector<Poly> generators() const;
  std::vector<Monomial> leading_monomials() const;
  const std::map<Var, Poly>& specialization() const { return specialization_; }
  const std::vector<detail::Keyed>& keyed() const { return elements_; }

 private:
  int rank_ = 0;
  std::vector<detail::Keyed> elements_;
  std::map<Var, Poly> specialization_;
};

detail::Keyed to_keyed(const Poly& p);
Poly from_keyed(const detail::Keyed& k);
detail::Exps b_exponents(const Monomial& m);
Monomial b_monomial(const detail::Exps& e);

/// Reduced Groebner basis. In specialized mode each q_i is replaced by the
/// bound rational (unbound q_i default to 0) before the computation.
GroebnerBasis buchberger(const std::vector<Poly>& gens, int rank,
                         CoefficientMode mode = CoefficientMode::Parametric,
                         const std::map<Var, Rational>& q_values = {});

Poly normal_form(const Poly& p, const GroebnerBasis& gb);

/// Standard monomials, ascending; throws InfiniteQuotientError.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// Coordinates of normal_form(p) over standard_monomials(gb).
std::vector<Poly> coordinates(const Poly& p, const GroebnerBasis& gb, const std::vector<Monomial>& basis);

}  // namespace qcflag::commalg
