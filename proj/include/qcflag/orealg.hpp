#pragma once

// Left ideals in the algebra of q-difference-type operators generated by
// D_i = h*q_i*d/dq_i over Q[q, h]. Coefficients stand to the left of the
// D-monomials and D_i q^e = q^e (D_i + h e_i).

#include <string>
#include <vector>

#include "qcflag/detail/gb_engine.hpp"
#include "qcflag/poly.hpp"

namespace qcflag::orealg {

using detail::Exps;

class OreOp {
 public:
  OreOp() = default;
  OreOp(const Poly& coefficient);  // NOLINT: scalars embed as operators of order 0
  OreOp(long c) : OreOp(Poly(c)) {}  // NOLINT
  explicit OreOp(detail::Keyed terms) : terms_(std::move(terms)) {}

  static OreOp d(int i);
  static OreOp monomial(const Exps& e, const Poly& coefficient = Poly(1L));
  /// Quantization: b^a -> D^a with the coefficient written on the left.
  static OreOp quantize(const Poly& p);

  bool is_zero() const { return terms_.empty(); }
  const detail::Keyed& terms() const { return terms_; }
  /// Principal symbol with D_i -> b_i, keeping q and h.
  Poly symbol() const;

  OreOp& operator+=(const OreOp& o);
  OreOp& operator-=(const OreOp& o);
  friend OreOp operator+(OreOp a, const OreOp& b) { return a += b; }
  friend OreOp operator-(OreOp a, const OreOp& b) { return a -= b; }
  friend OreOp operator*(const OreOp& a, const OreOp& b);
  friend bool operator==(const OreOp&, const OreOp&) = default;

  std::string to_string() const;
  static OreOp parse(std::string_view text);
  nlohmann::json to_json() const;
  static OreOp from_json(const nlohmann::json& j);

 private:
  detail::Keyed terms_;
};

inline OreOp ore_mul(const OreOp& a, const OreOp& b) { return a * b; }

/// Reduced left Groebner basis of a left ideal.
class LeftIdealBasis {
 public:
  LeftIdealBasis() = default;
  LeftIdealBasis(int rank, std::vector<OreOp> elements);

  int rank() const { return rank_; }
  const std::vector<OreOp>& elements() const { return elements_; }
  std::vector<Exps> leading_exponents() const;

 private:
  int rank_ = 0;
  std::vector<OreOp> elements_;
  std::vector<detail::Keyed> keyed_;
  friend struct LeftNormalForm left_normal_form(const OreOp&, const LeftIdealBasis&);
};

LeftIdealBasis left_buchberger(const std::vector<OreOp>& gens, int rank);

struct LeftNormalForm {
  OreOp remainder;
  int h_power = 0;  // h^h_power * input = remainder mod the ideal
};

LeftNormalForm left_normal_form(const OreOp& op, const LeftIdealBasis& basis);

struct StandardElement {
  Exps exponents;
  OreOp op;     // P_j = D^exponents
  Poly symbol;  // c_j = b^exponents
};

/// Standard monomials of the basis, ascending in grevlex.
std::vector<StandardElement> standard_operator_basis(const LeftIdealBasis& basis);

}  // namespace qcflag::orealg
