#pragma once

// Exact sparse multivariate polynomials over Q in the variables
// b1..br, x1..x(r+1), q1..qr and h, graded by deg b = deg x = deg h = 2
// and deg q = 4.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qcflag {

using Rational = mpq_class;

/// Largest supported rank r = n - 1.
inline constexpr int kMaxRank = 8;

enum class VarKind : std::uint8_t { B, X, Q, H };

struct Var {
  VarKind kind = VarKind::H;
  int index = 0;  // 1-based; unused for h

  static Var b(int i) { return {VarKind::B, i}; }
  static Var x(int i) { return {VarKind::X, i}; }
  static Var q(int i) { return {VarKind::Q, i}; }
  static Var h() { return {VarKind::H, 0}; }

  int slot() const;
  int weight() const { return kind == VarKind::Q ? 4 : 2; }
  std::string name() const;
  static std::optional<Var> from_name(std::string_view name);

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var& a, const Var& b) { return a.slot() <=> b.slot(); }
};

namespace slots {
inline constexpr int kB = 0;
inline constexpr int kX = kMaxRank;
inline constexpr int kQ = 2 * kMaxRank + 1;
inline constexpr int kH = 3 * kMaxRank + 1;
inline constexpr int kCount = 3 * kMaxRank + 2;
}  // namespace slots

Var var_of_slot(int slot);

/// A power product. Slot order is the variable ranking
/// b1 > ... > b8 > x1 > ... > x9 > q1 > ... > q8 > h.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, slots::kCount>;

  Monomial() { exps_.fill(0); }
  explicit Monomial(Var v, int e = 1);

  int exponent(Var v) const { return exps_[v.slot()]; }
  int exponent_at(int slot) const { return exps_[slot]; }
  void set_exponent(Var v, int e);

  int weighted_degree() const { return wdeg_; }
  int total_degree_of(VarKind kind) const;
  bool is_one() const { return wdeg_ == 0; }
  bool has_kind(VarKind kind) const { return total_degree_of(kind) != 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws unless divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  /// The part of this monomial in variables of the given kind only.
  Monomial restricted_to(VarKind kind) const;
  Monomial without(VarKind kind) const;

  std::vector<std::pair<Var, int>> factors() const;
  std::string to_string() const;

  const Exponents& exponents() const { return exps_; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Weighted graded reverse lexicographic comparison.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  void recompute_degree();
  Exponents exps_{};
  int wdeg_ = 0;
};

struct Degree {
  enum class Kind { Zero, Homogeneous, Mixed };
  Kind kind = Kind::Zero;
  int value = 0;

  bool homogeneous() const { return kind != Kind::Mixed; }
  bool is(int d) const { return kind == Kind::Zero || (kind == Kind::Homogeneous && value == d); }
};

class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT: implicit constants read naturally in formulas
  Poly(const Rational& c);  // NOLINT
  explicit Poly(Var v, int e = 1);
  Poly(const Monomial& m, const Rational& c);

  /// Builds a canonical polynomial from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms);
  static Poly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  Degree weighted_degree() const;
  bool has_kind(VarKind kind) const;
  int max_exponent(Var v) const;
  /// Smallest exponent of v over all terms (0 for the zero polynomial).
  int min_exponent(Var v) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int e) const;
  Poly times_monomial(const Monomial& m) const;
  /// Exact division by a monomial; throws if some term is not divisible.
  Poly divided_by_monomial(const Monomial& m) const;

  /// Replaces each bound variable by its image.
  Poly substitute(const std::map<Var, Poly>& bindings) const;
  /// Sets every q variable to zero.
  Poly at_q_zero() const;
  /// q_i * d/dq_i. Variables other than q_i are treated as constants.
  Poly t_derivative(int i) const;

  /// Coefficients of the powers of v.
  std::map<int, Poly> split_by(Var v) const;

  std::string to_string() const;
  std::string to_latex() const;
  nlohmann::json to_json() const;
  static Poly from_json(const nlohmann::json& j);

 private:
  explicit Poly(std::vector<Term> sorted_terms, int) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;  // strictly descending monomials, nonzero coefficients
};

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Smallest-first listing used for basis enumerations.
inline bool grevlex_less(const Monomial& a, const Monomial& b) { return a < b; }

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcflag
