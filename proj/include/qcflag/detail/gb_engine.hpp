#pragma once

// Buchberger machinery shared by the commutative engine (variables b_i) and
// the left-ideal engine of the operator algebra (variables D_i = h d_i).
// Elements are keyed by their main-variable exponent vector; coefficients
// are polynomials in q and h and are always written to the left.
//
// Leading coefficients of basis elements must have the form c * h^k with c
// rational. Since h is central and not a zero divisor, reduction may multiply
// the element being reduced by powers of h; the accumulated power is returned
// with the remainder.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "qcflag/poly.hpp"

namespace qcflag {

struct CoefficientDivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfiniteQuotientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

using Exps = std::array<std::uint16_t, kMaxRank>;

int total_degree(const Exps& a);
/// Graded reverse lexicographic order, variable 1 largest, unit weights.
std::strong_ordering grevlex(const Exps& a, const Exps& b);
bool divides(const Exps& a, const Exps& b);
Exps add(const Exps& a, const Exps& b);
Exps sub(const Exps& a, const Exps& b);
Exps lcm(const Exps& a, const Exps& b);

struct ExpsDescending {
  bool operator()(const Exps& a, const Exps& b) const { return grevlex(a, b) > 0; }
};

/// Element of the (skew) polynomial ring: main monomial -> coefficient.
using Keyed = std::map<Exps, Poly, ExpsDescending>;

void add_to(Keyed& acc, const Exps& key, const Poly& c);
Keyed subtract(const Keyed& a, const Keyed& b);
Keyed scale_left(const Poly& c, const Keyed& f);
Keyed multiply_h_power(const Keyed& f, int k);

/// Splits a coefficient into (rational, h-power) when it is a unit of Q[h, 1/h].
std::optional<std::pair<Rational, int>> as_h_unit(const Poly& c);

/// Divides out the rational leading content and the common power of h.
Keyed normalize(Keyed f);

struct CommutativePolicy {
  static constexpr bool kCommutative = true;
  static Keyed shift(const Exps& a, const Keyed& f);
};

struct OrePolicy {
  static constexpr bool kCommutative = false;
  /// D^a * f, moving D^a to the right of the coefficients.
  static Keyed shift(const Exps& a, const Keyed& f);
};

struct Reduction {
  Keyed remainder;
  int h_power = 0;  // h^h_power * input = remainder + (element of the ideal)
};

template <class Policy>
class GbEngine {
 public:
  /// Full reduction of f by basis.
  static Reduction reduce(Keyed f, const std::vector<Keyed>& basis) {
    Reduction out;
    while (!f.empty()) {
      auto lead = f.begin();
      const Exps a = lead->first;
      const Keyed* reducer = nullptr;
      for (const auto& g : basis)
        if (divides(g.begin()->first, a)) {
          reducer = &g;
          break;
        }
      if (!reducer) {
        add_to(out.remainder, a, lead->second);
        f.erase(lead);
        continue;
      }
      auto unit = as_h_unit(reducer->begin()->second);
      if (!unit) {
        throw CoefficientDivisionError("leading coefficient " + reducer->begin()->second.to_string() +
                                       " is not a rational multiple of a power of h");
      }
      const auto& [c, k] = *unit;
      const int have = lead->second.min_exponent(Var::h());
      if (have < k) {
        const int lift = k - have;
        f = multiply_h_power(f, lift);
        out.remainder = multiply_h_power(out.remainder, lift);
        out.h_power += lift;
      }
      const Poly factor = f.begin()->second.divided_by_monomial(Monomial(Var::h(), k)) * Rational(1 / c);
      Keyed shifted = Policy::shift(sub(a, reducer->begin()->first), *reducer);
      f = subtract(f, scale_left(factor, shifted));
    }
    return out;
  }

  static Keyed s_polynomial(const Keyed& f, const Keyed& g) {
    const Exps& a = f.begin()->first;
    const Exps& b = g.begin()->first;
    const Exps l = lcm(a, b);
    Keyed sf = scale_left(g.begin()->second, Policy::shift(sub(l, a), f));
    Keyed sg = scale_left(f.begin()->second, Policy::shift(sub(l, b), g));
    return subtract(sf, sg);
  }

  /// Reduced Groebner basis; pairs are processed by smallest lcm degree,
  /// ties broken by creation order.
  static std::vector<Keyed> buchberger(std::vector<Keyed> gens) {
    std::vector<Keyed> basis;
    for (auto& g : gens) {
      if (g.empty()) continue;
      basis.push_back(normalize(std::move(g)));
    }
    if (basis.empty()) throw std::invalid_argument("empty generating set");
    struct Pair {
      int degree;
      std::size_t serial;
      std::size_t i, j;
    };
    std::vector<Pair> pairs;
    std::size_t serial = 0;
    auto add_pairs_for = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i) {
        const Exps& a = basis[i].begin()->first;
        const Exps& b = basis[j].begin()->first;
        if (Policy::kCommutative && total_degree(lcm(a, b)) == total_degree(a) + total_degree(b)) continue;
        pairs.push_back({total_degree(lcm(a, b)), serial++, i, j});
      }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);
    while (!pairs.empty()) {
      auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        return std::tie(x.degree, x.serial) < std::tie(y.degree, y.serial);
      });
      Pair p = *it;
      pairs.erase(it);
      Keyed s = s_polynomial(basis[p.i], basis[p.j]);
      if (s.empty()) continue;
      Reduction r = reduce(std::move(s), basis);
      if (r.remainder.empty()) continue;
      basis.push_back(normalize(std::move(r.remainder)));
      add_pairs_for(basis.size() - 1);
    }
    return interreduce(std::move(basis));
  }

  static std::vector<Keyed> interreduce(std::vector<Keyed> basis) {
    // drop elements whose leading monomial is divisible by another's
    std::vector<Keyed> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        const Exps& li = basis[i].begin()->first;
        const Exps& lj = basis[j].begin()->first;
        if (divides(lj, li) && (li != lj || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Keyed> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Keyed> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Keyed head;
      head.emplace(minimal[i].begin()->first, minimal[i].begin()->second);
      Keyed tail = minimal[i];
      tail.erase(tail.begin());
      Reduction r = reduce(std::move(tail), others);
      Keyed full = multiply_h_power(head, r.h_power);
      for (auto& [e, c] : r.remainder) add_to(full, e, c);
      reduced.push_back(normalize(std::move(full)));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Keyed& x, const Keyed& y) { return grevlex(x.begin()->first, y.begin()->first) < 0; });
    return reduced;
  }
};

/// Monomials not divisible by any of the given leading monomials, ascending.
std::vector<Exps> standard_exponents(const std::vector<Exps>& leading, int rank);

}  // namespace detail
}  // namespace qcflag
