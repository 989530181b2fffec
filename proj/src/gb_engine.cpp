#include "qcflag/detail/gb_engine.hpp"

#include <algorithm>
#include <functional>

namespace qcflag::detail {

int total_degree(const Exps& a) {
  int d = 0;
  for (auto e : a) d += e;
  return d;
}

std::strong_ordering grevlex(const Exps& a, const Exps& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da <=> db;
  for (int i = kMaxRank - 1; i >= 0; --i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

bool divides(const Exps& a, const Exps& b) {
  for (int i = 0; i < kMaxRank; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps add(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kMaxRank; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

Exps sub(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kMaxRank; ++i) {
    if (b[i] > a[i]) throw std::domain_error("exponent subtraction underflow");
    r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  }
  return r;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kMaxRank; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

void add_to(Keyed& acc, const Exps& key, const Poly& c) {
  if (c.is_zero()) return;
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

Keyed subtract(const Keyed& a, const Keyed& b) {
  Keyed r = a;
  for (const auto& [e, c] : b) add_to(r, e, -c);
  return r;
}

Keyed scale_left(const Poly& c, const Keyed& f) {
  Keyed r;
  if (c.is_zero()) return r;
  for (const auto& [e, p] : f) {
    Poly v = c * p;
    if (!v.is_zero()) r.emplace(e, std::move(v));
  }
  return r;
}

Keyed multiply_h_power(const Keyed& f, int k) {
  if (k == 0) return f;
  Monomial hk(Var::h(), k);
  Keyed r;
  for (const auto& [e, p] : f) r.emplace(e, p.times_monomial(hk));
  return r;
}

std::optional<std::pair<Rational, int>> as_h_unit(const Poly& c) {
  if (c.size() != 1) return std::nullopt;
  const auto& [m, coeff] = c.leading_term();
  if (m.without(VarKind::H).is_one()) return std::make_pair(coeff, m.exponent(Var::h()));
  return std::nullopt;
}

Keyed normalize(Keyed f) {
  if (f.empty()) return f;
  int common = -1;
  for (const auto& [e, c] : f) {
    int m = c.min_exponent(Var::h());
    common = common < 0 ? m : std::min(common, m);
  }
  Rational lead;
  const Poly& lc = f.begin()->second;
  if (auto u = as_h_unit(lc)) lead = u->first;
  else lead = lc.leading_term().second;
  Rational inv = 1 / lead;
  Monomial hk(Var::h(), common);
  Keyed r;
  for (auto& [e, c] : f) r.emplace(e, c.divided_by_monomial(hk) * inv);
  return r;
}

Keyed CommutativePolicy::shift(const Exps& a, const Keyed& f) {
  Keyed r;
  for (const auto& [e, c] : f) r.emplace(add(a, e), c);
  return r;
}

Keyed OrePolicy::shift(const Exps& a, const Keyed& f) {
  std::map<Exps, std::vector<Poly::Term>, ExpsDescending> acc;
  std::vector<int> active;
  for (int i = 0; i < kMaxRank; ++i)
    if (a[i]) active.push_back(i);
  // binomial rows up to the largest exponent in a
  int top = 0;
  for (auto e : a) top = std::max<int>(top, e);
  std::vector<std::vector<long>> binom(top + 1, std::vector<long>(top + 1, 0));
  for (int n = 0; n <= top; ++n) {
    binom[n][0] = 1;
    for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0);
  }
  for (const auto& [b, coeff] : f) {
    for (const auto& [mono, kappa] : coeff.terms()) {
      // D_i^{a_i} q^e = q^e (D_i + h e_i)^{a_i}
      Exps k{};
      std::function<void(std::size_t, Rational, int)> rec = [&](std::size_t idx, Rational w, int hpow) {
        if (idx == active.size()) {
          Monomial m = mono * Monomial(Var::h(), hpow);
          acc[add(k, b)].emplace_back(m, w);
          return;
        }
        const int i = active[idx];
        const int ai = a[i];
        const int ei = mono.exponent(Var::q(i + 1));
        for (int ki = ai; ki >= 0; --ki) {
          const int drop = ai - ki;
          if (drop > 0 && ei == 0) break;
          mpz_class pw;
          mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(ei), static_cast<unsigned long>(drop));
          k[i] = static_cast<std::uint16_t>(ki);
          rec(idx + 1, w * Rational(binom[ai][ki]) * Rational(pw), hpow + drop);
        }
        k[i] = 0;
      };
      rec(0, kappa, 0);
    }
  }
  Keyed r;
  for (auto& [e, ts] : acc) {
    Poly p = Poly::from_terms(std::move(ts));
    if (!p.is_zero()) r.emplace(e, std::move(p));
  }
  return r;
}

std::vector<Exps> standard_exponents(const std::vector<Exps>& leading, int rank) {
  for (const auto& l : leading)
    if (total_degree(l) == 0) return {};
  std::vector<int> bound(rank, -1);
  for (const auto& l : leading) {
    int nz = -1, count = 0;
    for (int i = 0; i < kMaxRank; ++i)
      if (l[i]) {
        nz = i;
        ++count;
      }
    if (count == 1 && nz < rank && (bound[nz] < 0 || l[nz] < bound[nz])) bound[nz] = l[nz];
  }
  for (int i = 0; i < rank; ++i)
    if (bound[i] < 0) throw InfiniteQuotientError("quotient is not finite: no pure power of variable " + std::to_string(i + 1) + " is a leading monomial");
  std::vector<Exps> out;
  Exps cur{};
  std::function<void(int)> rec = [&](int i) {
    if (i == rank) {
      for (const auto& l : leading)
        if (divides(l, cur)) return;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[i]; ++e) {
      cur[i] = static_cast<std::uint16_t>(e);
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Exps& x, const Exps& y) { return grevlex(x, y) < 0; });
  return out;
}

}  // namespace qcflag::detail
