#include "qcflag/commalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcflag::commalg {

using detail::Exps;
using detail::Keyed;

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  return detail::grevlex(b_exponents(a), b_exponents(b));
}

detail::Exps b_exponents(const Monomial& m) {
  Exps e{};
  for (int i = 0; i < kMaxRank; ++i) e[i] = static_cast<std::uint16_t>(m.exponent(Var::b(i + 1)));
  return e;
}

Monomial b_monomial(const detail::Exps& e) {
  Monomial m;
  for (int i = 0; i < kMaxRank; ++i)
    if (e[i]) m.set_exponent(Var::b(i + 1), e[i]);
  return m;
}

Keyed to_keyed(const Poly& p) {
  std::map<Exps, std::vector<Poly::Term>, detail::ExpsDescending> groups;
  for (const auto& [m, c] : p.terms()) groups[b_exponents(m)].emplace_back(m.without(VarKind::B), c);
  Keyed out;
  for (auto& [e, ts] : groups) {
    Poly coeff = Poly::from_terms(std::move(ts));
    if (!coeff.is_zero()) out.emplace(e, std::move(coeff));
  }
  return out;
}

Poly from_keyed(const Keyed& k) {
  Poly out;
  for (const auto& [e, c] : k) out += c.times_monomial(b_monomial(e));
  return out;
}

GroebnerBasis::GroebnerBasis(int rank, std::vector<detail::Keyed> elements, std::map<Var, Poly> specialization)
    : rank_(rank), elements_(std::move(elements)), specialization_(std::move(specialization)) {}

std::vector<Poly> GroebnerBasis::generators() const {
  std::vector<Poly> out;
  for (const auto& k : elements_) out.push_back(from_keyed(k));
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& k : elements_) out.push_back(b_monomial(k.begin()->first));
  return out;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, int rank, CoefficientMode mode,
                         const std::map<Var, Rational>& q_values) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  std::map<Var, Poly> specialization;
  if (mode == CoefficientMode::Specialized) {
    for (int i = 1; i <= kMaxRank; ++i) {
      auto it = q_values.find(Var::q(i));
      specialization.emplace(Var::q(i), it == q_values.end() ? Poly() : Poly(it->second));
    }
  }
  std::vector<Keyed> keyed;
  for (const auto& g : gens) {
    Poly p = specialization.empty() ? g : g.substitute(specialization);
    for (const auto& [m, c] : p.terms())
      for (auto [v, e] : m.factors())
        if (v.kind == VarKind::B && v.index > rank) throw std::invalid_argument("generator uses b beyond rank");
    Keyed k = to_keyed(p);
    if (!k.empty()) keyed.push_back(std::move(k));
  }
  if (keyed.empty()) throw std::invalid_argument("all generators vanish");
  auto basis = detail::GbEngine<detail::CommutativePolicy>::buchberger(std::move(keyed));
  for (const auto& g : basis)
    if (!detail::as_h_unit(g.begin()->second))
      throw CoefficientDivisionError("leading coefficient " + g.begin()->second.to_string() +
                                     " depends on q; use the specialized coefficient mode");
  return GroebnerBasis(rank, std::move(basis), std::move(specialization));
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  Poly input = gb.specialization().empty() ? p : p.substitute(gb.specialization());
  auto r = detail::GbEngine<detail::CommutativePolicy>::reduce(to_keyed(input), gb.keyed());
  Poly out = from_keyed(r.remainder);
  if (r.h_power) out = out.divided_by_monomial(Monomial(Var::h(), r.h_power));
  return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  std::vector<Exps> leading;
  for (const auto& k : gb.keyed()) leading.push_back(k.begin()->first);
  std::vector<Monomial> out;
  for (const auto& e : detail::standard_exponents(leading, gb.rank())) out.push_back(b_monomial(e));
  return out;
}

std::vector<Poly> coordinates(const Poly& p, const GroebnerBasis& gb, const std::vector<Monomial>& basis) {
  Keyed nf = to_keyed(normal_form(p, gb));
  std::vector<Poly> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = nf.find(b_exponents(basis[i]));
    if (it != nf.end()) {
      out[i] = it->second;
      nf.erase(it);
    }
  }
  if (!nf.empty()) throw std::logic_error("normal form has a non-standard term");
  return out;
}

}  // namespace qcflag::commalg
