#include "qcflag/orealg.hpp"

#include <sstream>

#include "qcflag/commalg.hpp"
#include "qcflag/detail/expr_parser.hpp"

namespace qcflag::orealg {

using detail::Keyed;

OreOp::OreOp(const Poly& coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(Exps{}, coefficient);
}

OreOp OreOp::d(int i) {
  if (i < 1 || i > kMaxRank) throw std::out_of_range("D index out of range");
  Exps e{};
  e[i - 1] = 1;
  return monomial(e);
}

OreOp OreOp::monomial(const Exps& e, const Poly& coefficient) {
  Keyed k;
  if (!coefficient.is_zero()) k.emplace(e, coefficient);
  return OreOp(std::move(k));
}

OreOp OreOp::quantize(const Poly& p) { return OreOp(commalg::to_keyed(p)); }

Poly OreOp::symbol() const { return commalg::from_keyed(terms_); }

OreOp& OreOp::operator+=(const OreOp& o) {
  for (const auto& [e, c] : o.terms_) detail::add_to(terms_, e, c);
  return *this;
}

OreOp& OreOp::operator-=(const OreOp& o) {
  for (const auto& [e, c] : o.terms_) detail::add_to(terms_, e, -c);
  return *this;
}

OreOp operator*(const OreOp& a, const OreOp& b) {
  Keyed out;
  for (const auto& [ea, ca] : a.terms_) {
    Keyed moved = detail::OrePolicy::shift(ea, b.terms_);
    for (const auto& [e, c] : moved) detail::add_to(out, e, ca * c);
  }
  return OreOp(std::move(out));
}

std::string OreOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string dpart;
    for (int i = 0; i < kMaxRank; ++i) {
      if (!e[i]) continue;
      if (!dpart.empty()) dpart += "*";
      dpart += "d" + std::to_string(i + 1);
      if (e[i] > 1) dpart += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.to_string();
    std::string piece;
    if (dpart.empty()) {
      piece = c.size() > 1 ? "(" + coeff + ")" : coeff;
    } else if (c == Poly(1L)) {
      piece = dpart;
    } else if (c == Poly(-1L)) {
      piece = "-" + dpart;
    } else if (c.size() > 1) {
      piece = "(" + coeff + ")*" + dpart;
    } else {
      piece = coeff + "*" + dpart;
    }
    if (first) {
      os << piece;
    } else if (piece.front() == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
    first = false;
  }
  return os.str();
}

OreOp OreOp::parse(std::string_view text) {
  detail::ExprParser<OreOp> parser(
      text,
      [](std::string_view name) -> OreOp {
        if (name.size() >= 2 && name[0] == 'd') {
          int i = std::stoi(std::string(name.substr(1)));
          return OreOp::d(i);
        }
        auto v = Var::from_name(name);
        if (!v || v->kind == VarKind::B || v->kind == VarKind::X)
          throw ParseError("unknown operator variable '" + std::string(name) + "'");
        return OreOp(Poly(*v));
      },
      [](const Rational& c) { return OreOp(Poly(c)); },
      [](const OreOp& op) -> std::optional<Rational> {
        if (op.is_zero()) return Rational(0);
        if (op.terms_.size() != 1 || op.terms_.begin()->first != Exps{}) return std::nullopt;
        const Poly& c = op.terms_.begin()->second;
        if (!c.is_constant()) return std::nullopt;
        return c.constant_term();
      });
  return parser.parse();
}

nlohmann::json OreOp::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json d = nlohmann::json::array();
    for (int i = 0; i < kMaxRank; ++i)
      if (e[i]) d.push_back({"d" + std::to_string(i + 1), e[i]});
    out.push_back({{"d", d}, {"coefficient", c.to_json()}});
  }
  return out;
}

OreOp OreOp::from_json(const nlohmann::json& j) {
  OreOp out;
  for (const auto& t : j) {
    Exps e{};
    for (const auto& f : t.at("d")) {
      std::string name = f.at(0).get<std::string>();
      int i = std::stoi(name.substr(1));
      if (name[0] != 'd' || i < 1 || i > kMaxRank) throw ParseError("bad operator variable " + name);
      e[i - 1] = f.at(1).get<std::uint16_t>();
    }
    out += OreOp::monomial(e, Poly::from_json(t.at("coefficient")));
  }
  return out;
}

LeftIdealBasis::LeftIdealBasis(int rank, std::vector<OreOp> elements) : rank_(rank), elements_(std::move(elements)) {
  for (const auto& e : elements_) keyed_.push_back(e.terms());
}

std::vector<Exps> LeftIdealBasis::leading_exponents() const {
  std::vector<Exps> out;
  for (const auto& k : keyed_) out.push_back(k.begin()->first);
  return out;
}

LeftIdealBasis left_buchberger(const std::vector<OreOp>& gens, int rank) {
  std::vector<Keyed> keyed;
  for (const auto& g : gens) {
    for (const auto& [e, c] : g.terms())
      for (int i = rank; i < kMaxRank; ++i)
        if (e[i]) throw std::invalid_argument("generator uses D beyond rank");
    if (!g.is_zero()) keyed.push_back(g.terms());
  }
  if (keyed.empty()) throw std::invalid_argument("left_buchberger needs a nonzero generator");
  auto basis = detail::GbEngine<detail::OrePolicy>::buchberger(std::move(keyed));
  std::vector<OreOp> ops;
  for (auto& k : basis) ops.emplace_back(std::move(k));
  return LeftIdealBasis(rank, std::move(ops));
}

LeftNormalForm left_normal_form(const OreOp& op, const LeftIdealBasis& basis) {
  auto r = detail::GbEngine<detail::OrePolicy>::reduce(op.terms(), basis.keyed_);
  return {OreOp(std::move(r.remainder)), r.h_power};
}

std::vector<StandardElement> standard_operator_basis(const LeftIdealBasis& basis) {
  std::vector<StandardElement> out;
  for (const auto& e : detail::standard_exponents(basis.leading_exponents(), basis.rank()))
    out.push_back({e, OreOp::monomial(e), commalg::b_monomial(e).is_one() ? Poly(1L) : Poly(commalg::b_monomial(e), 1)});
  return out;
}

}  // namespace qcflag::orealg
