#include "qcflag/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qcflag/detail/expr_parser.hpp"

namespace qcflag {

int Var::slot() const {
  switch (kind) {
    case VarKind::B:
      if (index < 1 || index > kMaxRank) throw std::out_of_range("b index out of range");
      return slots::kB + index - 1;
    case VarKind::X:
      if (index < 1 || index > kMaxRank + 1) throw std::out_of_range("x index out of range");
      return slots::kX + index - 1;
    case VarKind::Q:
      if (index < 1 || index > kMaxRank) throw std::out_of_range("q index out of range");
      return slots::kQ + index - 1;
    case VarKind::H:
      return slots::kH;
  }
  return slots::kH;
}

std::string Var::name() const {
  switch (kind) {
    case VarKind::B: return "b" + std::to_string(index);
    case VarKind::X: return "x" + std::to_string(index);
    case VarKind::Q: return "q" + std::to_string(index);
    case VarKind::H: return "h";
  }
  return "?";
}

std::optional<Var> Var::from_name(std::string_view name) {
  if (name == "h") return Var::h();
  if (name.size() < 2) return std::nullopt;
  VarKind kind;
  switch (name[0]) {
    case 'b': kind = VarKind::B; break;
    case 'x': kind = VarKind::X; break;
    case 'q': kind = VarKind::Q; break;
    default: return std::nullopt;
  }
  int idx = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    idx = idx * 10 + (c - '0');
    if (idx > 99) return std::nullopt;
  }
  int limit = kind == VarKind::X ? kMaxRank + 1 : kMaxRank;
  if (idx < 1 || idx > limit) return std::nullopt;
  return Var{kind, idx};
}

Var var_of_slot(int slot) {
  if (slot >= slots::kH) return Var::h();
  if (slot >= slots::kQ) return Var::q(slot - slots::kQ + 1);
  if (slot >= slots::kX) return Var::x(slot - slots::kX + 1);
  return Var::b(slot - slots::kB + 1);
}

namespace {

int slot_weight(int slot) { return (slot >= slots::kQ && slot < slots::kH) ? 4 : 2; }

VarKind slot_kind(int slot) { return var_of_slot(slot).kind; }

}  // namespace

Monomial::Monomial(Var v, int e) {
  exps_.fill(0);
  set_exponent(v, e);
}

void Monomial::set_exponent(Var v, int e) {
  if (e < 0 || e > 0xFFFF) throw std::out_of_range("exponent out of range");
  exps_[v.slot()] = static_cast<std::uint16_t>(e);
  recompute_degree();
}

void Monomial::recompute_degree() {
  wdeg_ = 0;
  for (int s = 0; s < slots::kCount; ++s) wdeg_ += slot_weight(s) * exps_[s];
}

int Monomial::total_degree_of(VarKind kind) const {
  int d = 0;
  for (int s = 0; s < slots::kCount; ++s)
    if (exps_[s] && slot_kind(s) == kind) d += exps_[s];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int s = 0; s < slots::kCount; ++s)
    if (exps_[s] > other.exps_[s]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int s = 0; s < slots::kCount; ++s) {
    unsigned e = unsigned(exps_[s]) + other.exps_[s];
    if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
    r.exps_[s] = static_cast<std::uint16_t>(e);
  }
  r.wdeg_ = wdeg_ + other.wdeg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (int s = 0; s < slots::kCount; ++s) {
    if (divisor.exps_[s] > exps_[s]) throw std::domain_error("monomial does not divide");
    r.exps_[s] = static_cast<std::uint16_t>(exps_[s] - divisor.exps_[s]);
  }
  r.wdeg_ = wdeg_ - divisor.wdeg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (int s = 0; s < slots::kCount; ++s) r.exps_[s] = std::max(exps_[s], other.exps_[s]);
  r.recompute_degree();
  return r;
}

Monomial Monomial::restricted_to(VarKind kind) const {
  Monomial r;
  for (int s = 0; s < slots::kCount; ++s)
    if (slot_kind(s) == kind) r.exps_[s] = exps_[s];
  r.recompute_degree();
  return r;
}

Monomial Monomial::without(VarKind kind) const {
  Monomial r = *this;
  for (int s = 0; s < slots::kCount; ++s)
    if (slot_kind(s) == kind) r.exps_[s] = 0;
  r.recompute_degree();
  return r;
}

std::vector<std::pair<Var, int>> Monomial::factors() const {
  std::vector<std::pair<Var, int>> out;
  for (int s = 0; s < slots::kCount; ++s)
    if (exps_[s]) out.emplace_back(var_of_slot(s), exps_[s]);
  return out;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (auto [v, e] : factors()) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.wdeg_ != b.wdeg_) return a.wdeg_ <=> b.wdeg_;
  for (int s = slots::kCount - 1; s >= 0; --s) {
    if (a.exps_[s] != b.exps_[s]) return b.exps_[s] <=> a.exps_[s];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) throw ParseError("invalid rational '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Rational(c));
}

namespace {
// gmpxx leaves mpq_class(num, den) unreduced; equality needs canonical form
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}
}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, canonical(c));
}

Poly::Poly(Var v, int e) { terms_.emplace_back(Monomial(v, e), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace_back(m, canonical(c));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) t.second.canonicalize();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return Poly(std::move(out), 0);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rational(0);
}

Degree Poly::weighted_degree() const {
  if (terms_.empty()) return {};
  int d = terms_.front().first.weighted_degree();
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree() != d) return {Degree::Kind::Mixed, 0};
  return {Degree::Kind::Homogeneous, d};
}

bool Poly::has_kind(VarKind kind) const {
  for (const auto& [m, c] : terms_)
    if (m.has_kind(kind)) return true;
  return false;
}

int Poly::max_exponent(Var v) const {
  int e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, m.exponent(v));
  return e;
}

int Poly::min_exponent(Var v) const {
  if (terms_.empty()) return 0;
  int e = terms_.front().first.exponent(v);
  for (const auto& [m, c] : terms_) e = std::min(e, m.exponent(v));
  return e;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
  std::vector<Poly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return Poly::from_terms(std::move(prod));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  const Rational cc = canonical(c);
  for (auto& t : terms_) t.second *= cc;
  return *this;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  Poly result(1L), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::times_monomial(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mm, c] : terms_) out.emplace_back(mm * m, c);
  return Poly(std::move(out), 0);  // multiplication by a monomial preserves the order
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mm, c] : terms_) out.emplace_back(mm / m, c);
  return Poly(std::move(out), 0);
}

Poly Poly::substitute(const std::map<Var, Poly>& bindings) const {
  if (bindings.empty()) return *this;
  std::map<std::pair<int, int>, Poly> power_cache;
  auto power = [&](const Poly& base, int slot, int e) -> const Poly& {
    auto key = std::make_pair(slot, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, base.pow(e)).first;
    return it->second;
  };
  std::vector<Term> untouched;
  Poly result;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Poly factor(c);
    bool changed = false;
    for (const auto& [v, image] : bindings) {
      int e = m.exponent(v);
      if (!e) continue;
      changed = true;
      rest.set_exponent(v, 0);
      factor *= power(image, v.slot(), e);
      if (factor.is_zero()) break;
    }
    if (!changed) untouched.emplace_back(m, c);
    else if (!factor.is_zero()) result += factor.times_monomial(rest);
  }
  return result + from_terms(std::move(untouched));
}

Poly Poly::at_q_zero() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (!t.first.has_kind(VarKind::Q)) out.push_back(t);
  return Poly(std::move(out), 0);
}

Poly Poly::t_derivative(int i) const {
  Var qi = Var::q(i);
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(qi);
    if (e) out.emplace_back(m, c * e);
  }
  return Poly(std::move(out), 0);
}

std::map<int, Poly> Poly::split_by(Var v) const {
  std::map<int, std::vector<Term>> groups;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = m.exponent(v);
    rest.set_exponent(v, 0);
    groups[e].emplace_back(rest, c);
  }
  std::map<int, Poly> out;
  for (auto& [e, ts] : groups) out.emplace(e, from_terms(std::move(ts)));
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

std::string Poly::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (c < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    bool unit = a == 1 && !m.is_one();
    if (!unit) {
      if (a.get_den() == 1) os << a.get_num().get_str();
      else os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
    }
    for (auto [v, e] : m.factors()) {
      os << (v.kind == VarKind::H ? std::string("h") : v.name().substr(0, 1) + "_" + std::to_string(v.index));
      if (e != 1) os << "^{" << e << "}";
    }
  }
  return os.str();
}

Poly Poly::parse(std::string_view text) {
  detail::ExprParser<Poly> parser(
      text,
      [](std::string_view name) -> Poly {
        auto v = Var::from_name(name);
        if (!v) throw ParseError("unknown variable '" + std::string(name) + "'");
        return Poly(*v);
      },
      [](const Rational& c) { return Poly(c); },
      [](const Poly& p) -> std::optional<Rational> {
        if (!p.is_constant()) return std::nullopt;
        return p.constant_term();
      });
  return parser.parse();
}

nlohmann::json Poly::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    auto ex = nlohmann::json::array();
    for (auto [v, e] : m.factors()) ex.push_back({v.name(), e});
    arr.push_back({{"exponents", ex}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return arr;
}

Poly Poly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& f : t.at("exponents")) {
      auto v = Var::from_name(f.at(0).get<std::string>());
      if (!v) throw ParseError("unknown variable in JSON");
      m.set_exponent(*v, f.at(1).get<int>());
    }
    Rational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
    c.canonicalize();
    terms.emplace_back(m, c);
  }
  return from_terms(std::move(terms));
}

}  // namespace qcflag
