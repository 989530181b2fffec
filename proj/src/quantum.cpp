#include "qcflag/quantum.hpp"

namespace qcflag {

QEvaluation quantum_evaluation(const LPlus& lp, const FlagContext& ctx) {
  QEvaluation ev;
  ev.q0_inverse = lp.q0_inverse;
  const int dim = ctx.dim();
  for (int i = 0; i < dim; ++i) {
    Poly c;
    for (int j = 0; j < dim; ++j)
      if (!lp.q0_inverse(j, i).is_zero()) c += lp.q0_inverse(j, i) * ctx.basis[j].symbol;
    ev.c_hat.push_back(std::move(c));
  }
  return ev;
}

QuantumRing::QuantumRing(BlockMatForm omega_hat, const FlagContext& ctx)
    : dim_(ctx.dim()), omega_hat_(std::move(omega_hat)) {
  powers_.emplace(detail::Exps{}, PolyMatrix::identity(dim_));
}

const PolyMatrix& QuantumRing::power(const detail::Exps& e) const {
  auto it = powers_.find(e);
  if (it != powers_.end()) return it->second;
  int i = 0;
  while (e[i] == 0) ++i;
  if (i >= rank()) throw std::out_of_range("b variable beyond the rank of the ring");
  detail::Exps prev = e;
  --prev[i];
  PolyMatrix v = omega_hat_[i] * power(prev);
  return powers_.emplace(e, std::move(v)).first->second;
}

PolyMatrix QuantumRing::multiplication(const Poly& p) const {
  std::lock_guard lock(mutex_);
  PolyMatrix out(dim_, dim_);
  for (const auto& [e, c] : commalg::to_keyed(p)) out += c * power(e);
  return out;
}

std::vector<Poly> QuantumRing::evaluate(const Poly& p) const { return multiplication(p).column(0); }

std::vector<Poly> QuantumRing::product_by_generator(int i, int j) const { return omega_hat_[i - 1].column(j); }

QTable::QTable(const QuantumRing& ring, const QEvaluation& ev) {
  const int dim = ring.dim();
  products_.assign(dim, std::vector<std::vector<Poly>>(dim));
  for (int i = 0; i < dim; ++i) {
    const PolyMatrix m = ring.multiplication(ev.c_hat[i]);
    for (int j = 0; j < dim; ++j) products_[i][j] = m.column(j);
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (products_[i][j] != products_[j][i])
        throw std::logic_error("quantum product table is not commutative at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
}

std::vector<Poly> QTable::multiply(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
  const int dim = this->dim();
  std::vector<Poly> out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const Poly c = x[i] * y[j];
      for (int k = 0; k < dim; ++k)
        if (!products_[i][j][k].is_zero()) out[k] += c * products_[i][j][k];
    }
  }
  return out;
}

std::vector<Poly> QuantumRing::multiply(const std::vector<Poly>& x, const std::vector<Poly>& y,
                                        const std::vector<std::vector<std::vector<Poly>>>& table) const {
  std::vector<Poly> out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      const Poly c = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += c * table[i][j][k];
    }
  return out;
}

QTable full_product_table(const QuantumRing& ring, const QEvaluation& ev) { return QTable(ring, ev); }

PoincarePairing::PoincarePairing(const FlagContext& ctx, const commalg::GroebnerBasis& classical,
                                 const PolyMatrix& change_of_basis) {
  const int dim = ctx.dim();
  std::vector<Monomial> basis;
  for (const auto& s : ctx.basis) basis.push_back(commalg::b_monomial(s.exponents));
  const PolyMatrix cinv = change_of_basis.rational_inverse();
  values_.assign(dim, std::vector<Rational>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      auto coords = commalg::coordinates(ctx.basis[i].symbol * ctx.basis[j].symbol, classical, basis);
      Rational top = 0;
      for (int k = 0; k < dim; ++k) {
        if (coords[k].is_zero()) continue;
        if (!coords[k].is_constant()) throw std::logic_error("classical product depends on q");
        top += cinv(dim - 1, k).constant_term() * coords[k].constant_term();
      }
      values_[i][j] = values_[j][i] = top;
    }
}

PolyMatrix PoincarePairing::matrix() const {
  PolyMatrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) m(i, j) = Poly(values_[i][j]);
  return m;
}

namespace {

Monomial q_monomial(const std::vector<int>& d) {
  Monomial m;
  for (std::size_t l = 0; l < d.size(); ++l)
    if (d[l]) m.set_exponent(Var::q(int(l) + 1), d[l]);
  return m;
}

/// sum_l (c_i o c_j)_l <c_l, c_k>, a polynomial in q.
Poly paired(const QTable& table, const PoincarePairing& pairing, int i, int j, int k) {
  Poly out;
  const auto& prod = table(i, j);
  for (int l = 0; l < table.dim(); ++l)
    if (!prod[l].is_zero() && pairing(l, k) != 0) out += prod[l] * pairing(l, k);
  return out;
}

}  // namespace

Rational gw_invariant(const QTable& table, const PoincarePairing& pairing, int i, int j, int k,
                      const std::vector<int>& degree) {
  const Monomial want = q_monomial(degree);
  const Poly p = paired(table, pairing, i, j, k);
  for (const auto& [m, c] : p.terms())
    if (m == want) return c;
  return 0;
}

std::vector<GWRecord> gw_invariants(const QTable& table, const PoincarePairing& pairing,
                                    const std::optional<std::vector<int>>& degree) {
  std::vector<GWRecord> out;
  const int dim = table.dim();
  int rank = 0;
  for (int i = 0; i < dim; ++i)
    for (const auto& p : table(i, i))
      for (const auto& [m, c] : p.terms())
        for (auto [v, e] : m.factors())
          if (v.kind == VarKind::Q) rank = std::max(rank, v.index);
  if (degree) rank = std::max(rank, int(degree->size()));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = j; k < dim; ++k) {
        Poly p = paired(table, pairing, i, j, k);
        for (const auto& [m, c] : p.terms()) {
          if (!m.without(VarKind::Q).is_one()) throw std::logic_error("pairing produced a non-q term");
          std::vector<int> d(std::max(rank, 1), 0);
          for (auto [v, e] : m.factors()) {
            if (v.index > int(d.size())) d.resize(v.index, 0);
            d[v.index - 1] = e;
          }
          if (degree) {
            std::vector<int> want = *degree;
            want.resize(d.size(), 0);
            if (want != d) continue;
          }
          if (c.get_den() != 1)
            throw NonIntegralInvariant("invariant <" + std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + "> = " + to_string(c) + " is not an integer");
          out.push_back({i, j, k, d, c});
        }
      }
  return out;
}

}  // namespace qcflag
