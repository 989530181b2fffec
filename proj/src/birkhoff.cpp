#include "qcflag/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcflag {

std::vector<DiagonalSlice> diagonal_parts(const PolyMatrix& a, const BlockPartition& blocks, int owner) {
  std::vector<DiagonalSlice> out;
  for (auto& [k, v] : blocks.slices(a)) out.push_back({owner, k, std::move(v)});
  return out;
}

std::vector<std::pair<int, int>> solve_order(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i + 2 <= m; ++i)
    for (int j = i + 2; j <= m; ++j) out.emplace_back(i, j);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const int dx = x.second - x.first, dy = y.second - y.first;
    if (dx != dy) return dx < dy;
    return x.second > y.second;
  });
  return out;
}

PolyMatrix integrate_closed_form(const std::vector<PolyMatrix>& a) {
  if (a.empty()) throw std::invalid_argument("integrate_closed_form needs at least one component");
  const int rows = a[0].rows(), cols = a[0].cols();
  const int r = int(a.size());
  PolyMatrix out(rows, cols);
  for (int x = 0; x < rows; ++x)
    for (int y = 0; y < cols; ++y) {
      std::map<Monomial, Rational> acc;
      for (int i = 0; i < r; ++i) {
        for (const auto& [mono, c] : a[i](x, y).terms()) {
          if (mono.without(VarKind::Q).is_one() == false)
            throw IntegrationError(IntegrationError::Kind::NotClosed, "form entry depends on variables other than q");
          if (!mono.has_kind(VarKind::Q))
            throw IntegrationError(IntegrationError::Kind::ConstantTermPresent,
                                   "component " + std::to_string(i + 1) + " entry (" + std::to_string(x) + "," +
                                       std::to_string(y) + ") has a q-free term");
          const int ai = mono.exponent(Var::q(i + 1));
          if (ai == 0)
            throw IntegrationError(IntegrationError::Kind::NotClosed,
                                   "component " + std::to_string(i + 1) + " entry (" + std::to_string(x) + "," +
                                       std::to_string(y) + ") has the term " + mono.to_string() + " free of q" +
                                       std::to_string(i + 1));
          acc.try_emplace(mono, c / ai);
        }
      }
      std::vector<Poly::Term> terms(acc.begin(), acc.end());
      out(x, y) = Poly::from_terms(std::move(terms));
    }
  for (int i = 0; i < r; ++i)
    if (!(out.t_derivative(i + 1) == a[i]))
      throw IntegrationError(IntegrationError::Kind::NotClosed,
                             "form is not closed in direction " + std::to_string(i + 1));
  return out;
}

PolyMatrix LPlus::coefficient(int e) const {
  if (e == 0) return q[0];
  if (e < 0 || e >= int(q.size())) return PolyMatrix(blocks.dim(), blocks.dim());
  return q[0] * q[e];
}

nlohmann::json LPlus::to_json() const {
  nlohmann::json qs = nlohmann::json::array();
  for (const auto& x : q) qs.push_back(x.to_json());
  return {{"Q", qs}, {"Q0_inverse", q0_inverse.to_json()}};
}

namespace {

std::string sym(int i, int j) { return "Q" + std::to_string(i) + "^[" + std::to_string(j) + "]"; }

/// Per-direction diagonal slices of a matrix form, keyed by diagonal.
using Sliced = std::vector<std::map<int, PolyMatrix>>;

Sliced slice_form(const BlockMatForm& f, const BlockPartition& bp) {
  Sliced out;
  for (const auto& c : f.components) out.push_back(bp.slices(c));
  return out;
}

class SliceStore {
 public:
  SliceStore(int m, int dim) : m_(m), zero_(dim, dim) {}

  bool in_range(int i, int j) const { return i >= 1 && i <= m_ - 2 && j >= i + 2 && j <= m_; }

  const PolyMatrix& get(int i, int j) const {
    if (!in_range(i, j)) return zero_;
    auto it = solved_.find({i, j});
    if (it == solved_.end()) throw std::logic_error("right-hand side needs unsolved " + sym(i, j));
    return it->second;
  }

  void set(int i, int j, PolyMatrix v) { solved_[{i, j}] = std::move(v); }

 private:
  int m_;
  PolyMatrix zero_;
  std::map<std::pair<int, int>, PolyMatrix> solved_;
};

}  // namespace

LPlus solve_lplus(const ConnectionData& cd) {
  const BlockPartition& bp = cd.blocks;
  const int m = bp.top_block();
  const int dim = bp.dim();
  const int r = cd.rank();
  LPlus lp;
  lp.blocks = bp;

  const Sliced omega = slice_form(cd.omega, bp);
  std::vector<Sliced> theta;
  for (const auto& t : cd.theta) theta.push_back(slice_form(t, bp));
  auto theta_of = [&](int i) -> const Sliced* { return i < int(theta.size()) ? &theta[i] : nullptr; };

  SliceStore store(m, dim);
  for (auto [i, j] : solve_order(m)) {
    std::vector<PolyMatrix> rhs;
    for (int l = 0; l < r; ++l) {
      PolyMatrix acc(dim, dim);
      if (const Sliced* t = theta_of(i)) {
        auto it = (*t)[l].find(j);
        if (it != (*t)[l].end()) acc += it->second;
      }
      for (int k = 1; k <= i - 1; ++k)
        if (const Sliced* t = theta_of(i - k))
          for (const auto& [a, th] : (*t)[l]) {
            const PolyMatrix& qk = store.get(k, j - a);
            if (!qk.is_zero()) acc += qk * th;
          }
      if (const Sliced* t = theta_of(0))
        for (const auto& [a, th] : (*t)[l]) {
          const PolyMatrix& qi = store.get(i, j - a);
          if (!qi.is_zero()) acc += PolyMatrix::commutator(qi, th);
        }
      for (const auto& [a, om] : omega[l]) {
        const PolyMatrix& qn = store.get(i + 1, j - a);
        if (!qn.is_zero()) acc += PolyMatrix::commutator(qn, om);
      }
      for (int c = i + 2; c <= j - 2; ++c) {  // Q1 slices start at 3, omega at -1
        const PolyMatrix& qi = store.get(i, c);
        if (qi.is_zero()) continue;
        for (const auto& [b, om] : omega[l]) {
          const PolyMatrix& q1 = store.get(1, j - b - c);
          if (!q1.is_zero()) acc -= PolyMatrix::commutator(q1, om) * qi;
        }
      }
      rhs.push_back(std::move(acc));
    }
    PolyMatrix sol;
    try {
      sol = integrate_closed_form(rhs);
    } catch (const IntegrationError& e) {
      throw IntegrationError(e.kind, sym(i, j) + ": " + e.what());
    }
    if ((j - i) % 2 != 0 && !sol.is_zero()) throw BirkhoffError(sym(i, j) + " is nonzero although j - i is odd");
    if (!(bp.diagonal(sol, j) == sol)) throw BirkhoffError(sym(i, j) + " is not supported on its diagonal");
    store.set(i, j, std::move(sol));
  }

  lp.q.assign(std::max(1, m - 1), PolyMatrix(dim, dim));
  for (int i = 1; i <= m - 2; ++i)
    for (int j = i + 2; j <= m; ++j) lp.q[i] += store.get(i, j);

  // Q0 from dQ0 = Q0 Phi with Phi = theta0 + [Q1, omega]
  const PolyMatrix q1 = m >= 3 ? lp.q[1] : PolyMatrix(dim, dim);
  Sliced phi;
  for (int l = 0; l < r; ++l) {
    PolyMatrix p = PolyMatrix::commutator(q1, cd.omega[l]);
    if (!cd.theta.empty()) p += cd.theta[0][l];
    auto s = bp.slices(p);
    for (const auto& [k, v] : s)
      if (k < 1) throw BirkhoffError("theta0 + [Q1, omega] has a nonzero " + std::to_string(k) + "-diagonal");
    phi.push_back(std::move(s));
  }
  std::vector<PolyMatrix> q0(m + 1, PolyMatrix(dim, dim));
  q0[0] = PolyMatrix::identity(dim);
  for (int j = 1; j <= m; ++j) {
    std::vector<PolyMatrix> rhs;
    for (int l = 0; l < r; ++l) {
      PolyMatrix acc(dim, dim);
      for (const auto& [k, v] : phi[l])
        if (k <= j && !q0[j - k].is_zero()) acc += q0[j - k] * v;
      rhs.push_back(std::move(acc));
    }
    try {
      q0[j] = integrate_closed_form(rhs);
    } catch (const IntegrationError& e) {
      throw IntegrationError(e.kind, "Q0^[" + std::to_string(j) + "]: " + e.what());
    }
    if (j % 2 != 0 && !q0[j].is_zero()) throw BirkhoffError("Q0^[" + std::to_string(j) + "] is nonzero");
  }
  lp.q[0] = PolyMatrix(dim, dim);
  for (const auto& s : q0) lp.q[0] += s;
  lp.q0_inverse = lp.q[0].unipotent_inverse();
  return lp;
}

CheckReport check_lplus(const LPlus& lp) {
  CheckReport rep;
  const BlockPartition& bp = lp.blocks;
  const int dim = bp.dim();
  for (std::size_t i = 0; i < lp.q.size(); ++i) {
    const PolyMatrix x = i == 0 ? lp.q[0] - PolyMatrix::identity(dim) : lp.q[i];
    const std::string name = "Q" + std::to_string(i);
    const int need = i == 0 ? 2 : int(i) + 2;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const Poly& e = x(a, b);
        if (e.is_zero()) continue;
        const int d = bp.diagonal_of(a, b);
        const std::string at = name + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        rep.expect(d >= need, at + " lies below the " + std::to_string(need) + "-diagonal");
        rep.expect(e.weighted_degree().is(2 * (d - int(i))), at + " is not homogeneous of the expected degree");
        rep.expect((d - int(i)) % 2 == 0, at + " violates the parity rule");
        rep.expect(e.at_q_zero().is_zero(), at + " does not vanish at q = 0");
      }
  }
  rep.expect(lp.q[0] * lp.q0_inverse == PolyMatrix::identity(dim), "Q0 * Q0^-1 is not the identity");
  return rep;
}

GaugeResult gauge_check(const LPlus& lp, const ConnectionData& cd) {
  GaugeResult out;
  CheckReport& rep = out.report;
  const int r = cd.rank();
  const int dim = cd.blocks.dim();
  for (int l = 0; l < r; ++l) out.omega_hat.components.push_back(lp.q[0] * cd.omega[l] * lp.q0_inverse);

  const int top_l = int(lp.q.size()) - 1;
  const int top_a = cd.p() + 1;
  std::vector<PolyMatrix> lcoef;
  for (int e = 0; e <= top_l; ++e) lcoef.push_back(lp.coefficient(e));
  auto L = [&](int e) { return e >= 0 && e <= top_l ? lcoef[e] : PolyMatrix(dim, dim); };
  for (int l = 0; l < r; ++l)
    for (int e = 0; e <= top_l + top_a + 1; ++e) {
      PolyMatrix lhs = out.omega_hat[l] * L(e);
      PolyMatrix rhs(dim, dim);
      for (int a = 0; a <= std::min(e, top_l); ++a) {
        const int b = e - a;
        if (b > top_a) continue;
        rhs += L(a) * cd.h_part(l, b);
      }
      if (e >= 1) rhs -= L(e - 1).t_derivative(l + 1);
      rep.expect(lhs == rhs, "gauge identity fails in direction " + std::to_string(l + 1) + " at h^" +
                                 std::to_string(e));
    }

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      rep.expect(out.omega_hat[j].t_derivative(i + 1) == out.omega_hat[i].t_derivative(j + 1),
                 "omega_hat is not integrable in directions " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      rep.expect(PolyMatrix::commutator(out.omega_hat[i], out.omega_hat[j]).is_zero(),
                 "omega_hat components " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " do not commute");
    }
  for (int l = 0; l < r; ++l)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const Poly& e = out.omega_hat[l](a, b);
        if (e.is_zero()) continue;
        const int d = cd.blocks.diagonal_of(a, b);
        rep.expect(d >= -1 && e.weighted_degree().is(2 * (d + 1)) && !e.has_kind(VarKind::H),
                   "omega_hat_" + std::to_string(l + 1) + "(" + std::to_string(a) + "," + std::to_string(b) +
                       ") breaks (-1)-triangularity or homogeneity");
      }
  return out;
}

}  // namespace qcflag
