#include "qcflag/connection.hpp"

#include <sstream>

namespace qcflag {

std::string CheckReport::summary(std::size_t max_lines) const {
  std::ostringstream os;
  os << checks << " checks, " << failures.size() << " failures";
  for (std::size_t i = 0; i < failures.size() && i < max_lines; ++i) os << "\n  " << failures[i];
  if (failures.size() > max_lines) os << "\n  ...";
  return os.str();
}

std::vector<int> poincare_block_sizes(int n) {
  std::vector<int> coeffs{1};
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<int> next(coeffs.size() + k, 0);
    for (std::size_t a = 0; a < coeffs.size(); ++a)
      for (int b = 0; b <= k; ++b) next[a + b] += coeffs[a];
    coeffs = std::move(next);
  }
  return coeffs;
}

FlagContext FlagContext::from_basis(const orealg::LeftIdealBasis& gb) {
  FlagContext ctx;
  ctx.rank = gb.rank();
  ctx.basis = orealg::standard_operator_basis(gb);
  std::vector<int> block_of;
  for (const auto& s : ctx.basis) block_of.push_back(detail::total_degree(s.exponents));
  ctx.blocks = BlockPartition(block_of);
  ctx.block_sizes = ctx.blocks.sizes();
  ctx.m = ctx.blocks.top_block();
  return ctx;
}

FlagContext FlagContext::for_gl(int n, const orealg::LeftIdealBasis& gb) {
  if (gb.rank() != n - 1) throw ConnectionError("basis rank does not match n - 1");
  FlagContext ctx = from_basis(gb);
  ctx.n = n;
  if (ctx.block_sizes != poincare_block_sizes(n))
    throw ConnectionError("standard monomials do not match the Poincare polynomial of the flag manifold");
  if (ctx.m != n * (n - 1) / 2) throw ConnectionError("top degree differs from n(n-1)/2");
  return ctx;
}

PolyMatrix ConnectionData::assembled(int i) const {
  PolyMatrix out = omega[i];
  for (std::size_t j = 0; j < theta.size(); ++j)
    out += Poly(Monomial(Var::h(), int(j) + 1), 1) * theta[j][i];
  return out;
}

const PolyMatrix& ConnectionData::h_part(int i, int k) const { return k == 0 ? omega[i] : theta[k - 1][i]; }

nlohmann::json ConnectionData::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& th : theta) t.push_back(th.to_json());
  return {{"omega", omega.to_json()}, {"theta", t}, {"p", p()}};
}

std::vector<PolyMatrix> h_omega(const orealg::LeftIdealBasis& gb, const FlagContext& ctx) {
  const int dim = ctx.dim();
  std::map<detail::Exps, int> index;
  for (int k = 0; k < dim; ++k) index[ctx.basis[k].exponents] = k;
  std::vector<PolyMatrix> out;
  for (int i = 1; i <= ctx.rank; ++i) {
    PolyMatrix a(dim, dim);
    const orealg::OreOp di = orealg::OreOp::d(i);
    for (int j = 0; j < dim; ++j) {
      auto nf = orealg::left_normal_form(di * ctx.basis[j].op, gb);
      const Monomial hk(Var::h(), nf.h_power);
      for (const auto& [e, c] : nf.remainder.terms()) {
        auto it = index.find(e);
        if (it == index.end()) throw ConnectionError("normal form contains a non-standard monomial");
        try {
          a(it->second, j) = nf.h_power ? c.divided_by_monomial(hk) : c;
        } catch (const std::domain_error&) {
          throw ConnectionError("connection entry (" + std::to_string(it->second) + "," + std::to_string(j) +
                                ") of direction " + std::to_string(i) + " has an h-denominator");
        }
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

ConnectionData split_by_h(const std::vector<PolyMatrix>& hom, const BlockPartition& blocks) {
  ConnectionData cd;
  cd.blocks = blocks;
  const int dim = blocks.dim();
  int top = 1;
  std::vector<std::map<int, PolyMatrix>> parts(hom.size());
  for (std::size_t i = 0; i < hom.size(); ++i)
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        if (hom[i](r, c).is_zero()) continue;
        for (auto& [k, coeff] : hom[i](r, c).split_by(Var::h())) {
          auto it = parts[i].find(k);
          if (it == parts[i].end()) it = parts[i].emplace(k, PolyMatrix(dim, dim)).first;
          it->second(r, c) = coeff;
          top = std::max(top, k);
        }
      }
  auto piece = [&](std::size_t i, int k) {
    auto it = parts[i].find(k);
    return it == parts[i].end() ? PolyMatrix(dim, dim) : it->second;
  };
  for (std::size_t i = 0; i < hom.size(); ++i) cd.omega.components.push_back(piece(i, 0));
  // trailing zero theta's are dropped, keeping theta[0]
  int last = 1;
  for (int k = 1; k <= top; ++k)
    for (std::size_t i = 0; i < hom.size(); ++i)
      if (!piece(i, k).is_zero()) last = std::max(last, k);
  for (int k = 1; k <= last; ++k) {
    BlockMatForm th;
    for (std::size_t i = 0; i < hom.size(); ++i) th.components.push_back(piece(i, k));
    cd.theta.push_back(std::move(th));
  }
  return cd;
}

ConnectionData connection_matrices(const orealg::LeftIdealBasis& gb, const FlagContext& ctx) {
  return split_by_h(h_omega(gb, ctx), ctx.blocks);
}

namespace {

std::string where(const std::string& name, int dir, int r, int c) {
  return name + "_" + std::to_string(dir + 1) + "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

CheckReport check_structure(const ConnectionData& cd, const FlagContext& ctx) {
  CheckReport rep;
  const BlockPartition& bp = cd.blocks;
  const int dim = bp.dim();
  for (int i = 0; i < cd.rank(); ++i) {
    for (int k = 0; k <= cd.p() + 1; ++k) {
      const PolyMatrix& a = cd.h_part(i, k);
      const int j = k - 1;  // theta index; -1 stands for omega
      const std::string name = k == 0 ? "omega" : "theta" + std::to_string(j);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
          const Poly& e = a(r, c);
          if (e.is_zero()) continue;
          const int diag = bp.diagonal_of(r, c);
          // degree 2(beta - alpha - j), with j = -1 for omega
          rep.expect(e.weighted_degree().is(2 * (diag - j)),
                     where(name, i, r, c) + " is not homogeneous of degree " + std::to_string(2 * (diag - j)));
          rep.expect(!e.has_kind(VarKind::H), where(name, i, r, c) + " contains h");
          // omega is (-1)-triangular, theta^(j) is (j+2)-triangular
          const int lowest = k == 0 ? -1 : j + 2;
          rep.expect(diag >= lowest, where(name, i, r, c) + " lies below the " + std::to_string(lowest) + "-diagonal");
          // parity: omega^[d] = 0 for even d, theta^(j),[d] = 0 for odd d - j
          rep.expect((diag - j) % 2 == 0, where(name, i, r, c) + " violates the diagonal parity rule");
        }
    }
    // column 0 of omega_i is multiplication of 1 by b_i
    for (int r = 0; r < dim; ++r) {
      const bool is_bi = ctx.basis[r].symbol == Poly(Var::b(i + 1));
      rep.expect(cd.omega[i](r, 0).at_q_zero() == Poly(is_bi ? 1L : 0L),
                 where("omega", i, r, 0) + " does not encode multiplication of 1 by b" + std::to_string(i + 1));
    }
  }
  return rep;
}

CheckReport flatness_check(const ConnectionData& cd) {
  CheckReport rep;
  const Poly h(Var::h());
  std::vector<PolyMatrix> a;
  for (int i = 0; i < cd.rank(); ++i) a.push_back(cd.assembled(i));
  for (int i = 0; i < cd.rank(); ++i)
    for (int j = i + 1; j < cd.rank(); ++j) {
      PolyMatrix curv = h * (a[j].t_derivative(i + 1) - a[i].t_derivative(j + 1)) + PolyMatrix::commutator(a[i], a[j]);
      for (int r = 0; r < curv.rows(); ++r)
        for (int c = 0; c < curv.cols(); ++c)
          if (curv(r, c).is_zero()) {
            ++rep.checks;
          } else {
            rep.expect(false, "curvature (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") entry (" +
                                  std::to_string(r) + "," + std::to_string(c) + ") = " + curv(r, c).to_string());
          }
    }
  return rep;
}

}  // namespace qcflag
