#pragma once

// Quantum evaluation, quantum products, the Poincare pairing, and 3-point
// genus-zero Gromov-Witten invariants.

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "qcflag/birkhoff.hpp"
#include "qcflag/commalg.hpp"

namespace qcflag {

/// Hatted basis c_hat_i = sum_j (Q0^-1)_ji c_j.
struct QEvaluation {
  std::vector<Poly> c_hat;
  PolyMatrix q0_inverse;
};

QEvaluation quantum_evaluation(const LPlus& lp, const FlagContext& ctx);

/// Quantum multiplication operators, with column j of omega_hat_i giving
/// [[b_i]] o [[c_j]] in the basis [[c_0]]..[[c_s]].
class QuantumRing {
 public:
  QuantumRing(BlockMatForm omega_hat, const FlagContext& ctx);

  int dim() const { return dim_; }
  int rank() const { return omega_hat_.rank(); }
  const BlockMatForm& omega_hat() const { return omega_hat_; }

  /// Multiplication by p(b, q), where each b_i acts as omega_hat_i.
  PolyMatrix multiplication(const Poly& p) const;
  /// p evaluated with the quantum product, i.e. p^o, as coordinates.
  std::vector<Poly> evaluate(const Poly& p) const;
  std::vector<Poly> product_by_generator(int i, int j) const;
  /// x o y for coordinate vectors.
  std::vector<Poly> multiply(const std::vector<Poly>& x, const std::vector<Poly>& y,
                             const std::vector<std::vector<std::vector<Poly>>>& table) const;

 private:
  const PolyMatrix& power(const detail::Exps& e) const;

  int dim_;
  BlockMatForm omega_hat_;
  mutable std::mutex mutex_;
  mutable std::map<detail::Exps, PolyMatrix, detail::ExpsDescending> powers_;
};

/// [[c_i]] o [[c_j]] for all basis pairs.
class QTable {
 public:
  QTable(const QuantumRing& ring, const QEvaluation& ev);

  int dim() const { return int(products_.size()); }
  const std::vector<Poly>& operator()(int i, int j) const { return products_[i][j]; }
  const std::vector<std::vector<std::vector<Poly>>>& products() const { return products_; }
  /// x o y for coordinate vectors.
  std::vector<Poly> multiply(const std::vector<Poly>& x, const std::vector<Poly>& y) const;

 private:
  std::vector<std::vector<std::vector<Poly>>> products_;
};

QTable full_product_table(const QuantumRing& ring, const QEvaluation& ev);

class PoincarePairing {
 public:
  /// classical: Groebner basis of the relations at q = 0; change_of_basis: columns
  /// are the Schubert classes in the monomial basis, the last one the top class.
  PoincarePairing(const FlagContext& ctx, const commalg::GroebnerBasis& classical, const PolyMatrix& change_of_basis);

  Rational operator()(int i, int j) const { return values_[i][j]; }
  int dim() const { return int(values_.size()); }
  PolyMatrix matrix() const;

 private:
  std::vector<std::vector<Rational>> values_;
};

struct GWRecord {
  int i = 0, j = 0, k = 0;
  std::vector<int> degree;
  Rational value;
};

struct NonIntegralInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// <c_i, c_j, c_k>_d for i <= j <= k, nonzero values only. With a degree
/// filter only that multidegree is reported.
std::vector<GWRecord> gw_invariants(const QTable& table, const PoincarePairing& pairing,
                                    const std::optional<std::vector<int>>& degree = std::nullopt);

/// Single invariant, any index order.
Rational gw_invariant(const QTable& table, const PoincarePairing& pairing, int i, int j, int k,
                      const std::vector<int>& degree);

}  // namespace qcflag
