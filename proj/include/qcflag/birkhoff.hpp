#pragma once

// Solves for the plus factor L+ = Q0 (I + h Q1 + ... + h^(m-2) Q_(m-2)) one
// block diagonal at a time, integrating each closed matrix 1-form exactly.

#include <string>
#include <utility>
#include <vector>

#include "qcflag/connection.hpp"

namespace qcflag {

struct DiagonalSlice {
  int owner = 0;  // i for Q_i; also used for the source form component
  int j = 0;      // diagonal index
  PolyMatrix value;
};

/// Nonzero k-diagonals of a, ascending in k.
std::vector<DiagonalSlice> diagonal_parts(const PolyMatrix& a, const BlockPartition& blocks, int owner = 0);

/// The unknowns Q_i^[j] with 1 <= i and i + 2 <= j <= m, smallest first:
/// ascending j - i, and for equal j - i the larger j first.
std::vector<std::pair<int, int>> solve_order(int m);

struct IntegrationError : std::runtime_error {
  enum class Kind { NotClosed, ConstantTermPresent };
  IntegrationError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

/// The unique Q with Q(q=0) = 0 and q_i dQ/dq_i = a[i-1] for every i.
PolyMatrix integrate_closed_form(const std::vector<PolyMatrix>& a);

struct LPlus {
  BlockPartition blocks;
  std::vector<PolyMatrix> q;  // q[0] = Q0, q[i] = Q_i for 1 <= i <= m - 2
  PolyMatrix q0_inverse;

  int m() const { return blocks.top_block(); }
  /// Coefficient L_e of h^e in L+, i.e. Q0 Q_e (with Q_0 factor replaced by I).
  PolyMatrix coefficient(int e) const;
  nlohmann::json to_json() const;
};

struct BirkhoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LPlus solve_lplus(const ConnectionData& cd);

/// Triangularity, homogeneity, parity, unipotence and base point of each Q_i.
CheckReport check_lplus(const LPlus& lp);

struct GaugeResult {
  BlockMatForm omega_hat;  // Q0 omega Q0^-1
  CheckReport report;
};

/// Verifies omega_hat L+ = L+ (h Omega) - h dL+ at every power of h, the
/// integrability and commutativity of omega_hat, and its degree and triangular shape.
GaugeResult gauge_check(const LPlus& lp, const ConnectionData& cd);

}  // namespace qcflag
