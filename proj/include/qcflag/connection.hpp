#pragma once

// Connection matrices of the D-module presented by a left ideal, their
// splitting by powers of h, and the structural laws they must satisfy.

#include <string>
#include <vector>

#include "qcflag/matrix.hpp"
#include "qcflag/orealg.hpp"

namespace qcflag {

/// Accumulates failed checks; an empty report means every check passed.
struct CheckReport {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  bool ok() const { return failures.empty(); }
  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition) failures.push_back(what);
  }
  void merge(const CheckReport& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
  std::string summary(std::size_t max_lines = 10) const;
};

/// Block sizes s_0..s_m: coefficients of prod_{k=1}^{n-1} (1 + z^2 + ... + z^{2k}) in z^2.
std::vector<int> poincare_block_sizes(int n);

struct FlagContext {
  int n = 0;     // 0 when the generators are user supplied
  int rank = 0;  // r
  int m = 0;     // top block index
  std::vector<int> block_sizes;
  std::vector<orealg::StandardElement> basis;
  BlockPartition blocks;

  int dim() const { return int(basis.size()); }
  /// Checks the basis against the Poincare polynomial of GL_n/B.
  static FlagContext for_gl(int n, const orealg::LeftIdealBasis& gb);
  /// Block structure read off the standard monomials alone.
  static FlagContext from_basis(const orealg::LeftIdealBasis& gb);
};

struct ConnectionData {
  BlockPartition blocks;
  BlockMatForm omega;               // h^0 part of h*Omega
  std::vector<BlockMatForm> theta;  // theta[j] is the h^(j+1) part; at least theta[0]

  int rank() const { return omega.rank(); }
  int p() const { return int(theta.size()) - 1; }
  /// h*Omega_i (0-based direction i) reassembled from the pieces.
  PolyMatrix assembled(int i) const;
  /// Coefficient of h^k in h*Omega_i.
  const PolyMatrix& h_part(int i, int k) const;

  nlohmann::json to_json() const;
};

struct ConnectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raw h*Omega_i matrices; column j holds the coordinates of D_i P_j.
std::vector<PolyMatrix> h_omega(const orealg::LeftIdealBasis& gb, const FlagContext& ctx);

ConnectionData split_by_h(const std::vector<PolyMatrix>& h_omega, const BlockPartition& blocks);

ConnectionData connection_matrices(const orealg::LeftIdealBasis& gb, const FlagContext& ctx);

/// Homogeneity, triangularity, parity vanishings, and the
/// classical multiplication-by-b_i content of column 0 of omega.
CheckReport check_structure(const ConnectionData& cd, const FlagContext& ctx);

/// h (d_i A_j - d_j A_i) + [A_i, A_j] = 0 with A = h*Omega, for all i < j.
CheckReport flatness_check(const ConnectionData& cd);

}  // namespace qcflag
