#pragma once

// Schubert polynomials by divided differences, their expansion in the
// standard monomial basis, and the quantum Schubert polynomials.

#include <vector>

#include "qcflag/birkhoff.hpp"
#include "qcflag/commalg.hpp"

namespace qcflag::schubert {

using Permutation = std::vector<int>;  // one-line notation, values 1..n

int length(const Permutation& w);
Permutation inverse(const Permutation& w);
/// Lehmer code: c_i = #{j > i : w(j) < w(i)}.
std::vector<int> lehmer_code(const Permutation& w);
std::vector<Permutation> permutations_by_length(int n);

/// (f - s_i f) / (x_i - x_{i+1}), exact.
Poly divided_difference(const Poly& f, int i);

/// x_k -> b_{n-k} - b_{n-k+1} with b_0 = b_n = 0.
Poly to_b_variables(const Poly& x_poly, int n);

struct SchubertClass {
  Permutation w;
  Poly x_poly;
  Poly b_poly;
};

struct SchubertFamily {
  int n = 0;
  std::vector<SchubertClass> classes;  // ascending length; see schubert_polynomials
};

/// All Schubert polynomials of S_n, ordered by length with ties broken by
/// descending Lehmer code of the inverse permutation. Every polynomial is
/// reached along all reduced words and the results are checked to agree.
SchubertFamily schubert_polynomials(int n);

/// Columns are the classes expanded in the standard monomial basis of ctx.
PolyMatrix change_of_basis(const SchubertFamily& fam, const FlagContext& ctx,
                           const commalg::GroebnerBasis& classical);

struct QuantumSchubert {
  PolyMatrix r;                 // Q0^-1 C
  std::vector<Poly> polynomials;  // sum_k R_ki c_k
};

QuantumSchubert quantum_schubert(const PolyMatrix& change, const LPlus& lp, const FlagContext& ctx);

/// Connection data for the basis P'_i = sum_j C_ji P_j, i.e. C^-1 Omega C.
ConnectionData change_connection_basis(const ConnectionData& cd, const PolyMatrix& change);

}  // namespace qcflag::schubert
