#pragma once

// Quantum cohomology relations of the full flag manifold GL_n/B from the
// characteristic polynomial of the tridiagonal Toda matrix.

#include <vector>

#include "qcflag/matrix.hpp"
#include "qcflag/orealg.hpp"
#include "qcflag/poly.hpp"

namespace qcflag::toda {

struct TodaMatrix {
  int n = 0;
  PolyMatrix entries;  // diagonal x_i in terms of b, superdiagonal q_i, subdiagonal -1
};

struct RelationSet {
  int n = 0;
  std::vector<Poly> relations;  // relations[i-1] has weighted degree 2(i+1)
};

TodaMatrix toda_matrix(int n);

/// Coefficients of det(Z + lambda I); entry k multiplies lambda^k.
std::vector<Poly> characteristic_coefficients(const TodaMatrix& z);

/// Relation i is the lambda^(n-1-i) coefficient, scaled so that its
/// smallest q-free term in grevlex has coefficient +1.
RelationSet quantum_relations(int n);

std::vector<orealg::OreOp> quantize(const RelationSet& rs);

}  // namespace qcflag::toda
