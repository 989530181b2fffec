#pragma once

// Named invariant checks over a pipeline. Used by the CLI at check level
// "full" and by the acceptance run.

#include <string>
#include <vector>

#include "qcflag/pipeline.hpp"

namespace qcflag {

struct NamedReport {
  std::string name;
  CheckReport report;
};

/// Connection laws, L+ shape, gauge identity, commutativity and the block census.
std::vector<NamedReport> structural_properties(Pipeline& p);

/// Product-table, Schubert and Gromov-Witten properties. GL_n only.
std::vector<NamedReport> ring_properties(Pipeline& p);

/// Solves again with the connection written in the Schubert basis and
/// compares the new Q0 with C^-1 Q0 C.
CheckReport schubert_basis_rerun(Pipeline& p);

}  // namespace qcflag
