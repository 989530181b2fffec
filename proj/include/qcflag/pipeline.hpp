#pragma once

// Stage-by-stage driver for the whole computation. Each stage is computed
// on first use and cached; a Pipeline is not safe for concurrent use.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcflag/birkhoff.hpp"
#include "qcflag/commalg.hpp"
#include "qcflag/quantum.hpp"
#include "qcflag/schubert.hpp"
#include "qcflag/toda.hpp"

namespace qcflag {

enum class Stage { Relations, Grobner, Connection, LPlus, QProd, GW, Schubert, Verify };

const char* stage_name(Stage s);
/// Process exit status used when a stage fails.
int stage_exit_code(Stage s);

struct StageError : std::runtime_error {
  StageError(Stage s, const std::string& what) : std::runtime_error(what), stage(s) {}
  Stage stage;
};

class Pipeline {
 public:
  /// GL_n data; n must lie in [2, max_n].
  explicit Pipeline(int n, int max_n = 5);
  /// Operator generators supplied by the caller instead of the Toda ones.
  Pipeline(std::vector<orealg::OreOp> generators, int rank);

  int n() const { return n_; }
  int rank() const { return rank_; }
  bool is_flag() const { return n_ > 0; }

  const toda::RelationSet& relations();
  const std::vector<orealg::OreOp>& generators();
  const orealg::LeftIdealBasis& ore_basis();
  const FlagContext& context();
  const ConnectionData& connection();
  const LPlus& lplus();
  const GaugeResult& gauge();
  const QEvaluation& evaluation();
  const QuantumRing& ring();
  const QTable& table();
  const commalg::GroebnerBasis& classical_basis();
  const schubert::SchubertFamily& schubert_family();
  const PolyMatrix& change_of_basis();
  const schubert::QuantumSchubert& quantum_schubert();
  const PoincarePairing& pairing();

  /// Structure, flatness, L+ shape and gauge checks.
  CheckReport structural_checks();

  /// Coordinates over the standard monomial basis of a polynomial already
  /// written in standard monomials with q coefficients.
  std::vector<Poly> coordinates_of(const Poly& p);

 private:
  template <class T, class F>
  const T& stage(std::optional<T>& slot, Stage s, F&& compute);

  int n_ = 0;
  int rank_ = 0;
  std::optional<toda::RelationSet> relations_;
  std::optional<std::vector<orealg::OreOp>> generators_;
  std::optional<orealg::LeftIdealBasis> ore_basis_;
  std::optional<FlagContext> context_;
  std::optional<ConnectionData> connection_;
  std::optional<LPlus> lplus_;
  std::optional<GaugeResult> gauge_;
  std::optional<QEvaluation> evaluation_;
  std::unique_ptr<QuantumRing> ring_;
  std::optional<QTable> table_;
  std::optional<commalg::GroebnerBasis> classical_;
  std::optional<schubert::SchubertFamily> family_;
  std::optional<PolyMatrix> change_;
  std::optional<schubert::QuantumSchubert> qschubert_;
  std::optional<PoincarePairing> pairing_;
};

/// Directory holding golden/gl{2,3,4}.json.
std::filesystem::path default_data_dir();

/// Exact comparison of the pipeline against the shipped golden data for n in {2, 3, 4}.
CheckReport verify_golden(Pipeline& p, const std::filesystem::path& data_dir = default_data_dir());

}  // namespace qcflag
