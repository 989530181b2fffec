#include "qcflag/pipeline.hpp"

#include <cstdlib>
#include <fstream>

namespace qcflag {

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Relations: return "relations";
    case Stage::Grobner: return "grobner";
    case Stage::Connection: return "connection";
    case Stage::LPlus: return "lplus";
    case Stage::QProd: return "qprod";
    case Stage::GW: return "gw";
    case Stage::Schubert: return "schubert";
    case Stage::Verify: return "verify";
  }
  return "?";
}

int stage_exit_code(Stage s) { return 10 + static_cast<int>(s); }

Pipeline::Pipeline(int n, int max_n) : n_(n), rank_(n - 1) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n > max_n) throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n));
  if (n - 1 > kMaxRank) throw std::invalid_argument("n exceeds the supported rank");
}

Pipeline::Pipeline(std::vector<orealg::OreOp> generators, int rank) : n_(0), rank_(rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
  toda::RelationSet rs{0, {}};
  for (const auto& g : generators) rs.relations.push_back(g.symbol());
  relations_ = std::move(rs);
  generators_ = std::move(generators);
}

template <class T, class F>
const T& Pipeline::stage(std::optional<T>& slot, Stage s, F&& compute) {
  if (!slot) {
    try {
      slot.emplace(compute());
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(s, std::string(stage_name(s)) + ": " + e.what());
    }
  }
  return *slot;
}

const toda::RelationSet& Pipeline::relations() {
  return stage(relations_, Stage::Relations, [&] { return toda::quantum_relations(n_); });
}

const std::vector<orealg::OreOp>& Pipeline::generators() {
  return stage(generators_, Stage::Relations, [&] { return toda::quantize(relations()); });
}

const orealg::LeftIdealBasis& Pipeline::ore_basis() {
  return stage(ore_basis_, Stage::Grobner, [&] { return orealg::left_buchberger(generators(), rank_); });
}

const FlagContext& Pipeline::context() {
  return stage(context_, Stage::Grobner, [&] {
    return is_flag() ? FlagContext::for_gl(n_, ore_basis()) : FlagContext::from_basis(ore_basis());
  });
}

const ConnectionData& Pipeline::connection() {
  return stage(connection_, Stage::Connection, [&] { return connection_matrices(ore_basis(), context()); });
}

const LPlus& Pipeline::lplus() {
  return stage(lplus_, Stage::LPlus, [&] { return solve_lplus(connection()); });
}

const GaugeResult& Pipeline::gauge() {
  return stage(gauge_, Stage::LPlus, [&] { return gauge_check(lplus(), connection()); });
}

const QEvaluation& Pipeline::evaluation() {
  return stage(evaluation_, Stage::QProd, [&] { return quantum_evaluation(lplus(), context()); });
}

const QuantumRing& Pipeline::ring() {
  if (!ring_) {
    const auto& omega_hat = gauge().omega_hat;
    ring_ = std::make_unique<QuantumRing>(omega_hat, context());
  }
  return *ring_;
}

const QTable& Pipeline::table() {
  return stage(table_, Stage::QProd, [&] { return full_product_table(ring(), evaluation()); });
}

const commalg::GroebnerBasis& Pipeline::classical_basis() {
  return stage(classical_, Stage::Grobner, [&] {
    return commalg::buchberger(relations().relations, rank_, commalg::CoefficientMode::Specialized);
  });
}

const schubert::SchubertFamily& Pipeline::schubert_family() {
  return stage(family_, Stage::Schubert, [&] {
    if (!is_flag()) throw std::logic_error("Schubert classes need GL_n data");
    return schubert::schubert_polynomials(n_);
  });
}

const PolyMatrix& Pipeline::change_of_basis() {
  return stage(change_, Stage::Schubert,
               [&] { return schubert::change_of_basis(schubert_family(), context(), classical_basis()); });
}

const schubert::QuantumSchubert& Pipeline::quantum_schubert() {
  return stage(qschubert_, Stage::Schubert,
               [&] { return schubert::quantum_schubert(change_of_basis(), lplus(), context()); });
}

const PoincarePairing& Pipeline::pairing() {
  return stage(pairing_, Stage::GW, [&] { return PoincarePairing(context(), classical_basis(), change_of_basis()); });
}

CheckReport Pipeline::structural_checks() {
  CheckReport rep;
  rep.merge(check_structure(connection(), context()));
  rep.merge(flatness_check(connection()));
  rep.merge(check_lplus(lplus()));
  rep.merge(gauge().report);
  return rep;
}

std::vector<Poly> Pipeline::coordinates_of(const Poly& p) {
  const auto& ctx = context();
  auto keyed = commalg::to_keyed(p);
  std::vector<Poly> out(ctx.dim());
  for (int k = 0; k < ctx.dim(); ++k) {
    auto it = keyed.find(ctx.basis[k].exponents);
    if (it == keyed.end()) continue;
    out[k] = it->second;
    keyed.erase(it);
  }
  if (!keyed.empty()) throw std::invalid_argument("polynomial is not in the span of the standard monomials");
  return out;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("QCFLAG_DATA_DIR")) return env;
  return QCFLAG_DATA_DIR;
}

namespace {

using Strings = std::vector<std::vector<std::string>>;

void compare_matrix(CheckReport& rep, const std::string& tag, const PolyMatrix& got, const nlohmann::json& want) {
  const PolyMatrix w = PolyMatrix::parse(want.get<Strings>());
  if (w.rows() != got.rows() || w.cols() != got.cols()) {
    rep.expect(false, tag + ": shape differs");
    return;
  }
  for (int r = 0; r < w.rows(); ++r)
    for (int c = 0; c < w.cols(); ++c)
      rep.expect(w(r, c) == got(r, c), tag + " entry (" + std::to_string(r) + "," + std::to_string(c) + "): expected " +
                                           w(r, c).to_string() + ", computed " + got(r, c).to_string());
}

void compare_vectors(CheckReport& rep, const std::string& tag, const std::vector<Poly>& got,
                     const std::vector<Poly>& want) {
  rep.expect(got.size() == want.size(), tag + ": length differs");
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i)
    rep.expect(got[i] == want[i], tag + " [" + std::to_string(i) + "]: expected " + want[i].to_string() +
                                      ", computed " + got[i].to_string());
}

std::vector<Poly> parse_list(const nlohmann::json& j) {
  std::vector<Poly> out;
  for (const auto& s : j) out.push_back(Poly::parse(s.get<std::string>()));
  return out;
}

std::string tag_of(const nlohmann::json& entry, const char* key) {
  return std::string(key) + " (" + entry.value("provenance", std::string("golden")) + ")";
}

/// Expansion of a class over the monomial basis written back as a polynomial.
Poly expand(const PolyMatrix& m, int col, const FlagContext& ctx) {
  Poly p;
  for (int k = 0; k < ctx.dim(); ++k)
    if (!m(k, col).is_zero()) p += m(k, col) * ctx.basis[k].symbol;
  return p;
}

}  // namespace

CheckReport verify_golden(Pipeline& p, const std::filesystem::path& data_dir) {
  CheckReport rep;
  if (!p.is_flag() || p.n() > 4) {
    rep.expect(false, "no golden data for this input");
    return rep;
  }
  const auto path = data_dir / "golden" / ("gl" + std::to_string(p.n()) + ".json");
  std::ifstream in(path);
  if (!in) {
    rep.expect(false, "cannot open " + path.string());
    return rep;
  }
  const nlohmann::json g = nlohmann::json::parse(in);
  const FlagContext& ctx = p.context();

  if (g.contains("generators")) {
    std::vector<orealg::OreOp> want;
    for (const auto& s : g["generators"]) want.push_back(orealg::OreOp::parse(s.get<std::string>()));
    const auto& got = p.generators();
    rep.expect(got.size() == want.size(), "generators: count differs");
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i)
      rep.expect(got[i] == want[i], "generator " + std::to_string(i + 1) + ": expected " + want[i].to_string() +
                                        ", computed " + got[i].to_string());
  }
  {
    std::vector<Poly> got;
    for (const auto& s : ctx.basis) got.push_back(s.symbol);
    compare_vectors(rep, "standard monomial basis", got, parse_list(g["basis"]));
  }
  const ConnectionData& cd = p.connection();
  if (g.contains("omega"))
    for (int i = 0; i < cd.rank(); ++i)
      compare_matrix(rep, tag_of(g["omega"], "omega") + " dt" + std::to_string(i + 1), cd.omega[i],
                     g["omega"]["value"][i]);
  if (g.contains("theta0"))
    for (int i = 0; i < cd.rank(); ++i)
      compare_matrix(rep, tag_of(g["theta0"], "theta0") + " dt" + std::to_string(i + 1), cd.theta[0][i],
                     g["theta0"]["value"][i]);
  if (g.contains("theta1_zero"))
    rep.expect(cd.p() < 1 || cd.theta[1].is_zero(), tag_of(g["theta1_zero"], "theta1") + ": nonzero");
  if (g.contains("theta_zero")) rep.expect(cd.p() == 0 && cd.theta[0].is_zero(), "theta: nonzero");
  if (g.contains("theta_vanishing"))
    for (int k : g["theta_vanishing"]["value"])
      rep.expect(cd.p() < k || cd.theta[k].is_zero(), tag_of(g["theta_vanishing"], "theta") + ": theta" +
                                                           std::to_string(k) + " is nonzero");
  const LPlus& lp = p.lplus();
  if (g.contains("Q1_zero")) rep.expect(lp.q.size() < 2 || lp.q[1].is_zero(), "Q1 is nonzero");
  if (g.contains("Q_higher_zero"))
    for (int k : g["Q_higher_zero"]["value"])
      rep.expect(k >= int(lp.q.size()) || lp.q[k].is_zero(), "Q" + std::to_string(k) + " is nonzero");
  if (g.contains("Q0")) compare_matrix(rep, tag_of(g["Q0"], "Q0"), lp.q[0], g["Q0"]["value"]);
  if (g.contains("Q0_inverse"))
    compare_matrix(rep, tag_of(g["Q0_inverse"], "Q0 inverse"), lp.q0_inverse, g["Q0_inverse"]["value"]);
  if (g.contains("c_hat"))
    compare_vectors(rep, tag_of(g["c_hat"], "hatted basis"), p.evaluation().c_hat, parse_list(g["c_hat"]["value"]));
  if (g.contains("evaluations")) {
    int idx = 0;
    for (const auto& e : g["evaluations"]["value"]) {
      const Poly lhs = Poly::parse(e["lhs"].get<std::string>());
      const Poly rhs = Poly::parse(e["rhs"].get<std::string>());
      rep.expect(p.ring().evaluate(lhs) == p.coordinates_of(rhs),
                 tag_of(g["evaluations"], "evaluation") + " #" + std::to_string(idx) + ": (" + lhs.to_string() +
                     ")o differs from " + rhs.to_string());
      ++idx;
    }
  }
  if (g.contains("products"))
    for (const auto& e : g["products"]["value"]) {
      const Poly x = Poly::parse(e["i"].get<std::string>());
      const Poly y = Poly::parse(e["j"].get<std::string>());
      const Poly want = Poly::parse(e["value"].get<std::string>());
      const auto got = p.table().multiply(p.ring().evaluate(x), p.ring().evaluate(y));
      rep.expect(got == p.coordinates_of(want), tag_of(g["products"], "product") + ": " + x.to_string() + " o " +
                                                    y.to_string() + " differs from " + want.to_string());
    }
  if (g.contains("C")) compare_matrix(rep, tag_of(g["C"], "C"), p.change_of_basis(), g["C"]["value"]);
  if (g.contains("schubert")) {
    std::vector<Poly> got;
    for (int i = 0; i < ctx.dim(); ++i) got.push_back(expand(p.change_of_basis(), i, ctx));
    compare_vectors(rep, tag_of(g["schubert"], "Schubert classes"), got, parse_list(g["schubert"]["value"]));
  }
  if (g.contains("R")) compare_matrix(rep, tag_of(g["R"], "R"), p.quantum_schubert().r, g["R"]["value"]);
  if (g.contains("quantum_schubert"))
    compare_vectors(rep, tag_of(g["quantum_schubert"], "quantum Schubert polynomials"),
                    p.quantum_schubert().polynomials, parse_list(g["quantum_schubert"]["value"]));
  return rep;
}

}  // namespace qcflag
