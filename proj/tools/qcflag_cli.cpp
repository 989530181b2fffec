// Command-line front end: qcflag <command> --n N [options]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcflag/pipeline.hpp"
#include "qcflag/properties.hpp"

using namespace qcflag;
using nlohmann::json;

namespace {

constexpr int kUsageExit = 2;
constexpr int kCheckExit = 20;

enum class Format { Text, Json, Latex };
enum class Check { None, Structural, Full };

struct Options {
  int n = 3;
  Format format = Format::Text;
  Check check = Check::Structural;
  bool check_given = false;
  std::string generators_file;
  int rank = 0;
  bool dump_lplus = false;
  std::optional<int> i, j;
  std::string degree;
  bool quantum = false;
};

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

std::string matrix_text(const PolyMatrix& m) {
  std::vector<std::size_t> width(m.cols(), 1);
  const auto cells = m.to_strings();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], cells[r][c].size());
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    os << "  [ ";
    for (int c = 0; c < m.cols(); ++c) os << pad(cells[r][c], width[c]) << (c + 1 < m.cols() ? "  " : " ");
    os << "]\n";
  }
  return os.str();
}

std::string op_latex(const orealg::OreOp& op) {
  std::string s = op.symbol().to_latex();
  for (std::size_t pos = 0; (pos = s.find("b_{", pos)) != std::string::npos; pos += 3) s.replace(pos, 3, "D_{");
  return s;
}

std::string expansion_text(const std::vector<Poly>& coords, const FlagContext& ctx) {
  std::string out;
  for (int k = 0; k < ctx.dim(); ++k) {
    if (coords[k].is_zero()) continue;
    std::string c = coords[k].to_string();
    if (coords[k].size() > 1) c = "(" + c + ")";
    if (!out.empty()) out += " + ";
    out += (c == "1" ? "" : c + " ") + "[[" + ctx.basis[k].symbol.to_string() + "]]";
  }
  return out.empty() ? "0" : out;
}

std::string expansion_latex(const std::vector<Poly>& coords, const FlagContext& ctx) {
  std::string out;
  for (int k = 0; k < ctx.dim(); ++k) {
    if (coords[k].is_zero()) continue;
    std::string c = coords[k].to_latex();
    if (coords[k].size() > 1) c = "(" + c + ")";
    if (!out.empty()) out += " + ";
    out += (c == "1" ? "" : c + "\\,") + "[\\![" + ctx.basis[k].symbol.to_latex() + "]\\!]";
  }
  return out.empty() ? "0" : out;
}

json coords_json(const std::vector<Poly>& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(p.to_json());
  return out;
}

std::unique_ptr<Pipeline> make_pipeline(const Options& o) {
  if (o.generators_file.empty()) return std::make_unique<Pipeline>(o.n);
  std::ifstream in(o.generators_file);
  if (!in) throw std::invalid_argument("cannot read " + o.generators_file);
  const json j = json::parse(in);
  std::vector<orealg::OreOp> gens;
  for (const auto& s : j) gens.push_back(orealg::OreOp::parse(s.get<std::string>()));
  if (o.rank <= 0) throw std::invalid_argument("--generators needs --rank");
  return std::make_unique<Pipeline>(std::move(gens), o.rank);
}

// ---------------------------------------------------------------------------

void cmd_relations(Pipeline& p, const Options& o) {
  const auto& rel = p.relations().relations;
  const auto& ops = p.generators();
  if (o.format == Format::Json) {
    json out{{"n", p.n()}, {"relations", json::array()}, {"operators", json::array()}};
    for (const auto& r : rel) out["relations"].push_back(r.to_string());
    for (const auto& g : ops) out["operators"].push_back(g.to_string());
    std::cout << out.dump(2) << "\n";
  } else if (o.format == Format::Latex) {
    std::cout << "\\begin{align*}\n";
    for (std::size_t i = 0; i < rel.size(); ++i)
      std::cout << "R_{" << i + 1 << "} &= " << rel[i].to_latex() << " & D_{" << i + 1 << "} &= " << op_latex(ops[i])
                << (i + 1 < rel.size() ? " \\\\\n" : "\n");
    std::cout << "\\end{align*}\n";
  } else {
    for (std::size_t i = 0; i < rel.size(); ++i) std::cout << "R" << i + 1 << " = " << rel[i].to_string() << "\n";
    for (std::size_t i = 0; i < ops.size(); ++i) std::cout << "D" << i + 1 << " = " << ops[i].to_string() << "\n";
  }
}

void cmd_grobner(Pipeline& p, const Options& o) {
  const auto& gb = p.ore_basis();
  const auto& ctx = p.context();
  if (o.format == Format::Json) {
    json out{{"n", p.n()}, {"left_basis", json::array()}, {"standard_monomials", json::array()},
             {"block_sizes", ctx.block_sizes}};
    for (const auto& g : gb.elements()) out["left_basis"].push_back(g.to_string());
    for (const auto& s : ctx.basis) out["standard_monomials"].push_back(s.symbol.to_string());
    if (p.is_flag()) {
      out["classical_basis"] = json::array();
      for (const auto& g : p.classical_basis().generators()) out["classical_basis"].push_back(g.to_string());
    }
    std::cout << out.dump(2) << "\n";
  } else if (o.format == Format::Latex) {
    std::cout << "\\begin{align*}\n";
    for (const auto& g : gb.elements()) std::cout << "& " << op_latex(g) << " \\\\\n";
    std::cout << "\\end{align*}\n";
    std::cout << "\\[ ";
    for (int k = 0; k < ctx.dim(); ++k) std::cout << (k ? ",\\ " : "") << ctx.basis[k].symbol.to_latex();
    std::cout << " \\]\n";
  } else {
    std::cout << "left Groebner basis (" << gb.elements().size() << " elements):\n";
    for (const auto& g : gb.elements()) std::cout << "  " << g.to_string() << "\n";
    std::cout << "standard monomials (" << ctx.dim() << "), by block:\n";
    for (int k = 0; k < ctx.dim(); ++k)
      std::cout << "  " << k << "  [" << ctx.blocks.block_of(k) << "]  " << ctx.basis[k].symbol.to_string() << "\n";
  }
}

void print_matrix(const std::string& label, const PolyMatrix& m, const Options& o, bool slabs = false) {
  if (o.format == Format::Latex) {
    std::cout << "% " << label << "\n" << (slabs ? m.to_latex_slabs() : m.to_latex()) << "\n";
  } else {
    std::cout << label << ":\n" << matrix_text(m);
  }
}

void cmd_connection(Pipeline& p, const Options& o) {
  const auto& cd = p.connection();
  if (o.format == Format::Json) {
    json out = cd.to_json();
    out["n"] = p.n();
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (int i = 0; i < cd.rank(); ++i) {
    print_matrix("omega dt" + std::to_string(i + 1), cd.omega[i], o);
    for (int k = 0; k <= cd.p(); ++k)
      if (!cd.theta[k][i].is_zero()) print_matrix("theta(" + std::to_string(k) + ") dt" + std::to_string(i + 1),
                                                  cd.theta[k][i], o);
  }
  if (o.format == Format::Text)
    for (int k = 0; k <= cd.p(); ++k)
      if (cd.theta[k].is_zero()) std::cout << "theta(" << k << ") = 0\n";
}

void cmd_lplus(Pipeline& p, const Options& o) {
  const auto& lp = p.lplus();
  if (p.n() == 2 && o.format == Format::Text) std::cout << "m = 1: no differential equation to solve\n";
  if (o.format == Format::Json) {
    json out{{"n", p.n()}, {"m", lp.m()}};
    if (o.dump_lplus) {
      out["lplus"] = lp.to_json();
    } else {
      out["Q0"] = lp.q[0].to_json();
      json zero = json::array();
      for (std::size_t i = 1; i < lp.q.size(); ++i)
        if (lp.q[i].is_zero()) zero.push_back(i);
      out["vanishing"] = zero;
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  print_matrix("Q0", lp.q[0], o, true);
  for (std::size_t i = 1; i < lp.q.size(); ++i) {
    if (lp.q[i].is_zero()) {
      if (o.format == Format::Text) std::cout << "Q" << i << " = 0\n";
      if (o.format == Format::Latex) std::cout << "% Q" << i << " = 0\n";
    } else if (o.dump_lplus || o.format == Format::Text) {
      print_matrix("Q" + std::to_string(i), lp.q[i], o, true);
    }
  }
  if (o.dump_lplus) print_matrix("Q0^-1", lp.q0_inverse, o, true);
}

void cmd_qprod(Pipeline& p, const Options& o) {
  const auto& ctx = p.context();
  const auto& table = p.table();
  const int d = ctx.dim();
  for (auto v : {o.i, o.j})
    if (v && (*v < 0 || *v >= d)) throw std::invalid_argument("basis index out of range 0.." + std::to_string(d - 1));
  std::vector<std::pair<int, int>> pairs;
  if (o.i && o.j) {
    pairs.push_back({*o.i, *o.j});
  } else {
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b)
        if ((!o.i || *o.i == a) && (!o.j || *o.j == b)) pairs.push_back({a, b});
  }
  json arr = json::array();
  for (auto [a, b] : pairs) {
    const auto& v = table(a, b);
    const std::string lhs = ctx.basis[a].symbol.to_string(), rhs = ctx.basis[b].symbol.to_string();
    if (o.format == Format::Json) {
      arr.push_back({{"i", a}, {"j", b}, {"ci", lhs}, {"cj", rhs}, {"coordinates", coords_json(v)},
                     {"expansion", expansion_text(v, ctx)}});
    } else if (o.format == Format::Latex) {
      std::cout << "[\\![" << ctx.basis[a].symbol.to_latex() << "]\\!] \\circ [\\![" << ctx.basis[b].symbol.to_latex()
                << "]\\!] &= " << expansion_latex(v, ctx) << " \\\\\n";
    } else {
      std::cout << "[[" << lhs << "]] o [[" << rhs << "]] = " << expansion_text(v, ctx) << "\n";
    }
  }
  if (o.format == Format::Json) std::cout << json{{"n", p.n()}, {"products", arr}}.dump(2) << "\n";
}

std::optional<std::vector<int>> parse_degree(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<int> d;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size() || v < 0) throw std::invalid_argument("bad degree component '" + item + "'");
    d.push_back(v);
  }
  return d;
}

void cmd_gw(Pipeline& p, const Options& o) {
  const auto degree = parse_degree(o.degree);
  if (degree && int(degree->size()) > p.rank()) throw std::invalid_argument("degree has more than n-1 components");
  const auto records = gw_invariants(p.table(), p.pairing(), degree);
  const auto& ctx = p.context();
  for (const auto& r : records) {
    if (o.format == Format::Text) {
      std::cout << "<" << ctx.basis[r.i].symbol.to_string() << ", " << ctx.basis[r.j].symbol.to_string() << ", "
                << ctx.basis[r.k].symbol.to_string() << ">_(";
      for (std::size_t l = 0; l < r.degree.size(); ++l) std::cout << (l ? "," : "") << r.degree[l];
      std::cout << ") = " << r.value.get_str() << "\n";
    } else if (o.format == Format::Latex) {
      std::cout << "\\langle " << ctx.basis[r.i].symbol.to_latex() << ", " << ctx.basis[r.j].symbol.to_latex() << ", "
                << ctx.basis[r.k].symbol.to_latex() << " \\rangle_{(";
      for (std::size_t l = 0; l < r.degree.size(); ++l) std::cout << (l ? "," : "") << r.degree[l];
      std::cout << ")} = " << r.value.get_str() << " \\\\\n";
    } else {
      std::cout << json{{"i", r.i}, {"j", r.j}, {"k", r.k}, {"d", r.degree}, {"value", r.value.get_str()}}.dump() << "\n";
    }
  }
}

std::string perm_string(const schubert::Permutation& w) {
  std::string s;
  for (int v : w) s += std::to_string(v);
  return s;
}

void cmd_schubert(Pipeline& p, const Options& o) {
  const auto& fam = p.schubert_family();
  const auto& C = p.change_of_basis();
  const auto& ctx = p.context();
  std::vector<Poly> classes;
  for (int i = 0; i < ctx.dim(); ++i) {
    Poly e;
    for (int k = 0; k < ctx.dim(); ++k) e += C(k, i) * ctx.basis[k].symbol;
    classes.push_back(e);
  }
  const schubert::QuantumSchubert* qs = o.quantum ? &p.quantum_schubert() : nullptr;
  if (o.format == Format::Json) {
    json out{{"n", p.n()}, {"classes", json::array()}, {"C", C.to_json()}};
    for (int i = 0; i < ctx.dim(); ++i) {
      json c{{"w", fam.classes[i].w}, {"x", fam.classes[i].x_poly.to_string()}, {"b", classes[i].to_string()}};
      if (qs) c["quantum"] = qs->polynomials[i].to_string();
      out["classes"].push_back(c);
    }
    if (qs) out["R"] = qs->r.to_json();
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (o.format == Format::Latex) {
    std::cout << "\\begin{align*}\n";
    for (int i = 0; i < ctx.dim(); ++i) {
      std::cout << "\\mathfrak{S}_{" << perm_string(fam.classes[i].w) << "} &= " << fam.classes[i].x_poly.to_latex()
                << " & c'_{" << i << "} &= " << classes[i].to_latex();
      if (qs) std::cout << " & \\hat c'_{" << i << "} &= " << qs->polynomials[i].to_latex();
      std::cout << (i + 1 < ctx.dim() ? " \\\\\n" : "\n");
    }
    std::cout << "\\end{align*}\n";
    print_matrix("C", C, o, true);
    if (qs) print_matrix("R", qs->r, o, true);
    return;
  }
  for (int i = 0; i < ctx.dim(); ++i) {
    std::cout << i << "  w=" << perm_string(fam.classes[i].w) << "  S_w = " << fam.classes[i].x_poly.to_string()
              << "  ->  " << classes[i].to_string();
    if (qs) std::cout << "  quantum: " << qs->polynomials[i].to_string();
    std::cout << "\n";
  }
  print_matrix("C", C, o);
  if (qs) print_matrix("R", qs->r, o);
}

// ---------------------------------------------------------------------------

struct Failure {
  std::string check;
  std::vector<std::string> failures;
};

std::vector<Failure> run_checks(Pipeline& p, Check level, bool golden) {
  std::vector<Failure> out;
  if (level == Check::None) return out;
  auto add = [&](const std::string& name, const CheckReport& r) {
    if (!r.ok()) out.push_back({name, r.failures});
  };
  for (auto& r : structural_properties(p)) add(r.name, r.report);
  if (level == Check::Full && p.is_flag()) {
    for (auto& r : ring_properties(p)) add(r.name, r.report);
    if (p.n() == 3) add("Schubert basis re-run", schubert_basis_rerun(p));
  }
  if (golden && p.is_flag() && p.n() <= 4) add("golden data", verify_golden(p));
  return out;
}

int report_failures(const std::vector<Failure>& failures) {
  if (failures.empty()) return 0;
  json rep{{"status", "check-failed"}, {"checks", json::array()}};
  for (const auto& f : failures) rep["checks"].push_back({{"name", f.check}, {"failures", f.failures}});
  std::cerr << rep.dump(2) << "\n";
  return kCheckExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum cohomology of full flag manifolds GL_n/B via the quantum D-module"};
  app.require_subcommand(1);
  Options o;
  std::string format = "text", check = "structural";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "n for GL_n")->check(CLI::Range(2, 64));
    sub->add_option("--format", format, "json, text or latex")->check(CLI::IsMember({"json", "text", "latex"}));
    sub->add_option("--check", check, "none, structural or full")
        ->check(CLI::IsMember({"none", "structural", "full"}))
        ->each([&](const std::string&) { o.check_given = true; });
    sub->add_option("--generators", o.generators_file, "JSON list of operators in d1.., q1.., h");
    sub->add_option("--rank", o.rank, "number of variables for --generators");
  };
  auto* relations = app.add_subcommand("relations", "quantum relations and their quantizations");
  auto* grobner = app.add_subcommand("grobner", "left Groebner basis and standard monomials");
  auto* connection = app.add_subcommand("connection", "omega and theta matrices");
  auto* lplus = app.add_subcommand("lplus", "the plus factor Q0, Q1, ...");
  auto* qprod = app.add_subcommand("qprod", "quantum products of basis classes");
  auto* gw = app.add_subcommand("gw", "3-point genus zero Gromov-Witten invariants");
  auto* schub = app.add_subcommand("schubert", "Schubert classes and the matrix C");
  auto* verify = app.add_subcommand("verify", "all checks plus the golden data");
  for (auto* s : {relations, grobner, connection, lplus, qprod, gw, schub, verify}) common(s);
  lplus->add_flag("--dump-lplus", o.dump_lplus, "all Q_i and Q0^-1");
  qprod->add_option("--i", o.i, "first basis index (0-based)");
  qprod->add_option("--j", o.j, "second basis index (0-based)");
  gw->add_option("--degree", o.degree, "multidegree d1,d2,...");
  schub->add_flag("--quantum", o.quantum, "include R and the quantum Schubert polynomials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageExit;
  }
  o.format = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  o.check = check == "none" ? Check::None : check == "full" ? Check::Full : Check::Structural;
  if (verify->parsed() && !o.check_given) o.check = Check::Full;

  Stage current = Stage::Relations;
  try {
    auto p = make_pipeline(o);
    if (relations->parsed()) {
      cmd_relations(*p, o);
      return 0;
    }
    if (grobner->parsed()) {
      current = Stage::Grobner;
      cmd_grobner(*p, o);
      return 0;
    }
    if (connection->parsed()) current = Stage::Connection, cmd_connection(*p, o);
    if (lplus->parsed()) current = Stage::LPlus, cmd_lplus(*p, o);
    if (qprod->parsed()) current = Stage::QProd, cmd_qprod(*p, o);
    if (gw->parsed()) current = Stage::GW, cmd_gw(*p, o);
    if (schub->parsed()) current = Stage::Schubert, cmd_schubert(*p, o);
    if (verify->parsed()) {
      current = Stage::Verify;
      const auto failures = run_checks(*p, o.check, true);
      if (o.format == Format::Json) {
        std::cout << json{{"n", p->n()}, {"ok", failures.empty()}}.dump() << "\n";
      } else {
        std::cout << (failures.empty() ? "verify: all checks passed" : "verify: FAILED") << "\n";
      }
      return report_failures(failures);
    }
    return report_failures(run_checks(*p, o.check, false));
  } catch (const StageError& e) {
    std::cerr << json{{"status", "stage-failed"}, {"stage", stage_name(e.stage)}, {"error", e.what()}}.dump() << "\n";
    return stage_exit_code(e.stage);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << json{{"status", "stage-failed"}, {"stage", stage_name(current)}, {"error", e.what()}}.dump() << "\n";
    return stage_exit_code(current);
  }
}
