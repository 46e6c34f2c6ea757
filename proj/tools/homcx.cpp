// Command-line front end: builds Hom(G, K_n) skeletons, computes homology,
// and produces and checks deformation certificates. Reports are JSON on
// stdout (or --out); diagnostics go to stderr.
//
// Exit codes: 0 success / verified / PASS, 1 check failed or INCOMPLETE,
// 2 invalid input, 3 cell cap exceeded, 4 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "homcx/homcx.hpp"
#include "homcx/io.hpp"

namespace {

using homcx::io::json;

struct RunConfig {
  std::string command;
  std::string graph_file;
  std::string family;
  int n = 0;
  int max_dim = -1;
  int t_max = -1;
  std::size_t cell_cap = homcx::kDefaultCellCap;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out;

  std::string chain_file;
  std::string path_file;
  int color = 2;
  std::size_t steps = 12;
  std::size_t samples = 8;

  json to_json() const {
    json j = {{"command", command}, {"n", n}, {"cell_cap", cell_cap}, {"seed", seed}, {"threads", threads}};
    if (!graph_file.empty()) j["graph_file"] = graph_file;
    if (!family.empty()) j["family"] = family;
    if (max_dim >= 0) j["max_dim"] = max_dim;
    if (t_max >= 0) j["t_max"] = t_max;
    if (!chain_file.empty()) j["chain_file"] = chain_file;
    if (!path_file.empty()) j["path_file"] = path_file;
    return j;
  }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

homcx::Graph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_file.empty() && !cfg.family.empty()) throw UsageError("give either --graph or --family, not both");
  if (!cfg.graph_file.empty()) return homcx::io::graph_from_json(homcx::io::read_json_file(cfg.graph_file));
  if (!cfg.family.empty()) return homcx::graph_from_family(cfg.family);
  throw UsageError("a graph is required (--graph FILE or --family NAME)");
}

void emit(const RunConfig& cfg, const json& report) {
  const std::string text = report.dump(2);
  if (cfg.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text << '\n';
  }
}

json base_report(const RunConfig& cfg, const homcx::Graph& g) {
  return {{"config", cfg.to_json()}, {"graph", homcx::io::to_json(g)}, {"vgap", homcx::vgap(g, cfg.n)}};
}

int cmd_build(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  if (cfg.max_dim < 0) throw UsageError("build needs --max-dim");
  const auto sk = homcx::enumerate_skeleton(g, cfg.n, cfg.max_dim, cfg.cell_cap, cfg.threads);
  json r = base_report(cfg, g);
  r["f_vector"] = sk.f_vector();
  r["total_cells"] = sk.total_cells();
  emit(cfg, r);
  return 0;
}

int cmd_homology(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  if (cfg.t_max < 0) throw UsageError("homology needs --t-max");
  const auto sk = homcx::enumerate_skeleton(g, cfg.n, cfg.t_max + 1, cfg.cell_cap, cfg.threads);
  json r = base_report(cfg, g);
  r["f_vector"] = sk.f_vector();
  r["homology"] = homcx::io::to_json(homcx::homology_summary(sk, cfg.t_max, cfg.threads));
  emit(cfg, r);
  return 0;
}

int cmd_verify_connectivity(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  homcx::ConnectivityOptions opt;
  opt.cell_cap = cfg.cell_cap;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.loop_steps = cfg.steps;
  opt.loop_samples = cfg.samples;
  const auto rep = homcx::connectivity_report(g, cfg.n, opt);
  json r = base_report(cfg, g);
  r["report"] = homcx::io::to_json(rep);
  r["verdict"] = homcx::to_string(rep.verdict);
  emit(cfg, r);
  return rep.verdict == homcx::Verdict::Pass ? 0 : 1;
}

homcx::Chain load_chain(const RunConfig& cfg) {
  if (cfg.chain_file.empty()) throw UsageError("--chain FILE is required");
  return homcx::io::chain_from_json(homcx::io::read_json_file(cfg.chain_file));
}

int cmd_reduce_cycle(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto c = load_chain(cfg);
  const auto red = homcx::reduce_cycle(g, cfg.n, c, cfg.color);
  const auto check = homcx::verify_certificate(g, cfg.n, c, red.result, red.certificate);
  json r = base_report(cfg, g);
  r["color"] = cfg.color;
  r["initial"] = homcx::io::to_json(c);
  r["final"] = homcx::io::to_json(red.result);
  r["final_compact"] = homcx::to_compact_string(red.result);
  json phases = json::array();
  for (const auto& ph : red.phases)
    phases.push_back({{"position", ph.position}, {"color", ph.color}, {"chain", homcx::to_compact_string(ph.chain)}});
  r["phases"] = phases;
  r["certificate"] = homcx::io::to_json(red.certificate);
  r["verified"] = check.ok;
  if (!check.ok) r["diagnostic"] = check.diagnostic;
  emit(cfg, r);
  return check.ok ? 0 : 1;
}

int cmd_nullify_cycle(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto c = load_chain(cfg);
  const auto cert = homcx::nullify_cycle(g, cfg.n, c);
  const auto check = homcx::verify_certificate(g, cfg.n, c, homcx::Chain(c.dim()), cert);
  json r = base_report(cfg, g);
  r["initial"] = homcx::io::to_json(c);
  r["certificate"] = homcx::io::to_json(cert);
  r["verified"] = check.ok;
  if (!check.ok) r["diagnostic"] = check.diagnostic;
  emit(cfg, r);
  return check.ok ? 0 : 1;
}

int cmd_contract_loop(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const homcx::EdgePath start = cfg.path_file.empty()
                                    ? homcx::random_loop(g, cfg.n, cfg.steps, cfg.seed)
                                    : homcx::io::path_from_json(homcx::io::read_json_file(cfg.path_file));
  const auto lc = homcx::contract_loop(g, cfg.n, start);
  const auto check = homcx::verify_moves(g, cfg.n, start, lc.moves, true);
  json r = base_report(cfg, g);
  r["loop"] = homcx::io::to_json(start);
  r["moves"] = homcx::io::to_json(lc.moves);
  r["final_path"] = homcx::io::to_json(check.final_path);
  r["verified"] = check.ok;
  if (!check.ok) r["diagnostic"] = check.diagnostic;
  emit(cfg, r);
  return check.ok ? 0 : 1;
}

int cmd_pi1_rank(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto sk = homcx::enumerate_skeleton(g, cfg.n, 2, cfg.cell_cap, cfg.threads);
  json r = base_report(cfg, g);
  r["f_vector"] = sk.f_vector();
  r["pi1_free_rank"] = homcx::pi1_free_rank(sk);
  emit(cfg, r);
  return 0;
}

int report_error(const RunConfig& cfg, const std::string& kind, const std::string& message, int code) {
  std::cerr << "homcx " << cfg.command << ": " << message << '\n';
  json r = {{"config", cfg.to_json()}, {"error", kind}, {"message", message}};
  std::cout << r.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom complexes Hom(G, K_n): skeletons, homology, deformation certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    auto* file = sub->add_option("--graph", cfg.graph_file, "graph JSON {\"p\": int, \"edges\": [[u,v],...]}, 1-based");
    auto* fam = sub->add_option("--family", cfg.family, "named graph: K<m>, C<m>, P<m>, Star<k>");
    file->excludes(fam);
    sub->add_option("-n", cfg.n, "number of colors")->required()->check(CLI::Range(1, homcx::kMaxColors));
    sub->add_option("--cell-cap", cfg.cell_cap, "maximum number of enumerated cells")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for sampled loops");
    sub->add_option("--threads", cfg.threads, "worker threads for enumeration and matrix assembly")->check(CLI::Range(1, 256));
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
  };

  auto* build = app.add_subcommand("build", "enumerate a skeleton and report its f-vector");
  add_common(build);
  build->add_option("--max-dim", cfg.max_dim, "top dimension to enumerate")->required();

  auto* homology = app.add_subcommand("homology", "integral homology up to --t-max");
  add_common(homology);
  homology->add_option("--t-max", cfg.t_max, "highest homology degree")->required();

  auto* conn = app.add_subcommand("verify-connectivity", "check the predicted connectivity");
  add_common(conn);
  conn->add_option("--samples", cfg.samples, "number of sampled loops");
  conn->add_option("--steps", cfg.steps, "random-walk length of each sampled loop");

  auto* reduce = app.add_subcommand("reduce-cycle", "move a cycle from X_{i-1} to X_i with a certificate");
  add_common(reduce);
  reduce->add_option("--chain", cfg.chain_file, "cycle JSON")->required();
  reduce->add_option("-i,--color", cfg.color, "target color i")->default_val(2);

  auto* nullify = app.add_subcommand("nullify-cycle", "find a chain whose boundary is the given cycle");
  add_common(nullify);
  nullify->add_option("--chain", cfg.chain_file, "cycle JSON")->required();

  auto* contract = app.add_subcommand("contract-loop", "contract a loop with elementary homotopies");
  add_common(contract);
  contract->add_option("--path", cfg.path_file, "loop JSON; a seeded random loop is used when omitted");
  contract->add_option("--steps", cfg.steps, "random-walk length of the generated loop");

  auto* pi1 = app.add_subcommand("pi1-rank", "free rank of pi_1 for complexes without 2-cells");
  add_common(pi1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "build") return cmd_build(cfg);
    if (cfg.command == "homology") return cmd_homology(cfg);
    if (cfg.command == "verify-connectivity") return cmd_verify_connectivity(cfg);
    if (cfg.command == "reduce-cycle") return cmd_reduce_cycle(cfg);
    if (cfg.command == "nullify-cycle") return cmd_nullify_cycle(cfg);
    if (cfg.command == "contract-loop") return cmd_contract_loop(cfg);
    if (cfg.command == "pi1-rank") return cmd_pi1_rank(cfg);
    return report_error(cfg, "usage", "unknown command", 2);
  } catch (const homcx::ResourceLimitError& e) {
    return report_error(cfg, "resource_limit", e.what(), 3);
  } catch (const homcx::InvariantBreach& e) {
    return report_error(cfg, "internal", e.what(), 4);
  } catch (const UsageError& e) {
    return report_error(cfg, "usage", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return report_error(cfg, "invalid_input", e.what(), 2);
  } catch (const std::exception& e) {
    return report_error(cfg, "error", e.what(), 4);
  }
}
