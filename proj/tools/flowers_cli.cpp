// Command-line front end: graph generators, flower search, the decomposition
// pipeline, the verification suites, and the exact small-scale oracles.
//
// Exit codes: 0 success (or "free"), 1 flower found / suite failed, 2 bad
// input, 3 budget exhausted, 4 internal defect, 5 hard cap refused.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flowers/decompose.hpp"
#include "flowers/extremal.hpp"
#include "flowers/graph6.hpp"
#include "flowers/oracle.hpp"
#include "flowers/report.hpp"
#include "flowers/verify.hpp"

using namespace flowers;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open " + path);
  out << text;
}

Graph load_graph(const std::string& path) { return read_graph_auto(read_input(path)).first; }

long long budget_or(long long flag, long long fallback) {
  return flag >= 0 ? flag : fallback;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit_report(const std::string& command, Json inputs, Json outputs,
                 const std::string& profile, double elapsed_ms) {
  RunReport rep;
  rep.command = command;
  rep.inputs = std::move(inputs);
  rep.outputs = std::move(outputs);
  rep.elapsed_ms = elapsed_ms;
  rep.profile = profile;
  std::cout << run_report_json(rep).dump(2) << "\n";
}

std::string cycles_text(const FlowerEmbedding& emb) {
  std::string out;
  for (std::size_t c = 0; c < emb.cycles.size(); ++c) {
    if (c) out += " | ";
    for (std::size_t i = 0; i < emb.cycles[c].size(); ++i) {
      if (i) out += " ";
      out += std::to_string(emb.cycles[c][i]);
    }
  }
  return out;
}

struct GenOptions {
  int n = 0;
  std::string spec_text, kind = "family", variant = "block", format = "graph6", output;
  int side = 0, r = 2, k = 0;
};

int run_gen(const GenOptions& opt) {
  Graph g;
  if (opt.kind == "family") {
    if (opt.spec_text.empty()) throw input_error("family construction needs --spec");
    ExtremalFamilyVariant variant(opt.variant == "3K3" ? ExtremalFamilyVariant::ThreeTriangles
                                                       : ExtremalFamilyVariant::BipartiteBlock,
                                  opt.side);
    g = build_family_member(opt.n, parse_spec(opt.spec_text), variant);
  } else if (opt.kind == "turan") {
    g = turan_graph(opt.n, opt.r);
  } else {
    if (opt.k < 1) throw input_error("theorem1 construction needs --k at least 1");
    g = build_theorem1_extremal(opt.n, opt.k);
  }
  std::string text =
      opt.format == "edgelist" ? write_edge_list(g) : graph6_encode(g) + "\n";
  write_output(opt.output, text);
  return 0;
}

struct CheckOptions {
  std::string graph_path, spec_text;
  long long budget = -1;
  bool json = false;
};

int run_check(const CheckOptions& opt) {
  Timer timer;
  Graph g = load_graph(opt.graph_path);
  FlowerSpec spec = parse_spec(opt.spec_text);
  long long budget = budget_or(opt.budget, kDefaultSearchBudget);
  SearchResult res = contains_flower(g, spec, budget);

  std::string verdict = res.outcome == SearchOutcome::Found      ? "contains"
                        : res.outcome == SearchOutcome::Free     ? "free"
                                                                 : "budget-exhausted";
  int code = res.outcome == SearchOutcome::Found  ? 1
             : res.outcome == SearchOutcome::Free ? 0
                                                  : 3;
  if (opt.json) {
    Json inputs{{"graph", graph6_encode(g)}, {"spec", spec.format()}, {"budget", budget}};
    Json outputs{{"verdict", verdict}, {"nodes", res.nodes}};
    if (res.embedding) outputs["embedding"] = embedding_json(*res.embedding);
    emit_report("check", std::move(inputs), std::move(outputs), "", timer.ms());
  } else {
    std::cout << verdict << "  nodes " << res.nodes << "\n";
    if (res.embedding)
      std::cout << "center " << res.embedding->center << "  cycles " << cycles_text(*res.embedding)
                << "\n";
  }
  return code;
}

struct DecomposeCliOptions {
  std::string graph_path, spec_text, profile = "desk";
  std::uint64_t seed = 2026;
  int restarts = 8;
  long long budget = -1;
  bool json = false;
};

int run_decompose(const DecomposeCliOptions& opt) {
  Timer timer;
  Graph g = load_graph(opt.graph_path);
  FlowerSpec spec = parse_spec(opt.spec_text);
  DecomposeOptions dopt;
  dopt.profile = opt.profile == "paper" ? paper_profile(spec) : desk_profile(spec);
  dopt.seed = opt.seed;
  dopt.cut_restarts = opt.restarts;
  dopt.sweep_budget = budget_or(opt.budget, DecomposeOptions{}.sweep_budget);
  DecomposeRun run = decompose(g, spec, dopt);

  // Re-derive phi from the emitted partition; throws if the parts are not an
  // exact edge partition of g.
  long long phi = phi_of(run.result, g, spec);
  if (phi != run.result.parts)
    throw internal_error("parts disagree with phi: " + std::to_string(run.result.parts) +
                         " vs " + std::to_string(phi));
  if (!run.halt.empty()) std::cerr << "flowers: halted at " << run.halt << "\n";

  if (opt.json) {
    Json inputs{{"graph", graph6_encode(g)},
                {"spec", spec.format()},
                {"profile", opt.profile},
                {"seed", opt.seed},
                {"budget", dopt.sweep_budget}};
    emit_report("decompose", std::move(inputs), decompose_json(g, spec, run), run.profile,
                timer.ms());
  } else {
    std::cout << "n " << g.order() << "  e " << g.size() << "  in-part " << run.m << "\n"
              << "branch " << run.branch << "  profile " << run.profile << "  iterations "
              << run.iterations << "\n"
              << "packing " << run.result.packing << "  parts " << run.result.parts << "\n";
  }
  return 0;
}

struct VerifyOptions {
  std::string suite;
  int max_nu = 3, max_delta = 3, max_n = -1, s = 1, t = 1;
  int instances = 200, min_n = 14;
  std::uint64_t seed = 2026;
  long long budget = -1;
};

SuiteResult dispatch_suite(const VerifyOptions& opt) {
  auto max_n_or = [&](int fallback) { return opt.max_n > 0 ? opt.max_n : fallback; };
  if (opt.suite == "formulas") return verify_formulas();
  if (opt.suite == "lemma1") return verify_lemma1(opt.max_nu, opt.max_delta, max_n_or(9));
  if (opt.suite == "lemma2") return verify_lemma2(max_n_or(8));
  if (opt.suite == "obs1") return verify_obs1(max_n_or(9));
  if (opt.suite == "lemma5") return verify_lemma5(opt.instances, max_n_or(60), opt.seed);
  if (opt.suite == "lemma7")
    return verify_lemma7(opt.s, opt.t, budget_or(opt.budget, kDefaultOracleBudget));
  if (opt.suite == "lemma8")
    return verify_lemma8(opt.min_n, max_n_or(24), budget_or(opt.budget, kDefaultSearchBudget));
  if (opt.suite == "lemma9") return verify_lemma9(opt.seed);
  if (opt.suite == "lemma10") return verify_lemma10(opt.seed);
  throw input_error("unknown suite " + opt.suite);
}

int run_verify(const VerifyOptions& opt) {
  SuiteResult res = dispatch_suite(opt);
  for (const auto& p : res.properties) {
    std::cout << (p.pass ? "  pass  " : "  FAIL  ") << p.name << "  (" << p.cases << " cases)";
    if (!p.detail.empty()) std::cout << "  " << p.detail;
    if (!p.counterexample.empty()) std::cout << "  counterexample " << p.counterexample;
    std::cout << "\n";
  }
  std::cout << "suite " << res.suite << ": " << (res.pass ? "pass" : "FAIL") << "\n";
  return res.pass ? 0 : 1;
}

struct BruteOptions {
  std::string task, graph_path, spec_text;
  int n = -1;
  long long budget = -1;
};

int run_brute(const BruteOptions& opt) {
  FlowerSpec spec = parse_spec(opt.spec_text);
  long long budget = budget_or(opt.budget, kDefaultOracleBudget);
  Json out;
  if (opt.task == "ex") {
    if (opt.n < 0) throw input_error("task ex needs --n");
    out = certificate_json(ex_bruteforce(opt.n, spec, budget));
  } else if (opt.task == "phi") {
    if (!opt.graph_path.empty()) {
      Graph g = load_graph(opt.graph_path);
      out = formula_json(g.order(), spec, phi_bruteforce_graph(g, spec, budget));
    } else if (opt.n >= 0) {
      out = certificate_json(phi_n_bruteforce(opt.n, spec, budget));
    } else {
      throw input_error("task phi needs --n or --graph");
    }
  } else {
    if (opt.graph_path.empty()) throw input_error("task packing needs --graph");
    Graph g = load_graph(opt.graph_path);
    PackingResult pr = max_packing(g, spec, budget);
    out = Json{{"n", g.order()},
               {"spec", spec.format()},
               {"value", pr.value},
               {"exact", pr.exact},
               {"budget_used", pr.budget_used}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flower decomposition toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a host graph construction");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--kind", gen.kind, "construction")
      ->check(CLI::IsMember({"family", "turan", "theorem1"}));
  gen_cmd->add_option("--spec", gen.spec_text, "flower spec s,t:q1,...");
  gen_cmd->add_option("--variant", gen.variant, "family block shape")
      ->check(CLI::IsMember({"block", "3K3"}));
  gen_cmd->add_option("--side", gen.side, "partite set hosting the block");
  gen_cmd->add_option("--r", gen.r, "part count for turan");
  gen_cmd->add_option("--k", gen.k, "petal count for theorem1");
  gen_cmd->add_option("--format", gen.format, "output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  gen_cmd->add_option("--output", gen.output, "output path (default stdout)");

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "search for a flower copy");
  check_cmd->add_option("--graph", check.graph_path, "graph file, or - for stdin")->required();
  check_cmd->add_option("--spec", check.spec_text, "flower spec s,t:q1,...")->required();
  check_cmd->add_option("--budget", check.budget, "search node budget")
      ->envname("FLOWERS_BUDGET");
  check_cmd->add_flag("--json", check.json, "emit a run report");

  DecomposeCliOptions dec;
  CLI::App* dec_cmd = app.add_subcommand("decompose", "partition edges into flowers and singles");
  dec_cmd->add_option("--graph", dec.graph_path, "graph file, or - for stdin")->required();
  dec_cmd->add_option("--spec", dec.spec_text, "flower spec s,t:q1,...")->required();
  dec_cmd->add_option("--profile", dec.profile, "threshold profile")
      ->check(CLI::IsMember({"desk", "paper"}));
  dec_cmd->add_option("--seed", dec.seed, "cut restart seed");
  dec_cmd->add_option("--restarts", dec.restarts, "local max-cut restarts");
  dec_cmd->add_option("--budget", dec.budget, "sweep node budget")->envname("FLOWERS_BUDGET");
  dec_cmd->add_flag("--json", dec.json, "emit a run report");

  VerifyOptions ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "run a verification suite");
  ver_cmd
      ->add_option("suite", ver.suite, "one of formulas, lemma1, lemma2, obs1, lemma5, lemma7, "
                                       "lemma8, lemma9, lemma10")
      ->required()
      ->check(CLI::IsMember({"formulas", "lemma1", "lemma2", "obs1", "lemma5", "lemma7", "lemma8",
                             "lemma9", "lemma10"}));
  ver_cmd->add_option("--max-nu", ver.max_nu, "matching cap grid limit");
  ver_cmd->add_option("--max-delta", ver.max_delta, "degree cap grid limit");
  ver_cmd->add_option("--max-n", ver.max_n, "largest order (suite default when omitted)");
  ver_cmd->add_option("--s", ver.s, "triangle count");
  ver_cmd->add_option("--t", ver.t, "long cycle count");
  ver_cmd->add_option("--instances", ver.instances, "random instance count");
  ver_cmd->add_option("--min-n", ver.min_n, "smallest order");
  ver_cmd->add_option("--seed", ver.seed, "random seed");
  ver_cmd->add_option("--budget", ver.budget, "node budget")->envname("FLOWERS_BUDGET");

  BruteOptions brute;
  CLI::App* brute_cmd = app.add_subcommand("brute", "exact small-scale computation");
  brute_cmd->add_option("task", brute.task, "one of ex, phi, packing")
      ->required()
      ->check(CLI::IsMember({"ex", "phi", "packing"}));
  brute_cmd->add_option("--n", brute.n, "host order");
  brute_cmd->add_option("--graph", brute.graph_path, "graph file, or - for stdin");
  brute_cmd->add_option("--spec", brute.spec_text, "flower spec s,t:q1,...")->required();
  brute_cmd->add_option("--budget", brute.budget, "node budget")->envname("FLOWERS_BUDGET");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(gen_cmd)) return run_gen(gen);
    if (app.got_subcommand(check_cmd)) return run_check(check);
    if (app.got_subcommand(dec_cmd)) return run_decompose(dec);
    if (app.got_subcommand(ver_cmd)) return run_verify(ver);
    return run_brute(brute);
  } catch (const cap_error& e) {
    std::cerr << "flowers: " << e.what() << "\n";
    return 5;
  } catch (const budget_error& e) {
    std::cerr << "flowers: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "flowers: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "flowers: " << e.what() << "\n";
    return 4;
  }
}
