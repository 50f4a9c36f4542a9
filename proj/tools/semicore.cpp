// semicore: minimum-semidegree subgraphs of digraphs from the command line.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semicore/commands.hpp"
#include "semicore/verify.hpp"

namespace {

using namespace semicore;

std::string echo(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

// Shared "<file> | --random n d seed" input selection.
struct SourceFlags {
  std::string path;
  std::vector<std::uint64_t> random;

  void attach(CLI::App* app) {
    auto* file = app->add_option("input", path, "Edge-list graph file");
    auto* rnd = app->add_option("--random", random, "Random graph with every outdegree d: n d seed")->expected(3);
    file->excludes(rnd);
  }

  cli::GraphSource source() const {
    cli::GraphSource src;
    if (!random.empty()) {
      src.random = cli::RandomSpec{static_cast<std::size_t>(random[0]), static_cast<std::size_t>(random[1]), random[2]};
    } else if (!path.empty()) {
      src.path = path;
    }
    return src;
  }
};

const std::map<std::string, DenseMode> kModes{{"digraph", DenseMode::Digraph}, {"oriented", DenseMode::Oriented}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-semidegree subgraphs: greedy peeling, extremal tournaments, dense-regime bounds"};
  app.require_subcommand(1);
  const std::string command_line = echo(argc, argv);

  // peel
  auto* peel = app.add_subcommand("peel", "Greedy semidegree peeling and the d(d+1)/(2n) lower-bound check");
  SourceFlags peel_src;
  peel_src.attach(peel);
  std::size_t peel_d = 0;
  std::string trace_path;
  auto* peel_d_opt = peel->add_option("--d", peel_d, "Degree used in the bound (default: min outdegree)");
  peel->add_option("--trace", trace_path, "Write the peel trace as CSV");

  // core
  auto* core = app.add_subcommand("core", "(k,k)-core: maximal subgraph with all in/out degrees >= k");
  SourceFlags core_src;
  core_src.attach(core);
  std::size_t core_k = 0;
  std::string core_out;
  auto* core_k_opt = core->add_option("--k,-k", core_k, "Degree threshold (default: peel value c)");
  core->add_option("--out,-o", core_out, "Write the induced core as an edge list");

  // construct
  auto* construct = app.add_subcommand("construct", "Extremal tournament for parameters k, l on n vertices");
  cli::ConstructOptions construct_opt;
  std::uint64_t b_seed = 0;
  construct->add_option("k", construct_opt.k)->required();
  construct->add_option("l", construct_opt.l)->required();
  construct->add_option("n", construct_opt.n)->required();
  construct->add_option("out_path", construct_opt.out_path, "Graph file ('-' for stdout); parts go to <out_path>.parts");
  auto* b_seed_opt = construct->add_option("--b-seed", b_seed, "Shuffle the order of part B with this seed");

  // dense-peel
  auto* dense = app.add_subcommand("dense-peel", "Indegree-threshold peeling at beta(alpha)*n");
  SourceFlags dense_src;
  dense_src.attach(dense);
  double dense_alpha = 0.0;
  bool dense_measure = false;
  bool dense_oriented = false;
  bool dense_trim = false;
  std::string survivor_path;
  auto* alpha_opt = dense->add_option("--alpha", dense_alpha, "Outdegree ratio alpha");
  auto* measure_opt = dense->add_flag("--measure", dense_measure, "Use alpha = min outdegree / n");
  alpha_opt->excludes(measure_opt);
  dense->add_flag("--oriented", dense_oriented, "Use the oriented-graph threshold");
  dense->add_flag("--trim", dense_trim, "First trim every out-neighbourhood to the minimum outdegree");
  dense->add_option("--survivor", survivor_path, "Write the surviving subgraph as an edge list");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Tabulate the dense lower-bound envelope as CSV");
  cli::SweepOptions sweep_opt;
  std::string sweep_mode = "digraph";
  sweep->add_option("--from", sweep_opt.from);
  sweep->add_option("--to", sweep_opt.to);
  sweep->add_option("--step", sweep_opt.step);
  sweep->add_option("--mode", sweep_mode)->check(CLI::IsMember({"digraph", "oriented"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run the property checks at a chosen scale");
  verify::VerifyOptions verify_opt;
  verify_opt.seed = default_seed();
  verify->add_option("--max-n", verify_opt.max_n, "Largest n for the brute-force comparison (<= 20)");
  verify->add_option("--samples", verify_opt.samples, "Random graphs per n and per check");
  verify->add_option("--seed", verify_opt.seed);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  cli::GenOptions gen_opt;
  gen_opt.seed = default_seed();
  std::string gen_kind = "random";
  gen->add_option("kind", gen_kind, "random | transitive | bidirected | oriented | uniform")
      ->check(CLI::IsMember({"random", "transitive", "bidirected", "oriented", "uniform"}));
  gen->add_option("--n,-n", gen_opt.n);
  gen->add_option("--d,-d", gen_opt.d, "Outdegree (random)");
  gen->add_option("--p,-p", gen_opt.p, "Arc probability (oriented, uniform)");
  gen->add_option("--seed", gen_opt.seed);
  gen->add_option("--out,-o", gen_opt.out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (peel->parsed()) {
      cli::PeelOptions opt;
      opt.command_line = command_line;
      opt.source = peel_src.source();
      if (*peel_d_opt) opt.d = peel_d;
      if (!trace_path.empty()) opt.trace_path = trace_path;
      return cli::cmd_peel(opt, std::cout, std::cerr);
    }
    if (core->parsed()) {
      cli::CoreOptions opt;
      opt.command_line = command_line;
      opt.source = core_src.source();
      if (*core_k_opt) opt.k = core_k;
      if (!core_out.empty()) opt.out_path = core_out;
      return cli::cmd_core(opt, std::cout, std::cerr);
    }
    if (construct->parsed()) {
      construct_opt.command_line = command_line;
      if (*b_seed_opt) construct_opt.b_order_seed = b_seed;
      return cli::cmd_construct(construct_opt, std::cout, std::cerr);
    }
    if (dense->parsed()) {
      cli::DensePeelOptions opt;
      opt.command_line = command_line;
      opt.source = dense_src.source();
      if (*alpha_opt) opt.alpha = dense_alpha;
      opt.mode = dense_oriented ? DenseMode::Oriented : DenseMode::Digraph;
      opt.trim = dense_trim;
      if (!survivor_path.empty()) opt.survivor_path = survivor_path;
      return cli::cmd_dense_peel(opt, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
      sweep_opt.mode = kModes.at(sweep_mode);
      return cli::cmd_sweep(sweep_opt, std::cout, std::cerr);
    }
    if (verify->parsed()) return verify::cmd_verify(verify_opt, std::cout, std::cerr);
    if (gen->parsed()) {
      static const std::map<std::string, cli::GenKind> kinds{{"random", cli::GenKind::Random},
                                                             {"transitive", cli::GenKind::Transitive},
                                                             {"bidirected", cli::GenKind::Bidirected},
                                                             {"oriented", cli::GenKind::Oriented},
                                                             {"uniform", cli::GenKind::Uniform}};
      gen_opt.kind = kinds.at(gen_kind);
      return cli::cmd_gen(gen_opt, std::cout, std::cerr);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
