#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "ballsearch/adaptive.hpp"
#include "ballsearch/errors.hpp"
#include "ballsearch/experiments.hpp"
#include "ballsearch/generators.hpp"
#include "ballsearch/hypercube_codes.hpp"
#include "ballsearch/io.hpp"
#include "ballsearch/report.hpp"
#include "ballsearch/separating.hpp"

namespace ballsearch::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string file;
  std::optional<unsigned> hypercube;
  std::string gen;

  void attach(CLI::App& cmd) {
    cmd.add_option("--graph", file, "graph file (first line 'n m', then 'u v' edges)");
    cmd.add_option("--hypercube", hypercube, "use the hypercube Q_n");
    cmd.add_option("--gen", gen, "generator spec, e.g. path:8, gnp:100:0.1, bounded:50:3");
  }

  Graph load(std::uint64_t seed) const {
    const int given = !file.empty() + hypercube.has_value() + !gen.empty();
    if (given != 1) throw UsageError("exactly one of --graph, --hypercube, --gen is required");
    if (!file.empty()) {
      if (!std::filesystem::is_regular_file(file)) throw UsageError("graph file not found: " + file);
      return read_graph_file(file);
    }
    if (hypercube) {
      if (*hypercube > kMaxHypercubeDimension) throw UsageError("hypercube dimension too large");
      return Graph::hypercube(*hypercube);
    }
    GraphSpec spec;
    try {
      spec = GraphSpec::parse(gen);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --gen: ") + e.what());
    }
    return generate(spec, seed);
  }
};

RadiusConstraint parse_mode(const std::string& text) {
  try {
    return RadiusConstraint::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --mode: ") + e.what());
  }
}

SearchOptions search_options(const std::optional<std::uint64_t>& budget, std::size_t limit) {
  return SearchOptions{budget, limit};
}

void print_human(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto key = prefix + it.key();
    if (it->is_object())
      print_human(out, *it, key + ".");
    else
      out << key << ": " << it->dump() << '\n';
  }
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "human")
    print_human(out, j);
  else
    out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search for an unknown vertex with ball queries"};
  app.name("ballsearch");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "human"}));
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;

  // fano-verify
  auto* fano = app.add_subcommand("fano-verify", "check the Fano radius-3 code on Q_7");

  // covering
  auto* covering = app.add_subcommand("covering", "covering code of Q_n with radius-r balls");
  unsigned cov_n = 0, cov_r = 1;
  bool cov_exact = false, cov_greedy = false, cov_hamming = false;
  std::string cov_write;
  covering->add_option("--n", cov_n, "dimension")->required();
  covering->add_option("--r", cov_r, "radius");
  auto* exact_flag = covering->add_flag("--exact", cov_exact, "branch and bound K(n,r) (n <= 8 without --budget)");
  auto* greedy_flag = covering->add_flag("--greedy", cov_greedy, "greedy cover (default)");
  auto* hamming_flag = covering->add_flag("--hamming", cov_hamming, "the [7,4] Hamming code (n = 7, r = 1)");
  exact_flag->excludes(greedy_flag)->excludes(hamming_flag);
  greedy_flag->excludes(hamming_flag);
  covering->add_option("--budget", budget, "node budget for --exact");
  covering->add_option("--write-code", cov_write, "also write the code as a 'center radius' file");

  // min-nonadaptive
  auto* minna = app.add_subcommand("min-nonadaptive", "minimum separating set of ball queries");
  GraphSource minna_src;
  std::string minna_mode = "any";
  minna_src.attach(*minna);
  minna->add_option("--mode", minna_mode, "exact:R | atmost:R | any");
  minna->add_option("--budget", budget, "node budget (lifts the 12-vertex limit)");
  minna->add_option("--seed", seed, "seed for --gen");

  // metric-dimension
  auto* metric = app.add_subcommand("metric-dimension", "exact metric dimension");
  GraphSource metric_src;
  metric_src.attach(*metric);
  metric->add_option("--budget", budget, "node budget (lifts the 12-vertex limit)");
  metric->add_option("--seed", seed, "seed for --gen");

  // sandwich-check
  auto* sandwich = app.add_subcommand("sandwich-check", "check beta(G) <= M(G) <= diam(G) beta(G)");
  GraphSource sandwich_src;
  sandwich_src.attach(*sandwich);
  sandwich->add_option("--budget", budget, "node budget (lifts the 12-vertex limit)");
  sandwich->add_option("--seed", seed, "seed for --gen");

  // adaptive
  auto* adaptive = app.add_subcommand("adaptive", "play one adaptive game");
  GraphSource adaptive_src;
  std::string strategy_name, oracle_name = "adversarial", adaptive_mode, cover_file, cover_mode = "atmost";
  Radius cover_radius = 1;
  adaptive_src.attach(*adaptive);
  adaptive->add_option("--strategy", strategy_name, "hypercube | halving | cover")
      ->required()
      ->check(CLI::IsMember({"hypercube", "halving", "cover"}));
  adaptive->add_option("--oracle", oracle_name, "fixed:V | adversarial");
  adaptive->add_option("--mode", adaptive_mode, "radius constraint enforced on the strategy");
  adaptive->add_option("--cover", cover_file, "code file for --strategy cover (default: greedy cover of Q_n)");
  adaptive->add_option("--cover-radius", cover_radius, "radius of the default greedy cover");
  adaptive->add_option("--cover-mode", cover_mode, "atmost | exact")->check(CLI::IsMember({"atmost", "exact"}));
  adaptive->add_option("--seed", seed, "seed for --gen");

  // adaptive-exact
  auto* aexact = app.add_subcommand("adaptive-exact", "exact adaptive query count by minimax");
  GraphSource aexact_src;
  std::string aexact_mode = "any";
  aexact_src.attach(*aexact);
  aexact->add_option("--mode", aexact_mode, "exact:R | atmost:R | any");
  aexact->add_option("--budget", budget, "state budget (lifts the 10-vertex limit)");
  aexact->add_option("--seed", seed, "seed for --gen");

  // gnp-experiment
  auto* gnp_cmd = app.add_subcommand("gnp-experiment", "random-centre separation on G(n,p)");
  ExperimentConfig cfg;
  std::optional<std::size_t> centers;
  bool csv = false;
  gnp_cmd->add_option("--n", cfg.n)->required();
  gnp_cmd->add_option("--p", cfg.p)->required();
  gnp_cmd->add_option("--r", cfg.r);
  gnp_cmd->add_option("--trials", cfg.trials);
  gnp_cmd->add_option("--seed", seed);
  gnp_cmd->add_option("--centers", centers, "override t = ceil(n^(1-r) p^(-r) ln n)");
  gnp_cmd->add_option("--pair-samples", cfg.pair_samples, "pairs sampled for the mean symmetric difference");
  gnp_cmd->add_flag("--csv", csv, "one CSV row per trial instead of JSON");
  gnp_cmd->add_option("--threads", threads, "worker threads (results do not depend on it)")
      ->envname("BALLSEARCH_THREADS")
      ->check(CLI::Range(1u, 1024u));

  // ball-stats
  auto* bstats = app.add_subcommand("ball-stats", "sampled ball sizes and overlaps");
  GraphSource bstats_src;
  Radius bstats_r = 1;
  std::size_t samples = 200;
  std::optional<double> bstats_p;
  bstats_src.attach(*bstats);
  bstats->add_option("--r", bstats_r);
  bstats->add_option("--samples", samples);
  bstats->add_option("--p", bstats_p, "edge probability for the predictions (default: edge density)");
  bstats->add_option("--seed", seed, "seed for --gen and for sampling");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "write a generated graph in the graph file format");
  std::string gen_spec, gen_output;
  gen_cmd->add_option("--gen", gen_spec, "generator spec")->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--output", gen_output, "file to write (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (fano->parsed()) {
      emit(out, to_json(fano_verify()), format);
    } else if (covering->parsed()) {
      CoveringCode code;
      Json extra;
      if (cov_hamming) {
        if (cov_n != 7 || cov_r != 1) throw UsageError("--hamming requires --n 7 --r 1");
        code = hamming_code(7);
      } else if (cov_exact) {
        auto res = exact_K(cov_n, cov_r, search_options(budget, 8));
        code = res.code;
        extra = Json{{"status", to_string(res.status)},
                     {"nodes_explored", res.nodes_explored},
                     {"meets_sphere_bound", res.meets_sphere_bound}};
      } else {
        if (cov_n > 20) throw UsageError("--greedy supports n <= 20");
        code = greedy_covering(cov_n, cov_r);
      }
      auto j = to_json(code);
      if (!extra.is_null()) j.update(extra);
      if (!cov_write.empty()) {
        std::ofstream f(cov_write);
        if (!f) throw UsageError("cannot write " + cov_write);
        write_code(f, code.queries());
      }
      emit(out, j, format);
    } else if (minna->parsed()) {
      const auto g = minna_src.load(seed);
      emit(out, to_json(min_nonadaptive(g, parse_mode(minna_mode), search_options(budget, 12))), format);
    } else if (metric->parsed()) {
      const auto g = metric_src.load(seed);
      emit(out, to_json(metric_dimension(g, search_options(budget, 12))), format);
    } else if (sandwich->parsed()) {
      const auto g = sandwich_src.load(seed);
      emit(out, to_json(sandwich_check(g, search_options(budget, 12))), format);
    } else if (adaptive->parsed()) {
      const auto g = adaptive_src.load(seed);
      std::unique_ptr<Strategy> strategy;
      auto rc = RadiusConstraint::unbounded();
      if (strategy_name == "hypercube") {
        if (!g.is_hypercube()) throw UsageError("--strategy hypercube needs --hypercube");
        strategy = hypercube_strategy(g);
      } else if (strategy_name == "halving") {
        strategy = halving_strategy(g);
      } else {
        QuerySet cover;
        if (!cover_file.empty()) {
          if (!std::filesystem::is_regular_file(cover_file)) throw UsageError("code file not found: " + cover_file);
          cover = read_code_file(cover_file);
        } else {
          if (!g.is_hypercube()) throw UsageError("--strategy cover without --cover needs --hypercube");
          cover = greedy_covering(g.dimension(), cover_radius).queries();
        }
        if (cover.empty()) throw DomainError("empty cover");
        const auto r = cover.front().radius;
        const auto mode = cover_mode == "exact" ? CoverMode::Exact : CoverMode::AtMost;
        rc = mode == CoverMode::Exact ? RadiusConstraint::exactly(r) : RadiusConstraint::at_most(r);
        strategy = covering_then_locate_strategy(g, r, std::move(cover), mode);
      }
      if (!adaptive_mode.empty()) rc = parse_mode(adaptive_mode);

      std::unique_ptr<Oracle> oracle;
      if (oracle_name == "adversarial") {
        oracle = std::make_unique<AdversarialOracle>();
      } else if (oracle_name.rfind("fixed:", 0) == 0) {
        Vertex hidden = 0;
        try {
          std::size_t used = 0;
          const auto text = oracle_name.substr(6);
          hidden = static_cast<Vertex>(std::stoul(text, &used));
          if (used != text.size()) throw std::invalid_argument(text);
        } catch (const std::exception&) {
          throw UsageError("bad --oracle: " + oracle_name);
        }
        if (hidden >= g.order()) throw UsageError("hidden vertex out of range");
        oracle = std::make_unique<FixedOracle>(hidden);
      } else {
        throw UsageError("--oracle must be fixed:V or adversarial");
      }

      const auto t = run_search(g, *strategy, *oracle, rc);
      Json j{{"strategy", strategy->name()}, {"oracle", oracle->describe()}, {"mode", rc.to_string()}, {"n", g.order()}};
      j.update(to_json(t));
      emit(out, j, format);
    } else if (aexact->parsed()) {
      const auto g = aexact_src.load(seed);
      emit(out, to_json(exact_adaptive(g, parse_mode(aexact_mode), search_options(budget, 10))), format);
    } else if (gnp_cmd->parsed()) {
      cfg.seed = seed;
      cfg.centers_override = centers;
      cfg.threads = threads;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto report = gnp_center_experiment(cfg);
      if (csv)
        write_csv(out, report);
      else
        emit(out, to_json(report), format);
    } else if (bstats->parsed()) {
      const auto g = bstats_src.load(seed);
      emit(out, to_json(ball_stats(g, bstats_r, samples, seed, bstats_p)), format);
    } else if (gen_cmd->parsed()) {
      GraphSpec spec;
      try {
        spec = GraphSpec::parse(gen_spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --gen: ") + e.what());
      }
      if (spec.family == Family::Hypercube) throw UsageError("hypercubes are given as --hypercube n, not as files");
      const auto g = generate(spec, seed);
      if (gen_output.empty()) {
        write_graph(out, g);
      } else {
        std::ofstream f(gen_output);
        if (!f) throw UsageError("cannot write " + gen_output);
        write_graph(f, g);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ballsearch::cli
