// Command line front end: every subcommand resolves its parameters,
// computes through the library, and emits one self-describing table
// (CSV by default, json-lines on request). Exit codes: 0 success,
// 2 usage or domain errors, 3 resource-guard violations.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pushpull/asymptotics.hpp"
#include "pushpull/errors.hpp"
#include "pushpull/exact.hpp"
#include "pushpull/moments.hpp"
#include "pushpull/output.hpp"
#include "pushpull/rounds.hpp"
#include "pushpull/sim.hpp"
#include "pushpull/version.hpp"

namespace {

using namespace pushpull;

struct GlobalOpts {
  std::string format = "csv";
  std::string outPath;
};

void emit(const OutputRecord& rec, const GlobalOpts& global) {
  const OutputFormat format = parseOutputFormat(global.format);
  if (global.outPath.empty()) {
    write(rec, format, std::cout);
    return;
  }
  std::ofstream os(global.outPath, std::ios::binary);
  if (!os) throw DomainError("cannot open output file '" + global.outPath + "'");
  write(rec, format, os);
}

std::string schemaFor(const std::string& command) {
  return "pushpull." + command + "." + kOutputSchemaVersion;
}

Algorithm parseAlgorithm(const std::string& name) {
  if (name == "push") return Algorithm::push;
  if (name == "pull") return Algorithm::pull;
  throw DomainError("unknown algorithm '" + name + "' (expected push or pull)");
}

// Level grids: "auto" is {j/n : j = 1..n}, "a:b:step" an inclusive
// range, anything else a comma-separated list.
std::vector<double> parseGrid(const std::string& text, std::int64_t n) {
  std::vector<double> out;
  if (text == "auto") {
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j) {
      out.push_back(static_cast<double>(j) / static_cast<double>(n));
    }
    return out;
  }
  if (text.find(':') != std::string::npos) {
    std::istringstream in(text);
    double a = 0.0, b = 0.0, step = 0.0;
    char s1 = 0, s2 = 0;
    if (!(in >> a >> s1 >> b >> s2 >> step) || s1 != ':' || s2 != ':' || !(step > 0.0)) {
      throw DomainError("bad grid '" + text + "', expected start:stop:step");
    }
    for (double v = a; v <= b + 1e-12; v += step) out.push_back(v);
    return out;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw DomainError("grid '" + text + "' is empty");
  return out;
}

std::string joinLevels(const std::vector<double>& levels) {
  std::string s;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) s += ',';
    s += formatDouble(levels[i]);
  }
  return s;
}

int runApp(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic analysis of push/pull dissemination on complete networks"};
  app.require_subcommand(1);
  // Let --format/--out appear after the subcommand as well; subcommands
  // copy this setting at creation time, so it must be set first.
  app.fallthrough();
  GlobalOpts global;
  app.add_option("--format", global.format, "Output format: csv or json-lines")
      ->check(CLI::IsMember({"csv", "json-lines"}))
      ->capture_default_str();
  app.add_option("--out", global.outPath, "Write output to a file instead of stdout");

  // dist: one-round or L-step distribution, optionally checked against
  // an independent oracle.
  struct {
    std::int64_t n = 0, k = 0, c = 1;
    std::optional<std::int64_t> steps;
    std::string algo = "push";
    std::string oracle;
  } dist;
  auto* distCmd = app.add_subcommand("dist", "Distribution of the newly informed count");
  distCmd->add_option("--n", dist.n, "Network size")->required();
  distCmd->add_option("--k", dist.k, "Initially informed nodes")->required();
  distCmd->add_option("--c", dist.c, "Fanout")->capture_default_str();
  distCmd->add_option("--steps", dist.steps, "Selections to run (push only; default k, one round)");
  distCmd->add_option("--algo", dist.algo, "push or pull")->capture_default_str();
  distCmd->add_option("--oracle", dist.oracle, "Cross-check: stirling (c=1, one round) or enum")
      ->check(CLI::IsMember({"stirling", "enum"}));

  struct {
    std::int64_t n = 0, k = 0, c = 1;
    std::string algo = "push";
    std::string grid = "auto";
  } rounds;
  auto* roundsCmd = app.add_subcommand("rounds", "Expected rounds to reach coverage levels");
  roundsCmd->add_option("--n", rounds.n, "Network size")->required();
  roundsCmd->add_option("--k", rounds.k, "Initially informed nodes")->required();
  roundsCmd->add_option("--c", rounds.c, "Fanout")->capture_default_str();
  roundsCmd->add_option("--algo", rounds.algo, "push or pull")->capture_default_str();
  roundsCmd->add_option("--lambda-grid", rounds.grid, "Levels: auto, start:stop:step, or comma list")
      ->capture_default_str();

  struct {
    double mu = 0.0;
    std::int64_t c = 1;
    std::int64_t maxLevels = 200;
  } fluid;
  auto* fluidCmd = app.add_subcommand("fluid", "Fluid-limit informed fraction per round");
  fluidCmd->add_option("--mu", fluid.mu, "Initial uninformed fraction")->required();
  fluidCmd->add_option("--c", fluid.c, "Fanout")->capture_default_str();
  fluidCmd->add_option("--max-levels", fluid.maxLevels, "Cap on emitted rounds")->capture_default_str();

  struct {
    std::int64_t n = 0, k = 0, c = 1;
  } diffuse;
  auto* diffuseCmd = app.add_subcommand("diffuse", "Normal approximation of the one-round law");
  diffuseCmd->add_option("--n", diffuse.n, "Network size")->required();
  diffuseCmd->add_option("--k", diffuse.k, "Initially informed nodes")->required();
  diffuseCmd->add_option("--c", diffuse.c, "Fanout")->capture_default_str();

  struct {
    double mu = 0.0, lambda = 0.0;
    std::int64_t c = 1;
  } hit;
  auto* hitCmd = app.add_subcommand("hit", "Fluid hitting time and diffusion variance for a level");
  hitCmd->add_option("--mu", hit.mu, "Initial uninformed fraction")->required();
  hitCmd->add_option("--c", hit.c, "Fanout")->capture_default_str();
  hitCmd->add_option("--lambda", hit.lambda, "Newly-informed fraction to hit")->required();

  struct {
    std::int64_t n = 0, k = 0, c = 1;
    std::string algo = "push";
    std::int64_t reps = 1000;
    std::uint64_t seed = 0;
    std::string levels;
    std::int64_t maxRounds = 64;
    int threads = 1;
    bool samples = false;
  } simulate;
  auto* simCmd = app.add_subcommand("simulate", "Monte Carlo replications of the round chain");
  simCmd->add_option("--n", simulate.n, "Network size")->required();
  simCmd->add_option("--k", simulate.k, "Initially informed nodes")->required();
  simCmd->add_option("--c", simulate.c, "Fanout")->capture_default_str();
  simCmd->add_option("--algo", simulate.algo, "push or pull")->capture_default_str();
  simCmd->add_option("--reps", simulate.reps, "Replications")->capture_default_str();
  simCmd->add_option("--seed", simulate.seed, "Base seed; replication r uses stream mix(seed, r)")
      ->capture_default_str();
  simCmd->add_option("--levels", simulate.levels, "Comma list of coverage levels to time");
  simCmd->add_option("--max-rounds", simulate.maxRounds, "Censor levels not hit by this round")
      ->capture_default_str();
  simCmd->add_option("--threads", simulate.threads, "Worker threads (report is thread-count invariant)")
      ->envname("PUSHPULL_THREADS")
      ->capture_default_str();
  simCmd->add_flag("--samples", simulate.samples, "Emit raw per-replication tau/nu rows");

  struct {
    double mu = 0.0;
    std::int64_t cMax = 30;
  } compare;
  auto* compareCmd = app.add_subcommand("compare", "Limiting one-round yields of pull vs push");
  compareCmd->add_option("--mu", compare.mu, "Initial uninformed fraction")->required();
  compareCmd->add_option("--c-max", compare.cMax, "Evaluate fanouts 1..c-max")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  OutputRecord rec;
  std::ostringstream cmd;

  if (distCmd->parsed()) {
    const NetworkConfig cfg = validateConfig({dist.n, dist.k, dist.c});
    const Algorithm algo = parseAlgorithm(dist.algo);
    if (algo == Algorithm::pull && dist.steps) {
      throw DomainError("--steps applies to push only; pull completes in whole rounds");
    }
    const std::int64_t steps = dist.steps.value_or(cfg.k);
    const Pmf pmf = algo == Algorithm::push ? walkDistribution(cfg, steps) : pullDistribution(cfg);

    rec.schema = schemaFor("dist");
    cmd << "pushpull dist --n " << cfg.n << " --k " << cfg.k << " --c " << cfg.c << " --algo "
        << dist.algo;
    if (algo == Algorithm::push) cmd << " --steps " << steps;
    if (!dist.oracle.empty()) cmd << " --oracle " << dist.oracle;
    cmd << " --format " << global.format;
    rec.command = cmd.str();
    rec.columns = {"value", "probability"};
    for (std::int64_t v = pmf.minValue(); v <= pmf.maxValue(); ++v) {
      rec.addRow({v, pmf.at(v)});
    }
    if (dist.oracle == "stirling") {
      if (cfg.c != 1 || algo != Algorithm::push || steps != cfg.k) {
        throw DomainError("--oracle stirling applies to push, c=1, steps=k");
      }
      rec.meta.emplace_back("oracle_tv",
                            formatDouble(totalVariation(pmf, stirlingOracle(cfg.n, cfg.k).toPmf())));
    } else if (dist.oracle == "enum") {
      if (algo != Algorithm::push) throw DomainError("--oracle enum applies to push");
      rec.meta.emplace_back("oracle_tv",
                            formatDouble(totalVariation(pmf, enumerationOracle(cfg, steps).toPmf())));
    }
    emit(rec, global);
    return 0;
  }

  if (roundsCmd->parsed()) {
    const NetworkConfig cfg = validateConfig({rounds.n, rounds.k, rounds.c});
    const Algorithm algo = parseAlgorithm(rounds.algo);
    const std::vector<double> grid = parseGrid(rounds.grid, cfg.n);
    const std::vector<double> expected = expectedRoundsGrid(cfg, grid, algo);

    rec.schema = schemaFor("rounds");
    cmd << "pushpull rounds --n " << cfg.n << " --k " << cfg.k << " --c " << cfg.c << " --algo "
        << rounds.algo << " --lambda-grid " << rounds.grid << " --format " << global.format;
    rec.command = cmd.str();
    rec.columns = {"lambda", "target", "expected_rounds"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rec.addRow({grid[i], LevelTarget::resolve(cfg.n, grid[i]).target, expected[i]});
    }
    emit(rec, global);
    return 0;
  }

  if (fluidCmd->parsed()) {
    const AsymptoticRegime reg = makeRegime(fluid.mu, fluid.c);
    const FluidRoundLevels levels = fluidRounds(reg, fluid.maxLevels);

    rec.schema = schemaFor("fluid");
    cmd << "pushpull fluid --mu " << formatDouble(reg.mu) << " --c " << reg.c << " --max-levels "
        << fluid.maxLevels << " --format " << global.format;
    rec.command = cmd.str();
    rec.columns = {"round", "phi"};
    for (std::size_t i = 0; i < levels.phi.size(); ++i) {
      rec.addRow({static_cast<std::int64_t>(i), levels.phi[i]});
    }
    emit(rec, global);
    return 0;
  }

  if (diffuseCmd->parsed()) {
    const NetworkConfig cfg = validateConfig({diffuse.n, diffuse.k, diffuse.c});
    const NormalApprox approx = normalApproxY(cfg);

    rec.schema = schemaFor("diffuse");
    cmd << "pushpull diffuse --n " << cfg.n << " --k " << cfg.k << " --c " << cfg.c << " --format "
        << global.format;
    rec.command = cmd.str();
    rec.columns = {"mean", "variance"};
    rec.addRow({approx.mean, approx.variance});
    emit(rec, global);
    return 0;
  }

  if (hitCmd->parsed()) {
    const AsymptoticRegime reg = makeRegime(hit.mu, hit.c);
    rec.schema = schemaFor("hit");
    cmd << "pushpull hit --mu " << formatDouble(reg.mu) << " --c " << reg.c << " --lambda "
        << formatDouble(hit.lambda) << " --format " << global.format;
    rec.command = cmd.str();
    rec.columns = {"lambda", "tau_bar", "hitting_variance"};
    rec.addRow({hit.lambda, tauBar(reg, hit.lambda), hittingVariance(reg, hit.lambda)});
    emit(rec, global);
    return 0;
  }

  if (simCmd->parsed()) {
    SimConfig sc;
    sc.net = validateConfig({simulate.n, simulate.k, simulate.c});
    sc.algorithm = parseAlgorithm(simulate.algo);
    sc.replications = simulate.reps;
    sc.seed = simulate.seed;
    if (!simulate.levels.empty()) sc.levels = parseGrid(simulate.levels, sc.net.n);
    sc.maxRounds = simulate.maxRounds;
    const SimReport report = runMonteCarlo(sc, simulate.threads);

    rec.schema = schemaFor("simulate");
    cmd << "pushpull simulate --n " << sc.net.n << " --k " << sc.net.k << " --c " << sc.net.c
        << " --algo " << simulate.algo << " --reps " << sc.replications << " --seed " << sc.seed;
    if (!sc.levels.empty()) cmd << " --levels " << joinLevels(sc.levels);
    cmd << " --max-rounds " << sc.maxRounds;
    if (simulate.samples) cmd << " --samples";
    cmd << " --format " << global.format;
    rec.command = cmd.str();
    appendSimReportRows(rec, report, simulate.samples);
    emit(rec, global);
    return 0;
  }

  if (compareCmd->parsed()) {
    if (compare.cMax < 1) throw DomainError("--c-max must be at least 1");
    rec.schema = schemaFor("compare");
    cmd << "pushpull compare --mu " << formatDouble(compare.mu) << " --c-max " << compare.cMax
        << " --format " << global.format;
    rec.command = cmd.str();
    rec.columns = {"c", "pull_mean", "push_mean", "gap"};
    for (std::int64_t c = 1; c <= compare.cMax; ++c) {
      const MeanComparison mc = meanComparison(makeRegime(compare.mu, c));
      rec.addRow({c, mc.pullMean, mc.pushMean, mc.gap});
    }
    emit(rec, global);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return runApp(argc, argv);
  } catch (const pushpull::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pushpull::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
