#include "pushpull/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <thread>

#include "pushpull/errors.hpp"
#include "pushpull/model.hpp"
#include "pushpull/rng.hpp"
#include "pushpull/version.hpp"

namespace pushpull {

namespace {

void validateSimConfig(const SimConfig& sim) {
  validateConfig(sim.net);
  if (sim.replications < 1) throw DomainError("need at least one replication");
  if (sim.maxRounds < 1) throw DomainError("maxRounds must be at least 1");
  for (double lambda : sim.levels) LevelTarget::resolve(sim.net.n, lambda);
}

std::vector<std::int64_t> resolveTargets(const SimConfig& sim) {
  std::vector<std::int64_t> targets;
  targets.reserve(sim.levels.size());
  for (double lambda : sim.levels) {
    targets.push_back(LevelTarget::resolve(sim.net.n, lambda).target);
  }
  return targets;
}

// One uninformed node's probability of contacting no informed node in a
// pull round with `informed` nodes currently informed.
double pullStayProb(const NetworkConfig& net, std::int64_t informed) {
  double p = 1.0;
  for (std::int64_t t = 0; t < net.c; ++t) {
    const std::int64_t uninformedPeers = net.n - informed - 1 - t;
    if (uninformedPeers <= 0) return 0.0;
    p *= static_cast<double>(uninformedPeers) / static_cast<double>(net.n - 1 - t);
  }
  return p;
}

// Core of one replication. `kernel` is required for push and unused for
// pull. Levels resolve against absolute targets: tau (push only) the
// moment the newly-informed count reaches the target, nu at the end of
// the first round whose informed count does.
void simulateCore(const SimConfig& sim, const StepKernel* kernel,
                  std::span<const std::int64_t> targets, std::int64_t replication,
                  Trajectory& out) {
  const NetworkConfig& net = sim.net;
  const bool push = sim.algorithm == Algorithm::push;
  Rng rng(mixSeed(sim.seed, static_cast<std::uint64_t>(replication)));

  out.informedByRound.clear();
  out.newlyBySelection.clear();
  out.newlyInformedRound1 = 0;
  out.levels.assign(targets.size(), LevelOutcome{});

  const std::int64_t n = net.n, k = net.k;
  std::int64_t newly = 0;       // walk position: informed beyond the initial k
  std::int64_t selections = 0;  // global selection index across rounds
  std::int64_t informed = k;
  out.informedByRound.push_back(informed);

  // Smallest unresolved tau target; rechecked only when crossed.
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  auto tauWatch = [&]() {
    std::int64_t watch = kNone;
    if (!push) return watch;
    for (std::size_t idx = 0; idx < targets.size(); ++idx) {
      if (out.levels[idx].tau < 0 && targets[idx] <= n - k) {
        watch = std::min(watch, targets[idx]);
      }
    }
    return watch;
  };
  std::int64_t watch = tauWatch();

  auto allResolved = [&]() {
    for (std::size_t idx = 0; idx < targets.size(); ++idx) {
      if (out.levels[idx].nu < 0) return false;
      if (push && out.levels[idx].tau < 0 && targets[idx] <= n - k) return false;
    }
    return true;
  };

  for (std::int64_t m = 1; m <= sim.maxRounds; ++m) {
    if (push) {
      // Round m performs I_{m-1} selections of the one global walk.
      const std::int64_t count = informed;
      for (std::int64_t s = 0; s < count; ++s) {
        newly += kernel->sample(newly, rng);
        ++selections;
        if (sim.recordSelections) out.newlyBySelection.push_back(newly);
        if (newly >= watch) {
          for (std::size_t idx = 0; idx < targets.size(); ++idx) {
            if (out.levels[idx].tau < 0 && targets[idx] <= newly) {
              out.levels[idx].tau = selections;
            }
          }
          watch = tauWatch();
        }
      }
      informed = k + newly;
    } else {
      const double q = 1.0 - pullStayProb(net, informed);
      const std::int64_t trials = n - informed;
      std::int64_t informedNow = 0;
      for (std::int64_t t = 0; t < trials; ++t) {
        if (rng.nextUnit() < q) ++informedNow;
      }
      informed += informedNow;
    }
    out.informedByRound.push_back(informed);
    if (m == 1) out.newlyInformedRound1 = informed - k;
    for (std::size_t idx = 0; idx < targets.size(); ++idx) {
      if (out.levels[idx].nu < 0 && informed >= targets[idx]) {
        out.levels[idx].nu = m;
      }
    }
    if (informed == n || allResolved()) break;
  }
}

}  // namespace

Trajectory simulateRoundChain(const SimConfig& sim, std::int64_t replication) {
  validateSimConfig(sim);
  if (replication < 0 || replication >= sim.replications) {
    throw DomainError("replication index out of range");
  }
  std::optional<StepKernel> kernel;
  if (sim.algorithm == Algorithm::push) kernel.emplace(sim.net);
  Trajectory out;
  simulateCore(sim, kernel ? &*kernel : nullptr, resolveTargets(sim), replication, out);
  return out;
}

SimReport runMonteCarlo(const SimConfig& sim, int threads) {
  validateSimConfig(sim);
  const std::int64_t R = sim.replications;
  if (threads < 1) threads = 1;
  if (static_cast<std::int64_t>(threads) > R) threads = static_cast<int>(R);

  const std::vector<std::int64_t> targets = resolveTargets(sim);
  std::optional<StepKernel> kernel;
  if (sim.algorithm == Algorithm::push) kernel.emplace(sim.net);

  const std::size_t yStates = static_cast<std::size_t>(sim.net.n - sim.net.k) + 1;
  const std::size_t roundSlots = static_cast<std::size_t>(sim.maxRounds) + 1;

  // Per-thread integer accumulators plus per-replication level slots.
  // Integer sums are associative, and level outcomes land at their
  // replication index, so the merged result cannot depend on the thread
  // count or schedule.
  struct Partial {
    std::vector<std::int64_t> yCounts;
    std::vector<std::int64_t> roundSum;
    std::vector<std::int64_t> roundCount;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(threads));
  std::vector<std::vector<std::int64_t>> tauByLevel(
      targets.size(), std::vector<std::int64_t>(static_cast<std::size_t>(R)));
  std::vector<std::vector<std::int64_t>> nuByLevel(
      targets.size(), std::vector<std::int64_t>(static_cast<std::size_t>(R)));

  auto worker = [&](int t, std::int64_t rBegin, std::int64_t rEnd) {
    Partial& acc = partials[static_cast<std::size_t>(t)];
    acc.yCounts.assign(yStates, 0);
    acc.roundSum.assign(roundSlots, 0);
    acc.roundCount.assign(roundSlots, 0);
    Trajectory scratch;
    for (std::int64_t r = rBegin; r < rEnd; ++r) {
      simulateCore(sim, kernel ? &*kernel : nullptr, targets, r, scratch);
      ++acc.yCounts[static_cast<std::size_t>(scratch.newlyInformedRound1)];
      for (std::size_t m = 0; m < scratch.informedByRound.size(); ++m) {
        acc.roundSum[m] += scratch.informedByRound[m];
        ++acc.roundCount[m];
      }
      for (std::size_t idx = 0; idx < targets.size(); ++idx) {
        tauByLevel[idx][static_cast<std::size_t>(r)] = scratch.levels[idx].tau;
        nuByLevel[idx][static_cast<std::size_t>(r)] = scratch.levels[idx].nu;
      }
    }
  };

  if (threads == 1) {
    worker(0, 0, R);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (R + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t rBegin = chunk * t;
      const std::int64_t rEnd = std::min<std::int64_t>(R, rBegin + chunk);
      pool.emplace_back(worker, t, rBegin, rEnd);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<std::int64_t> yCounts(yStates, 0);
  std::vector<std::int64_t> roundSum(roundSlots, 0);
  std::vector<std::int64_t> roundCount(roundSlots, 0);
  for (const Partial& p : partials) {
    for (std::size_t i = 0; i < yStates; ++i) yCounts[i] += p.yCounts[i];
    for (std::size_t m = 0; m < roundSlots; ++m) {
      roundSum[m] += p.roundSum[m];
      roundCount[m] += p.roundCount[m];
    }
  }

  SimReport report;
  report.net = sim.net;
  report.algorithm = sim.algorithm;
  report.replications = R;
  report.seed = sim.seed;
  report.maxRounds = sim.maxRounds;
  report.rng = rngStamp();
  report.codeVersion = kCodeVersion;

  std::size_t lo = 0, hi = yStates;
  while (lo < hi && yCounts[lo] == 0) ++lo;
  while (hi > lo && yCounts[hi - 1] == 0) --hi;
  std::vector<double> yProbs;
  yProbs.reserve(hi - lo);
  __int128 sumY = 0, sumY2 = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    yProbs.push_back(static_cast<double>(yCounts[i]) / static_cast<double>(R));
    const __int128 v = static_cast<__int128>(static_cast<std::int64_t>(i));
    sumY += static_cast<__int128>(yCounts[i]) * v;
    sumY2 += static_cast<__int128>(yCounts[i]) * v * v;
  }
  report.yEmpirical = Pmf(static_cast<std::int64_t>(lo), std::move(yProbs));
  report.yMean = static_cast<double>(static_cast<long double>(sumY) / static_cast<long double>(R));
  if (R > 1) {
    const long double num = static_cast<long double>(sumY2) -
                            static_cast<long double>(sumY) * static_cast<long double>(sumY) /
                                static_cast<long double>(R);
    report.yVariance = static_cast<double>(num / static_cast<long double>(R - 1));
  }

  for (std::size_t m = 0; m < roundSlots && roundCount[m] > 0; ++m) {
    report.meanInformedByRound.push_back(static_cast<double>(roundSum[m]) /
                                         static_cast<double>(roundCount[m]));
    report.roundObservations.push_back(roundCount[m]);
  }

  for (std::size_t idx = 0; idx < targets.size(); ++idx) {
    LevelReport lvl;
    lvl.lambda = sim.levels[idx];
    lvl.target = targets[idx];
    lvl.tauTracked = sim.algorithm == Algorithm::push;
    for (std::int64_t r = 0; r < R; ++r) {
      const std::int64_t tau = tauByLevel[idx][static_cast<std::size_t>(r)];
      const std::int64_t nu = nuByLevel[idx][static_cast<std::size_t>(r)];
      if (lvl.tauTracked) {
        if (tau >= 0) {
          lvl.tauSamples.push_back(tau);
        } else {
          ++lvl.tauCensored;
        }
      }
      if (nu >= 0) {
        lvl.nuSamples.push_back(nu);
      } else {
        ++lvl.nuCensored;
      }
    }
    report.levels.push_back(std::move(lvl));
  }
  return report;
}

NormalityDiagnostics normalityDiagnostics(std::span<const double> samples, double targetMean,
                                          double targetVariance) {
  if (samples.size() < 100) {
    throw DomainError("normality diagnostics need at least 100 samples, got " +
                      std::to_string(samples.size()));
  }
  if (!(targetVariance > 0.0)) throw DomainError("target variance must be positive");

  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : samples) var += (x - mean) * (x - mean);
  var /= (n - 1.0);

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double sd = std::sqrt(targetVariance);
  double ks = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = 0.5 * std::erfc(-(sorted[i] - targetMean) / (sd * std::sqrt(2.0)));
    ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
    ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - f));
  }

  NormalityDiagnostics out;
  out.standardizedMean = (mean - targetMean) / std::sqrt(targetVariance / n);
  out.varianceRatio = var / targetVariance;
  out.ksStatistic = ks;
  return out;
}

double ksCriticalValue(double alpha, std::size_t n) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (n == 0) throw DomainError("sample count must be positive");
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

}  // namespace pushpull
