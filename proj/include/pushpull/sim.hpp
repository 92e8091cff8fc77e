#ifndef PUSHPULL_SIM_HPP
#define PUSHPULL_SIM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pushpull/config.hpp"
#include "pushpull/pmf.hpp"
#include "pushpull/rounds.hpp"

namespace pushpull {

struct SimConfig {
  NetworkConfig net;
  Algorithm algorithm = Algorithm::push;
  std::int64_t replications = 1;
  std::uint64_t seed = 0;
  /// Coverage levels in (0, 1] to time. For push, the selection index
  /// tau at which the newly-informed count reaches ceil(lambda*n) is
  /// recorded per level; for both algorithms, the first round nu whose
  /// informed count reaches the target is recorded.
  std::vector<double> levels;
  /// A replication that has not hit every level after this many rounds
  /// is counted as censored for the missing levels.
  std::int64_t maxRounds = 64;
  /// Keep the per-selection newly-informed path (push only; test hook).
  bool recordSelections = false;
};

// Per-level outcome of one replication; -1 means not reached.
struct LevelOutcome {
  std::int64_t tau = -1;
  std::int64_t nu = -1;
};

// One replication. Round m of the push algorithm performs I_{m-1}
// selections of the same selection walk that runs across rounds; a pull
// round draws one Bernoulli per uninformed node.
struct Trajectory {
  std::vector<std::int64_t> informedByRound;  // I_0, I_1, ..., as simulated
  std::int64_t newlyInformedRound1 = 0;       // Y
  std::vector<LevelOutcome> levels;           // parallel to SimConfig::levels
  std::vector<std::int64_t> newlyBySelection; // only when recordSelections
};

Trajectory simulateRoundChain(const SimConfig& sim, std::int64_t replication);

struct LevelReport {
  double lambda = 0.0;
  std::int64_t target = 0;           // ceil(lambda * n)
  bool tauTracked = false;           // false for pull: tau is not defined there
  std::vector<std::int64_t> tauSamples;  // replication order, reached only
  std::int64_t tauCensored = 0;
  std::vector<std::int64_t> nuSamples;
  std::int64_t nuCensored = 0;
};

struct SimReport {
  // Echo of the run so the report is self-describing.
  NetworkConfig net;
  Algorithm algorithm = Algorithm::push;
  std::int64_t replications = 0;
  std::uint64_t seed = 0;
  std::int64_t maxRounds = 0;
  std::string rng;          // stream derivation + engine
  std::string codeVersion;

  Pmf yEmpirical = Pmf::pointMass(0);
  double yMean = 0.0;
  double yVariance = 0.0;   // unbiased; 0 when replications < 2

  // meanInformedByRound[m] averages I_m over the replications that
  // simulated round m (a replication stops once every level is
  // resolved, the network is fully informed, or maxRounds is reached).
  std::vector<double> meanInformedByRound;
  std::vector<std::int64_t> roundObservations;

  std::vector<LevelReport> levels;
};

// Runs `replications` independent replications, replication r seeded
// with mixSeed(seed, r), and aggregates. Aggregation is keyed by
// replication index and uses integer accumulators, so the report is
// bitwise identical for any thread count.
SimReport runMonteCarlo(const SimConfig& sim, int threads = 1);

struct NormalityDiagnostics {
  double standardizedMean;  // (sample mean - target mean) / sqrt(targetVar / n)
  double varianceRatio;     // sample variance / target variance
  double ksStatistic;       // sup-distance to the target normal CDF
};

// Requires at least 100 samples and targetVar > 0.
NormalityDiagnostics normalityDiagnostics(std::span<const double> samples, double targetMean,
                                          double targetVariance);

// Asymptotic Kolmogorov-Smirnov critical value sqrt(-ln(alpha/2)/2)/sqrt(n).
double ksCriticalValue(double alpha, std::size_t n);

}  // namespace pushpull

#endif
