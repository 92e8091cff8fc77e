#ifndef PUSHPULL_ROUNDS_HPP
#define PUSHPULL_ROUNDS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pushpull/config.hpp"
#include "pushpull/pmf.hpp"

namespace pushpull {

enum class Algorithm { push, pull };

const char* algorithmName(Algorithm a);

// Coverage level lambda resolved to an absolute node count. The target
// is ceil(lambda * n), the conservative reading of "proportion >= lambda";
// the 1e-9 snap keeps grid levels j/n from resolving to j+1 when
// lambda * n lands one ulp above the integer j.
struct LevelTarget {
  double lambda = 0.0;
  std::int64_t target = 0;

  static LevelTarget resolve(std::int64_t n, double lambda);
};

// Distribution of the informed count I_m after m full rounds, starting
// from I_0 = k. Round kernels are the one-round laws with k replaced by
// the current informed count.
Pmf roundChainDistribution(const NetworkConfig& cfg, std::int64_t rounds, Algorithm algo);

// Expected number of full rounds until the informed proportion reaches
// lambda. 0 when the initial k already meets the target. Solved by a
// downward sweep over the informed count; throws DegenerateError if a
// state below the target could not make progress (impossible for these
// kernels, but checked).
double expectedRoundsToLevel(const NetworkConfig& cfg, double lambda, Algorithm algo);

// Same quantity over a grid of levels, sharing the per-state one-round
// kernels across the grid. Equivalent to calling expectedRoundsToLevel
// per level, just without recomputing kernels.
std::vector<double> expectedRoundsGrid(const NetworkConfig& cfg,
                                       std::span<const double> lambdas, Algorithm algo);

// P(nu = m) for m = 0..maxRounds, where nu is the first round whose
// informed count meets the level target, plus the probability mass that
// has not reached the target after maxRounds rounds.
struct RoundCountDistribution {
  std::vector<double> probs;    // index m = 0..maxRounds
  double residualBeyondMax = 0.0;
};

RoundCountDistribution roundCountDistribution(const NetworkConfig& cfg, double lambda,
                                              std::int64_t maxRounds, Algorithm algo);

}  // namespace pushpull

#endif
