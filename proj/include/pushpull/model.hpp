#ifndef PUSHPULL_MODEL_HPP
#define PUSHPULL_MODEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pushpull/config.hpp"
#include "pushpull/pmf.hpp"
#include "pushpull/rng.hpp"

namespace pushpull {

// Position of the selection walk: `newlyInformed` nodes informed since
// the process started (on top of the initial k), after `step` selections.
struct WalkState {
  std::int64_t newlyInformed = 0;
  std::int64_t step = 0;
};

// Law of the number of fresh nodes informed by one selection, given
// that i nodes have been newly informed so far. The selecting node
// picks c distinct peers among the other n-1; j of them are among the
// n-k-i still-uninformed nodes:
//
//   P(j) = C(k-1+i, c-j) * C(n-k-i, j) / C(n-1, c)
//
// with support max(0, c-(k+i-1)) .. min(c, n-(k+i)). Requires
// 0 <= i <= n-k; the state i = n-k yields a point mass at 0.
Pmf stepPmf(const NetworkConfig& cfg, std::int64_t i);

// One draw from stepPmf(cfg, i) by inverse CDF over its <= c+1 support
// points. Consumes exactly one uniform variate.
std::int64_t sampleStep(const NetworkConfig& cfg, std::int64_t i, Rng& rng);

// Precomputed step laws for every reachable state 0..n-k. Shared,
// read-only after construction; this is what the exact engine and the
// simulator iterate over instead of recomputing rows per step.
class StepKernel {
 public:
  explicit StepKernel(const NetworkConfig& cfg);

  const NetworkConfig& config() const { return cfg_; }

  // Smallest j with positive probability from state i.
  std::int64_t minStep(std::int64_t i) const { return minStep_[i]; }

  // Probabilities for j = minStep(i), minStep(i)+1, ... Rows are kept
  // in one flat array so a kernel for n ~ 1e6 stays a single block.
  std::span<const double> row(std::int64_t i) const {
    return {probs_.data() + rowBegin_[i], probs_.data() + rowBegin_[i + 1]};
  }

  std::int64_t sample(std::int64_t i, Rng& rng) const;

 private:
  NetworkConfig cfg_;
  std::vector<std::int64_t> minStep_;
  std::vector<std::size_t> rowBegin_;
  std::vector<double> probs_;
};

}  // namespace pushpull

#endif
