#ifndef PUSHPULL_EXACT_HPP
#define PUSHPULL_EXACT_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pushpull/config.hpp"
#include "pushpull/pmf.hpp"

namespace pushpull {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact counterpart of Pmf used by the oracles: entries are rationals
// and must sum to exactly 1. Support is trimmed like Pmf's.
class RationalPmf {
 public:
  RationalPmf(std::int64_t offset, std::vector<BigRational> probs);

  std::int64_t minValue() const { return offset_; }
  std::int64_t maxValue() const {
    return offset_ + static_cast<std::int64_t>(probs_.size()) - 1;
  }
  BigRational at(std::int64_t v) const;
  std::int64_t offset() const { return offset_; }
  const std::vector<BigRational>& probs() const { return probs_; }

  // Nearest-double image, each entry correct to ~1 ulp.
  Pmf toPmf() const;

 private:
  std::int64_t offset_;
  std::vector<BigRational> probs_;
};

// One row of the walk's transition kernel: increments j and their
// probabilities when one selection is made from state sourceState.
struct TransitionRow {
  std::int64_t sourceState;
  std::int64_t minStep;
  std::vector<double> probs;
};

TransitionRow transitionRow(const NetworkConfig& cfg, std::int64_t i);

// Distribution of the walk position after `steps` selections, starting
// from 0 newly informed. Computed as `steps` row-vector/kernel products;
// entries below 1e-300 are flushed and the result renormalized once.
Pmf walkDistribution(const NetworkConfig& cfg, std::int64_t steps);

// Newly informed nodes after one full round, i.e. the walk after k
// selections.
Pmf yDistribution(const NetworkConfig& cfg);

// Closed form for the single-contact (c = 1) one-round law,
//
//   P(Y = i) = C(n-k, i) i! sum_{k1=i}^{k} C(k, k1) (k-1)^(k-k1) S(k1, i) / (n-1)^k
//
// with S the Stirling numbers of the second kind, evaluated in exact
// big-integer arithmetic over the common denominator (n-1)^k. Serves as
// an independently derived oracle for yDistribution at c = 1.
// Throws ResourceError for n > 200.
RationalPmf stirlingOracle(std::int64_t n, std::int64_t k);

// One pull round: every uninformed node stays uninformed with
// probability p = C(n-k-1, c) / C(n-1, c), independently, so the newly
// informed count is Binomial(n-k, 1-p).
Pmf pullDistribution(const NetworkConfig& cfg);

// Exact rational propagation of the step law, expanding every path of
// the walk. Same quantity as walkDistribution but with no floating
// point anywhere; this is the ground truth small cases are checked
// against. Throws ResourceError for n > 30.
RationalPmf enumerationOracle(const NetworkConfig& cfg, std::int64_t steps);

}  // namespace pushpull

#endif
