#ifndef PUSHPULL_PMF_HPP
#define PUSHPULL_PMF_HPP

#include <cstdint>
#include <vector>

namespace pushpull {

// Probability mass function on a contiguous integer range
// [offset, offset + size - 1]. Invariants enforced at construction:
// all entries >= 0, the first and last entries are > 0 (support is
// trimmed), and the total mass is 1 within 1e-9. Interior zeros are
// allowed.
class Pmf {
 public:
  Pmf(std::int64_t offset, std::vector<double> probs);

  static Pmf pointMass(std::int64_t value);

  std::int64_t minValue() const { return offset_; }
  std::int64_t maxValue() const {
    return offset_ + static_cast<std::int64_t>(probs_.size()) - 1;
  }
  std::size_t size() const { return probs_.size(); }

  // Probability of exactly v; 0 outside the stored range.
  double at(std::int64_t v) const;

  std::int64_t offset() const { return offset_; }
  const std::vector<double>& probs() const { return probs_; }

  double mean() const;
  double secondMoment() const;
  double variance() const;

  // P(X >= v) and P(X <= v).
  double tailAtLeast(std::int64_t v) const;
  double cdfAt(std::int64_t v) const;

 private:
  std::int64_t offset_;
  std::vector<double> probs_;
};

// Total variation distance: half the L1 distance over the union of
// the two supports.
double totalVariation(const Pmf& a, const Pmf& b);

// True when `hi` first-order stochastically dominates `lo`, i.e.
// P(hi >= v) >= P(lo >= v) - slack for every v.
bool stochasticallyDominates(const Pmf& hi, const Pmf& lo, double slack = 1e-12);

}  // namespace pushpull

#endif
