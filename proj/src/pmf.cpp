#include "pushpull/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pushpull/errors.hpp"

namespace pushpull {

Pmf::Pmf(std::int64_t offset, std::vector<double> probs) : offset_(offset), probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("pmf must have at least one entry");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("pmf entries must be non-negative finite values");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("pmf mass is " + std::to_string(sum) + ", expected 1 within 1e-9");
  }
  // Trim exact zeros at both ends so minValue/maxValue describe the support.
  std::size_t lo = 0;
  std::size_t hi = probs_.size();
  while (lo < hi && probs_[lo] == 0.0) ++lo;
  while (hi > lo && probs_[hi - 1] == 0.0) --hi;
  if (lo == hi) throw DomainError("pmf has no positive entry");
  if (lo > 0 || hi < probs_.size()) {
    probs_ = std::vector<double>(probs_.begin() + static_cast<std::ptrdiff_t>(lo),
                                 probs_.begin() + static_cast<std::ptrdiff_t>(hi));
    offset_ += static_cast<std::int64_t>(lo);
  }
}

Pmf Pmf::pointMass(std::int64_t value) { return Pmf(value, {1.0}); }

double Pmf::at(std::int64_t v) const {
  if (v < minValue() || v > maxValue()) return 0.0;
  return probs_[static_cast<std::size_t>(v - offset_)];
}

double Pmf::mean() const {
  double m = 0.0;
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
    m += probs_[idx] * static_cast<double>(offset_ + static_cast<std::int64_t>(idx));
  }
  return m;
}

double Pmf::secondMoment() const {
  double m = 0.0;
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
    double v = static_cast<double>(offset_ + static_cast<std::int64_t>(idx));
    m += probs_[idx] * v * v;
  }
  return m;
}

double Pmf::variance() const {
  // Centered accumulation; the raw-moment difference loses digits once
  // the distribution concentrates far from 0.
  double mu = mean();
  double v = 0.0;
  for (std::size_t idx = 0; idx < probs_.size(); ++idx) {
    double d = static_cast<double>(offset_ + static_cast<std::int64_t>(idx)) - mu;
    v += probs_[idx] * d * d;
  }
  return v;
}

double Pmf::tailAtLeast(std::int64_t v) const {
  if (v <= minValue()) return 1.0;
  if (v > maxValue()) return 0.0;
  // Sum the shorter side from the top for accuracy of small tails.
  double t = 0.0;
  for (std::size_t idx = probs_.size(); idx-- > static_cast<std::size_t>(v - offset_);) {
    t += probs_[idx];
  }
  return t;
}

double Pmf::cdfAt(std::int64_t v) const {
  if (v < minValue()) return 0.0;
  if (v >= maxValue()) return 1.0;
  double t = 0.0;
  for (std::size_t idx = 0; idx <= static_cast<std::size_t>(v - offset_); ++idx) {
    t += probs_[idx];
  }
  return t;
}

double totalVariation(const Pmf& a, const Pmf& b) {
  std::int64_t lo = std::min(a.minValue(), b.minValue());
  std::int64_t hi = std::max(a.maxValue(), b.maxValue());
  double d = 0.0;
  for (std::int64_t v = lo; v <= hi; ++v) {
    d += std::abs(a.at(v) - b.at(v));
  }
  return 0.5 * d;
}

bool stochasticallyDominates(const Pmf& hi, const Pmf& lo, double slack) {
  std::int64_t a = std::min(hi.minValue(), lo.minValue());
  std::int64_t b = std::max(hi.maxValue(), lo.maxValue());
  for (std::int64_t v = a; v <= b; ++v) {
    if (hi.tailAtLeast(v) < lo.tailAtLeast(v) - slack) return false;
  }
  return true;
}

}  // namespace pushpull
