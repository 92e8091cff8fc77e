#include "pushpull/model.hpp"

#include <cmath>
#include <string>

#include "binom.hpp"
#include "pushpull/errors.hpp"

namespace pushpull {

namespace {

// Unnormalized hypergeometric weights for one selection from state i,
// written into `row`; returns the smallest step jLo. The first weight
// comes from binomial coefficients directly (exact 64-bit integers up
// to n = 64, log-gamma differences beyond); the rest of the row follows
// the exact ratio recurrence
//
//   w(j+1) / w(j) = (c-j)(n-k-i-j) / ((k+i-c+j)(j+1))
//
// so the relative error per entry stays at a few ulp per support point
// and a single normalization makes the row a distribution.
std::int64_t buildRow(const NetworkConfig& cfg, std::int64_t i, std::vector<double>& row) {
  const std::int64_t n = cfg.n, k = cfg.k, c = cfg.c;
  const std::int64_t jLo = std::max<std::int64_t>(0, c - (k + i - 1));
  const std::int64_t jHi = std::min<std::int64_t>(c, n - k - i);
  row.clear();

  if (n <= 64) {
    const long double denom = static_cast<long double>(detail::binomSmall(n - 1, c));
    for (std::int64_t j = jLo; j <= jHi; ++j) {
      const unsigned __int128 num =
          static_cast<unsigned __int128>(detail::binomSmall(k - 1 + i, c - j)) *
          static_cast<unsigned __int128>(detail::binomSmall(n - k - i, j));
      row.push_back(static_cast<double>(static_cast<long double>(num) / denom));
    }
  } else {
    double w = std::exp(detail::logBinomial(k - 1 + i, c - jLo) +
                        detail::logBinomial(n - k - i, jLo) -
                        detail::logBinomial(n - 1, c));
    row.push_back(w);
    for (std::int64_t j = jLo; j < jHi; ++j) {
      w *= static_cast<double>((c - j) * (n - k - i - j)) /
           static_cast<double>((k + i - c + j) * (j + 1));
      row.push_back(w);
    }
  }

  double sum = 0.0;
  for (double w : row) sum += w;
  for (double& w : row) w /= sum;
  return jLo;
}

void checkState(const NetworkConfig& cfg, std::int64_t i) {
  if (i < 0 || i > cfg.n - cfg.k) {
    throw DomainError("walk state i must be in [0, n-k], got " + std::to_string(i));
  }
}

std::int64_t inverseCdf(std::span<const double> row, std::int64_t jLo, double u) {
  double acc = 0.0;
  for (std::size_t idx = 0; idx < row.size(); ++idx) {
    acc += row[idx];
    if (u < acc) return jLo + static_cast<std::int64_t>(idx);
  }
  // u landed beyond the accumulated mass (possible when rounding leaves
  // sum slightly below 1); the top support point takes the remainder.
  return jLo + static_cast<std::int64_t>(row.size()) - 1;
}

}  // namespace

Pmf stepPmf(const NetworkConfig& cfg, std::int64_t i) {
  validateConfig(cfg);
  checkState(cfg, i);
  std::vector<double> row;
  std::int64_t jLo = buildRow(cfg, i, row);
  return Pmf(jLo, std::move(row));
}

std::int64_t sampleStep(const NetworkConfig& cfg, std::int64_t i, Rng& rng) {
  validateConfig(cfg);
  checkState(cfg, i);
  std::vector<double> row;
  std::int64_t jLo = buildRow(cfg, i, row);
  return inverseCdf(row, jLo, rng.nextUnit());
}

StepKernel::StepKernel(const NetworkConfig& cfg) : cfg_(validateConfig(cfg)) {
  const std::int64_t states = cfg_.n - cfg_.k + 1;
  minStep_.resize(static_cast<std::size_t>(states));
  rowBegin_.resize(static_cast<std::size_t>(states) + 1);
  probs_.reserve(static_cast<std::size_t>(states) * static_cast<std::size_t>(std::min(cfg_.c + 1, states)));
  std::vector<double> row;
  for (std::int64_t i = 0; i < states; ++i) {
    rowBegin_[static_cast<std::size_t>(i)] = probs_.size();
    minStep_[static_cast<std::size_t>(i)] = buildRow(cfg_, i, row);
    probs_.insert(probs_.end(), row.begin(), row.end());
  }
  rowBegin_[static_cast<std::size_t>(states)] = probs_.size();
}

std::int64_t StepKernel::sample(std::int64_t i, Rng& rng) const {
  return inverseCdf(row(i), minStep_[static_cast<std::size_t>(i)], rng.nextUnit());
}

}  // namespace pushpull
