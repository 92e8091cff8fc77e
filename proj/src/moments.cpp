#include "pushpull/moments.hpp"

#include <cmath>
#include <string>

#include "pushpull/errors.hpp"

namespace pushpull {

RecursionCoefficients coefficients(const NetworkConfig& cfg) {
  validateConfig(cfg);
  if (cfg.n < 3) {
    throw DomainError("second-moment coefficients need n >= 3, got n = " +
                      std::to_string(cfg.n));
  }
  const double n = static_cast<double>(cfg.n);
  const double k = static_cast<double>(cfg.k);
  const double c = static_cast<double>(cfg.c);
  RecursionCoefficients r;
  r.a0 = c * (n - k) / (n - 1.0);
  r.a1 = (n - 1.0 - c) / (n - 1.0);
  r.b0 = c * ((n - (c + 1.0)) + (n - k) * (c - 1.0)) * (n - k) / ((n - 2.0) * (n - 1.0));
  r.b1 = c * (n - (c + 1.0)) * (2.0 * (n - k) - 1.0) / ((n - 2.0) * (n - 1.0));
  r.b2 = 1.0 - 2.0 * c / (n - 1.0) + c * (c - 1.0) / ((n - 1.0) * (n - 2.0));
  return r;
}

std::vector<double> meanSeries(const NetworkConfig& cfg, std::int64_t steps) {
  validateConfig(cfg);
  if (steps < 0) throw DomainError("step count must be non-negative");
  const double nk = static_cast<double>(cfg.n - cfg.k);
  const double a1 = static_cast<double>(cfg.n - 1 - cfg.c) / static_cast<double>(cfg.n - 1);
  std::vector<double> gamma(static_cast<std::size_t>(steps) + 1);
  for (std::int64_t l = 0; l <= steps; ++l) {
    gamma[static_cast<std::size_t>(l)] = nk * (1.0 - std::pow(a1, static_cast<double>(l)));
  }
  return gamma;
}

std::vector<double> secondMomentSeries(const NetworkConfig& cfg, std::int64_t steps) {
  if (steps < 0) throw DomainError("step count must be non-negative");
  const RecursionCoefficients co = coefficients(cfg);
  const std::vector<double> gamma = meanSeries(cfg, steps);
  std::vector<double> alpha(static_cast<std::size_t>(steps) + 1);
  alpha[0] = 0.0;
  for (std::int64_t l = 1; l <= steps; ++l) {
    alpha[static_cast<std::size_t>(l)] = co.b2 * alpha[static_cast<std::size_t>(l - 1)] +
                                         co.b1 * gamma[static_cast<std::size_t>(l - 1)] +
                                         co.b0;
  }
  return alpha;
}

MomentSeries momentSeries(const NetworkConfig& cfg, std::int64_t steps) {
  return MomentSeries{meanSeries(cfg, steps), secondMomentSeries(cfg, steps)};
}

std::pair<double, double> meanVarY(const NetworkConfig& cfg) {
  const std::vector<double> alpha = secondMomentSeries(cfg, cfg.k);
  const std::vector<double> gamma = meanSeries(cfg, cfg.k);
  const double mean = gamma.back();
  return {mean, alpha.back() - mean * mean};
}

}  // namespace pushpull
