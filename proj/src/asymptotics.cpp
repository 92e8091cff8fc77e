#include "pushpull/asymptotics.hpp"

#include <cmath>
#include <string>

#include "pushpull/errors.hpp"

namespace pushpull {

AsymptoticRegime makeRegime(double mu, std::int64_t c) {
  if (!(mu > 0.0) || !(mu < 1.0)) {
    throw DomainError("mu must lie in (0, 1), got " + std::to_string(mu));
  }
  if (c < 1) throw DomainError("fanout c must be a positive integer");
  return AsymptoticRegime{mu, c};
}

AsymptoticRegime regimeOf(const NetworkConfig& cfg) {
  validateConfig(cfg);
  return makeRegime(static_cast<double>(cfg.n - cfg.k) / static_cast<double>(cfg.n), cfg.c);
}

namespace {
void checkTime(double t) {
  if (!(t >= 0.0)) throw DomainError("time must be non-negative, got " + std::to_string(t));
}
}  // namespace

double gammaFluid(const AsymptoticRegime& reg, double t) {
  checkTime(t);
  return -reg.mu * std::expm1(-static_cast<double>(reg.c) * t);
}

double sigmaFluid(const AsymptoticRegime& reg, double t) {
  checkTime(t);
  const double remaining = reg.mu - gammaFluid(reg, t);  // = mu e^{-ct}
  return std::sqrt(static_cast<double>(reg.c) * remaining * (1.0 - remaining));
}

double varX(const AsymptoticRegime& reg, double t) {
  checkTime(t);
  const double ct = static_cast<double>(reg.c) * t;
  return std::exp(-2.0 * ct) * reg.mu * (std::expm1(ct) - reg.mu * ct);
}

NormalApprox normalApproxY(const NetworkConfig& cfg) {
  const AsymptoticRegime reg = regimeOf(cfg);
  const double t = 1.0 - reg.mu;
  const double n = static_cast<double>(cfg.n);
  return NormalApprox{n * gammaFluid(reg, t), n * varX(reg, t)};
}

MeanComparison meanComparison(const AsymptoticRegime& reg) {
  MeanComparison out;
  out.pullMean = reg.mu * (1.0 - std::pow(reg.mu, static_cast<double>(reg.c)));
  out.pushMean = -reg.mu * std::expm1(-static_cast<double>(reg.c) * (1.0 - reg.mu));
  out.gap = out.pullMean - out.pushMean;
  return out;
}

double tauBar(const AsymptoticRegime& reg, double lambda) {
  if (!(lambda > 0.0) || !(lambda < reg.mu)) {
    throw DomainError("hitting level must lie in (0, mu), got " + std::to_string(lambda));
  }
  return -std::log1p(-lambda / reg.mu) / static_cast<double>(reg.c);
}

double hittingVariance(const AsymptoticRegime& reg, double lambda) {
  const double t = tauBar(reg, lambda);
  const double slope = static_cast<double>(reg.c) * (reg.mu - lambda);
  return varX(reg, t) / (slope * slope);
}

double tN(const AsymptoticRegime& reg, std::int64_t n, double C) {
  if (n < 2) throw DomainError("network size must be at least 2");
  if (!(C >= 0.0)) throw DomainError("tail parameter C must be non-negative");
  const double t1 = 1.0 - reg.mu;
  const double drop = C * std::sqrt(varX(reg, t1) / static_cast<double>(n));
  const double gamma1 = gammaFluid(reg, t1);
  if (drop >= gamma1) {
    throw DomainError("C too large for this n: the guard time would not be positive");
  }
  return -std::log((reg.mu - gamma1 + drop) / reg.mu) / static_cast<double>(reg.c);
}

double gaussianTailBound(double C) { return std::erfc(C / std::sqrt(2.0)); }

double normalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

FluidRoundLevels fluidRounds(const AsymptoticRegime& reg, std::int64_t iMax) {
  if (iMax < 0) throw DomainError("iMax must be non-negative");
  FluidRoundLevels out;
  double cum = 0.0;
  const double phi0 = 1.0 - reg.mu;
  for (std::int64_t i = 0; i <= iMax; ++i) {
    const double phi = i == 0 ? phi0 : phi0 + gammaFluid(reg, cum);
    out.phi.push_back(phi);
    if (1.0 - phi < 1e-12) break;
    cum += phi;
  }
  return out;
}

NuBarResult nuBar(const AsymptoticRegime& reg, double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw DomainError("level must lie in (0, 1), got " + std::to_string(lambda));
  }
  double cum = 0.0;
  const double phi0 = 1.0 - reg.mu;
  bool boundary = false;
  for (std::int64_t i = 0; i <= 200; ++i) {
    const double phi = i == 0 ? phi0 : phi0 + gammaFluid(reg, cum);
    if (std::abs(lambda - phi) < 1e-9) boundary = true;
    if (phi >= lambda) return NuBarResult{i, boundary};
    if (1.0 - phi < 1e-12) break;
    cum += phi;
  }
  throw DomainError("level " + std::to_string(lambda) +
                    " is numerically indistinguishable from full coverage");
}

}  // namespace pushpull
