#ifndef PUSHPULL_ASYMPTOTICS_HPP
#define PUSHPULL_ASYMPTOTICS_HPP

#include <cstdint>
#include <vector>

#include "pushpull/config.hpp"

namespace pushpull {

// Large-n regime: mu is the limiting uninformed fraction (n-k)/n at
// time 0, c the fanout. Time is measured in selections per node, so one
// full push round spans [0, 1-mu].
struct AsymptoticRegime {
  double mu;
  std::int64_t c;
};

AsymptoticRegime makeRegime(double mu, std::int64_t c);
AsymptoticRegime regimeOf(const NetworkConfig& cfg);

// Fluid limit of the newly-informed fraction: Gamma_t = mu(1 - e^{-ct}).
double gammaFluid(const AsymptoticRegime& reg, double t);

// Diffusion coefficient sqrt(c (mu - Gamma_t)(1 - (mu - Gamma_t))).
double sigmaFluid(const AsymptoticRegime& reg, double t);

// Variance of the centered diffusion at time t:
// Var(X_t) = e^{-2ct} mu (e^{ct} - 1 - mu c t), evaluated through expm1
// so small ct does not cancel.
double varX(const AsymptoticRegime& reg, double t);

// Normal approximation of the one-round law Y for a finite config:
// mean n Gamma_{1-mu}, variance n Var(X_{1-mu}).
struct NormalApprox {
  double mean;
  double variance;
};

NormalApprox normalApproxY(const NetworkConfig& cfg);

// Limiting per-round yields: pull informs mu(1 - mu^c) per round, push
// mu(1 - e^{-c(1-mu)}). The gap is pull minus push, always positive.
struct MeanComparison {
  double pullMean;
  double pushMean;
  double gap;
};

MeanComparison meanComparison(const AsymptoticRegime& reg);

// Fluid hitting time of level lambda: tauBar = -(1/c) log(1 - lambda/mu).
// Requires 0 < lambda < mu.
double tauBar(const AsymptoticRegime& reg, double lambda);

// Asymptotic variance of the centered, sqrt(n)-scaled hitting time:
// v = Var(X_{tauBar}) / (c (mu - lambda))^2.
double hittingVariance(const AsymptoticRegime& reg, double lambda);

// Early-hit guard time: the first-round hit of level Gamma_{1-mu}
// happens before n*tN with probability at most gaussianTailBound(C).
// Throws DomainError when C sqrt(Var(X_{1-mu})/n) >= Gamma_{1-mu}, i.e.
// the guard time would not be positive (C too large for this n).
double tN(const AsymptoticRegime& reg, std::int64_t n, double C);

// sqrt(2/pi) Integral_C^inf e^{-x^2/2} dx = 2(1 - Phi(C)) = erfc(C/sqrt(2)).
double gaussianTailBound(double C);

// Standard normal CDF via the complementary error function.
double normalCdf(double x);

// Fluid informed fractions round by round: phi_0 = 1 - mu and
// phi_i = phi_0 + Gamma(phi_0 + ... + phi_{i-1}). Iteration stops at
// iMax levels or once 1 - phi_i < 1e-12.
struct FluidRoundLevels {
  std::vector<double> phi;
};

FluidRoundLevels fluidRounds(const AsymptoticRegime& reg, std::int64_t iMax = 200);

// Limiting round count nuBar = min{ i : phi_i >= lambda }. The limit
// is ill-defined for levels sitting exactly on a phi_i (finite-n round
// counts then straddle two values); atBoundary flags
// |lambda - phi_i| < 1e-9 so callers can warn.
struct NuBarResult {
  std::int64_t value;
  bool atBoundary;
};

NuBarResult nuBar(const AsymptoticRegime& reg, double lambda);

}  // namespace pushpull

#endif
