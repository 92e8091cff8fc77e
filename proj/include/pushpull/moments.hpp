#ifndef PUSHPULL_MOMENTS_HPP
#define PUSHPULL_MOMENTS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pushpull/config.hpp"

namespace pushpull {

// Coefficients of the linear recursions satisfied by the walk moments:
//
//   E[S_{l+1}]   = a1 E[S_l] + a0
//   E[S_{l+1}^2] = b2 E[S_l^2] + b1 E[S_l] + b0
//
// For a valid config with n >= 3, 0 <= a1 < 1 and 0 <= b2 < 1: a1 hits 0
// only at the extreme fanout c = n-1, and b2 (whose numerator factors as
// (c-(n-1))(c-(n-2))) exactly at c in {n-2, n-1}.
struct RecursionCoefficients {
  double a0, a1;
  double b0, b1, b2;
};

// Throws DomainError for n < 3: the second-moment coefficients divide
// by n-2.
RecursionCoefficients coefficients(const NetworkConfig& cfg);

// gamma_l = E[S_l] for l = 0..steps, from the closed form
// gamma_l = (n-k)(1 - a1^l). Valid for any n >= 2.
std::vector<double> meanSeries(const NetworkConfig& cfg, std::int64_t steps);

// alpha_l = E[S_l^2] for l = 0..steps by forward recursion (no
// quadratic-cost summation form). Throws DomainError for n < 3.
std::vector<double> secondMomentSeries(const NetworkConfig& cfg, std::int64_t steps);

struct MomentSeries {
  std::vector<double> gamma;  // E[S_l]
  std::vector<double> alpha;  // E[S_l^2]
};

MomentSeries momentSeries(const NetworkConfig& cfg, std::int64_t steps);

// (E[Y], Var(Y)) for the one-round law Y = S_k.
std::pair<double, double> meanVarY(const NetworkConfig& cfg);

}  // namespace pushpull

#endif
