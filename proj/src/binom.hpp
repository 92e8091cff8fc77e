#ifndef PUSHPULL_SRC_BINOM_HPP
#define PUSHPULL_SRC_BINOM_HPP

#include <cmath>
#include <cstdint>

namespace pushpull::detail {

// C(a, b) as an exact 64-bit integer. Valid for 0 <= a <= 64 where
// every binomial coefficient fits (C(64, 32) < 2^63).
inline std::int64_t binomSmall(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (std::int64_t t = 1; t <= b; ++t) {
    r = r * static_cast<unsigned __int128>(a - b + t) / static_cast<unsigned __int128>(t);
  }
  return static_cast<std::int64_t>(r);
}

// log C(a, b) via log-gamma differences; used to seed hypergeometric
// rows when exact 64-bit arithmetic no longer applies.
inline double logBinomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return -HUGE_VAL;
  return std::lgamma(static_cast<double>(a) + 1.0) -
         std::lgamma(static_cast<double>(b) + 1.0) -
         std::lgamma(static_cast<double>(a - b) + 1.0);
}

}  // namespace pushpull::detail

#endif
