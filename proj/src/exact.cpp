#include "pushpull/exact.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binom.hpp"
#include "pushpull/errors.hpp"
#include "pushpull/model.hpp"

namespace pushpull {

namespace {

constexpr std::int64_t kStirlingOracleMaxN = 200;
constexpr std::int64_t kEnumerationMaxN = 30;

BigInt bigBinomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (std::int64_t t = 1; t <= b; ++t) {
    r *= a - b + t;
    r /= t;
  }
  return r;
}

BigInt bigPow(BigInt base, std::int64_t e) {
  BigInt r = 1;  // covers 0^0 = 1, needed for the k1 = k term at k = 1
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigInt bigFactorial(std::int64_t a) {
  BigInt r = 1;
  for (std::int64_t t = 2; t <= a; ++t) r *= t;
  return r;
}

// Stirling numbers of the second kind, S[a][b] for a, b <= 199, built
// once on first use and read-only afterwards (magic-static init is
// thread-safe).
const std::vector<std::vector<BigInt>>& stirlingTable() {
  static const std::vector<std::vector<BigInt>> table = [] {
    const std::size_t m = static_cast<std::size_t>(kStirlingOracleMaxN);
    std::vector<std::vector<BigInt>> t(m, std::vector<BigInt>(m, BigInt(0)));
    t[0][0] = 1;
    for (std::size_t a = 1; a < m; ++a) {
      for (std::size_t b = 1; b <= a; ++b) {
        t[a][b] = BigInt(b) * t[a - 1][b] + t[a - 1][b - 1];
      }
    }
    return t;
  }();
  return table;
}

double rationalToDouble(const BigRational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::msb;
  using boost::multiprecision::numerator;
  BigInt num = numerator(r);
  if (num == 0) return 0.0;
  BigInt den = denominator(r);
  // Shift so the integer quotient keeps ~64 significant bits, then put
  // the scale back with ldexp; direct double conversion would overflow
  // for denominators like (n-1)^k.
  const std::int64_t shift =
      64 + static_cast<std::int64_t>(msb(den)) - static_cast<std::int64_t>(msb(num));
  BigInt scaled = shift >= 0 ? BigInt(num << shift) : BigInt(num >> -shift);
  scaled /= den;
  return std::ldexp(scaled.convert_to<double>(), static_cast<int>(-shift));
}

}  // namespace

RationalPmf::RationalPmf(std::int64_t offset, std::vector<BigRational> probs)
    : offset_(offset), probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("rational pmf must have at least one entry");
  BigRational sum = 0;
  for (const auto& p : probs_) {
    if (p < 0) throw DomainError("rational pmf entries must be non-negative");
    sum += p;
  }
  if (sum != 1) throw DomainError("rational pmf mass must equal 1 exactly");
  std::size_t lo = 0;
  std::size_t hi = probs_.size();
  while (lo < hi && probs_[lo] == 0) ++lo;
  while (hi > lo && probs_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < probs_.size()) {
    probs_ = std::vector<BigRational>(probs_.begin() + static_cast<std::ptrdiff_t>(lo),
                                      probs_.begin() + static_cast<std::ptrdiff_t>(hi));
    offset_ += static_cast<std::int64_t>(lo);
  }
}

BigRational RationalPmf::at(std::int64_t v) const {
  if (v < minValue() || v > maxValue()) return 0;
  return probs_[static_cast<std::size_t>(v - offset_)];
}

Pmf RationalPmf::toPmf() const {
  std::vector<double> out;
  out.reserve(probs_.size());
  for (const auto& p : probs_) out.push_back(rationalToDouble(p));
  return Pmf(offset_, std::move(out));
}

TransitionRow transitionRow(const NetworkConfig& cfg, std::int64_t i) {
  Pmf row = stepPmf(cfg, i);
  return TransitionRow{i, row.minValue(), row.probs()};
}

Pmf walkDistribution(const NetworkConfig& cfg, std::int64_t steps) {
  validateConfig(cfg);
  if (steps < 0) throw DomainError("step count must be non-negative");
  const std::int64_t states = cfg.n - cfg.k + 1;
  if (steps == 0) return Pmf::pointMass(0);

  StepKernel kernel(cfg);
  std::vector<double> cur(static_cast<std::size_t>(states), 0.0);
  std::vector<double> next(static_cast<std::size_t>(states), 0.0);
  cur[0] = 1.0;
  std::int64_t lo = 0, hi = 0;  // current support bounds

  for (std::int64_t l = 0; l < steps; ++l) {
    std::int64_t nlo = states, nhi = -1;
    for (std::int64_t i = lo; i <= hi; ++i) {
      const double mass = cur[static_cast<std::size_t>(i)];
      if (mass == 0.0) continue;
      const auto row = kernel.row(i);
      const std::int64_t base = i + kernel.minStep(i);
      for (std::size_t idx = 0; idx < row.size(); ++idx) {
        next[static_cast<std::size_t>(base) + idx] += mass * row[idx];
      }
      nlo = std::min(nlo, base);
      nhi = std::max(nhi, base + static_cast<std::int64_t>(row.size()) - 1);
    }
    for (std::int64_t i = lo; i <= hi; ++i) cur[static_cast<std::size_t>(i)] = 0.0;
    std::swap(cur, next);
    lo = nlo;
    hi = nhi;
  }

  std::vector<double> probs(cur.begin() + lo, cur.begin() + hi + 1);
  double sum = 0.0;
  for (double& p : probs) {
    if (p < 1e-300) p = 0.0;
    sum += p;
  }
  for (double& p : probs) p /= sum;
  return Pmf(lo, std::move(probs));
}

Pmf yDistribution(const NetworkConfig& cfg) { return walkDistribution(cfg, cfg.k); }

RationalPmf stirlingOracle(std::int64_t n, std::int64_t k) {
  validateConfig(NetworkConfig{n, k, 1});
  if (n > kStirlingOracleMaxN) {
    throw ResourceError("closed-form oracle is limited to n <= " +
                        std::to_string(kStirlingOracleMaxN) +
                        " (big-integer workload), got n = " + std::to_string(n));
  }
  const auto& S = stirlingTable();
  const std::int64_t iMax = std::min(k, n - k);
  const BigInt denom = bigPow(BigInt(n - 1), k);
  std::vector<BigRational> probs;
  probs.reserve(static_cast<std::size_t>(iMax) + 1);
  for (std::int64_t i = 0; i <= iMax; ++i) {
    BigInt inner = 0;
    for (std::int64_t k1 = i; k1 <= k; ++k1) {
      inner += bigBinomial(k, k1) * bigPow(BigInt(k - 1), k - k1) *
               S[static_cast<std::size_t>(k1)][static_cast<std::size_t>(i)];
    }
    BigInt numer = bigBinomial(n - k, i) * bigFactorial(i) * inner;
    probs.emplace_back(numer, denom);
  }
  return RationalPmf(0, std::move(probs));
}

Pmf pullDistribution(const NetworkConfig& cfg) {
  validateConfig(cfg);
  const std::int64_t m = cfg.n - cfg.k;
  // Probability that one uninformed node contacts no informed node:
  // all c contacts fall among the other n-k-1 uninformed ones.
  double p = 1.0;
  for (std::int64_t t = 0; t < cfg.c; ++t) {
    if (cfg.n - cfg.k - 1 - t <= 0) {
      p = 0.0;
      break;
    }
    p *= static_cast<double>(cfg.n - cfg.k - 1 - t) / static_cast<double>(cfg.n - 1 - t);
  }
  if (p == 0.0 || p < 1e-250) return Pmf::pointMass(m);
  const double q = 1.0 - p;

  // Binomial(m, q) built outward from the mode, so the seed value is
  // never in an underflowed tail.
  const std::int64_t mode = std::min<std::int64_t>(m, static_cast<std::int64_t>((m + 1) * q));
  std::vector<double> probs(static_cast<std::size_t>(m) + 1, 0.0);
  // Skip the endpoint terms when their count is zero: q or 1-q may have
  // rounded to the boundary, and 0 * log(0) would poison the seed.
  double logSeed = detail::logBinomial(m, mode);
  if (mode > 0) logSeed += static_cast<double>(mode) * std::log(q);
  if (mode < m) logSeed += static_cast<double>(m - mode) * std::log1p(-q);
  probs[static_cast<std::size_t>(mode)] = std::exp(logSeed);
  for (std::int64_t j = mode; j < m; ++j) {
    const double r = (static_cast<double>(m - j) / static_cast<double>(j + 1)) * (q / p);
    probs[static_cast<std::size_t>(j) + 1] = probs[static_cast<std::size_t>(j)] * r;
  }
  for (std::int64_t j = mode; j > 0; --j) {
    const double r = (static_cast<double>(j) / static_cast<double>(m - j + 1)) * (p / q);
    probs[static_cast<std::size_t>(j) - 1] = probs[static_cast<std::size_t>(j)] * r;
  }
  double sum = 0.0;
  for (double& v : probs) {
    if (v < 1e-300) v = 0.0;
    sum += v;
  }
  for (double& v : probs) v /= sum;
  return Pmf(0, std::move(probs));
}

RationalPmf enumerationOracle(const NetworkConfig& cfg, std::int64_t steps) {
  validateConfig(cfg);
  if (steps < 0) throw DomainError("step count must be non-negative");
  if (cfg.n > kEnumerationMaxN) {
    throw ResourceError("exhaustive enumeration is limited to n <= " +
                        std::to_string(kEnumerationMaxN) + ", got n = " +
                        std::to_string(cfg.n));
  }
  const std::int64_t n = cfg.n, k = cfg.k, c = cfg.c;
  const std::int64_t states = n - k + 1;
  const BigInt stepDenom = bigBinomial(n - 1, c);

  // Numerators over the common denominator C(n-1, c)^step. The step
  // weights w(i, j) = C(k-1+i, c-j) C(n-k-i, j) sum to C(n-1, c) by the
  // Vandermonde identity, so no reduction is ever needed mid-flight.
  std::vector<BigInt> cur(static_cast<std::size_t>(states), BigInt(0));
  std::vector<BigInt> next(static_cast<std::size_t>(states), BigInt(0));
  cur[0] = 1;
  for (std::int64_t l = 0; l < steps; ++l) {
    for (auto& v : next) v = 0;
    for (std::int64_t i = 0; i < states; ++i) {
      if (cur[static_cast<std::size_t>(i)] == 0) continue;
      const std::int64_t jLo = std::max<std::int64_t>(0, c - (k + i - 1));
      const std::int64_t jHi = std::min<std::int64_t>(c, n - k - i);
      for (std::int64_t j = jLo; j <= jHi; ++j) {
        const BigInt w = bigBinomial(k - 1 + i, c - j) * bigBinomial(n - k - i, j);
        next[static_cast<std::size_t>(i + j)] += cur[static_cast<std::size_t>(i)] * w;
      }
    }
    std::swap(cur, next);
  }

  const BigInt denom = bigPow(stepDenom, steps);
  std::vector<BigRational> probs;
  probs.reserve(cur.size());
  for (const auto& numer : cur) probs.emplace_back(numer, denom);
  return RationalPmf(0, std::move(probs));
}

}  // namespace pushpull
