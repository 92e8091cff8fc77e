#include "pushpull/rounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "pushpull/errors.hpp"
#include "pushpull/exact.hpp"

namespace pushpull {

namespace {

void checkLambda(double lambda) {
  if (!(lambda > 0.0) || lambda > 1.0) {
    throw DomainError("level must lie in (0, 1], got " + std::to_string(lambda));
  }
}

// One-round law of the newly informed count when j nodes are currently
// informed. Rows are cached per j because the downward sweep and the
// chain both revisit states.
class KernelCache {
 public:
  KernelCache(const NetworkConfig& cfg, Algorithm algo) : cfg_(cfg), algo_(algo) {}

  const Pmf& at(std::int64_t j) {
    auto it = cache_.find(j);
    if (it != cache_.end()) return it->second;
    Pmf kernel = compute(j);
    return cache_.emplace(j, std::move(kernel)).first->second;
  }

 private:
  Pmf compute(std::int64_t j) const {
    if (j >= cfg_.n) return Pmf::pointMass(0);
    const NetworkConfig state{cfg_.n, j, cfg_.c};
    return algo_ == Algorithm::push ? yDistribution(state) : pullDistribution(state);
  }

  NetworkConfig cfg_;
  Algorithm algo_;
  std::unordered_map<std::int64_t, Pmf> cache_;
};

double sweep(const NetworkConfig& cfg, const LevelTarget& level, KernelCache& kernels) {
  if (level.target <= cfg.k) return 0.0;
  // rounds[j - k] = expected rounds from j informed nodes; states at or
  // above the target contribute 0 and are simply not stored.
  std::vector<double> rounds(static_cast<std::size_t>(level.target - cfg.k), 0.0);
  for (std::int64_t j = level.target - 1; j >= cfg.k; --j) {
    const Pmf& y = kernels.at(j);
    const double stay = y.at(0);
    if (!(stay < 1.0)) {
      throw DegenerateError("state " + std::to_string(j) +
                            " cannot make progress toward the level target");
    }
    double acc = 1.0;
    const std::int64_t iHi = std::min<std::int64_t>(y.maxValue(), level.target - j - 1);
    for (std::int64_t i = std::max<std::int64_t>(1, y.minValue()); i <= iHi; ++i) {
      acc += rounds[static_cast<std::size_t>(j + i - cfg.k)] * y.at(i);
    }
    rounds[static_cast<std::size_t>(j - cfg.k)] = acc / (1.0 - stay);
  }
  return rounds[0];
}

}  // namespace

const char* algorithmName(Algorithm a) { return a == Algorithm::push ? "push" : "pull"; }

LevelTarget LevelTarget::resolve(std::int64_t n, double lambda) {
  checkLambda(lambda);
  LevelTarget t;
  t.lambda = lambda;
  t.target = static_cast<std::int64_t>(std::ceil(lambda * static_cast<double>(n) - 1e-9));
  if (t.target < 1) t.target = 1;
  return t;
}

Pmf roundChainDistribution(const NetworkConfig& cfg, std::int64_t rounds, Algorithm algo) {
  validateConfig(cfg);
  if (rounds < 0) throw DomainError("round count must be non-negative");
  KernelCache kernels(cfg, algo);

  std::vector<double> cur(static_cast<std::size_t>(cfg.n + 1), 0.0);
  std::vector<double> next(static_cast<std::size_t>(cfg.n + 1), 0.0);
  cur[static_cast<std::size_t>(cfg.k)] = 1.0;
  std::int64_t lo = cfg.k, hi = cfg.k;

  for (std::int64_t m = 0; m < rounds; ++m) {
    std::int64_t nlo = cfg.n + 1, nhi = -1;
    for (std::int64_t j = lo; j <= hi; ++j) {
      const double mass = cur[static_cast<std::size_t>(j)];
      if (mass == 0.0) continue;
      const Pmf& y = kernels.at(j);
      for (std::int64_t i = y.minValue(); i <= y.maxValue(); ++i) {
        next[static_cast<std::size_t>(j + i)] += mass * y.at(i);
      }
      nlo = std::min(nlo, j + y.minValue());
      nhi = std::max(nhi, j + y.maxValue());
    }
    for (std::int64_t j = lo; j <= hi; ++j) cur[static_cast<std::size_t>(j)] = 0.0;
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

double expectedRoundsToLevel(const NetworkConfig& cfg, double lambda, Algorithm algo) {
  validateConfig(cfg);
  KernelCache kernels(cfg, algo);
  return sweep(cfg, LevelTarget::resolve(cfg.n, lambda), kernels);
}

std::vector<double> expectedRoundsGrid(const NetworkConfig& cfg,
                                       std::span<const double> lambdas, Algorithm algo) {
  validateConfig(cfg);
  KernelCache kernels(cfg, algo);
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    out.push_back(sweep(cfg, LevelTarget::resolve(cfg.n, lambda), kernels));
  }
  return out;
}

RoundCountDistribution roundCountDistribution(const NetworkConfig& cfg, double lambda,
                                              std::int64_t maxRounds, Algorithm algo) {
  validateConfig(cfg);
  if (maxRounds < 0) throw DomainError("maxRounds must be non-negative");
  const LevelTarget level = LevelTarget::resolve(cfg.n, lambda);

  RoundCountDistribution out;
  out.probs.assign(static_cast<std::size_t>(maxRounds) + 1, 0.0);
  if (level.target <= cfg.k) {
    out.probs[0] = 1.0;
    return out;
  }

  KernelCache kernels(cfg, algo);
  // Mass still below the target, by informed count; paths are absorbed
  // the round they reach the target.
  std::vector<double> below(static_cast<std::size_t>(level.target), 0.0);
  below[static_cast<std::size_t>(cfg.k)] = 1.0;
  std::int64_t lo = cfg.k, hi = cfg.k;

  for (std::int64_t m = 1; m <= maxRounds; ++m) {
    std::vector<double> nextBelow(static_cast<std::size_t>(level.target), 0.0);
    double absorbed = 0.0;
    std::int64_t nlo = level.target, nhi = -1;
    for (std::int64_t j = lo; j <= hi; ++j) {
      const double mass = below[static_cast<std::size_t>(j)];
      if (mass == 0.0) continue;
      const Pmf& y = kernels.at(j);
      for (std::int64_t i = y.minValue(); i <= y.maxValue(); ++i) {
        const std::int64_t to = j + i;
        const double p = mass * y.at(i);
        if (to >= level.target) {
          absorbed += p;
        } else {
          nextBelow[static_cast<std::size_t>(to)] += p;
          nlo = std::min(nlo, to);
          nhi = std::max(nhi, to);
        }
      }
    }
    out.probs[static_cast<std::size_t>(m)] = absorbed;
    below = std::move(nextBelow);
    if (nhi < 0) return out;  // everything absorbed, residual 0
    lo = nlo;
    hi = nhi;
  }
  for (std::int64_t j = lo; j <= hi; ++j) {
    out.residualBeyondMax += below[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace pushpull
