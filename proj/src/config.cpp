#include "pushpull/config.hpp"

#include <string>

#include "pushpull/errors.hpp"

namespace pushpull {

NetworkConfig validateConfig(const NetworkConfig& cfg) {
  if (cfg.n < 2) {
    throw ConfigError("network size n must be at least 2, got " + std::to_string(cfg.n));
  }
  if (cfg.k < 1 || cfg.k > cfg.n - 1) {
    throw ConfigError("initially informed count k must be in [1, n-1], got k=" +
                      std::to_string(cfg.k) + " with n=" + std::to_string(cfg.n));
  }
  if (cfg.c < 1 || cfg.c > cfg.n - 1) {
    throw ConfigError("fanout c must be in [1, n-1], got c=" + std::to_string(cfg.c) +
                      " with n=" + std::to_string(cfg.n));
  }
  return cfg;
}

}  // namespace pushpull
