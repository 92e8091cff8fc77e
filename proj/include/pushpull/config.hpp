#ifndef PUSHPULL_CONFIG_HPP
#define PUSHPULL_CONFIG_HPP

#include <cstdint>

namespace pushpull {

// Fully connected network with n nodes, k of them initially informed,
// and fanout c (each informed node contacts c distinct peers per
// selection; each uninformed node contacts c distinct peers per pull
// round).
struct NetworkConfig {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t c = 1;

  std::int64_t susceptible() const { return n - k; }
};

// Validates 2 <= n, 1 <= k <= n-1, 1 <= c <= n-1 and returns the
// config unchanged. Throws ConfigError otherwise.
NetworkConfig validateConfig(const NetworkConfig& cfg);

}  // namespace pushpull

#endif
