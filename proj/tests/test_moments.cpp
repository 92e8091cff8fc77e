#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "pushpull/config.hpp"
#include "pushpull/errors.hpp"
#include "pushpull/exact.hpp"
#include "pushpull/moments.hpp"

using namespace pushpull;

TEST_CASE("recursion coefficients, hand-computed") {
  const RecursionCoefficients a = coefficients({4, 2, 1});
  CHECK(a.a0 == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(a.a1 == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(a.b0 == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(a.b1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a.b2 == doctest::Approx(1.0 / 3).epsilon(1e-14));

  const RecursionCoefficients b = coefficients({5, 2, 2});
  CHECK(b.a0 == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(b.a1 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(b.b0 == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(b.b1 == doctest::Approx(5.0 / 3).epsilon(1e-14));
  CHECK(b.b2 == doctest::Approx(1.0 / 6).epsilon(1e-14));

  CHECK_THROWS_AS(coefficients({2, 1, 1}), DomainError);
}

TEST_CASE("coefficient ranges across fanouts") {
  for (std::int64_t n : {std::int64_t{3}, std::int64_t{10}, std::int64_t{101}}) {
    for (std::int64_t c = 1; c <= n - 1; ++c) {
      const RecursionCoefficients r = coefficients({n, 1, c});
      CHECK(r.a1 >= 0.0);
      CHECK(r.a1 < 1.0);
      CHECK(r.b2 < 1.0);
      if (c <= n - 3) {
        CHECK(r.b2 > 0.0);
      } else {
        // Numerator of b2 factors as (c-(n-1))(c-(n-2)).
        CHECK(r.b2 == doctest::Approx(0.0).epsilon(1e-14));
      }
      if (c == n - 1) CHECK(r.a1 == 0.0);
    }
  }
}

TEST_CASE("mean and second-moment series, hand-computed") {
  const MomentSeries s = momentSeries({4, 2, 1}, 2);
  REQUIRE(s.gamma.size() == 3);
  REQUIRE(s.alpha.size() == 3);
  CHECK(s.gamma[0] == 0.0);
  CHECK(s.alpha[0] == 0.0);
  CHECK(s.gamma[1] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(s.alpha[1] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(s.gamma[2] == doctest::Approx(10.0 / 9).epsilon(1e-14));
  CHECK(s.alpha[2] == doctest::Approx(14.0 / 9).epsilon(1e-14));

  const MomentSeries t = momentSeries({5, 2, 2}, 2);
  CHECK(t.gamma[1] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(t.alpha[1] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(t.gamma[2] == doctest::Approx(2.25).epsilon(1e-14));
  CHECK(t.alpha[2] == doctest::Approx(65.0 / 12).epsilon(1e-13));

  // The mean series alone works down to n = 2.
  const std::vector<double> g2 = meanSeries({2, 1, 1}, 3);
  CHECK(g2[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g2[3] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(secondMomentSeries({2, 1, 1}, 3), DomainError);
}

TEST_CASE("series invariants: monotone mean, nonnegative variance, bounded") {
  const NetworkConfig cases[] = {{4, 2, 1}, {10, 3, 2}, {37, 12, 5}, {200, 60, 7}};
  for (const NetworkConfig& cfg : cases) {
    const MomentSeries s = momentSeries(cfg, 3 * cfg.k);
    for (std::size_t l = 1; l < s.gamma.size(); ++l) {
      CHECK(s.gamma[l] >= s.gamma[l - 1]);
      CHECK(s.gamma[l] <= static_cast<double>(cfg.susceptible()) * (1 + 1e-12));
      CHECK(s.alpha[l] >= s.gamma[l] * s.gamma[l] - 1e-9);
    }
  }
}

TEST_CASE("moments match exact path enumeration") {
  const NetworkConfig cases[] = {{6, 2, 1}, {8, 3, 2}, {12, 5, 3}};
  for (const NetworkConfig& cfg : cases) {
    const std::int64_t maxSteps = 2 * cfg.k;
    const MomentSeries s = momentSeries(cfg, maxSteps);
    for (std::int64_t l = 1; l <= maxSteps; ++l) {
      const Pmf exact = enumerationOracle(cfg, l).toPmf();
      const double m1 = exact.mean();
      const double m2 = exact.secondMoment();
      CHECK(std::fabs(s.gamma[l] - m1) <= 1e-10 * m1);
      CHECK(std::fabs(s.alpha[l] - m2) <= 1e-10 * m2);
    }
  }
}

TEST_CASE("both moments saturate at full coverage") {
  const NetworkConfig cfg{10, 4, 2};
  const std::int64_t limit = 200 * (cfg.n - 1) / cfg.c;
  const MomentSeries s = momentSeries(cfg, limit);
  const double sus = static_cast<double>(cfg.susceptible());
  CHECK(std::fabs(s.gamma.back() - sus) < 1e-6 * sus);
  CHECK(std::fabs(s.alpha.back() - sus * sus) < 1e-6 * sus * sus);
}

TEST_CASE("meanVarY equals the exact one-round distribution") {
  const auto [mean, variance] = meanVarY({4, 2, 1});
  CHECK(mean == doctest::Approx(10.0 / 9).epsilon(1e-14));
  CHECK(variance == doctest::Approx(26.0 / 81).epsilon(1e-13));

  const NetworkConfig cases[] = {{9, 4, 2}, {50, 13, 3}, {120, 40, 7}, {200, 199, 1}};
  for (const NetworkConfig& cfg : cases) {
    const auto [m, v] = meanVarY(cfg);
    const Pmf y = yDistribution(cfg);
    CHECK(std::fabs(m - y.mean()) <= 1e-10 * (1.0 + y.mean()));
    CHECK(std::fabs(v - y.variance()) <= 1e-10 * (1.0 + y.variance()));
  }
}
