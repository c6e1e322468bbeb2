#include <doctest.h>

#include "cubesim/monte_carlo.hpp"

using namespace cubesim;

namespace {
const AdmConfig kCfg{};

Scenario mc_scenario(double ambient_c) {
    Scenario s;
    s.ambient = TemperatureC{ambient_c};
    s.horizon = Duration::seconds(1800.0);  // two attempts
    s.rng_seed = 7;
    return s;
}

JitterSpec zero_jitter() { return JitterSpec{0.0, 0.0, 0.0}; }
}  // namespace

TEST_CASE("zero jitter replicates the deterministic outcome") {
    const ReliabilityReport warm = monte_carlo(mc_scenario(20.0), kCfg, 50, zero_jitter());
    CHECK(warm.full_deploy_probability == 1.0);
    CHECK(warm.mean_attempts == 1.0);
    CHECK(warm.doors_open_histogram[4] == 50);

    const ReliabilityReport cold = monte_carlo(mc_scenario(-25.5), kCfg, 50, zero_jitter());
    CHECK(cold.full_deploy_probability == 0.0);
    CHECK(cold.doors_open_histogram[0] == 50);
}

TEST_CASE("same seed reproduces the report exactly") {
    const ReliabilityReport a = monte_carlo(mc_scenario(-25.5), kCfg, 200, JitterSpec{});
    const ReliabilityReport b = monte_carlo(mc_scenario(-25.5), kCfg, 200, JitterSpec{});
    CHECK(a.full_deploy_probability == b.full_deploy_probability);
    CHECK(a.mean_attempts == b.mean_attempts);
    CHECK(a.doors_open_histogram == b.doors_open_histogram);
}

TEST_CASE("5% jitter produces partial outcomes near the thermal threshold") {
    const ReliabilityReport r = monte_carlo(mc_scenario(-25.5), kCfg, 500, JitterSpec{});
    int partial = 0;
    for (std::size_t i = 1; i + 1 < r.doors_open_histogram.size(); ++i)
        partial += r.doors_open_histogram[i];
    CHECK(partial > 0);
    CHECK(r.full_deploy_probability < 1.0);
}

TEST_CASE("reliability is monotone in ambient temperature at fixed seed") {
    double prev = -1.0;
    for (double ambient = -30.0; ambient <= 60.0; ambient += 5.0) {
        const ReliabilityReport r = monte_carlo(mc_scenario(ambient), kCfg, 200, JitterSpec{});
        CHECK(r.full_deploy_probability >= prev);
        prev = r.full_deploy_probability;
    }
    CHECK(monte_carlo(mc_scenario(-15.0), kCfg, 500, JitterSpec{}).full_deploy_probability >=
          monte_carlo(mc_scenario(-25.5), kCfg, 500, JitterSpec{}).full_deploy_probability);
}

TEST_CASE("histogram accounts for every run") {
    const ReliabilityReport r = monte_carlo(mc_scenario(-20.0), kCfg, 123, JitterSpec{});
    int total = 0;
    for (int n : r.doors_open_histogram) total += n;
    CHECK(total == 123);
    CHECK(r.runs == 123);
}

TEST_CASE("run count must be positive") {
    CHECK_THROWS_AS(monte_carlo(mc_scenario(20.0), kCfg, 0, JitterSpec{}), std::domain_error);
}
