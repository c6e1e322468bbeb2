#ifndef CUBESIM_MONTE_CARLO_HPP
#define CUBESIM_MONTE_CARLO_HPP

#include <vector>

#include "cubesim/adm_sim.hpp"

namespace cubesim {

// Relative 1-sigma jitter applied per melt line per run. Per-line variance is
// what produces partial deployments near the thermal threshold; the
// deterministic core never uses it.
struct JitterSpec {
    double conductance_rel = 0.05;
    double heat_capacity_rel = 0.05;
    double melt_temp_rel = 0.05;
};

struct ReliabilityReport {
    int runs = 0;
    double full_deploy_probability = 0.0;
    double mean_attempts = 0.0;
    std::vector<int> doors_open_histogram;  // index = number of doors open
};

// Repeats the scenario with per-line Gaussian jitter on the melt-line thermal
// parameters. Draws depend only on (rng_seed, run index), never on the
// environment, so reliability is reproducible and monotone in ambient
// temperature. Runs execute in run-index order.
ReliabilityReport monte_carlo(const Scenario& scenario_template, const AdmConfig& cfg,
                              int runs, const JitterSpec& jitter);

}  // namespace cubesim

#endif
