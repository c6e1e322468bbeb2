#include "cubesim/monte_carlo.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cubesim {

ReliabilityReport monte_carlo(const Scenario& scenario_template, const AdmConfig& cfg,
                              int runs, const JitterSpec& jitter) {
    if (runs < 1)
        throw std::domain_error("monte_carlo: runs must be >= 1");
    cfg.validate();
    scenario_template.validate(cfg);

    ReliabilityReport report;
    report.runs = runs;
    report.doors_open_histogram.assign(static_cast<std::size_t>(cfg.n_doors) + 1, 0);

    int full = 0;
    long long attempts = 0;
    for (int run = 0; run < runs; ++run) {
        std::seed_seq seq{static_cast<std::uint64_t>(scenario_template.rng_seed),
                          static_cast<std::uint64_t>(run)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss(0.0, 1.0);

        std::vector<LineThermalParams> params;
        params.reserve(static_cast<std::size_t>(cfg.n_doors));
        for (int i = 0; i < cfg.n_doors; ++i) {
            const double zk = gauss(rng);
            const double zc = gauss(rng);
            const double zm = gauss(rng);
            LineThermalParams p;
            p.conductance_w_per_k =
                std::max(1e-9, cfg.line_conductance_w_per_k * (1.0 + jitter.conductance_rel * zk));
            p.heat_capacity_j_per_k =
                std::max(1e-9, cfg.line_heat_capacity_j_per_k * (1.0 + jitter.heat_capacity_rel * zc));
            p.melt_temp = TemperatureC{cfg.melt_temp.celsius * (1.0 + jitter.melt_temp_rel * zm)};
            params.push_back(p);
        }

        const SimulationResult result = run_scenario(scenario_template, cfg, std::move(params));
        const int open = result.doors_open_count();
        report.doors_open_histogram[static_cast<std::size_t>(open)] += 1;
        if (open == cfg.n_doors) ++full;
        attempts += result.attempts;
    }
    report.full_deploy_probability = static_cast<double>(full) / runs;
    report.mean_attempts = static_cast<double>(attempts) / runs;
    return report;
}

}  // namespace cubesim
