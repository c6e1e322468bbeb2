#include "cubesim/adm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cubesim {

void AdmConfig::validate() const {
    if (n_doors <= 0)
        throw std::domain_error("AdmConfig: n_doors must be positive");
    if (knife_sets < 2)
        throw std::domain_error("AdmConfig: knife_sets must be >= 2 (redundancy is structural)");
    if (resistors_per_knife <= 0)
        throw std::domain_error("AdmConfig: resistors_per_knife must be positive");
    if (!(resistor_ohms > 0.0))
        throw std::domain_error("AdmConfig: resistor_ohms must be positive");
    if (!(knife_power_w(*this) > 0.0))
        throw std::domain_error("AdmConfig: burn power V^2/R must be positive");
    if (!(retry_partial < reattempt_full && reattempt_full < forced_burn_timer))
        throw std::domain_error("AdmConfig: require retry_partial < reattempt_full < forced_burn_timer");
    if (!(burn_max.secs > 0.0))
        throw std::domain_error("AdmConfig: burn_max must be positive");
    if (!(line_conductance_w_per_k > 0.0) || !(line_heat_capacity_j_per_k > 0.0))
        throw std::domain_error("AdmConfig: thermal parameters must be positive");
}

double knife_power_w(const AdmConfig& cfg) {
    if (!(cfg.resistor_ohms > 0.0))
        throw std::domain_error("knife_power_w: resistor_ohms must be positive");
    return cfg.supply_volts * cfg.supply_volts / cfg.resistor_ohms;
}

MeltLine make_melt_line(int id, const AdmConfig& cfg, TemperatureC initial) {
    MeltLine line;
    line.id = id;
    line.temp = initial;
    // Default routing: resistor id % resistors_per_knife on every knife set.
    line.resistor_of_set.assign(static_cast<std::size_t>(cfg.knife_sets),
                                id % cfg.resistors_per_knife);
    line.params = LineThermalParams{cfg.line_conductance_w_per_k,
                                    cfg.line_heat_capacity_j_per_k, cfg.melt_temp};
    return line;
}

MeltLine line_temp_step(MeltLine line, bool heated, const AdmConfig& cfg,
                        TemperatureC ambient, Duration dt) {
    if (line.cut)
        throw std::logic_error("line_temp_step: line is already cut");
    if (!(dt.secs > 0.0))
        throw std::domain_error("line_temp_step: dt must be positive");
    const double k = line.params.conductance_w_per_k;
    const double c = line.params.heat_capacity_j_per_k;
    const double power = heated ? knife_power_w(cfg) : 0.0;
    const double tau = c / k;
    // tau/50 keeps the explicit-Euler cut-time error well under the 2%
    // accuracy budget (tau/20 is the outer bound).
    const double dt_max = tau / 50.0;
    const int n_sub = std::max(1, static_cast<int>(std::ceil(dt.secs / dt_max)));
    const double h = dt.secs / n_sub;
    double temp = line.temp.celsius;
    for (int i = 0; i < n_sub; ++i) {
        temp += h * (power - k * (temp - ambient.celsius)) / c;
        if (temp >= line.params.melt_temp.celsius) {
            line.temp = TemperatureC{temp};
            line.cut = true;
            return line;
        }
    }
    line.temp = TemperatureC{temp};
    return line;
}

std::string to_string(Phase p) {
    switch (p) {
        case Phase::Stowed: return "Stowed";
        case Phase::HealthCheck: return "HealthCheck";
        case Phase::Burning: return "Burning";
        case Phase::Evaluate: return "Evaluate";
        case Phase::Partial: return "Partial";
        case Phase::DeployedUnconfirmed: return "DeployedUnconfirmed";
        case Phase::DeployedConfirmed: return "DeployedConfirmed";
    }
    return "?";
}

std::string to_string(FaultKind k) {
    switch (k) {
        case FaultKind::DoorStuck: return "door-stuck";
        case FaultKind::ResistorOpen: return "resistor-open";
        case FaultKind::SwitchStuckClosed: return "switch-stuck-closed";
        case FaultKind::SwitchStuckOpen: return "switch-stuck-open";
        case FaultKind::LinePreCut: return "line-pre-cut";
    }
    return "?";
}

void Scenario::validate(const AdmConfig& cfg) const {
    if (!(horizon.secs > 0.0))
        throw std::domain_error("Scenario: horizon must be positive");
    for (std::size_t i = 1; i < battery_timeline.size(); ++i)
        if (battery_timeline[i].time < battery_timeline[i - 1].time)
            throw std::domain_error("Scenario: battery timeline must be non-decreasing in time");
    for (std::size_t i = 1; i < tc_schedule.size(); ++i)
        if (tc_schedule[i].time < tc_schedule[i - 1].time)
            throw std::domain_error("Scenario: telecommand schedule must be non-decreasing in time");
    for (const FaultSpec& f : faults) {
        switch (f.kind) {
            case FaultKind::DoorStuck:
            case FaultKind::SwitchStuckClosed:
            case FaultKind::SwitchStuckOpen:
            case FaultKind::LinePreCut:
                if (f.a < 0 || f.a >= cfg.n_doors)
                    throw std::domain_error("Scenario: fault door/line index out of range");
                break;
            case FaultKind::ResistorOpen:
                if (f.a < 0 || f.a >= cfg.knife_sets || f.b < 0 || f.b >= cfg.resistors_per_knife)
                    throw std::domain_error("Scenario: fault resistor index out of range");
                break;
        }
    }
}

double battery_voltage_at(const Scenario& scenario, Duration t) {
    double volts = 0.0;
    for (const BatteryPoint& p : scenario.battery_timeline) {
        if (p.time > t) break;
        volts = p.volts;
    }
    return volts;
}

bool health_check(const Scenario& scenario, const AdmConfig& cfg, Duration t) {
    return battery_voltage_at(scenario, t) >= cfg.health_min_battery_v;
}

}  // namespace cubesim
