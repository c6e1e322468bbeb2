#ifndef CUBESIM_ADM_HPP
#define CUBESIM_ADM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cubesim/quantities.hpp"

namespace cubesim {

// Static parameters of the antenna deployment mechanism. Defaults model the
// flight design: four doors restrained by polymer melt lines, two redundant
// thermal knives (two 6.8 Ohm resistors each, 5 V supply), and the
// 15 min / 6 h / 24 h retry timers of the deployment feedback logic.
struct AdmConfig {
    int n_doors = 4;
    int knife_sets = 2;
    int resistors_per_knife = 2;
    double resistor_ohms = 6.8;
    double supply_volts = 5.0;
    Duration burn_max = Duration::seconds(30.0);
    Duration retry_partial = Duration::minutes(15.0);
    Duration reattempt_full = Duration::hours(6.0);
    Duration forced_burn_timer = Duration::hours(24.0);
    TemperatureC melt_temp{145.0};
    // Lumped first-order melt-line node, calibrated so the heated steady
    // state T_amb + P/k crosses melt_temp between -25.5 and -15 degC and the
    // cut time at 20 degC is about 5 s.
    double line_conductance_w_per_k = 0.0225;
    double line_heat_capacity_j_per_k = 0.078;
    double health_min_battery_v = 7.0;

    void validate() const;
};

// Electrical power dissipated in one burner resistor, V^2/R.
double knife_power_w(const AdmConfig& cfg);

struct LineThermalParams {
    double conductance_w_per_k;
    double heat_capacity_j_per_k;
    TemperatureC melt_temp;

    double time_constant_s() const { return heat_capacity_j_per_k / conductance_w_per_k; }
};

struct MeltLine {
    int id = 0;
    TemperatureC temp;
    bool cut = false;
    // Resistor index this line is routed through, per knife set. Every knife
    // set heats every line through exactly one of its resistors.
    std::vector<int> resistor_of_set;
    LineThermalParams params{};
};

MeltLine make_melt_line(int id, const AdmConfig& cfg, TemperatureC initial);

// Advances the line's lumped thermal node by dt:
//   dT/dt = (P*[heated] - k*(T - T_ambient)) / C
// integrated with explicit sub-steps of at most tau/20 (tau = C/k). The line
// is marked cut the first sub-step its temperature reaches melt_temp; further
// evolution stops there.
MeltLine line_temp_step(MeltLine line, bool heated, const AdmConfig& cfg,
                        TemperatureC ambient, Duration dt);

enum class Phase {
    Stowed,
    HealthCheck,
    Burning,
    Evaluate,
    Partial,
    DeployedUnconfirmed,
    DeployedConfirmed,
};

std::string to_string(Phase p);

enum class TcKind { Confirm, OverrideForcedTimer };

struct TcEvent {
    Duration time;
    TcKind kind = TcKind::Confirm;
};

enum class FaultKind {
    DoorStuck,          // a = door
    ResistorOpen,       // a = knife set, b = resistor
    SwitchStuckClosed,  // a = door
    SwitchStuckOpen,    // a = door
    LinePreCut,         // a = line
};

std::string to_string(FaultKind k);

struct FaultSpec {
    FaultKind kind = FaultKind::DoorStuck;
    int a = 0;
    int b = 0;
    Duration active_from;
};

struct BatteryPoint {
    Duration time;
    double volts = 0.0;
};

struct Scenario {
    TemperatureC ambient{20.0};
    std::vector<BatteryPoint> battery_timeline{{Duration::seconds(0.0), 8.0}};
    std::vector<TcEvent> tc_schedule;
    std::vector<FaultSpec> faults;
    std::uint64_t rng_seed = 0;
    Duration horizon = Duration::hours(48.0);

    void validate(const AdmConfig& cfg) const;
};

// Battery voltage at time t (step interpolation; 0 V before the first point).
double battery_voltage_at(const Scenario& scenario, Duration t);

// Health gate ahead of any non-forced burn attempt.
bool health_check(const Scenario& scenario, const AdmConfig& cfg, Duration t);

struct TraceRecord {
    double time_s = 0.0;
    Phase phase = Phase::Stowed;
    std::string event;
    int knife_set = -1;  // -1 when no knife set is involved
    std::vector<double> line_temps;
    std::vector<bool> switches;
    std::string note;
};

struct EventTrace {
    std::vector<TraceRecord> records;
};

}  // namespace cubesim

#endif
