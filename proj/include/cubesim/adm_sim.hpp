#ifndef CUBESIM_ADM_SIM_HPP
#define CUBESIM_ADM_SIM_HPP

#include <cstdint>
#include <queue>
#include <vector>

#include "cubesim/adm.hpp"

namespace cubesim {

struct SimulationResult {
    EventTrace trace;
    Phase final_phase = Phase::Stowed;
    int attempts = 0;
    std::vector<bool> doors_open;
    std::vector<double> cut_time_s;  // NaN for uncut lines
    double end_time_s = 0.0;

    int doors_open_count() const;
    int lines_cut_count() const;
};

// Single deterministic scenario run of the deployment feedback logic:
// health-gated consecutive knife firings, tactile-switch evaluation,
// 15 min / 6 h retry timers, the 24 h forced-burn timer, and fault injection.
// Strictly single-threaded; identical inputs give identical traces.
class DeploymentSimulator {
public:
    DeploymentSimulator(Scenario scenario, AdmConfig cfg,
                        std::vector<LineThermalParams> line_overrides = {});

    SimulationResult run();

    // Protocol-level access for tests.
    Phase phase() const { return phase_; }
    int attempt_count() const { return attempt_count_; }
    const std::vector<MeltLine>& lines() const { return lines_; }
    // Throws std::logic_error if a burn is already active.
    void start_burn(bool forced = false);

private:
    enum class EvKind { InitialAttempt, TimerExpiry, Tc, BurnEnd, FaultActive, Horizon };
    struct Ev {
        double t;
        std::uint64_t seq;
        EvKind kind;
        int a;
    };
    struct EvLater {
        bool operator()(const Ev& x, const Ev& y) const {
            return x.t != y.t ? x.t > y.t : x.seq > y.seq;
        }
    };
    enum class TimerKind { RetryPartial, ReattemptFull, Forced, HealthRecheck };
    struct Timer {
        TimerKind kind;
        double deadline;
        bool live;
    };

    void push(double t, EvKind kind, int a);
    int arm_timer(TimerKind kind, double interval_s);
    void cancel_timers(bool include_forced);
    double timer_interval(TimerKind kind) const;
    const char* timer_name(TimerKind kind) const;

    bool fault_active(FaultKind kind, int a, int b, double t) const;
    bool line_heated(const MeltLine& line, double t) const;
    bool all_lines_cut() const;
    std::vector<bool> switches_now(double t) const;

    void record(const std::string& event, int knife_set = -1, const std::string& note = "");
    void advance_thermals_to(double t);
    void cut_line(int i);
    void end_burn();
    void evaluate_switches();
    void attempt_deployment(TimerKind rearm_kind);
    void handle_tc(TcKind kind);
    void on_timer(int id);
    void on_fault_active(int idx);

    Scenario scenario_;
    AdmConfig cfg_;

    Phase phase_ = Phase::Stowed;
    std::vector<MeltLine> lines_;
    std::vector<bool> doors_open_;
    std::vector<double> cut_time_;
    int next_knife_set_ = 0;
    int active_knife_set_ = -1;
    int attempt_count_ = 0;
    bool forced_timer_armed_ = false;
    int forced_timer_id_ = -1;

    bool burning_ = false;
    int burn_gen_ = 0;
    double burn_deadline_ = 0.0;
    double burn_dt_ = 0.0;

    double sim_time_ = 0.0;
    double last_thermal_t_ = 0.0;
    bool finished_ = false;

    std::uint64_t seq_ = 0;
    std::priority_queue<Ev, std::vector<Ev>, EvLater> queue_;
    std::vector<Timer> timers_;
    EventTrace trace_;
};

SimulationResult run_scenario(const Scenario& scenario, const AdmConfig& cfg,
                              std::vector<LineThermalParams> line_overrides = {});

}  // namespace cubesim

#endif
