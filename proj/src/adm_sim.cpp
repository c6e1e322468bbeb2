#include "cubesim/adm_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace cubesim {

namespace {

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", s);
    return buf;
}

}  // namespace

int SimulationResult::doors_open_count() const {
    return static_cast<int>(std::count(doors_open.begin(), doors_open.end(), true));
}

int SimulationResult::lines_cut_count() const {
    int n = 0;
    for (double t : cut_time_s)
        if (!std::isnan(t)) ++n;
    return n;
}

DeploymentSimulator::DeploymentSimulator(Scenario scenario, AdmConfig cfg,
                                         std::vector<LineThermalParams> line_overrides)
    : scenario_(std::move(scenario)), cfg_(std::move(cfg)) {
    cfg_.validate();
    scenario_.validate(cfg_);
    if (!line_overrides.empty() &&
        line_overrides.size() != static_cast<std::size_t>(cfg_.n_doors))
        throw std::invalid_argument("DeploymentSimulator: need one thermal override per line");

    lines_.reserve(static_cast<std::size_t>(cfg_.n_doors));
    for (int i = 0; i < cfg_.n_doors; ++i) {
        MeltLine line = make_melt_line(i, cfg_, scenario_.ambient);
        if (!line_overrides.empty())
            line.params = line_overrides[static_cast<std::size_t>(i)];
        lines_.push_back(std::move(line));
    }
    doors_open_.assign(static_cast<std::size_t>(cfg_.n_doors), false);
    cut_time_.assign(static_cast<std::size_t>(cfg_.n_doors),
                     std::numeric_limits<double>::quiet_NaN());
}

void DeploymentSimulator::push(double t, EvKind kind, int a) {
    queue_.push(Ev{t, seq_++, kind, a});
}

double DeploymentSimulator::timer_interval(TimerKind kind) const {
    switch (kind) {
        case TimerKind::RetryPartial: return cfg_.retry_partial.secs;
        case TimerKind::ReattemptFull: return cfg_.reattempt_full.secs;
        case TimerKind::Forced: return cfg_.forced_burn_timer.secs;
        case TimerKind::HealthRecheck: return cfg_.retry_partial.secs;
    }
    return 0.0;
}

const char* DeploymentSimulator::timer_name(TimerKind kind) const {
    switch (kind) {
        case TimerKind::RetryPartial: return "retry_partial";
        case TimerKind::ReattemptFull: return "reattempt_full";
        case TimerKind::Forced: return "forced_burn";
        case TimerKind::HealthRecheck: return "health_recheck";
    }
    return "?";
}

int DeploymentSimulator::arm_timer(TimerKind kind, double interval_s) {
    const int id = static_cast<int>(timers_.size());
    const double deadline = sim_time_ + interval_s;
    timers_.push_back(Timer{kind, deadline, true});
    push(deadline, EvKind::TimerExpiry, id);
    record("timer_armed", -1,
           std::string(timer_name(kind)) + " at t=" + fmt_seconds(deadline));
    return id;
}

void DeploymentSimulator::cancel_timers(bool include_forced) {
    for (std::size_t id = 0; id < timers_.size(); ++id) {
        Timer& timer = timers_[id];
        if (!timer.live) continue;
        if (timer.kind == TimerKind::Forced && !include_forced) continue;
        timer.live = false;
        if (timer.kind == TimerKind::Forced) {
            forced_timer_armed_ = false;
            forced_timer_id_ = -1;
        }
        record("timer_cancelled", -1, timer_name(timer.kind));
    }
}

bool DeploymentSimulator::fault_active(FaultKind kind, int a, int b, double t) const {
    for (const FaultSpec& f : scenario_.faults)
        if (f.kind == kind && f.a == a && (kind != FaultKind::ResistorOpen || f.b == b) &&
            t >= f.active_from.secs)
            return true;
    return false;
}

bool DeploymentSimulator::line_heated(const MeltLine& line, double t) const {
    if (!burning_ || active_knife_set_ < 0) return false;
    const int resistor = line.resistor_of_set[static_cast<std::size_t>(active_knife_set_)];
    return !fault_active(FaultKind::ResistorOpen, active_knife_set_, resistor, t);
}

bool DeploymentSimulator::all_lines_cut() const {
    return std::all_of(lines_.begin(), lines_.end(),
                       [](const MeltLine& l) { return l.cut; });
}

std::vector<bool> DeploymentSimulator::switches_now(double t) const {
    std::vector<bool> sw(doors_open_.size());
    for (std::size_t i = 0; i < doors_open_.size(); ++i) {
        bool open = doors_open_[i];
        if (fault_active(FaultKind::SwitchStuckClosed, static_cast<int>(i), 0, t)) open = false;
        if (fault_active(FaultKind::SwitchStuckOpen, static_cast<int>(i), 0, t)) open = true;
        sw[i] = open;
    }
    return sw;
}

void DeploymentSimulator::record(const std::string& event, int knife_set,
                                 const std::string& note) {
    TraceRecord rec;
    rec.time_s = sim_time_;
    rec.phase = phase_;
    rec.event = event;
    rec.knife_set = knife_set;
    rec.line_temps.reserve(lines_.size());
    for (const MeltLine& l : lines_) rec.line_temps.push_back(l.temp.celsius);
    rec.switches = switches_now(sim_time_);
    rec.note = note;
    trace_.records.push_back(std::move(rec));
}

void DeploymentSimulator::cut_line(int i) {
    MeltLine& line = lines_[static_cast<std::size_t>(i)];
    line.cut = true;
    cut_time_[static_cast<std::size_t>(i)] = sim_time_;
    record("line_cut", active_knife_set_, "line " + std::to_string(i));
    if (fault_active(FaultKind::DoorStuck, i, 0, sim_time_)) {
        record("door_stuck", active_knife_set_, "door " + std::to_string(i));
    } else {
        doors_open_[static_cast<std::size_t>(i)] = true;
        record("door_open", active_knife_set_, "door " + std::to_string(i));
    }
}

void DeploymentSimulator::advance_thermals_to(double t) {
    if (t <= last_thermal_t_) return;
    if (!burning_) {
        // Idle intervals are pure Newton cooling; use the closed form so long
        // gaps between attempts cost nothing.
        const double dt = t - last_thermal_t_;
        for (MeltLine& line : lines_) {
            if (line.cut) continue;
            const double decay = std::exp(-dt / line.params.time_constant_s());
            line.temp = TemperatureC{scenario_.ambient.celsius +
                                     (line.temp.celsius - scenario_.ambient.celsius) * decay};
        }
        last_thermal_t_ = t;
        return;
    }
    // During a burn, sub-step every line so cut instants land on a fixed grid.
    double cur = last_thermal_t_;
    while (cur < t) {
        const double step = std::min(burn_dt_, t - cur);
        cur += step;
        sim_time_ = std::min(cur, t);
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            MeltLine& line = lines_[i];
            if (line.cut) continue;
            const bool heated = line_heated(line, cur);
            line = line_temp_step(std::move(line), heated, cfg_, scenario_.ambient,
                                  Duration::seconds(step));
            if (line.cut) cut_line(static_cast<int>(i));
        }
        if (burning_ && all_lines_cut()) {
            end_burn();
            break;
        }
    }
    last_thermal_t_ = t;
}

void DeploymentSimulator::start_burn(bool forced) {
    if (burning_)
        throw std::logic_error("start_burn: protocol violation, a burn is already active");
    cancel_timers(false);
    active_knife_set_ = next_knife_set_;
    next_knife_set_ = (next_knife_set_ + 1) % cfg_.knife_sets;
    ++attempt_count_;
    phase_ = Phase::Burning;
    burning_ = true;
    ++burn_gen_;
    burn_deadline_ = sim_time_ + cfg_.burn_max.secs;
    record("burn_start", active_knife_set_,
           std::string(forced ? "forced " : "") + "attempt " + std::to_string(attempt_count_));
    if (all_lines_cut()) {
        end_burn();
        return;
    }
    double min_tau = std::numeric_limits<double>::infinity();
    for (const MeltLine& line : lines_)
        if (!line.cut) min_tau = std::min(min_tau, line.params.time_constant_s());
    burn_dt_ = min_tau / 50.0;
    push(burn_deadline_, EvKind::BurnEnd, burn_gen_);
}

void DeploymentSimulator::end_burn() {
    const int set = active_knife_set_;
    record("burn_end", set);
    burning_ = false;
    active_knife_set_ = -1;
    phase_ = Phase::Evaluate;
    evaluate_switches();
}

void DeploymentSimulator::evaluate_switches() {
    const std::vector<bool> sw = switches_now(sim_time_);
    const int open = static_cast<int>(std::count(sw.begin(), sw.end(), true));
    const std::string tally =
        std::to_string(open) + "/" + std::to_string(cfg_.n_doors) + " switches open";
    if (open == cfg_.n_doors) {
        phase_ = Phase::DeployedUnconfirmed;
        record("evaluate", -1, tally);
        arm_timer(TimerKind::ReattemptFull, cfg_.reattempt_full.secs);
    } else {
        phase_ = Phase::Partial;
        record("evaluate", -1, tally);
        arm_timer(TimerKind::RetryPartial, cfg_.retry_partial.secs);
    }
}

void DeploymentSimulator::attempt_deployment(TimerKind rearm_kind) {
    if (health_check(scenario_, cfg_, Duration::seconds(sim_time_))) {
        record("health_check_pass", -1,
               "battery " + fmt_seconds(battery_voltage_at(scenario_, Duration::seconds(sim_time_))) + " V");
        start_burn(false);
    } else {
        record("health_check_fail", -1,
               "battery " + fmt_seconds(battery_voltage_at(scenario_, Duration::seconds(sim_time_))) + " V");
        arm_timer(rearm_kind, timer_interval(rearm_kind));
    }
}

void DeploymentSimulator::handle_tc(TcKind kind) {
    record("tc_received", -1, kind == TcKind::Confirm ? "confirm" : "override_forced_timer");
    if (kind == TcKind::Confirm) {
        if (phase_ == Phase::DeployedUnconfirmed) {
            cancel_timers(true);
            phase_ = Phase::DeployedConfirmed;
            record("deployed_confirmed");
            finished_ = true;
        } else if (phase_ == Phase::Partial) {
            if (!forced_timer_armed_) {
                forced_timer_armed_ = true;
                forced_timer_id_ = arm_timer(TimerKind::Forced, cfg_.forced_burn_timer.secs);
            } else {
                record("tc_ignored", -1, "forced timer already armed");
            }
        } else {
            record("tc_ignored", -1, "confirm in phase " + to_string(phase_));
        }
    } else {  // OverrideForcedTimer
        if (forced_timer_armed_ && forced_timer_id_ >= 0) {
            timers_[static_cast<std::size_t>(forced_timer_id_)].live = false;
            forced_timer_armed_ = false;
            forced_timer_id_ = -1;
            record("timer_cancelled", -1, "forced_burn");
        } else {
            record("tc_ignored", -1, "no forced timer armed");
        }
    }
}

void DeploymentSimulator::on_timer(int id) {
    Timer& timer = timers_[static_cast<std::size_t>(id)];
    if (!timer.live) return;
    timer.live = false;
    record("timer_expired", -1, timer_name(timer.kind));
    switch (timer.kind) {
        case TimerKind::RetryPartial:
        case TimerKind::ReattemptFull:
        case TimerKind::HealthRecheck:
            attempt_deployment(timer.kind);
            break;
        case TimerKind::Forced:
            forced_timer_armed_ = false;
            forced_timer_id_ = -1;
            if (burning_) {
                // Never fire concurrently; defer to the running burn's end.
                forced_timer_armed_ = true;
                forced_timer_id_ =
                    arm_timer(TimerKind::Forced, burn_deadline_ - sim_time_);
            } else {
                start_burn(true);  // bypasses the health check
            }
            break;
    }
}

void DeploymentSimulator::on_fault_active(int idx) {
    const FaultSpec& f = scenario_.faults[static_cast<std::size_t>(idx)];
    record("fault_active", -1,
           to_string(f.kind) + " " + std::to_string(f.a) +
               (f.kind == FaultKind::ResistorOpen ? ":" + std::to_string(f.b) : ""));
    if (f.kind == FaultKind::LinePreCut && !lines_[static_cast<std::size_t>(f.a)].cut)
        cut_line(f.a);
}

SimulationResult DeploymentSimulator::run() {
    record("init");
    for (std::size_t i = 0; i < scenario_.faults.size(); ++i) {
        const FaultSpec& f = scenario_.faults[i];
        if (f.active_from.secs <= 0.0) {
            if (f.kind == FaultKind::LinePreCut && !lines_[static_cast<std::size_t>(f.a)].cut)
                cut_line(f.a);
        } else if (f.active_from < scenario_.horizon) {
            push(f.active_from.secs, EvKind::FaultActive, static_cast<int>(i));
        }
    }
    push(0.0, EvKind::InitialAttempt, 0);
    for (std::size_t i = 0; i < scenario_.tc_schedule.size(); ++i)
        if (scenario_.tc_schedule[i].time <= scenario_.horizon)
            push(scenario_.tc_schedule[i].time.secs, EvKind::Tc, static_cast<int>(i));
    push(scenario_.horizon.secs, EvKind::Horizon, 0);

    while (!finished_ && !queue_.empty()) {
        const Ev ev = queue_.top();
        queue_.pop();
        advance_thermals_to(ev.t);
        sim_time_ = ev.t;
        switch (ev.kind) {
            case EvKind::InitialAttempt:
                phase_ = Phase::HealthCheck;
                attempt_deployment(TimerKind::HealthRecheck);
                break;
            case EvKind::TimerExpiry:
                on_timer(ev.a);
                break;
            case EvKind::Tc:
                handle_tc(scenario_.tc_schedule[static_cast<std::size_t>(ev.a)].kind);
                break;
            case EvKind::BurnEnd:
                if (burning_ && ev.a == burn_gen_) end_burn();
                break;
            case EvKind::FaultActive:
                on_fault_active(ev.a);
                break;
            case EvKind::Horizon:
                record("horizon_reached");
                finished_ = true;
                break;
        }
    }

    SimulationResult result;
    result.trace = std::move(trace_);
    result.final_phase = phase_;
    result.attempts = attempt_count_;
    result.doors_open = doors_open_;
    result.cut_time_s = cut_time_;
    result.end_time_s = sim_time_;
    return result;
}

SimulationResult run_scenario(const Scenario& scenario, const AdmConfig& cfg,
                              std::vector<LineThermalParams> line_overrides) {
    DeploymentSimulator sim(scenario, cfg, std::move(line_overrides));
    return sim.run();
}

}  // namespace cubesim
