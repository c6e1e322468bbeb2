// cubesim: mission data budget, link budget, and antenna deployment
// simulation front end.
//
// Exit codes: 0 success, 1 paper-check failure, 2 config error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesim/adm_sim.hpp"
#include "cubesim/data_budget.hpp"
#include "cubesim/link_model.hpp"
#include "cubesim/monte_carlo.hpp"
#include "cubesim/trace_io.hpp"

using json = nlohmann::ordered_json;
using namespace cubesim;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double sig4(double x) {
    if (x == 0.0) return 0.0;
    const double scale = std::pow(10.0, 3.0 - std::floor(std::log10(std::fabs(x))));
    return std::round(x * scale) / scale;
}

double round1(double x) { return std::round(x * 10.0) / 10.0; }

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream file(path);
    if (!file) throw IoError("cannot open config file: " + path);
    json j;
    try {
        file >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    return j;
}

void check_keys(const json& j, const std::vector<std::string>& allowed,
                const std::string& scope) {
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw ConfigError("unknown key '" + item.key() + "' in " + scope);
    }
}

json section(const json& cfg, const std::string& name) {
    if (!cfg.contains(name)) return json::object();
    if (!cfg.at(name).is_object()) throw ConfigError("config section '" + name + "' must be an object");
    return cfg.at(name);
}

MissionDataProfile profile_from_json(const json& j) {
    check_keys(j,
               {"image_width", "image_height", "channels", "bit_depth", "compression_ratio",
                "cadence_s", "run_duration_s", "runs", "code_data_bits", "code_codeword_bits",
                "pad_to_codeword"},
               "budget");
    MissionDataProfile p;
    p.image_width = j.value("image_width", p.image_width);
    p.image_height = j.value("image_height", p.image_height);
    p.channels = j.value("channels", p.channels);
    p.bit_depth = j.value("bit_depth", p.bit_depth);
    p.compression_ratio = j.value("compression_ratio", p.compression_ratio);
    if (j.contains("cadence_s")) p.cadence = Duration::seconds(j.at("cadence_s").get<double>());
    if (j.contains("run_duration_s"))
        p.run_duration = Duration::seconds(j.at("run_duration_s").get<double>());
    p.runs = j.value("runs", p.runs);
    p.code_data_bits = j.value("code_data_bits", p.code_data_bits);
    p.code_codeword_bits = j.value("code_codeword_bits", p.code_codeword_bits);
    p.pad_to_codeword = j.value("pad_to_codeword", p.pad_to_codeword);
    return p;
}

AdmConfig adm_from_json(const json& j) {
    check_keys(j,
               {"n_doors", "knife_sets", "resistors_per_knife", "resistor_ohms", "supply_volts",
                "burn_max_s", "retry_partial_s", "reattempt_full_s", "forced_burn_timer_s",
                "melt_temp_c", "line_conductance_w_per_k", "line_heat_capacity_j_per_k",
                "health_min_battery_v"},
               "adm");
    AdmConfig cfg;
    cfg.n_doors = j.value("n_doors", cfg.n_doors);
    cfg.knife_sets = j.value("knife_sets", cfg.knife_sets);
    cfg.resistors_per_knife = j.value("resistors_per_knife", cfg.resistors_per_knife);
    cfg.resistor_ohms = j.value("resistor_ohms", cfg.resistor_ohms);
    cfg.supply_volts = j.value("supply_volts", cfg.supply_volts);
    if (j.contains("burn_max_s")) cfg.burn_max = Duration::seconds(j.at("burn_max_s").get<double>());
    if (j.contains("retry_partial_s"))
        cfg.retry_partial = Duration::seconds(j.at("retry_partial_s").get<double>());
    if (j.contains("reattempt_full_s"))
        cfg.reattempt_full = Duration::seconds(j.at("reattempt_full_s").get<double>());
    if (j.contains("forced_burn_timer_s"))
        cfg.forced_burn_timer = Duration::seconds(j.at("forced_burn_timer_s").get<double>());
    if (j.contains("melt_temp_c")) cfg.melt_temp = TemperatureC{j.at("melt_temp_c").get<double>()};
    cfg.line_conductance_w_per_k = j.value("line_conductance_w_per_k", cfg.line_conductance_w_per_k);
    cfg.line_heat_capacity_j_per_k =
        j.value("line_heat_capacity_j_per_k", cfg.line_heat_capacity_j_per_k);
    cfg.health_min_battery_v = j.value("health_min_battery_v", cfg.health_min_battery_v);
    return cfg;
}

FaultKind fault_kind_from_name(const std::string& name) {
    if (name == "door-stuck") return FaultKind::DoorStuck;
    if (name == "resistor-open") return FaultKind::ResistorOpen;
    if (name == "switch-stuck-closed") return FaultKind::SwitchStuckClosed;
    if (name == "switch-stuck-open") return FaultKind::SwitchStuckOpen;
    if (name == "line-pre-cut") return FaultKind::LinePreCut;
    throw ConfigError("unknown fault kind: " + name);
}

// Fault flag syntax: kind:a[:b][@time_s], e.g. resistor-open:0:1@3600
FaultSpec parse_fault(const std::string& text) {
    std::string body = text;
    FaultSpec f;
    if (const auto at = body.find('@'); at != std::string::npos) {
        f.active_from = Duration::seconds(std::stod(body.substr(at + 1)));
        body = body.substr(0, at);
    }
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto next = body.find(':', pos);
        parts.push_back(body.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.empty()) throw ConfigError("empty fault spec");
    f.kind = fault_kind_from_name(parts[0]);
    if (parts.size() > 1) f.a = std::stoi(parts[1]);
    if (parts.size() > 2) f.b = std::stoi(parts[2]);
    if (f.kind == FaultKind::ResistorOpen && parts.size() < 3)
        throw ConfigError("resistor-open fault needs set and resistor indices");
    return f;
}

// Telecommand flag syntax: confirm@3600 or override@7200.
TcEvent parse_tc(const std::string& text) {
    const auto at = text.find('@');
    if (at == std::string::npos) throw ConfigError("telecommand spec needs @time_s: " + text);
    TcEvent tc;
    const std::string kind = text.substr(0, at);
    if (kind == "confirm")
        tc.kind = TcKind::Confirm;
    else if (kind == "override")
        tc.kind = TcKind::OverrideForcedTimer;
    else
        throw ConfigError("unknown telecommand kind: " + kind);
    tc.time = Duration::seconds(std::stod(text.substr(at + 1)));
    return tc;
}

Scenario scenario_from_json(const json& j) {
    check_keys(j, {"ambient_c", "battery_timeline", "tc_schedule", "faults", "rng_seed", "horizon_s"},
               "scenario");
    Scenario s;
    if (j.contains("ambient_c")) s.ambient = TemperatureC{j.at("ambient_c").get<double>()};
    if (j.contains("battery_timeline")) {
        s.battery_timeline.clear();
        for (const auto& p : j.at("battery_timeline"))
            s.battery_timeline.push_back(
                BatteryPoint{Duration::seconds(p.at(0).get<double>()), p.at(1).get<double>()});
    }
    if (j.contains("tc_schedule")) {
        for (const auto& t : j.at("tc_schedule")) {
            check_keys(t, {"time_s", "kind"}, "scenario.tc_schedule");
            TcEvent tc;
            tc.time = Duration::seconds(t.at("time_s").get<double>());
            const std::string kind = t.at("kind").get<std::string>();
            if (kind == "confirm")
                tc.kind = TcKind::Confirm;
            else if (kind == "override")
                tc.kind = TcKind::OverrideForcedTimer;
            else
                throw ConfigError("unknown telecommand kind: " + kind);
            s.tc_schedule.push_back(tc);
        }
    }
    if (j.contains("faults")) {
        for (const auto& t : j.at("faults")) {
            check_keys(t, {"kind", "a", "b", "active_from_s"}, "scenario.faults");
            FaultSpec f;
            f.kind = fault_kind_from_name(t.at("kind").get<std::string>());
            f.a = t.value("a", 0);
            f.b = t.value("b", 0);
            f.active_from = Duration::seconds(t.value("active_from_s", 0.0));
            s.faults.push_back(f);
        }
    }
    s.rng_seed = j.value("rng_seed", s.rng_seed);
    if (j.contains("horizon_s")) s.horizon = Duration::seconds(j.at("horizon_s").get<double>());
    return s;
}

void write_report(const json& report, const std::string& out_dir) {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string path = (dir / "report.json").string();
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open report file for writing: " + path);
    file << report.dump(2) << "\n";
    if (!file) throw IoError("failed writing report file: " + path);
}

// ---------------------------------------------------------------------------
// budget

struct BudgetArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::int64_t> width, height, channels, bit_depth, runs, days;
    std::optional<double> compression, cadence_min, run_hours, window_s, rate_kbps;
};

int cmd_budget(const BudgetArgs& args) {
    const json cfg = load_config(args.config_path);
    check_keys(cfg, {"budget", "downlink"}, "config root");
    MissionDataProfile profile = profile_from_json(section(cfg, "budget"));
    DownlinkContext ctx;
    {
        const json d = section(cfg, "downlink");
        check_keys(d, {"window_per_day_s", "mission_days", "link_rate_bps"}, "downlink");
        if (d.contains("window_per_day_s"))
            ctx.window_per_day = Duration::seconds(d.at("window_per_day_s").get<double>());
        ctx.mission_days = d.value("mission_days", ctx.mission_days);
        if (d.contains("link_rate_bps")) ctx.link_rate = Rate::bps(d.at("link_rate_bps").get<double>());
    }
    if (args.width) profile.image_width = *args.width;
    if (args.height) profile.image_height = *args.height;
    if (args.channels) profile.channels = *args.channels;
    if (args.bit_depth) profile.bit_depth = *args.bit_depth;
    if (args.compression) profile.compression_ratio = *args.compression;
    if (args.cadence_min) profile.cadence = Duration::minutes(*args.cadence_min);
    if (args.run_hours) profile.run_duration = Duration::hours(*args.run_hours);
    if (args.runs) profile.runs = *args.runs;
    if (args.window_s) ctx.window_per_day = Duration::seconds(*args.window_s);
    if (args.rate_kbps) ctx.link_rate = Rate::kbps(*args.rate_kbps);
    if (args.days) ctx.mission_days = *args.days;
    profile.validate();
    ctx.validate();

    const Rate rate = required_rate(profile, ctx.window_per_day, ctx.mission_days);

    json report;
    report["command"] = "budget";
    report["images_per_run"] = images_per_run(profile);
    report["image_bytes"] = image_bytes(profile).byte_count();
    report["raw_run_bytes"] = raw_run_bytes(profile).byte_count();
    report["raw_run_gb"] = sig4(raw_run_bytes(profile).gigabytes());
    report["raw_mission_bytes"] = raw_mission_bytes(profile).byte_count();
    report["raw_mission_gb"] = sig4(raw_mission_bytes(profile).gigabytes());
    report["coded_mission_bytes"] = coded_mission_bytes(profile).byte_count();
    report["coded_mission_gb"] = sig4(coded_mission_bytes(profile).gigabytes());
    report["days_to_downlink_at_link_rate"] = days_to_downlink(profile, ctx);
    report["link_rate_bps"] = ctx.link_rate.bits_per_second;
    report["window_per_day_s"] = ctx.window_per_day.secs;
    report["mission_days"] = ctx.mission_days;
    report["required_rate_bps"] = rate.bits_per_second;
    report["required_rate_kbps"] = round1(rate.bits_per_second / 1e3);
    std::cout << report.dump(2) << "\n";
    write_report(report, args.out_dir);
    return 0;
}

// ---------------------------------------------------------------------------
// link

struct LinkArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<double> distance_km, frequency_mhz, tx_power_dbw, tx_theta, rx_theta, tilt,
        misc_losses, required_cn;
    std::optional<std::string> tx_preset, rx_preset;
};

int cmd_link(const LinkArgs& args) {
    const json cfg = load_config(args.config_path);
    check_keys(cfg, {"link"}, "config root");
    const json j = section(cfg, "link");
    check_keys(j,
               {"frequency_mhz", "distance_km", "tx_power_dbw", "tx_preset",
                "tx_off_boresight_deg", "rx_preset", "rx_off_boresight_deg",
                "polarization_tilt_deg", "misc_losses_db", "required_cn_db"},
               "link");

    LinkBudgetInput in;
    std::string tx_preset = j.value("tx_preset", std::string("patch-measured"));
    std::string rx_preset = j.value("rx_preset", std::string("patch-measured"));
    if (args.tx_preset) tx_preset = *args.tx_preset;
    if (args.rx_preset) rx_preset = *args.rx_preset;
    try {
        in.tx_pattern = presets::by_name(tx_preset);
        in.rx_pattern = presets::by_name(rx_preset);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    std::optional<double> distance_km = args.distance_km;
    if (!distance_km && j.contains("distance_km")) distance_km = j.at("distance_km").get<double>();
    if (!distance_km) throw ConfigError("missing required parameter: distance_km");
    in.distance_m = *distance_km * 1e3;

    in.frequency = Frequency::megahertz(
        args.frequency_mhz ? *args.frequency_mhz : j.value("frequency_mhz", 2430.0));
    in.tx_power_dbw =
        Decibel{args.tx_power_dbw ? *args.tx_power_dbw : j.value("tx_power_dbw", 0.0)};
    in.tx_off_boresight_deg = args.tx_theta ? *args.tx_theta : j.value("tx_off_boresight_deg", 0.0);
    in.rx_off_boresight_deg = args.rx_theta ? *args.rx_theta : j.value("rx_off_boresight_deg", 0.0);
    in.polarization_tilt_deg = args.tilt ? *args.tilt : j.value("polarization_tilt_deg", 0.0);
    in.misc_losses_db = Decibel{args.misc_losses ? *args.misc_losses : j.value("misc_losses_db", 0.0)};
    in.required_cn_db =
        Decibel{args.required_cn ? *args.required_cn : j.value("required_cn_db", 0.0)};

    const LinkBudgetBreakdown budget = link_budget(in);
    json report;
    report["command"] = "link";
    report["frequency_mhz"] = in.frequency.megahertz_value();
    report["distance_km"] = *distance_km;
    report["tx_preset"] = tx_preset;
    report["rx_preset"] = rx_preset;
    report["tx_power_dbw"] = budget.tx_power_dbw.value;
    report["tx_gain_db"] = budget.tx_gain.value;
    report["rx_gain_db"] = budget.rx_gain.value;
    report["fspl_db"] = budget.fspl.value;
    report["polarization_loss_db"] = budget.polarization_loss.value;
    report["misc_losses_db"] = budget.misc_losses.value;
    report["required_cn_db"] = budget.required_cn.value;
    report["margin_db"] = budget.margin.value;
    report["tx_axial_ratio_ok"] = axial_ratio_ok(in.tx_pattern, in.frequency);
    report["rx_axial_ratio_ok"] = axial_ratio_ok(in.rx_pattern, in.frequency);
    std::cout << report.dump(2) << "\n";
    write_report(report, args.out_dir);
    return 0;
}

// ---------------------------------------------------------------------------
// deploy

struct DeployArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<double> ambient, horizon_hours;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> tc_flags;
    std::vector<std::string> fault_flags;
    std::vector<std::string> battery_flags;
};

std::pair<Scenario, AdmConfig> build_scenario(const std::optional<double>& ambient,
                                              const std::optional<double>& horizon_hours,
                                              const std::optional<std::uint64_t>& seed,
                                              const std::vector<std::string>& tc_flags,
                                              const std::vector<std::string>& fault_flags,
                                              const std::vector<std::string>& battery_flags,
                                              const json& cfg) {
    AdmConfig adm = adm_from_json(section(cfg, "adm"));
    Scenario scenario = scenario_from_json(section(cfg, "scenario"));
    if (ambient) scenario.ambient = TemperatureC{*ambient};
    if (horizon_hours) scenario.horizon = Duration::hours(*horizon_hours);
    if (seed) scenario.rng_seed = *seed;
    for (const std::string& t : tc_flags) scenario.tc_schedule.push_back(parse_tc(t));
    for (const std::string& f : fault_flags) scenario.faults.push_back(parse_fault(f));
    if (!battery_flags.empty()) {
        scenario.battery_timeline.clear();
        for (const std::string& b : battery_flags) {
            const auto colon = b.find(':');
            if (colon == std::string::npos)
                throw ConfigError("battery point needs time:volts: " + b);
            scenario.battery_timeline.push_back(
                BatteryPoint{Duration::seconds(std::stod(b.substr(0, colon))),
                             std::stod(b.substr(colon + 1))});
        }
    }
    std::sort(scenario.tc_schedule.begin(), scenario.tc_schedule.end(),
              [](const TcEvent& x, const TcEvent& y) { return x.time < y.time; });
    try {
        adm.validate();
        scenario.validate(adm);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    return {scenario, adm};
}

json deploy_summary(const SimulationResult& result, const AdmConfig& adm) {
    json report;
    report["command"] = "deploy";
    report["final_phase"] = to_string(result.final_phase);
    report["attempts"] = result.attempts;
    report["doors_open"] = result.doors_open_count();
    json doors = json::array();
    for (bool d : result.doors_open) doors.push_back(d);
    report["doors"] = doors;
    report["lines_cut"] = result.lines_cut_count();
    json cuts = json::array();
    for (double t : result.cut_time_s) {
        if (std::isnan(t))
            cuts.push_back(nullptr);
        else
            cuts.push_back(t);
    }
    report["cut_times_s"] = cuts;
    report["end_time_s"] = result.end_time_s;
    report["n_doors"] = adm.n_doors;
    return report;
}

int cmd_deploy(const DeployArgs& args) {
    const json cfg = load_config(args.config_path);
    check_keys(cfg, {"adm", "scenario"}, "config root");
    auto [scenario, adm] = build_scenario(args.ambient, args.horizon_hours, args.seed,
                                          args.tc_flags, args.fault_flags, args.battery_flags, cfg);

    const SimulationResult result = run_scenario(scenario, adm);

    std::filesystem::path dir(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string trace_path = (dir / "trace.csv").string();
    write_trace_csv(result.trace, adm.n_doors, trace_path);

    json report = deploy_summary(result, adm);
    report["trace_file"] = trace_path;
    std::cout << report.dump(2) << "\n";
    write_report(report, args.out_dir);
    return 0;  // simulation success, regardless of deployment outcome
}

// ---------------------------------------------------------------------------
// montecarlo

struct MonteCarloArgs {
    std::string config_path;
    std::string out_dir = ".";
    int runs = 500;
    double jitter = 0.05;
    std::optional<double> ambient, horizon_hours;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> sweep;  // lo:hi:step over ambient degC
};

int cmd_montecarlo(const MonteCarloArgs& args) {
    const json cfg = load_config(args.config_path);
    check_keys(cfg, {"adm", "scenario", "montecarlo"}, "config root");
    auto [scenario, adm] = build_scenario(args.ambient, args.horizon_hours, args.seed,
                                          {}, {}, {}, cfg);
    {
        const json m = section(cfg, "montecarlo");
        check_keys(m, {"runs", "jitter_rel"}, "montecarlo");
    }
    if (args.runs < 1) throw ConfigError("runs must be >= 1");
    // Two attempts decide the outcome; a short default horizon keeps sweeps fast.
    if (!args.horizon_hours && !section(cfg, "scenario").contains("horizon_s"))
        scenario.horizon = Duration::hours(2.0);

    JitterSpec jitter;
    jitter.conductance_rel = args.jitter;
    jitter.heat_capacity_rel = args.jitter;
    jitter.melt_temp_rel = args.jitter;

    std::vector<double> ambients;
    if (args.sweep) {
        double lo = 0, hi = 0, step = 0;
        if (std::sscanf(args.sweep->c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0 ||
            hi < lo)
            throw ConfigError("invalid sweep spec (want lo:hi:step): " + *args.sweep);
        for (double a = lo; a <= hi + 1e-9; a += step) ambients.push_back(a);
    } else {
        ambients.push_back(scenario.ambient.celsius);
    }

    json report;
    report["command"] = "montecarlo";
    report["runs"] = args.runs;
    report["jitter_rel"] = args.jitter;
    report["seed"] = scenario.rng_seed;
    json points = json::array();
    for (double ambient : ambients) {
        Scenario s = scenario;
        s.ambient = TemperatureC{ambient};
        const ReliabilityReport r = monte_carlo(s, adm, args.runs, jitter);
        json point;
        point["ambient_c"] = ambient;
        point["reliability"] = r.full_deploy_probability;
        point["mean_attempts"] = r.mean_attempts;
        point["doors_open_histogram"] = r.doors_open_histogram;
        points.push_back(point);
    }
    report["sweep"] = points;
    std::cout << report.dump(2) << "\n";
    write_report(report, args.out_dir);
    return 0;
}

// ---------------------------------------------------------------------------
// paper-check

struct CheckRow {
    std::string name;
    double expected;
    double computed;
    double tolerance;
    bool pass;
};

void add_row(std::vector<CheckRow>& rows, const std::string& name, double expected,
             double computed, double tolerance) {
    rows.push_back(CheckRow{name, expected, computed, tolerance,
                            std::fabs(computed - expected) <= tolerance});
}

double reconstruct_hpbw(const AntennaPattern& p) {
    const double target = p.boresight_gain.value - 3.0;
    double lo = 0.0, hi = 89.9;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (pattern_gain(p, mid).value > target)
            lo = mid;
        else
            hi = mid;
    }
    return lo + hi;  // full beamwidth = 2 * half angle
}

int cmd_paper_check() {
    std::vector<CheckRow> rows;

    // Mission data budget chain.
    const MissionDataProfile profile;  // built-in defaults
    add_row(rows, "images_per_run", 216.0, static_cast<double>(images_per_run(profile)), 0.0);
    add_row(rows, "raw_mission_gb", 1.274, raw_mission_bytes(profile).gigabytes(), 1.274e-3);
    add_row(rows, "coded_mission_gb", 1.671, coded_mission_bytes(profile).gigabytes(), 1.671e-3);
    const DownlinkContext ctx;  // 458.86 s/day, 184.8 kbps
    add_row(rows, "days_to_downlink", 157.7, days_to_downlink(profile, ctx), 0.5);
    {
        const Rate r = required_rate(profile, ctx.window_per_day, 365);
        DownlinkContext inv = ctx;
        inv.link_rate = r;
        add_row(rows, "rate_time_inversion_days", 365.0, days_to_downlink(profile, inv),
                365.0 * 1e-9);
    }

    // Patch antenna pattern.
    const AntennaPattern patch = presets::patch_measured();
    add_row(rows, "patch_gain_boresight_db", 4.13, pattern_gain(patch, 0.0).value, 1e-12);
    add_row(rows, "patch_gain_52deg_db", 1.13, pattern_gain(patch, 52.0).value, 1e-6);
    add_row(rows, "patch_hpbw_reconstructed_deg", 104.0, reconstruct_hpbw(patch), 0.02);

    // Polarization mismatch.
    add_row(rows, "pol_linear_circular_db", 3.01,
            polarization_loss_db(Decibel{std::numeric_limits<double>::infinity()}, Decibel{0.0},
                                 30.0)
                .value,
            0.01);
    add_row(rows, "pol_matched_circular_db", 0.0,
            polarization_loss_db(Decibel{0.0}, Decibel{0.0}, 0.0).value, 1e-9);

    // Thermal-vacuum deployment outcomes. Horizon of 1800 s allows exactly
    // two attempts (t = 0 and t = 930 s) with the default timers.
    const AdmConfig adm;
    const auto deploy_at = [&](double ambient_c) {
        Scenario s;
        s.ambient = TemperatureC{ambient_c};
        s.horizon = Duration::seconds(1800.0);
        return run_scenario(s, adm);
    };
    {
        const SimulationResult cold = deploy_at(-15.0);
        add_row(rows, "deploy_-15C_doors_open", 4.0, cold.doors_open_count(), 0.0);
        add_row(rows, "deploy_-15C_attempts_max2", 1.0, cold.attempts <= 2 ? 1.0 : 0.0, 0.0);
        const SimulationResult hot = deploy_at(50.0);
        add_row(rows, "deploy_+50C_doors_open", 4.0, hot.doors_open_count(), 0.0);
        add_row(rows, "deploy_+50C_attempts_max2", 1.0, hot.attempts <= 2 ? 1.0 : 0.0, 0.0);
        const SimulationResult extreme = deploy_at(-25.5);
        add_row(rows, "deploy_-25.5C_lines_cut_after_2_attempts", 0.0, extreme.lines_cut_count(),
                0.0);
        add_row(rows, "deploy_-25.5C_two_attempts", 2.0, extreme.attempts, 0.0);
    }
    {
        // Near the threshold, per-line variance must yield partial outcomes.
        Scenario s;
        s.ambient = TemperatureC{-25.5};
        s.horizon = Duration::seconds(1800.0);
        s.rng_seed = 1;
        const ReliabilityReport r = monte_carlo(s, adm, 500, JitterSpec{});
        int partial = 0;
        for (std::size_t i = 1; i + 1 < r.doors_open_histogram.size(); ++i)
            partial += r.doors_open_histogram[i];
        add_row(rows, "montecarlo_-25.5C_partial_runs_nonzero", 1.0, partial > 0 ? 1.0 : 0.0, 0.0);
    }

    bool all_pass = true;
    std::printf("%-42s %14s %14s %12s  %s\n", "check", "expected", "computed", "tolerance",
                "result");
    for (const CheckRow& row : rows) {
        std::printf("%-42s %14.6f %14.6f %12.3g  %s\n", row.name.c_str(), row.expected,
                    row.computed, row.tolerance, row.pass ? "PASS" : "FAIL");
        all_pass = all_pass && row.pass;
    }
    std::printf("%s\n", all_pass ? "all checks passed" : "CHECKS FAILED");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CubeSat TT&C mission and antenna deployment simulation toolkit"};
    app.require_subcommand(1);

    BudgetArgs budget_args;
    auto* budget = app.add_subcommand("budget", "Mission data budget chain");
    budget->add_option("--config", budget_args.config_path, "JSON config file");
    budget->add_option("--out", budget_args.out_dir, "Output directory");
    budget->add_option("--width", budget_args.width, "Image width, pixels");
    budget->add_option("--height", budget_args.height, "Image height, pixels");
    budget->add_option("--channels", budget_args.channels, "Color channels");
    budget->add_option("--bit-depth", budget_args.bit_depth, "Bits per channel");
    budget->add_option("--compression", budget_args.compression, "Compression ratio");
    budget->add_option("--cadence-min", budget_args.cadence_min, "Image cadence, minutes");
    budget->add_option("--run-hours", budget_args.run_hours, "Experiment run duration, hours");
    budget->add_option("--runs", budget_args.runs, "Number of experiment runs");
    budget->add_option("--window-s", budget_args.window_s, "Communication window, s/day");
    budget->add_option("--rate-kbps", budget_args.rate_kbps, "Link rate, kbps");
    budget->add_option("--days", budget_args.days, "Available mission days");

    LinkArgs link_args;
    auto* link = app.add_subcommand("link", "Link budget with antenna pattern model");
    link->add_option("--config", link_args.config_path, "JSON config file");
    link->add_option("--out", link_args.out_dir, "Output directory");
    link->add_option("--distance-km", link_args.distance_km, "Slant range, km (required)");
    link->add_option("--frequency-mhz", link_args.frequency_mhz, "Carrier frequency, MHz");
    link->add_option("--tx-power-dbw", link_args.tx_power_dbw, "Transmit power, dBW");
    link->add_option("--tx-preset", link_args.tx_preset, "TX antenna preset");
    link->add_option("--rx-preset", link_args.rx_preset, "RX antenna preset");
    link->add_option("--tx-theta", link_args.tx_theta, "TX off-boresight angle, deg");
    link->add_option("--rx-theta", link_args.rx_theta, "RX off-boresight angle, deg");
    link->add_option("--tilt", link_args.tilt, "Polarization tilt angle, deg");
    link->add_option("--misc-losses-db", link_args.misc_losses, "Miscellaneous losses, dB");
    link->add_option("--required-cn-db", link_args.required_cn, "Required C/N, dB");

    DeployArgs deploy_args;
    auto* deploy = app.add_subcommand("deploy", "Antenna deployment mechanism simulation");
    deploy->add_option("--config", deploy_args.config_path, "JSON config file");
    deploy->add_option("--out", deploy_args.out_dir, "Output directory");
    deploy->add_option("--ambient", deploy_args.ambient, "Ambient temperature, degC");
    deploy->add_option("--horizon-hours", deploy_args.horizon_hours, "Simulation horizon, hours");
    deploy->add_option("--seed", deploy_args.seed, "RNG seed");
    deploy->add_option("--tc", deploy_args.tc_flags, "Telecommand, e.g. confirm@3600");
    deploy->add_option("--fault", deploy_args.fault_flags, "Fault, e.g. resistor-open:0:0");
    deploy->add_option("--battery", deploy_args.battery_flags, "Battery point, time:volts");

    MonteCarloArgs mc_args;
    auto* mc = app.add_subcommand("montecarlo", "Seeded reliability analysis");
    mc->add_option("--config", mc_args.config_path, "JSON config file");
    mc->add_option("--out", mc_args.out_dir, "Output directory");
    mc->add_option("--runs", mc_args.runs, "Runs per sweep point");
    mc->add_option("--jitter", mc_args.jitter, "Relative 1-sigma parameter jitter");
    mc->add_option("--ambient", mc_args.ambient, "Fixed ambient temperature, degC");
    mc->add_option("--horizon-hours", mc_args.horizon_hours, "Simulation horizon, hours");
    mc->add_option("--seed", mc_args.seed, "RNG seed");
    mc->add_option("--sweep", mc_args.sweep, "Ambient sweep lo:hi:step, degC");

    auto* check = app.add_subcommand("paper-check", "Verify built-in reference figures");
    (void)check;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (budget->parsed()) return cmd_budget(budget_args);
        if (link->parsed()) return cmd_link(link_args);
        if (deploy->parsed()) return cmd_deploy(deploy_args);
        if (mc->parsed()) return cmd_montecarlo(mc_args);
        if (check->parsed()) return cmd_paper_check();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
