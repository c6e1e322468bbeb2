#include "cubesim/link_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cubesim {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

void AntennaPattern::validate() const {
    if (!(hpbw_deg > 0.0) || !(hpbw_deg < 360.0))
        throw std::domain_error("AntennaPattern: hpbw_deg must be in (0, 360)");
    if (!(axial_ratio_db.value >= 0.0))
        throw std::domain_error("AntennaPattern: axial_ratio_db must be >= 0");
    if (band_hi < band_lo)
        throw std::domain_error("AntennaPattern: band_hi must be >= band_lo");
}

namespace presets {

AntennaPattern patch_measured() {
    return AntennaPattern{Decibel{4.13}, 104.0, Decibel{2.0},
                          Frequency::gigahertz(2.42), Frequency::gigahertz(2.49),
                          PatternShape::CosPower};
}

AntennaPattern patch_simulated() {
    return AntennaPattern{Decibel{4.5}, 95.0, Decibel{2.5},
                          Frequency::gigahertz(2.40), Frequency::gigahertz(2.45),
                          PatternShape::CosPower};
}

AntennaPattern turnstile_ideal() {
    return AntennaPattern{Decibel{2.0}, 180.0, Decibel{0.0},
                          Frequency::megahertz(430.0), Frequency::megahertz(440.0),
                          PatternShape::Omni};
}

AntennaPattern by_name(std::string_view name) {
    if (name == "patch-measured") return patch_measured();
    if (name == "patch-simulated") return patch_simulated();
    if (name == "turnstile-ideal") return turnstile_ideal();
    throw std::invalid_argument("unknown antenna preset: " + std::string(name));
}

std::vector<std::string> names() {
    return {"patch-measured", "patch-simulated", "turnstile-ideal"};
}

}  // namespace presets

double cos_power_exponent(const AntennaPattern& p) {
    p.validate();
    if (p.shape != PatternShape::CosPower)
        throw std::domain_error("cos_power_exponent: pattern is not CosPower");
    // Exactly 3 dB down at the half-beamwidth angle.
    const double half = p.hpbw_deg / 2.0 * kDegToRad;
    return -0.3 / std::log10(std::cos(half));
}

Decibel pattern_gain(const AntennaPattern& p, double theta_deg) {
    p.validate();
    if (!(theta_deg >= 0.0) || !(theta_deg <= 180.0))
        throw std::domain_error("pattern_gain: theta must be in [0, 180] degrees");
    if (p.shape == PatternShape::Omni)
        return p.boresight_gain;
    const double floor_db = p.boresight_gain.value - kBackLobeFloorDb;
    if (theta_deg >= 90.0)
        return Decibel{floor_db};
    const double n = cos_power_exponent(p);
    const double g = p.boresight_gain.value + 10.0 * n * std::log10(std::cos(theta_deg * kDegToRad));
    return Decibel{std::max(g, floor_db)};
}

Decibel fspl_db(Frequency f, double distance_m) {
    if (!(distance_m > 0.0))
        throw std::domain_error("fspl_db: distance must be positive");
    const double d_km = distance_m / 1e3;
    return Decibel{20.0 * std::log10(d_km) + 20.0 * std::log10(f.megahertz_value()) + 32.45};
}

Decibel polarization_loss_db(Decibel ar_tx, Decibel ar_rx, double tilt_deg) {
    if (!(ar_tx.value >= 0.0) || !(ar_rx.value >= 0.0))
        throw std::domain_error("polarization_loss_db: axial ratios must be >= 0 dB");
    if (!(tilt_deg >= 0.0 && tilt_deg <= 90.0))
        throw std::domain_error("polarization_loss_db: tilt must be in [0, 90] degrees");
    // gamma is the inverse voltage axial ratio: 0 = linear, 1 = circular.
    const auto gamma = [](Decibel ar) {
        if (std::isinf(ar.value)) return 0.0;
        return 1.0 / std::pow(10.0, ar.value / 20.0);
    };
    const double gt = gamma(ar_tx);
    const double gr = gamma(ar_rx);
    const double tau = tilt_deg * kDegToRad;
    const double match =
        0.5 + (4.0 * gt * gr + (1.0 - gt * gt) * (1.0 - gr * gr) * std::cos(2.0 * tau)) /
                  (2.0 * (1.0 + gt * gt) * (1.0 + gr * gr));
    if (match <= 0.0)
        return Decibel{kCrossPolLossCapDb};
    return Decibel{std::min(-10.0 * std::log10(match), kCrossPolLossCapDb)};
}

bool axial_ratio_ok(const AntennaPattern& p, Frequency f) {
    p.validate();
    return f >= p.band_lo && f <= p.band_hi && p.axial_ratio_db.value < 3.0;
}

void LinkBudgetInput::validate() const {
    if (!(distance_m > 0.0))
        throw std::domain_error("LinkBudgetInput: distance must be positive");
    for (double theta : {tx_off_boresight_deg, rx_off_boresight_deg})
        if (!(theta >= 0.0) || !(theta <= 180.0))
            throw std::domain_error("LinkBudgetInput: off-boresight angles must be in [0, 180]");
    if (!(misc_losses_db.value >= 0.0))
        throw std::domain_error("LinkBudgetInput: misc_losses_db must be >= 0");
    tx_pattern.validate();
    rx_pattern.validate();
}

LinkBudgetBreakdown link_budget(const LinkBudgetInput& in) {
    in.validate();
    LinkBudgetBreakdown out;
    out.tx_power_dbw = in.tx_power_dbw;
    out.tx_gain = pattern_gain(in.tx_pattern, in.tx_off_boresight_deg);
    out.rx_gain = pattern_gain(in.rx_pattern, in.rx_off_boresight_deg);
    out.fspl = fspl_db(in.frequency, in.distance_m);
    out.polarization_loss = polarization_loss_db(in.tx_pattern.axial_ratio_db,
                                                 in.rx_pattern.axial_ratio_db,
                                                 in.polarization_tilt_deg);
    out.misc_losses = in.misc_losses_db;
    out.required_cn = in.required_cn_db;
    out.margin = in.tx_power_dbw + out.tx_gain + out.rx_gain - out.fspl -
                 out.polarization_loss - out.misc_losses - out.required_cn;
    return out;
}

Decibel link_margin_db(const LinkBudgetInput& in) { return link_budget(in).margin; }

}  // namespace cubesim
