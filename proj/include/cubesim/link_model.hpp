#ifndef CUBESIM_LINK_MODEL_HPP
#define CUBESIM_LINK_MODEL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cubesim/quantities.hpp"

namespace cubesim {

enum class PatternShape { CosPower, Omni };

// Parametric main-lobe model built from measured (gain, HPBW) pairs.
// CosPower: G(theta) = G0 + 10*n*log10(cos theta) with n chosen so the
// pattern is exactly 3 dB down at hpbw/2. Gain is floored 40 dB below
// boresight (back lobes exist but are not characterized here).
struct AntennaPattern {
    Decibel boresight_gain;
    double hpbw_deg = 90.0;        // (0, 360)
    Decibel axial_ratio_db;        // 0 dB = circular; +infinity = linear
    Frequency band_lo = Frequency::hz(1.0);
    Frequency band_hi = Frequency::hz(1.0);
    PatternShape shape = PatternShape::CosPower;

    void validate() const;
};

// dB below boresight at which the pattern (and cross-pol loss) is clamped.
inline constexpr double kBackLobeFloorDb = 40.0;
inline constexpr double kCrossPolLossCapDb = 40.0;

namespace presets {

// S-band patch, measured: 4.13 dB gain, 104 deg HPBW at 2.43 GHz,
// axial ratio < 3 dB over 2.42-2.49 GHz.
AntennaPattern patch_measured();

// S-band patch, simulated variant: 4.5 dB gain, 95 deg HPBW,
// axial ratio < 3 dB over 2.40-2.45 GHz.
AntennaPattern patch_simulated();

// UHF turnstile, idealized placeholder: omnidirectional 2.0 dB, circular.
// The as-built pattern was characterized elsewhere and is not modeled.
AntennaPattern turnstile_ideal();

AntennaPattern by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace presets

// Main-lobe exponent n for a CosPower pattern.
double cos_power_exponent(const AntennaPattern& p);

// theta is the off-boresight angle in [0, 180] degrees.
Decibel pattern_gain(const AntennaPattern& p, double theta_deg);

// Free-space path loss, 20 log10(d_km) + 20 log10(f_MHz) + 32.45.
Decibel fspl_db(Frequency f, double distance_m);

// Elliptical polarization mismatch between two antennas. Axial ratios in dB
// (0 = circular, +inf = linear); tilt_deg is the angle between the
// polarization-ellipse major axes, in [0, 90]. Same-sense rotation assumed.
// Loss is capped at kCrossPolLossCapDb.
Decibel polarization_loss_db(Decibel ar_tx, Decibel ar_rx, double tilt_deg);

bool axial_ratio_ok(const AntennaPattern& p, Frequency f);

struct LinkBudgetInput {
    Frequency frequency = Frequency::megahertz(2430.0);
    double distance_m = 0.0;  // required, never defaulted
    Decibel tx_power_dbw;
    AntennaPattern tx_pattern;
    double tx_off_boresight_deg = 0.0;
    AntennaPattern rx_pattern;
    double rx_off_boresight_deg = 0.0;
    double polarization_tilt_deg = 0.0;
    Decibel misc_losses_db;
    Decibel required_cn_db;

    void validate() const;
};

struct LinkBudgetBreakdown {
    Decibel tx_power_dbw;
    Decibel tx_gain;
    Decibel rx_gain;
    Decibel fspl;
    Decibel polarization_loss;
    Decibel misc_losses;
    Decibel required_cn;
    Decibel margin;
};

LinkBudgetBreakdown link_budget(const LinkBudgetInput& in);
Decibel link_margin_db(const LinkBudgetInput& in);

}  // namespace cubesim

#endif
