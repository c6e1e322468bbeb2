#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cubesim/link_model.hpp"

using namespace cubesim;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent bisection oracle for the -3 dB beamwidth.
double hpbw_by_bisection(const AntennaPattern& p) {
    const double target = p.boresight_gain.value - 3.0;
    double lo = 0.0, hi = 89.9;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (pattern_gain(p, mid).value > target ? lo : hi) = mid;
    }
    return lo + hi;
}
}  // namespace

TEST_CASE("patch pattern gain") {
    const AntennaPattern patch = presets::patch_measured();
    CHECK(pattern_gain(patch, 0.0).value == doctest::Approx(4.13).epsilon(1e-12));
    // Exactly 3 dB down at half the beamwidth, by construction.
    CHECK(pattern_gain(patch, 52.0).value == doctest::Approx(1.13).epsilon(1e-9));
    CHECK(cos_power_exponent(patch) == doctest::Approx(1.4239).epsilon(1e-3));

    CHECK_THROWS_AS(pattern_gain(patch, -1.0), std::domain_error);
    CHECK_THROWS_AS(pattern_gain(patch, 181.0), std::domain_error);
}

TEST_CASE("pattern is non-increasing over the front hemisphere and floored behind") {
    const AntennaPattern patch = presets::patch_measured();
    double prev = pattern_gain(patch, 0.0).value;
    for (double theta = 0.5; theta <= 90.0; theta += 0.5) {
        const double g = pattern_gain(patch, theta).value;
        CHECK(g <= prev + 1e-12);
        prev = g;
    }
    for (double theta : {90.0, 120.0, 180.0})
        CHECK(pattern_gain(patch, theta).value == doctest::Approx(4.13 - 40.0));
}

TEST_CASE("omni pattern is constant") {
    const AntennaPattern turnstile = presets::turnstile_ideal();
    for (double theta : {0.0, 30.0, 90.0, 180.0})
        CHECK(pattern_gain(turnstile, theta).value == 2.0);
}

TEST_CASE("hpbw reconstruction recovers the preset beamwidth") {
    CHECK(hpbw_by_bisection(presets::patch_measured()) == doctest::Approx(104.0).epsilon(1e-4));
    CHECK(hpbw_by_bisection(presets::patch_simulated()) == doctest::Approx(95.0).epsilon(1e-4));
}

TEST_CASE("free-space path loss") {
    CHECK(fspl_db(Frequency::megahertz(2430), 500e3).value == doctest::Approx(154.14).epsilon(1e-4));
    CHECK(fspl_db(Frequency::megahertz(436.5), 500e3).value == doctest::Approx(139.23).epsilon(1e-4));

    const double d6 = fspl_db(Frequency::megahertz(2430), 1000e3).value -
                      fspl_db(Frequency::megahertz(2430), 500e3).value;
    CHECK(d6 == doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-9));

    // fspl(k*d) - fspl(d) == 20 log10 k
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dk(1.1, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double k = dk(rng);
        const double diff = fspl_db(Frequency::megahertz(436.5), k * 100e3).value -
                            fspl_db(Frequency::megahertz(436.5), 100e3).value;
        CHECK(std::fabs(diff - 20.0 * std::log10(k)) < 1e-9);
    }
}

TEST_CASE("polarization mismatch loss") {
    // Linear TX against circular RX loses half the power at any tilt.
    for (double tilt : {0.0, 17.0, 45.0, 90.0})
        CHECK(polarization_loss_db(Decibel{kInf}, Decibel{0.0}, tilt).value ==
              doctest::Approx(3.0103).epsilon(1e-3));
    // Matched same-sense circular is lossless.
    CHECK(polarization_loss_db(Decibel{0.0}, Decibel{0.0}, 30.0).value ==
          doctest::Approx(0.0).epsilon(1e-12));
    // Orthogonal linear is cross-polarized; capped at the 40 dB floor.
    CHECK(polarization_loss_db(Decibel{kInf}, Decibel{kInf}, 90.0).value == 40.0);
    // Aligned linear is lossless.
    CHECK(polarization_loss_db(Decibel{kInf}, Decibel{kInf}, 0.0).value ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("polarization loss is symmetric in the two axial ratios") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dar(0.0, 20.0);
    std::uniform_real_distribution<double> dtilt(0.0, 90.0);
    for (int i = 0; i < 200; ++i) {
        const Decibel a{dar(rng)}, b{dar(rng)};
        const double tilt = dtilt(rng);
        CHECK(polarization_loss_db(a, b, tilt).value ==
              doctest::Approx(polarization_loss_db(b, a, tilt).value).epsilon(1e-12));
    }
}

TEST_CASE("axial ratio band check") {
    const AntennaPattern patch = presets::patch_measured();
    CHECK(axial_ratio_ok(patch, Frequency::gigahertz(2.45)));
    CHECK_FALSE(axial_ratio_ok(patch, Frequency::gigahertz(2.40)));  // below measured band
    CHECK_FALSE(axial_ratio_ok(patch, Frequency::gigahertz(2.50)));

    AntennaPattern linear = presets::turnstile_ideal();
    linear.axial_ratio_db = Decibel{kInf};
    CHECK_FALSE(axial_ratio_ok(linear, Frequency::megahertz(436.5)));
}

TEST_CASE("link margin composition") {
    AntennaPattern omni = presets::turnstile_ideal();
    omni.boresight_gain = Decibel{0.0};

    LinkBudgetInput in;
    in.distance_m = 1e3;
    in.tx_pattern = omni;
    in.rx_pattern = omni;
    in.frequency = Frequency::megahertz(2430);
    in.tx_power_dbw = fspl_db(in.frequency, in.distance_m);  // cancels the path loss
    in.required_cn_db = Decibel{0.0};
    CHECK(link_margin_db(in).value == doctest::Approx(0.0).epsilon(1e-12));

    LinkBudgetInput lossy = in;
    lossy.misc_losses_db = Decibel{3.0};
    CHECK(link_margin_db(in).value - link_margin_db(lossy).value == doctest::Approx(3.0));

    LinkBudgetInput patch_link = in;
    patch_link.tx_pattern = presets::patch_measured();
    LinkBudgetInput off = patch_link;
    off.tx_off_boresight_deg = 52.0;
    CHECK(link_margin_db(patch_link).value - link_margin_db(off).value ==
          doctest::Approx(3.0).epsilon(1e-9));

    LinkBudgetInput bad = in;
    bad.distance_m = 0.0;
    CHECK_THROWS_AS(link_margin_db(bad), std::domain_error);
}

TEST_CASE("link margin is monotone in distance, losses and off-boresight angle") {
    LinkBudgetInput in;
    in.tx_pattern = presets::patch_measured();
    in.rx_pattern = presets::turnstile_ideal();
    in.frequency = Frequency::megahertz(2430);
    in.distance_m = 500e3;

    double prev = link_margin_db(in).value;
    for (double d : {600e3, 900e3, 2000e3}) {
        in.distance_m = d;
        const double m = link_margin_db(in).value;
        CHECK(m < prev);
        prev = m;
    }
    in.distance_m = 500e3;
    prev = link_margin_db(in).value;
    for (double loss : {1.0, 2.5, 10.0}) {
        in.misc_losses_db = Decibel{loss};
        const double m = link_margin_db(in).value;
        CHECK(m < prev);
        prev = m;
    }
    in.misc_losses_db = Decibel{0.0};
    prev = link_margin_db(in).value;
    for (double theta : {20.0, 52.0, 89.0, 140.0}) {
        in.tx_off_boresight_deg = theta;
        const double m = link_margin_db(in).value;
        CHECK(m <= prev);
        prev = m;
    }
}

TEST_CASE("presets are selectable by name") {
    CHECK(presets::by_name("patch-measured").hpbw_deg == 104.0);
    CHECK(presets::by_name("patch-simulated").boresight_gain.value == 4.5);
    CHECK(presets::by_name("turnstile-ideal").shape == PatternShape::Omni);
    CHECK_THROWS_AS(presets::by_name("no-such-preset"), std::invalid_argument);
    CHECK(presets::names().size() == 3);
}
