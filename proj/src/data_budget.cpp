#include "cubesim/data_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace cubesim {

void MissionDataProfile::validate() const {
    if (image_width < 0 || image_height < 0 || channels < 0 || bit_depth < 0)
        throw std::domain_error("MissionDataProfile: image dimensions must be non-negative");
    if (!(compression_ratio >= 1.0))
        throw std::domain_error("MissionDataProfile: compression_ratio must be >= 1");
    if (cadence > run_duration)
        throw std::domain_error("MissionDataProfile: cadence must not exceed run_duration");
    if (runs < 0)
        throw std::domain_error("MissionDataProfile: runs must be non-negative");
    if (code_data_bits <= 0 || code_codeword_bits <= 0 || code_data_bits > code_codeword_bits)
        throw std::domain_error("MissionDataProfile: require 0 < code_data_bits <= code_codeword_bits");
}

void DownlinkContext::validate() const {
    if (!(window_per_day.secs > 0.0) || window_per_day.secs > 86400.0)
        throw std::domain_error("DownlinkContext: window_per_day must be in (0, 86400] s");
    if (mission_days <= 0)
        throw std::domain_error("DownlinkContext: mission_days must be positive");
    if (!(link_rate.bits_per_second > 0.0))
        throw std::domain_error("DownlinkContext: link_rate must be positive");
}

std::int64_t images_per_run(const MissionDataProfile& profile) {
    profile.validate();
    if (!(profile.cadence.secs > 0.0))
        throw std::domain_error("images_per_run: cadence must be positive");
    return static_cast<std::int64_t>(std::floor(profile.run_duration.secs / profile.cadence.secs));
}

DataSize image_bytes(const MissionDataProfile& profile) {
    profile.validate();
    const double raw_bits = static_cast<double>(profile.image_width) * profile.image_height *
                            profile.channels * profile.bit_depth;
    const double compressed = raw_bits / 8.0 / profile.compression_ratio;
    return DataSize::bytes(static_cast<std::uint64_t>(std::llround(compressed)));
}

DataSize raw_run_bytes(const MissionDataProfile& profile) {
    return image_bytes(profile) * static_cast<std::uint64_t>(images_per_run(profile));
}

DataSize raw_mission_bytes(const MissionDataProfile& profile) {
    return raw_run_bytes(profile) * static_cast<std::uint64_t>(profile.runs);
}

DataSize coded_mission_bytes(const MissionDataProfile& profile) {
    profile.validate();
    if (profile.pad_to_codeword) {
        // Each image is split into whole codewords; the tail codeword is padded.
        const std::uint64_t image_bits = image_bytes(profile).bit_count();
        const std::uint64_t data_bits = static_cast<std::uint64_t>(profile.code_data_bits);
        const std::uint64_t codewords = (image_bits + data_bits - 1) / data_bits;
        const std::uint64_t coded_image_bits =
            codewords * static_cast<std::uint64_t>(profile.code_codeword_bits);
        const std::uint64_t total_images =
            static_cast<std::uint64_t>(images_per_run(profile)) *
            static_cast<std::uint64_t>(profile.runs);
        return DataSize::bytes((coded_image_bits * total_images + 7) / 8);
    }
    // Pure-ratio overhead on the mission total, rounded to the nearest byte.
    const std::uint64_t raw = raw_mission_bytes(profile).byte_count();
    const std::uint64_t cw = static_cast<std::uint64_t>(profile.code_codeword_bits);
    const std::uint64_t data = static_cast<std::uint64_t>(profile.code_data_bits);
    std::uint64_t scaled = 0;
    if (__builtin_mul_overflow(raw, cw, &scaled))
        throw std::overflow_error("coded_mission_bytes: overflow");
    return DataSize::bytes((scaled + data / 2) / data);
}

double days_to_downlink(const MissionDataProfile& profile, const DownlinkContext& ctx) {
    ctx.validate();
    const double coded_bits = static_cast<double>(coded_mission_bytes(profile).bit_count());
    return coded_bits / (ctx.link_rate.bits_per_second * ctx.window_per_day.secs);
}

Rate required_rate(const MissionDataProfile& profile, Duration window_per_day,
                   std::int64_t available_days) {
    if (!(window_per_day.secs > 0.0) || available_days <= 0)
        throw std::domain_error("required_rate: window and day count must be positive");
    const double coded_bits = static_cast<double>(coded_mission_bytes(profile).bit_count());
    return Rate::bps(coded_bits / (window_per_day.secs * static_cast<double>(available_days)));
}

}  // namespace cubesim
