#ifndef CUBESIM_DATA_BUDGET_HPP
#define CUBESIM_DATA_BUDGET_HPP

#include "cubesim/quantities.hpp"

namespace cubesim {

// Payload imaging profile plus the downlink channel coding overhead.
// Defaults reproduce the mission baseline: 8-bit 3-channel 1280x1024 images,
// compression ratio 2, one image per 20 min over a 72 h run, 3 runs, and a
// 3952/5184 codeword structure.
struct MissionDataProfile {
    std::int64_t image_width = 1280;   // pixels
    std::int64_t image_height = 1024;  // pixels
    std::int64_t channels = 3;
    std::int64_t bit_depth = 8;        // bits per channel
    double compression_ratio = 2.0;
    Duration cadence = Duration::minutes(20);
    Duration run_duration = Duration::hours(72);
    std::int64_t runs = 3;
    std::int64_t code_data_bits = 3952;
    std::int64_t code_codeword_bits = 5184;
    // When set, coding overhead is applied per image with ceil-to-codeword
    // padding instead of as a pure ratio on the mission total.
    bool pad_to_codeword = false;

    void validate() const;
};

struct DownlinkContext {
    Duration window_per_day = Duration::seconds(458.86);
    std::int64_t mission_days = 365;
    Rate link_rate = Rate::kbps(184.8);

    void validate() const;
};

std::int64_t images_per_run(const MissionDataProfile& profile);

// Compressed size of one image, rounded to whole bytes.
DataSize image_bytes(const MissionDataProfile& profile);

DataSize raw_run_bytes(const MissionDataProfile& profile);
DataSize raw_mission_bytes(const MissionDataProfile& profile);
DataSize coded_mission_bytes(const MissionDataProfile& profile);

double days_to_downlink(const MissionDataProfile& profile, const DownlinkContext& ctx);
Rate required_rate(const MissionDataProfile& profile, Duration window_per_day,
                   std::int64_t available_days);

}  // namespace cubesim

#endif
