#ifndef CUBESIM_QUANTITIES_HPP
#define CUBESIM_QUANTITIES_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cubesim {

// Power-ratio decibels. The reference quantity (dBW, dBi, ...) is documented
// at each use site.
struct Decibel {
    double value = 0.0;

    constexpr Decibel() = default;
    constexpr explicit Decibel(double db) : value(db) {}

    friend constexpr Decibel operator+(Decibel a, Decibel b) { return Decibel{a.value + b.value}; }
    friend constexpr Decibel operator-(Decibel a, Decibel b) { return Decibel{a.value - b.value}; }
    constexpr Decibel operator-() const { return Decibel{-value}; }
    friend constexpr auto operator<=>(Decibel a, Decibel b) { return a.value <=> b.value; }
    friend constexpr bool operator==(Decibel a, Decibel b) { return a.value == b.value; }
};

inline double db_to_linear(Decibel d) { return std::pow(10.0, d.value / 10.0); }

inline Decibel linear_to_db(double x) {
    if (!(x > 0.0))
        throw std::domain_error("linear_to_db: argument must be positive");
    return Decibel{10.0 * std::log10(x)};
}

// Byte counts. GB is DECIMAL throughout this project: 1 GB = 1e9 bytes.
// The mission budget chain (216 images -> 0.425 GB -> 1.274 GB) is only
// consistent with decimal gigabytes.
class DataSize {
public:
    constexpr DataSize() = default;

    static constexpr DataSize bytes(std::uint64_t n) { return DataSize{n}; }

    constexpr std::uint64_t byte_count() const { return bytes_; }
    constexpr std::uint64_t bit_count() const { return bytes_ * 8; }
    constexpr double gigabytes() const { return static_cast<double>(bytes_) / 1e9; }

    friend DataSize operator+(DataSize a, DataSize b) {
        std::uint64_t sum = 0;
        if (__builtin_add_overflow(a.bytes_, b.bytes_, &sum))
            throw std::overflow_error("DataSize: addition overflow");
        return DataSize{sum};
    }
    friend DataSize operator*(DataSize a, std::uint64_t n) {
        std::uint64_t prod = 0;
        if (__builtin_mul_overflow(a.bytes_, n, &prod))
            throw std::overflow_error("DataSize: multiplication overflow");
        return DataSize{prod};
    }
    friend constexpr auto operator<=>(DataSize a, DataSize b) = default;

private:
    constexpr explicit DataSize(std::uint64_t n) : bytes_(n) {}
    std::uint64_t bytes_ = 0;
};

struct Duration {
    double secs = 0.0;

    constexpr Duration() = default;
    static Duration seconds(double s) {
        if (!(s >= 0.0) || !std::isfinite(s))
            throw std::domain_error("Duration: seconds must be finite and >= 0");
        Duration d;
        d.secs = s;
        return d;
    }
    static Duration minutes(double m) { return seconds(m * 60.0); }
    static Duration hours(double h) { return seconds(h * 3600.0); }
    static Duration days(double d) { return seconds(d * 86400.0); }

    friend constexpr auto operator<=>(Duration a, Duration b) { return a.secs <=> b.secs; }
    friend constexpr bool operator==(Duration a, Duration b) { return a.secs == b.secs; }
};

struct Rate {
    double bits_per_second = 0.0;

    constexpr Rate() = default;
    static Rate bps(double r) {
        if (!(r >= 0.0) || !std::isfinite(r))
            throw std::domain_error("Rate: bits_per_second must be finite and >= 0");
        Rate out;
        out.bits_per_second = r;
        return out;
    }
    static Rate kbps(double r) { return bps(r * 1e3); }
};

struct Frequency {
    double hertz = 1.0;

    static Frequency hz(double f) {
        if (!(f > 0.0) || !std::isfinite(f))
            throw std::domain_error("Frequency: hertz must be finite and > 0");
        Frequency out;
        out.hertz = f;
        return out;
    }
    static Frequency megahertz(double f) { return hz(f * 1e6); }
    static Frequency gigahertz(double f) { return hz(f * 1e9); }

    double megahertz_value() const { return hertz / 1e6; }

    friend constexpr auto operator<=>(Frequency a, Frequency b) { return a.hertz <=> b.hertz; }
    friend constexpr bool operator==(Frequency a, Frequency b) { return a.hertz == b.hertz; }
};

struct TemperatureC {
    double celsius = 0.0;

    constexpr TemperatureC() = default;
    constexpr explicit TemperatureC(double c) : celsius(c) {}

    friend constexpr auto operator<=>(TemperatureC a, TemperatureC b) { return a.celsius <=> b.celsius; }
    friend constexpr bool operator==(TemperatureC a, TemperatureC b) { return a.celsius == b.celsius; }
};

}  // namespace cubesim

#endif
