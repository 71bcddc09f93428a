#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace hadamard {

// Counter-based stream: output i is a pure function of (seed, stream id, i),
// so replicates can be handed to any worker without sharing state.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_(derive_key(seed, stream_id)) {}

    std::uint64_t next_u64() {
        return mix(key_ + (++counter_) * golden);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in (0,1]; safe for log()
    double next_double_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // uniform integer in [0, n); bias is O(n/2^64)
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Box-Muller pair; consumes exactly two uniforms
    void next_gaussian_pair(double& g0, double& g1) {
        double u1 = next_double_pos();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * pi * u2;
        g0 = r * std::cos(a);
        g1 = r * std::sin(a);
    }

    double next_gaussian() {
        double g0, g1;
        next_gaussian_pair(g0, g1);
        return g0;
    }

    // chi^2 with df degrees of freedom; sum of squares for small df,
    // Marsaglia-Tsang gamma for large df
    double next_chi2(int df) {
        if (df <= 340) {
            double s = 0.0, g0, g1;
            int i = 0;
            for (; i + 1 < df; i += 2) {
                next_gaussian_pair(g0, g1);
                s += g0 * g0 + g1 * g1;
            }
            if (i < df) {
                double z = next_gaussian();
                s += z * z;
            }
            return s;
        }
        return 2.0 * next_gamma(0.5 * df);
    }

    // Gamma(shape, 1) for shape >= 1 (Marsaglia-Tsang)
    double next_gamma(double shape) {
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_gaussian();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = next_double_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

  private:
    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;
    static constexpr double pi = 3.14159265358979323846;

    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream_id) {
        return mix(mix(seed + golden) ^ stream_id);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Stream ids are hashes of (experiment tag, indices); FNV-1a over the tag,
// then mixed with each index.
inline std::uint64_t stream_id(std::string_view tag, std::uint64_t a = 0,
                               std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : tag) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    h = RngStream::mix(h + a * 0x9E3779B97F4A7C15ull);
    h = RngStream::mix(h + b * 0xC2B2AE3D27D4EB4Full);
    h = RngStream::mix(h + c * 0x165667B19E3779F9ull);
    return h;
}

inline RngStream make_stream(std::uint64_t seed, std::string_view tag,
                             std::uint64_t a = 0, std::uint64_t b = 0,
                             std::uint64_t c = 0) {
    return RngStream(seed, stream_id(tag, a, b, c));
}

}  // namespace hadamard
