#pragma once

// Deterministic, splittable, counter-based PRNG.
//
// Each draw is value_i = mix64(key + i * GOLDEN), where mix64 is the
// splitmix64 finalizer; the key is derived from (seed, split path).  The
// integer stream is bit-identical on every platform; derived doubles agree
// across platforms to libm rounding (<< 1e-12).  Substreams from split()
// are independent of draw order, so trials can run in any order or
// concurrently.

#include <complex>
#include <cstdint>

namespace qcoh {

class SplitMixRng {
public:
    static constexpr const char* algorithm = "splitmix64-counter";

    explicit SplitMixRng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ULL)) {}

    // Independent substream identified by `stream`; the parent is unaffected.
    SplitMixRng split(std::uint64_t stream) const {
        SplitMixRng child(0);
        child.key_ = mix(key_ ^ mix(stream + 0x632be59bd9b4e019ULL));
        child.counter_ = 0;
        return child;
    }

    std::uint64_t seed_key() const { return key_; }

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

    // Uniform on [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (pairs cached).
    double next_gaussian();

    std::complex<double> next_complex_gaussian() { return {next_gaussian(), next_gaussian()}; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

// Seed-plus-name view used in reports; the algorithm is fixed.
struct RngConfig {
    std::uint64_t seed;
    const char* algorithm = SplitMixRng::algorithm;

    SplitMixRng make() const { return SplitMixRng(seed); }
};

} // namespace qcoh
