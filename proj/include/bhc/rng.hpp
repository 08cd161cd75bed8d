#pragma once

#include <cstdint>

namespace bhc {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream.
///
/// A stream is identified by (seed, stream). Its key is
/// splitmix64_mix(seed ^ splitmix64_mix(stream)), and draw i (0-based) is
/// splitmix64_mix(key + (i + 1) * 0x9e3779b97f4a7c15), which is the plain
/// SplitMix64 sequence started from state `key`. Any draw can be recomputed
/// from (seed, stream, i) alone.
class CounterRng {
public:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    constexpr explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(splitmix64_mix(seed ^ splitmix64_mix(stream)))
    {
    }

    constexpr std::uint64_t at(std::uint64_t index) const { return splitmix64_mix(key_ + (index + 1) * kGolden); }

    constexpr std::uint64_t next() { return at(counter_++); }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// +1 or -1 with equal probability (top bit of the draw).
    constexpr int sign() { return (next() >> 63) ? -1 : 1; }

    constexpr std::uint64_t key() const { return key_; }
    constexpr std::uint64_t position() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace bhc
