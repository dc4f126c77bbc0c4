#pragma once

#include <cstdint>

namespace nws {

// pcg64 (xsl-rr variant, 128-bit state). Seeded from a single 64-bit value
// via a splitmix64 expansion, so equal seeds give equal streams on every
// platform. Output files record "rng=pcg64" together with the seed.
class Pcg64 {
public:
    using result_type = std::uint64_t;

    explicit Pcg64(std::uint64_t seed) {
        std::uint64_t s = seed;
        const std::uint64_t a = splitmix(s);
        const std::uint64_t b = splitmix(s);
        const std::uint64_t c = splitmix(s);
        const std::uint64_t d = splitmix(s);
        state_ = (static_cast<u128>(a) << 64) | b;
        inc_ = (((static_cast<u128>(c) << 64) | d) << 1) | 1;
        next();
    }

    std::uint64_t next() {
        state_ = state_ * kMultiplier + inc_;
        const auto xored = static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
        const auto rot = static_cast<unsigned>(state_ >> 122);
        return (xored >> rot) | (xored << ((64u - rot) & 63u));
    }

    std::uint64_t operator()() { return next(); }

    // Uniform integer in [0, bound) by fixed-point scaling; bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

private:
    using u128 = unsigned __int128;

    static constexpr u128 kMultiplier = (static_cast<u128>(0x2360ed051fc65da4ull) << 64) | 0x4385df649fccf645ull;

    static std::uint64_t splitmix(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    u128 state_ = 0;
    u128 inc_ = 1;
};

} // namespace nws
