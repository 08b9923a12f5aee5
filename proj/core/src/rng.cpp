#include "gls/rng.hpp"

#include <cmath>

namespace gls {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer; bijective on 64-bit words.
inline std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t absorb(std::uint64_t h, std::uint64_t w) {
    return avalanche(h + kGamma + w);
}

} // namespace

std::uint64_t derive_word(const SeedContext& ctx, std::uint32_t lane) {
    std::uint64_t h = ctx.master_seed;
    h = absorb(h, (std::uint64_t(ctx.experiment) << 32) | ctx.trial);
    h = absorb(h, (std::uint64_t(ctx.step) << 32) | ctx.row);
    h = absorb(h, (std::uint64_t(ctx.symbol) << 32) | lane);
    return absorb(h, 0);
}

double derive_uniform(const SeedContext& ctx, std::uint32_t lane) {
    const std::uint64_t w = derive_word(ctx, lane);
    return (static_cast<double>(w >> 11) + 0.5) * 0x1.0p-53;
}

double exp_variate(const SeedContext& ctx) {
    return -std::log(derive_uniform(ctx));
}

double normal_variate(const SeedContext& ctx) {
    const double u1 = derive_uniform(ctx, 0);
    const double u2 = derive_uniform(ctx, 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

std::uint32_t uniform_index(const SeedContext& ctx, std::uint32_t bound,
                            std::uint32_t lane) {
    const std::uint64_t w = derive_word(ctx, lane);
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(w) * bound) >> 64);
}

} // namespace gls
