#pragma once

#include <array>
#include <cstdint>

namespace gls {

// Counter-based derivation of shared randomness. Every variate is a pure
// function of (master_seed, tags), so the encoder and decoders of a coupling
// can derive identical values independently, and trials can be evaluated on
// any number of workers in any order without changing a single bit.
//
// Tag slots, in order: experiment, trial, step, row, symbol.
struct SeedContext {
    std::uint64_t master_seed = 0;
    std::uint32_t experiment = 0;
    std::uint32_t trial = 0;
    std::uint32_t step = 0;
    std::uint32_t row = 0;
    std::uint32_t symbol = 0;

    [[nodiscard]] SeedContext with(std::uint32_t step_, std::uint32_t row_,
                                   std::uint32_t symbol_) const {
        SeedContext c = *this;
        c.step = step_;
        c.row = row_;
        c.symbol = symbol_;
        return c;
    }
};

// 64-bit keyed mix of the full tag tuple. Chains a bijective avalanche over
// the absorbed words, so tuples differing in any single slot can never
// collide.
std::uint64_t derive_word(const SeedContext& ctx, std::uint32_t lane = 0);

// Uniform draw strictly inside (0,1); never 0 or 1, so -ln(u) is finite and
// nonzero. The 53-bit mapping ((word >> 11) + 0.5) * 2^-53 keeps both
// endpoints unreachable in IEEE double arithmetic.
double derive_uniform(const SeedContext& ctx, std::uint32_t lane = 0);

// Exp(1) variate, -ln(derive_uniform(ctx)).
double exp_variate(const SeedContext& ctx);

// Standard normal via Box-Muller on lanes 0 and 1 of the context.
double normal_variate(const SeedContext& ctx);

// Uniform integer in {0, ..., bound-1} by multiply-shift on the mixed word.
std::uint32_t uniform_index(const SeedContext& ctx, std::uint32_t bound,
                            std::uint32_t lane = 0);

} // namespace gls
