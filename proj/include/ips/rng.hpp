#pragma once

#include "ips/common.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ips {

// Deterministic random source. Every consumer constructs its own Rng from
// (seed, stream); draws never share state across threads. The sequence for a
// given (seed, stream) pair is part of the output-reproducibility contract:
// std::mt19937_64 seeded through std::seed_seq is fully specified by the
// standard, so identical seeds give identical bytes on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(seed),
            static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(stream),
            static_cast<std::uint32_t>(stream >> 32),
        };
        engine_.seed(seq);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw in [0, n). Rejection below 2^64 mod n keeps it unbiased.
    std::uint64_t uniform_u64(std::uint64_t n);

    // Uniform draw in [0, n) for arbitrary-precision n, by rejection over
    // fixed-width 64-bit chunks.
    BigInt uniform_below(const BigInt& n);

    // Fisher-Yates shuffle driven by uniform_u64.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_u64(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

// Index of the first cumulative entry strictly greater than r, i.e. the
// weighted pick selected by a uniform draw r in [0, total).
std::size_t cumulative_locate(const std::vector<BigInt>& cumulative, const BigInt& r);

// Draws index i with probability (cum(i) - cum(i-1)) / total, where cum is a
// nondecreasing callable on [0, n) with cum(n-1) == total > 0.
//
// Works on a lazily extended uniform real x in [0, 1): after t rounds x is
// known to lie in [U, U+1) / 2^(64t). The pick is the first i with
// cum(i) > x * total; it is resolved as soon as the whole interval of possible
// x values agrees on i, otherwise another 64-bit chunk is consumed. Because
// every comparison is homogeneous in (cum, total), scaling all weights by a
// positive constant changes neither the pick nor the number of chunks
// consumed, which is what makes seeded draw sequences invariant under
// per-attribute value scaling.
template <typename Cum>
std::size_t scale_free_pick(Cum&& cum, std::size_t n, const BigInt& total, Rng& rng) {
    BigInt u = rng.next_u64();
    unsigned rounds = 1;
    for (;;) {
        const BigInt lo_bound = u * total;             // x*total >= lo_bound / 2^(64*rounds)
        const BigInt hi_bound = (u + 1) * total;       // x*total <  hi_bound / 2^(64*rounds)
        // First i with cum(i) * 2^(64*rounds) > lo_bound.
        std::size_t lo = 0, hi = n - 1;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if ((BigInt(cum(mid)) << (64 * rounds)) > lo_bound) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if ((BigInt(cum(lo)) << (64 * rounds)) >= hi_bound) {
            return lo;
        }
        u = (u << 64) | rng.next_u64();
        ++rounds;
    }
}

} // namespace ips
