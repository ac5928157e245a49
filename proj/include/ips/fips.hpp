#pragma once

#include "ips/common.hpp"
#include "ips/dataset.hpp"
#include "ips/patterns.hpp"
#include "ips/rng.hpp"

#include <vector>

namespace ips {

// Preprocessed state for frequency-proportional sampling. Object g carries
// weight NIP(g) = prod over attributes of |I(v)| * |J(v)|, the exact number of
// patterns covering g; Z_f is their sum.
struct FipsState {
    const NumericalDataset* dataset = nullptr;
    std::vector<BigInt> nip_weights;
    std::vector<BigInt> cumulative;
    BigInt z_f;
};

// Number of interval patterns covering object g.
BigInt nip(const NumericalDataset& dataset, std::size_t g);

// Parallel per-object weight computation; serial twin kept as the reference.
FipsState preprocess_fips(const NumericalDataset& dataset, int workers = 0);
FipsState preprocess_fips_ref(const NumericalDataset& dataset);

// One draw: object g with probability NIP(g)/Z_f (uniform big-integer draw in
// [0, Z_f) located by binary search), then per attribute a lower bound
// uniformly from I(v) and an upper bound uniformly from J(v). The result
// always covers g.
IntervalPattern sample_fips(const FipsState& state, Rng& rng);

// k independent draws with replacement. Draw i consumes its own stream
// Rng(seed, i), so the output is byte-identical for any worker count.
std::vector<IntervalPattern> sample_fips_k(const FipsState& state, std::size_t k, std::uint64_t seed,
                                           int workers = 0);
std::vector<IntervalPattern> sample_fips_k_ref(const FipsState& state, std::size_t k,
                                               std::uint64_t seed);

} // namespace ips
