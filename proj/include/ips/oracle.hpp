#pragma once

#include "ips/common.hpp"
#include "ips/dataset.hpp"
#include "ips/patterns.hpp"
#include "ips/sampler.hpp"

#include <cstdint>
#include <vector>

namespace ips {

// The complete pattern space of a small dataset, enumerated in lexicographic
// order: attribute 0 is the most significant position, and within an
// attribute intervals are ordered by (lower rank, upper rank). Only the
// frequency array is materialized; patterns and volumes are decoded from the
// index on demand.
struct EnumeratedSpace {
    const NumericalDataset* dataset = nullptr;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> attr_sizes; // intervals per attribute, K(K+1)/2
    std::vector<std::uint64_t> strides;    // pattern index strides per attribute
    std::vector<std::uint32_t> freqs;      // frequency per pattern index
    BigInt z_f;                            // sum of freq over the space
    BigInt z_hf;                           // sum of vol x freq over the space

    IntervalPattern pattern(std::uint64_t idx) const;
    BigInt vol(std::uint64_t idx) const;
    std::uint64_t index_of(const IntervalPattern& pattern) const;
};

// Enumerates every pattern with exact freq and vol. Throws ErrorKind::usage
// when the space exceeds cap. The parallel version partitions the space by
// the first attribute's intervals and uses per-interval cover bitmasks; the
// reference twin decodes each pattern and scans the objects directly.
EnumeratedSpace enumerate_all(const NumericalDataset& dataset, std::uint64_t cap = 10'000'000,
                              int workers = 0);
EnumeratedSpace enumerate_all_ref(const NumericalDataset& dataset, std::uint64_t cap = 10'000'000);

// Exact target distribution over the whole space: freq/Z_f or vol*freq/Z_hf.
// Probabilities are exact rationals and sum to 1.
std::vector<Rational> exact_target(const EnumeratedSpace& space, Measure measure);

// The sampler's true induced distribution, composed analytically: for every
// pattern, the sum over objects of P(object) x P(bounds | object), with each
// step's probability written out literally (indicator factors included, no
// algebraic simplification). Equality with exact_target is the code-level
// embodiment of the two distribution proofs. Supports fips and hips.
std::vector<Rational> audit_sampler(const EnumeratedSpace& space, Method method);

// Brute-force double loop over all intervals of attribute m covering
// object g's value, summing their lengths. Independent check of til().
BigInt til_bruteforce(const NumericalDataset& dataset, std::size_t m, std::size_t g);

// Exact probability that the naive uniform baseline draws a pattern with
// empty cover: per attribute, pair (a, b) with a < b has probability 2/K^2
// and a degenerate pair 1/K^2.
Rational naive_empty_mass(const EnumeratedSpace& space);

} // namespace ips
