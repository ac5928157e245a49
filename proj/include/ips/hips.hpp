#pragma once

#include "ips/common.hpp"
#include "ips/dataset.hpp"
#include "ips/patterns.hpp"
#include "ips/rng.hpp"

#include <vector>

namespace ips {

// Preprocessed state for (hyper-volume x frequency)-proportional sampling.
// Object g carries weight IPH(g) = prod over attributes of TIL(m, g), the
// total hyper-volume of the patterns covering g.
struct HipsState {
    const NumericalDataset* dataset = nullptr;
    std::vector<BigInt> iph_weights;
    std::vector<BigInt> cumulative;
    BigInt z_hf;
};

// Materialized lower-bound weight table for one (attribute, object) pair, used
// for audits and tests; the sampler itself evaluates the same cumulative sums
// analytically in O(1) per probe.
struct BoundWeightView {
    std::vector<BigInt> lb_weights;    // w_lb(v) = (sum over J) - |J| * v, for v in I
    std::vector<BigInt> lb_cumulative;
    BigInt total;                      // == til(m, g)
};

// Sum of interval lengths over all intervals of attribute m covering
// object g's value, from prefix sums in O(1).
BigInt til(const NumericalDataset& dataset, std::size_t m, std::size_t g);

// Total hyper-volume of the patterns covering g: prod over m of til(m, g).
BigInt iph(const NumericalDataset& dataset, std::size_t g);

BoundWeightView bound_weight_view(const NumericalDataset& dataset, std::size_t m, std::size_t g);

// Throws ErrorKind::degenerate_space when Z_hf = 0 (every pattern has zero
// hyper-volume); sampling proportionally to vol x freq is then meaningless.
HipsState preprocess_hips(const NumericalDataset& dataset, int workers = 0);
HipsState preprocess_hips_ref(const NumericalDataset& dataset);

// One draw: object g with probability IPH(g)/Z_hf, then per attribute a lower
// bound a proportional to w_lb(a) and an upper bound b proportional to b - a.
// The result covers g and has positive hyper-volume. All three weighted picks
// run on the scale-free lazy-real scheme, so seeded draw sequences are
// invariant under positive per-attribute scaling.
IntervalPattern sample_hips(const HipsState& state, Rng& rng);

std::vector<IntervalPattern> sample_hips_k(const HipsState& state, std::size_t k, std::uint64_t seed,
                                           int workers = 0);
std::vector<IntervalPattern> sample_hips_k_ref(const HipsState& state, std::size_t k,
                                               std::uint64_t seed);

// True iff object g is at least as likely to anchor a draw as under uniform
// object sampling: IPH(g) * |G| >= Z_hf, compared in exact integers.
bool uniform_comparison(const HipsState& state, std::size_t g);

} // namespace ips
