#include "ips/fips.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ips {

BigInt nip(const NumericalDataset& dataset, std::size_t g) {
    BigInt w = 1;
    for (std::size_t m = 0; m < dataset.n_attributes(); ++m) {
        const auto& index = dataset.indexes[m];
        const std::size_t r = index.rank_of(dataset.value(g, m));
        w *= BigInt(r + 1) * (index.size() - r);
    }
    return w;
}

namespace {

FipsState finish_state(const NumericalDataset& dataset, std::vector<BigInt> weights) {
    FipsState state;
    state.dataset = &dataset;
    state.nip_weights = std::move(weights);
    state.cumulative.reserve(state.nip_weights.size());
    BigInt running = 0;
    for (const BigInt& w : state.nip_weights) {
        running += w;
        state.cumulative.push_back(running);
    }
    state.z_f = running;
    return state;
}

} // namespace

FipsState preprocess_fips(const NumericalDataset& dataset, int workers) {
    const std::size_t n = dataset.n_objects();
    std::vector<BigInt> weights(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
    for (std::size_t g = 0; g < n; ++g) {
        weights[g] = nip(dataset, g);
    }
    (void)workers;
    return finish_state(dataset, std::move(weights));
}

FipsState preprocess_fips_ref(const NumericalDataset& dataset) {
    std::vector<BigInt> weights;
    weights.reserve(dataset.n_objects());
    for (std::size_t g = 0; g < dataset.n_objects(); ++g) {
        weights.push_back(nip(dataset, g));
    }
    return finish_state(dataset, std::move(weights));
}

IntervalPattern sample_fips(const FipsState& state, Rng& rng) {
    const NumericalDataset& ds = *state.dataset;
    const std::size_t g = cumulative_locate(state.cumulative, rng.uniform_below(state.z_f));
    IntervalPattern pattern;
    pattern.bounds.reserve(ds.n_attributes());
    for (std::size_t m = 0; m < ds.n_attributes(); ++m) {
        const auto& index = ds.indexes[m];
        const std::size_t r = index.rank_of(ds.value(g, m));
        const std::size_t lo = static_cast<std::size_t>(rng.uniform_u64(r + 1));
        const std::size_t hi = r + static_cast<std::size_t>(rng.uniform_u64(index.size() - r));
        pattern.bounds.emplace_back(index.distinct_sorted[lo], index.distinct_sorted[hi]);
    }
    return pattern;
}

std::vector<IntervalPattern> sample_fips_k(const FipsState& state, std::size_t k, std::uint64_t seed,
                                           int workers) {
    std::vector<IntervalPattern> out(k);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(seed, i);
        out[i] = sample_fips(state, rng);
    }
    (void)workers;
    return out;
}

std::vector<IntervalPattern> sample_fips_k_ref(const FipsState& state, std::size_t k,
                                               std::uint64_t seed) {
    std::vector<IntervalPattern> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(seed, i);
        out[i] = sample_fips(state, rng);
    }
    return out;
}

} // namespace ips
