#include "ips/hips.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cassert>

namespace ips {

namespace {

// Shared pieces of the TIL decomposition for value rank p in an attribute of
// K distinct values: I = ranks [0, p], J = ranks [p, K-1].
struct TilParts {
    std::size_t p;
    std::size_t k;
    BigInt sum_i; // sum of values in I
    BigInt sum_j; // sum of values in J
};

TilParts til_parts(const NumericalDataset& dataset, std::size_t m, std::size_t g) {
    const auto& index = dataset.indexes[m];
    TilParts parts;
    parts.p = index.rank_of(dataset.value(g, m));
    parts.k = index.size();
    parts.sum_i = index.prefix_sums[parts.p];
    parts.sum_j = index.range_sum(parts.p, parts.k - 1);
    return parts;
}

} // namespace

BigInt til(const NumericalDataset& dataset, std::size_t m, std::size_t g) {
    const TilParts t = til_parts(dataset, m, g);
    return t.sum_j * (t.p + 1) - t.sum_i * (t.k - t.p);
}

BigInt iph(const NumericalDataset& dataset, std::size_t g) {
    BigInt w = 1;
    for (std::size_t m = 0; m < dataset.n_attributes(); ++m) {
        w *= til(dataset, m, g);
        if (w == 0) {
            return w;
        }
    }
    return w;
}

BoundWeightView bound_weight_view(const NumericalDataset& dataset, std::size_t m, std::size_t g) {
    const auto& index = dataset.indexes[m];
    const TilParts t = til_parts(dataset, m, g);
    const BigInt n_j = t.k - t.p;
    BoundWeightView view;
    view.lb_weights.reserve(t.p + 1);
    view.lb_cumulative.reserve(t.p + 1);
    BigInt running = 0;
    for (std::size_t i = 0; i <= t.p; ++i) {
        BigInt w = t.sum_j - n_j * index.distinct_sorted[i];
        running += w;
        view.lb_weights.push_back(std::move(w));
        view.lb_cumulative.push_back(running);
    }
    view.total = running;
    return view;
}

namespace {

HipsState finish_state(const NumericalDataset& dataset, std::vector<BigInt> weights) {
    HipsState state;
    state.dataset = &dataset;
    state.iph_weights = std::move(weights);
    state.cumulative.reserve(state.iph_weights.size());
    BigInt running = 0;
    for (const BigInt& w : state.iph_weights) {
        running += w;
        state.cumulative.push_back(running);
    }
    state.z_hf = running;
    if (state.z_hf == 0) {
        throw Error(ErrorKind::degenerate_space,
                    "every interval pattern has zero hyper-volume; volume-proportional sampling "
                    "is undefined on this dataset");
    }
    return state;
}

} // namespace

HipsState preprocess_hips(const NumericalDataset& dataset, int workers) {
    const std::size_t n = dataset.n_objects();
    std::vector<BigInt> weights(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
    for (std::size_t g = 0; g < n; ++g) {
        weights[g] = iph(dataset, g);
    }
    (void)workers;
    return finish_state(dataset, std::move(weights));
}

HipsState preprocess_hips_ref(const NumericalDataset& dataset) {
    std::vector<BigInt> weights;
    weights.reserve(dataset.n_objects());
    for (std::size_t g = 0; g < dataset.n_objects(); ++g) {
        weights.push_back(iph(dataset, g));
    }
    return finish_state(dataset, std::move(weights));
}

IntervalPattern sample_hips(const HipsState& state, Rng& rng) {
    const NumericalDataset& ds = *state.dataset;
    const std::size_t g = scale_free_pick([&](std::size_t i) -> const BigInt& { return state.cumulative[i]; },
                                          state.cumulative.size(), state.z_hf, rng);
    IntervalPattern pattern;
    pattern.bounds.reserve(ds.n_attributes());
    for (std::size_t m = 0; m < ds.n_attributes(); ++m) {
        const auto& index = ds.indexes[m];
        const TilParts t = til_parts(ds, m, g);
        const BigInt n_j = t.k - t.p;
        const BigInt attr_total = t.sum_j * (t.p + 1) - t.sum_i * n_j; // til(m, g)
        assert(attr_total > 0);

        // Lower bound: cumulative weight of ranks [0, i] is
        // (i+1) * sum_j - |J| * prefix(i).
        const auto lb_cum = [&](std::size_t i) {
            return BigInt(i + 1) * t.sum_j - n_j * index.prefix_sums[i];
        };
        const std::size_t lo = scale_free_pick(lb_cum, t.p + 1, attr_total, rng);
        const BigInt a = index.distinct_sorted[lo];

        // Upper bound: candidates are ranks [p, K-1] with weight b - a;
        // cumulative over the first u+1 candidates is their value sum minus
        // (u+1) * a.
        const BigInt ub_total = t.sum_j - n_j * a; // == w_lb(a) > 0
        const auto ub_cum = [&](std::size_t u) {
            return index.range_sum(t.p, t.p + u) - BigInt(u + 1) * a;
        };
        const std::size_t hi = t.p + scale_free_pick(ub_cum, t.k - t.p, ub_total, rng);
        pattern.bounds.emplace_back(index.distinct_sorted[lo], index.distinct_sorted[hi]);
    }
    return pattern;
}

std::vector<IntervalPattern> sample_hips_k(const HipsState& state, std::size_t k, std::uint64_t seed,
                                           int workers) {
    std::vector<IntervalPattern> out(k);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(seed, i);
        out[i] = sample_hips(state, rng);
    }
    (void)workers;
    return out;
}

std::vector<IntervalPattern> sample_hips_k_ref(const HipsState& state, std::size_t k,
                                               std::uint64_t seed) {
    std::vector<IntervalPattern> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(seed, i);
        out[i] = sample_hips(state, rng);
    }
    return out;
}

bool uniform_comparison(const HipsState& state, std::size_t g) {
    return state.iph_weights[g] * state.dataset->n_objects() >= state.z_hf;
}

} // namespace ips
