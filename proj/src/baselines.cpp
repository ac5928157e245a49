#include "ips/baselines.hpp"

#include <cassert>
#include <cstdio>
#include <numeric>

namespace ips {

IntervalPattern sample_uniform_naive(const NumericalDataset& dataset, Rng& rng) {
    IntervalPattern pattern;
    pattern.bounds.reserve(dataset.n_attributes());
    for (const auto& index : dataset.indexes) {
        const std::size_t i = static_cast<std::size_t>(rng.uniform_u64(index.size()));
        const std::size_t j = static_cast<std::size_t>(rng.uniform_u64(index.size()));
        pattern.bounds.emplace_back(index.distinct_sorted[std::min(i, j)],
                                    index.distinct_sorted[std::max(i, j)]);
    }
    return pattern;
}

namespace {

IntervalPattern try_random_cover(const NumericalDataset& dataset, Rng& rng) {
    const std::size_t n_attrs = dataset.n_attributes();
    IntervalPattern pattern;
    pattern.bounds.resize(n_attrs);

    std::vector<std::size_t> order(n_attrs);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    std::vector<std::uint32_t> covered(dataset.n_objects());
    std::iota(covered.begin(), covered.end(), 0);

    for (std::size_t m : order) {
        const auto& index = dataset.indexes[m];
        const std::size_t k = index.size();

        // Ranks of the covered objects' values: the N*_m of this step.
        std::vector<bool> in_star(k, false);
        for (std::uint32_t g : covered) {
            in_star[index.rank_of(dataset.value(g, m))] = true;
        }
        // star_ge[i] = how many starred ranks are >= i; star_list = those
        // ranks ascending, star_from[i] = first star_list slot with rank >= i.
        std::vector<std::size_t> star_list;
        std::vector<std::size_t> star_from(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
            star_from[i] = star_list.size();
            if (in_star[i]) {
                star_list.push_back(i);
            }
        }
        star_from[k] = star_list.size();
        const std::size_t s = star_list.size();

        // Valid pairs: all (i <= j) minus those with neither endpoint starred.
        const std::uint64_t all_pairs = static_cast<std::uint64_t>(k) * (k + 1) / 2;
        const std::uint64_t plain = k - s;
        const std::uint64_t total = all_pairs - plain * (plain + 1) / 2;
        std::uint64_t t = rng.uniform_u64(total);

        // Find the pair in lexicographic (i, j) order. A starred lower rank i
        // admits every j >= i; an unstarred one only the starred j >= i.
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 0;; ++i) {
            assert(i < k);
            const std::uint64_t here = in_star[i] ? (k - i) : (s - star_from[i]);
            if (t < here) {
                lo = i;
                hi = in_star[i] ? i + static_cast<std::size_t>(t)
                                : star_list[star_from[i] + static_cast<std::size_t>(t)];
                break;
            }
            t -= here;
        }
        pattern.bounds[m] = {index.distinct_sorted[lo], index.distinct_sorted[hi]};

        std::vector<std::uint32_t> still;
        still.reserve(covered.size());
        for (std::uint32_t g : covered) {
            const ScaledValue v = dataset.value(g, m);
            if (v >= pattern.bounds[m].first && v <= pattern.bounds[m].second) {
                still.push_back(g);
            }
        }
        covered = std::move(still);
    }

    if (covered.empty()) {
        pattern.bounds.clear(); // signals the (unreachable) empty-cover case
    }
    return pattern;
}

} // namespace

IntervalPattern sample_random_cover(const NumericalDataset& dataset, Rng& rng) {
    // One endpoint of every accepted interval is the value of a then-covered
    // object, and that value lies inside the closed interval, so the object
    // stays covered: the cover can never empty out. The guard below redraws
    // if that reasoning is ever violated in practice.
    for (;;) {
        IntervalPattern pattern = try_random_cover(dataset, rng);
        if (!pattern.bounds.empty()) {
            return pattern;
        }
        static bool warned = false;
        if (!warned) {
            warned = true;
            std::fprintf(stderr, "random-cover: empty cover encountered, redrawing\n");
        }
    }
}

} // namespace ips
