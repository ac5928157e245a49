#include "ips/oracle.hpp"

#include "ips/fips.hpp"
#include "ips/hips.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <bit>
#include <cassert>

namespace ips {

namespace {

// Interval t of an attribute with K distinct values, ordered by
// (lower rank, upper rank): the intervals with lower rank r occupy a block of
// K - r consecutive indexes.
std::uint64_t interval_block_start(std::uint64_t lo, std::uint64_t k) {
    return lo * k - lo * (lo - 1) / 2;
}

std::pair<std::size_t, std::size_t> decode_interval(std::uint64_t t, std::size_t k) {
    std::uint64_t lo = 0, hi = k - 1;
    while (lo < hi) { // largest lo with block_start(lo) <= t
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (interval_block_start(mid, k) <= t) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return {static_cast<std::size_t>(lo),
            static_cast<std::size_t>(lo + (t - interval_block_start(lo, k)))};
}

std::uint64_t encode_interval(std::size_t lo, std::size_t hi, std::size_t k) {
    return interval_block_start(lo, k) + (hi - lo);
}

struct SpaceShape {
    std::uint64_t count;
    std::vector<std::uint64_t> attr_sizes;
    std::vector<std::uint64_t> strides;
};

SpaceShape space_shape(const NumericalDataset& dataset, std::uint64_t cap) {
    SpaceShape shape;
    const std::size_t n_attrs = dataset.n_attributes();
    shape.attr_sizes.reserve(n_attrs);
    BigInt total = 1;
    for (const auto& index : dataset.indexes) {
        const std::uint64_t k = index.size();
        shape.attr_sizes.push_back(k * (k + 1) / 2);
        total *= shape.attr_sizes.back();
    }
    if (total > cap) {
        throw Error(ErrorKind::usage, "pattern space has " + total.str() +
                                          " patterns, above the enumeration cap of " +
                                          std::to_string(cap));
    }
    shape.count = total.convert_to<std::uint64_t>();
    shape.strides.assign(n_attrs, 1);
    for (std::size_t m = n_attrs; m-- > 1;) {
        shape.strides[m - 1] = shape.strides[m] * shape.attr_sizes[m];
    }
    return shape;
}

EnumeratedSpace make_space(const NumericalDataset& dataset, SpaceShape shape) {
    EnumeratedSpace space;
    space.dataset = &dataset;
    space.count = shape.count;
    space.attr_sizes = std::move(shape.attr_sizes);
    space.strides = std::move(shape.strides);
    space.freqs.assign(space.count, 0);
    return space;
}

// Per-attribute interval lengths (scaled, nonnegative) for volume products.
std::vector<std::vector<std::uint64_t>> interval_lengths(const NumericalDataset& dataset) {
    std::vector<std::vector<std::uint64_t>> lens(dataset.n_attributes());
    for (std::size_t m = 0; m < dataset.n_attributes(); ++m) {
        const auto& w = dataset.indexes[m].distinct_sorted;
        const std::size_t k = w.size();
        lens[m].reserve(k * (k + 1) / 2);
        for (std::size_t lo = 0; lo < k; ++lo) {
            for (std::size_t hi = lo; hi < k; ++hi) {
                lens[m].push_back(static_cast<std::uint64_t>(w[hi]) - static_cast<std::uint64_t>(w[lo]));
            }
        }
    }
    return lens;
}

} // namespace

IntervalPattern EnumeratedSpace::pattern(std::uint64_t idx) const {
    assert(idx < count);
    IntervalPattern out;
    const std::size_t n_attrs = dataset->n_attributes();
    out.bounds.reserve(n_attrs);
    for (std::size_t m = 0; m < n_attrs; ++m) {
        const std::uint64_t t = (idx / strides[m]) % attr_sizes[m];
        const auto& w = dataset->indexes[m].distinct_sorted;
        const auto [lo, hi] = decode_interval(t, w.size());
        out.bounds.emplace_back(w[lo], w[hi]);
    }
    return out;
}

BigInt EnumeratedSpace::vol(std::uint64_t idx) const {
    return hyper_volume(pattern(idx));
}

std::uint64_t EnumeratedSpace::index_of(const IntervalPattern& p) const {
    if (p.bounds.size() != dataset->n_attributes()) {
        throw Error(ErrorKind::usage, "pattern dimension does not match the dataset");
    }
    std::uint64_t idx = 0;
    for (std::size_t m = 0; m < p.bounds.size(); ++m) {
        const auto& index = dataset->indexes[m];
        const auto lo = index.find_rank(p.bounds[m].first);
        const auto hi = index.find_rank(p.bounds[m].second);
        if (!lo || !hi || *lo > *hi) {
            throw Error(ErrorKind::usage, "pattern bounds are not attribute values of the dataset");
        }
        idx += strides[m] * encode_interval(*lo, *hi, index.size());
    }
    return idx;
}

namespace {

// Nested odometer walk over attributes [depth..M), AND-ing cover masks and
// multiplying interval lengths on the way down. Writes freq for every pattern
// under the fixed prefix and accumulates the two normalization sums.
struct MaskWalker {
    const std::vector<std::vector<std::uint64_t>>* masks; // per attr: L_m x words
    const std::vector<std::vector<std::uint64_t>>* lens;
    std::vector<std::uint32_t>* freqs;
    std::size_t n_attrs;
    std::size_t words;

    std::uint64_t sum_freq = 0;
    BigInt sum_vol_freq = 0;

    void walk(std::size_t depth, std::uint64_t base_idx, const std::vector<std::uint64_t>& partial,
              const BigInt& vol_partial) {
        const auto& attr_masks = (*masks)[depth];
        const auto& attr_lens = (*lens)[depth];
        const std::uint64_t n_intervals = attr_lens.size();
        const bool leaf = depth + 1 == n_attrs;
        std::vector<std::uint64_t> next(words);
        for (std::uint64_t t = 0; t < n_intervals; ++t) {
            std::uint32_t freq = 0;
            for (std::size_t wd = 0; wd < words; ++wd) {
                next[wd] = partial[wd] & attr_masks[t * words + wd];
                freq += static_cast<std::uint32_t>(std::popcount(next[wd]));
            }
            if (leaf) {
                (*freqs)[base_idx + t] = freq;
                if (freq > 0) {
                    sum_freq += freq;
                    if (attr_lens[t] > 0 && vol_partial != 0) {
                        sum_vol_freq += vol_partial * attr_lens[t] * freq;
                    }
                }
            } else if (freq > 0) {
                // Empty prefixes are skipped: freqs is pre-zeroed and they
                // contribute nothing to either sum.
                walk(depth + 1, base_idx + t * stride(depth), next, vol_partial * attr_lens[t]);
            }
        }
    }

    std::uint64_t stride(std::size_t depth) const {
        std::uint64_t s = 1;
        for (std::size_t m = depth + 1; m < n_attrs; ++m) {
            s *= (*lens)[m].size();
        }
        return s;
    }
};

std::vector<std::vector<std::uint64_t>> cover_masks(const NumericalDataset& dataset,
                                                    std::size_t words) {
    std::vector<std::vector<std::uint64_t>> masks(dataset.n_attributes());
    for (std::size_t m = 0; m < dataset.n_attributes(); ++m) {
        const auto& index = dataset.indexes[m];
        const std::size_t k = index.size();
        // Objects holding each rank.
        std::vector<std::uint64_t> rank_mask(k * words, 0);
        for (std::size_t g = 0; g < dataset.n_objects(); ++g) {
            const std::size_t r = index.rank_of(dataset.value(g, m));
            rank_mask[r * words + g / 64] |= std::uint64_t{1} << (g % 64);
        }
        auto& out = masks[m];
        out.assign(k * (k + 1) / 2 * words, 0);
        std::uint64_t t = 0;
        for (std::size_t lo = 0; lo < k; ++lo) {
            for (std::size_t hi = lo; hi < k; ++hi, ++t) {
                for (std::size_t wd = 0; wd < words; ++wd) {
                    out[t * words + wd] = (hi == lo ? 0 : out[(t - 1) * words + wd]) |
                                          rank_mask[hi * words + wd];
                }
            }
        }
    }
    return masks;
}

} // namespace

EnumeratedSpace enumerate_all(const NumericalDataset& dataset, std::uint64_t cap, int workers) {
    EnumeratedSpace space = make_space(dataset, space_shape(dataset, cap));
    const std::size_t words = (dataset.n_objects() + 63) / 64;
    const auto masks = cover_masks(dataset, words);
    const auto lens = interval_lengths(dataset);
    const std::size_t n_attrs = dataset.n_attributes();

    const std::uint64_t first = space.attr_sizes[0];
    std::vector<std::uint64_t> partial_freq(first, 0);
    std::vector<BigInt> partial_vol_freq(first);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
    for (std::uint64_t t0 = 0; t0 < first; ++t0) {
        MaskWalker walker{&masks, &lens, &space.freqs, n_attrs, words, 0, 0};
        if (n_attrs == 1) {
            // Single-attribute space: evaluate interval t0 directly.
            std::uint32_t freq = 0;
            for (std::size_t wd = 0; wd < words; ++wd) {
                freq += static_cast<std::uint32_t>(std::popcount(masks[0][t0 * words + wd]));
            }
            space.freqs[t0] = freq;
            walker.sum_freq = freq;
            walker.sum_vol_freq = BigInt(lens[0][t0]) * freq;
        } else {
            std::vector<std::uint64_t> top(words);
            std::uint32_t freq = 0;
            for (std::size_t wd = 0; wd < words; ++wd) {
                top[wd] = masks[0][t0 * words + wd];
                freq += static_cast<std::uint32_t>(std::popcount(top[wd]));
            }
            if (freq > 0) {
                walker.walk(1, t0 * space.strides[0], top, BigInt(lens[0][t0]));
            }
        }
        partial_freq[t0] = walker.sum_freq;
        partial_vol_freq[t0] = std::move(walker.sum_vol_freq);
    }
    (void)workers;

    space.z_f = 0;
    space.z_hf = 0;
    for (std::uint64_t t0 = 0; t0 < first; ++t0) {
        space.z_f += partial_freq[t0];
        space.z_hf += partial_vol_freq[t0];
    }
    return space;
}

EnumeratedSpace enumerate_all_ref(const NumericalDataset& dataset, std::uint64_t cap) {
    EnumeratedSpace space = make_space(dataset, space_shape(dataset, cap));
    space.z_f = 0;
    space.z_hf = 0;
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        const IntervalPattern p = space.pattern(idx);
        const std::uint32_t f = frequency(p, dataset);
        space.freqs[idx] = f;
        space.z_f += f;
        space.z_hf += hyper_volume(p) * f;
    }
    return space;
}

std::vector<Rational> exact_target(const EnumeratedSpace& space, Measure measure) {
    const BigInt& z = measure == Measure::freq ? space.z_f : space.z_hf;
    if (z == 0) {
        throw Error(ErrorKind::degenerate_space,
                    "the selected measure is zero on the whole pattern space");
    }
    std::vector<Rational> out(space.count);
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        if (measure == Measure::freq) {
            out[idx] = Rational(space.freqs[idx], z);
        } else if (space.freqs[idx] > 0) {
            out[idx] = Rational(space.vol(idx) * space.freqs[idx], z);
        }
    }
    return out;
}

namespace {

struct RankedPattern {
    std::vector<std::pair<std::size_t, std::size_t>> ranks;
};

RankedPattern rank_pattern(const EnumeratedSpace& space, std::uint64_t idx) {
    RankedPattern out;
    const auto& ds = *space.dataset;
    out.ranks.reserve(ds.n_attributes());
    for (std::size_t m = 0; m < ds.n_attributes(); ++m) {
        const std::uint64_t t = (idx / space.strides[m]) % space.attr_sizes[m];
        out.ranks.push_back(decode_interval(t, ds.indexes[m].size()));
    }
    return out;
}

} // namespace

std::vector<Rational> audit_sampler(const EnumeratedSpace& space, Method method) {
    const NumericalDataset& ds = *space.dataset;
    const std::size_t n_objects = ds.n_objects();
    const std::size_t n_attrs = ds.n_attributes();

    if (method != Method::fips && method != Method::hips) {
        throw Error(ErrorKind::usage, "audit supports only fips and hips");
    }

    // Per-object step-probability ingredients.
    std::vector<BigInt> object_weight(n_objects);
    BigInt z = 0;
    std::vector<std::vector<std::size_t>> obj_rank(n_objects, std::vector<std::size_t>(n_attrs));
    for (std::size_t g = 0; g < n_objects; ++g) {
        object_weight[g] = method == Method::fips ? nip(ds, g) : iph(ds, g);
        z += object_weight[g];
        for (std::size_t m = 0; m < n_attrs; ++m) {
            obj_rank[g][m] = ds.rank(g, m);
        }
    }
    if (z == 0) {
        throw Error(ErrorKind::degenerate_space, "object weights are all zero");
    }

    std::vector<Rational> out(space.count);
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        const RankedPattern rp = rank_pattern(space, idx);
        Rational total = 0;
        for (std::size_t g = 0; g < n_objects; ++g) {
            if (object_weight[g] == 0) {
                continue; // drawn with probability 0
            }
            Rational p = Rational(object_weight[g], z);
            bool possible = true;
            for (std::size_t m = 0; m < n_attrs && possible; ++m) {
                const auto [lo, hi] = rp.ranks[m];
                const std::size_t r = obj_rank[g][m];
                const auto& index = ds.indexes[m];
                const std::size_t k = index.size();
                if (lo > r || hi < r) {
                    possible = false; // bound outside the candidate sets I/J
                    break;
                }
                if (method == Method::fips) {
                    // Uniform lower bound over I(v), uniform upper over J(v).
                    p *= Rational(1, BigInt(r + 1) * (k - r));
                } else {
                    // Lower bound with weight w_lb(a), then upper bound with
                    // weight (b - a) out of total w_lb(a).
                    const BigInt til_total = til(ds, m, g);
                    const BigInt sum_j = index.range_sum(r, k - 1);
                    const BigInt w_lb = sum_j - BigInt(k - r) * index.distinct_sorted[lo];
                    if (w_lb == 0) {
                        possible = false; // lower bound has zero draw weight
                        break;
                    }
                    const BigInt len = BigInt(index.distinct_sorted[hi]) - index.distinct_sorted[lo];
                    p *= Rational(w_lb, til_total);
                    p *= Rational(len, w_lb);
                }
            }
            if (possible) {
                total += p;
            }
        }
        out[idx] = std::move(total);
    }
    return out;
}

BigInt til_bruteforce(const NumericalDataset& dataset, std::size_t m, std::size_t g) {
    const auto& index = dataset.indexes[m];
    const std::size_t r = index.rank_of(dataset.value(g, m));
    BigInt sum = 0;
    for (std::size_t lo = 0; lo <= r; ++lo) {
        for (std::size_t hi = r; hi < index.size(); ++hi) {
            sum += BigInt(index.distinct_sorted[hi]) - index.distinct_sorted[lo];
        }
    }
    return sum;
}

Rational naive_empty_mass(const EnumeratedSpace& space) {
    const NumericalDataset& ds = *space.dataset;
    Rational mass = 0;
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        if (space.freqs[idx] != 0) {
            continue;
        }
        const RankedPattern rp = rank_pattern(space, idx);
        Rational p = 1;
        for (std::size_t m = 0; m < ds.n_attributes(); ++m) {
            const auto [lo, hi] = rp.ranks[m];
            const BigInt k = ds.indexes[m].size();
            p *= Rational(lo == hi ? 1 : 2, k * k);
        }
        mass += p;
    }
    return mass;
}

} // namespace ips
