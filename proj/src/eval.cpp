#include "ips/eval.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

namespace ips {

std::uint64_t rep_seed(std::uint64_t base, std::uint64_t rep) {
    return splitmix64(base ^ splitmix64(rep));
}

std::vector<BigInt> measure_curve(const std::vector<IntervalPattern>& patterns,
                                  const NumericalDataset& dataset, Measure measure) {
    std::vector<BigInt> values;
    values.reserve(patterns.size());
    for (const auto& p : patterns) {
        values.push_back(measure_value(p, dataset, measure));
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

std::vector<Rational> mean_curve(const std::vector<std::vector<BigInt>>& curves) {
    if (curves.empty()) {
        throw Error(ErrorKind::usage, "mean_curve: no curves");
    }
    const std::size_t len = curves.front().size();
    std::vector<Rational> mean(len, Rational(0));
    for (const auto& curve : curves) {
        if (curve.size() != len) {
            throw Error(ErrorKind::usage, "mean_curve: curves of different lengths");
        }
        for (std::size_t i = 0; i < len; ++i) {
            mean[i] += curve[i];
        }
    }
    for (auto& v : mean) {
        v /= static_cast<int>(curves.size());
    }
    return mean;
}

Rational dominance_fraction(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size() || a.empty()) {
        throw Error(ErrorKind::usage, "dominance_fraction: curves of different lengths");
    }
    std::size_t wins = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        wins += a[i] >= b[i];
    }
    return Rational(wins, a.size());
}

Rational tail_fraction(const std::vector<IntervalPattern>& patterns, const NumericalDataset& dataset,
                       Measure measure, const Rational& threshold) {
    if (patterns.empty()) {
        return Rational(0);
    }
    BigInt max_value = dataset.n_objects();
    if (measure == Measure::vol_times_freq) {
        for (const auto& index : dataset.indexes) {
            max_value *= BigInt(index.distinct_sorted.back()) - index.distinct_sorted.front();
        }
    }
    // value < threshold * max_value, compared exactly.
    const BigInt cut_num = numerator(threshold) * max_value;
    const BigInt cut_den = denominator(threshold);
    std::size_t below = 0;
    for (const auto& p : patterns) {
        below += measure_value(p, dataset, measure) * cut_den < cut_num;
    }
    return Rational(below, patterns.size());
}

Rational diversity_eq_classes(const std::vector<IntervalPattern>& patterns,
                              const NumericalDataset& dataset) {
    if (patterns.empty()) {
        throw Error(ErrorKind::usage, "diversity: empty pattern list");
    }
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& p : patterns) {
        distinct.insert(cover(p, dataset));
    }
    return Rational(distinct.size(), patterns.size());
}

namespace {

std::vector<std::vector<std::uint32_t>> all_covers(const std::vector<IntervalPattern>& patterns,
                                                   const NumericalDataset& dataset) {
    std::vector<std::vector<std::uint32_t>> covers(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        covers[i] = cover(patterns[i], dataset);
    }
    return covers;
}

std::size_t intersection_size(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    std::size_t n = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++n;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return n;
}

void check_jaccard_args(const std::vector<IntervalPattern>& patterns,
                        const std::vector<Rational>& thetas) {
    if (patterns.size() < 2) {
        throw Error(ErrorKind::usage, "jaccard-cdf needs at least 2 patterns");
    }
    for (const auto& t : thetas) {
        if (t < 0 || t > 1) {
            throw Error(ErrorKind::usage, "jaccard thresholds must lie in [0, 1]");
        }
    }
}

// Counts, for each theta, the pairs among covers[i] x covers[j>i] with
// Jaccard <= theta. jac = inter/union; two empty covers count as jac = 1.
std::vector<std::uint64_t> jaccard_counts(const std::vector<std::vector<std::uint32_t>>& covers,
                                          const std::vector<Rational>& thetas, int workers) {
    const std::size_t k = covers.size();
    const std::size_t n_thetas = thetas.size();
    std::vector<BigInt> theta_num(n_thetas), theta_den(n_thetas);
    for (std::size_t t = 0; t < n_thetas; ++t) {
        theta_num[t] = numerator(thetas[t]);
        theta_den[t] = denominator(thetas[t]);
    }
    std::vector<std::uint64_t> counts(n_thetas, 0);
#ifdef _OPENMP
#pragma omp parallel num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
    {
        std::vector<std::uint64_t> local(n_thetas, 0);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8)
#endif
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                const std::size_t inter = intersection_size(covers[i], covers[j]);
                const std::size_t uni = covers[i].size() + covers[j].size() - inter;
                for (std::size_t t = 0; t < n_thetas; ++t) {
                    const bool below =
                        uni == 0 ? theta_num[t] >= theta_den[t] // jac := 1
                                 : BigInt(inter) * theta_den[t] <= theta_num[t] * uni;
                    local[t] += below;
                }
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        for (std::size_t t = 0; t < n_thetas; ++t) {
            counts[t] += local[t];
        }
    }
    (void)workers;
    return counts;
}

} // namespace

std::vector<Rational> jaccard_cdf(const std::vector<IntervalPattern>& patterns,
                                  const NumericalDataset& dataset,
                                  const std::vector<Rational>& thetas, int workers) {
    check_jaccard_args(patterns, thetas);
    const auto covers = all_covers(patterns, dataset);
    const auto counts = jaccard_counts(covers, thetas, workers);
    const std::uint64_t pairs = static_cast<std::uint64_t>(patterns.size()) * (patterns.size() - 1) / 2;
    std::vector<Rational> out(thetas.size());
    for (std::size_t t = 0; t < thetas.size(); ++t) {
        out[t] = Rational(counts[t], pairs);
    }
    return out;
}

std::vector<Rational> jaccard_cdf_ref(const std::vector<IntervalPattern>& patterns,
                                      const NumericalDataset& dataset,
                                      const std::vector<Rational>& thetas) {
    check_jaccard_args(patterns, thetas);
    const auto covers = all_covers(patterns, dataset);
    const std::uint64_t pairs = static_cast<std::uint64_t>(patterns.size()) * (patterns.size() - 1) / 2;
    std::vector<Rational> out(thetas.size());
    for (std::size_t t = 0; t < thetas.size(); ++t) {
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < covers.size(); ++i) {
            for (std::size_t j = i + 1; j < covers.size(); ++j) {
                const std::size_t inter = intersection_size(covers[i], covers[j]);
                const std::size_t uni = covers[i].size() + covers[j].size() - inter;
                const Rational jac = uni == 0 ? Rational(1) : Rational(inter, uni);
                count += jac <= thetas[t];
            }
        }
        out[t] = Rational(count, pairs);
    }
    return out;
}

RandomizedDataset randomize(const NumericalDataset& dataset, Rng& rng,
                            std::uint64_t swaps_per_attribute) {
    const std::size_t n = dataset.n_objects();
    if (n < 2) {
        throw Error(ErrorKind::usage, "randomize needs at least 2 objects");
    }
    std::vector<ScaledValue> values = dataset.values;
    const std::size_t n_attrs = dataset.n_attributes();
    for (std::size_t m = 0; m < n_attrs; ++m) {
        for (std::uint64_t s = 0; s < swaps_per_attribute; ++s) {
            const std::size_t i = static_cast<std::size_t>(rng.uniform_u64(n));
            std::size_t j = static_cast<std::size_t>(rng.uniform_u64(n - 1));
            if (j >= i) {
                ++j;
            }
            std::swap(values[i * n_attrs + m], values[j * n_attrs + m]);
        }
    }
    RandomizedDataset out;
    out.base = &dataset;
    out.swaps_per_attribute = swaps_per_attribute;
    out.data = make_dataset(dataset.attributes, dataset.scale_exponents, std::move(values));
    return out;
}

namespace {

Rational plausibility_impl(const std::vector<IntervalPattern>& patterns,
                           const NumericalDataset& dataset, std::size_t r_randomizations,
                           std::uint64_t seed, std::uint64_t swaps_per_attribute, int workers,
                           bool parallel) {
    if (patterns.empty()) {
        throw Error(ErrorKind::usage, "plausibility: empty pattern list");
    }
    if (r_randomizations == 0) {
        throw Error(ErrorKind::usage, "plausibility: R must be at least 1");
    }
    BigInt original_total = 0;
    for (const auto& p : patterns) {
        const std::uint32_t f = frequency(p, dataset);
        if (f == 0) {
            throw Error(ErrorKind::usage,
                        "plausibility: a pattern has zero frequency in the original dataset");
        }
        original_total += f;
    }

    std::vector<BigInt> randomized_totals(r_randomizations);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers > 0 ? workers : omp_get_max_threads()) if (parallel)
#endif
    for (std::size_t j = 0; j < r_randomizations; ++j) {
        Rng rng(seed, j);
        const RandomizedDataset rand = randomize(dataset, rng, swaps_per_attribute);
        BigInt total = 0;
        for (const auto& p : patterns) {
            total += frequency(p, rand.data);
        }
        randomized_totals[j] = std::move(total);
    }
    (void)workers;
    (void)parallel;

    BigInt randomized_total = 0;
    for (const auto& t : randomized_totals) {
        randomized_total += t;
    }
    const BigInt r = r_randomizations;
    return Rational(r * original_total - randomized_total, r * original_total);
}

} // namespace

Rational plausibility(const std::vector<IntervalPattern>& patterns, const NumericalDataset& dataset,
                      std::size_t r_randomizations, std::uint64_t seed,
                      std::uint64_t swaps_per_attribute, int workers) {
    return plausibility_impl(patterns, dataset, r_randomizations, seed, swaps_per_attribute, workers,
                             true);
}

Rational plausibility_ref(const std::vector<IntervalPattern>& patterns,
                          const NumericalDataset& dataset, std::size_t r_randomizations,
                          std::uint64_t seed, std::uint64_t swaps_per_attribute) {
    return plausibility_impl(patterns, dataset, r_randomizations, seed, swaps_per_attribute, 1,
                             false);
}

BandSampleResult rejection_sample_in_band(const Sampler& sampler, const Rational& lo,
                                          const Rational& hi, std::size_t k,
                                          double time_limit_seconds, std::uint64_t seed) {
    if (lo > hi || lo < 0) {
        throw Error(ErrorKind::usage, "invalid frequency band");
    }
    const NumericalDataset& ds = *sampler.dataset;
    const BigInt g = ds.n_objects();
    const BigInt lo_cut = numerator(lo) * g;   // accept: freq * lo_den >= lo_num * |G|
    const BigInt hi_cut = numerator(hi) * g;   //         freq * hi_den <= hi_num * |G|
    const BigInt lo_den = denominator(lo);
    const BigInt hi_den = denominator(hi);

    BandSampleResult result;
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; result.patterns.size() < k; ++i) {
        if (i % 32 == 0 && time_limit_seconds > 0) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (elapsed > time_limit_seconds) {
                result.time_limit_hit = true;
                break;
            }
        }
        Rng rng(seed, i);
        IntervalPattern p = sampler.draw(rng);
        ++result.draws_used;
        const BigInt f = frequency(p, ds);
        if (f * lo_den >= lo_cut && f * hi_den <= hi_cut) {
            result.patterns.push_back(std::move(p));
        }
    }
    return result;
}

TimingResult timing_run(Method method, const NumericalDataset& dataset, std::size_t k,
                        std::uint64_t seed) {
    TimingResult result;
    const Sampler sampler = make_sampler(method, dataset, /*workers=*/1);
    result.preprocess_seconds = sampler.preprocess_seconds;
    result.per_draw_us.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(seed, i);
        const auto d0 = std::chrono::steady_clock::now();
        volatile bool sink = sampler.draw(rng).bounds.empty();
        (void)sink;
        result.per_draw_us.push_back(
            std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - d0).count());
    }
    return result;
}

std::vector<MetricRecord> build_metric_records(const std::string& method,
                                               const std::vector<IntervalPattern>& patterns,
                                               const NumericalDataset& dataset, std::uint64_t seed,
                                               const std::vector<double>* per_draw_us) {
    std::vector<MetricRecord> records;
    records.reserve(patterns.size());
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        MetricRecord rec;
        rec.method = method;
        rec.draw_index = i;
        rec.freq = frequency(patterns[i], dataset);
        rec.vol = hyper_volume(patterns[i]);
        rec.vol_times_freq = rec.vol * rec.freq;
        rec.wall_us = per_draw_us && i < per_draw_us->size() ? (*per_draw_us)[i] : 0.0;
        rec.seed = seed;
        records.push_back(std::move(rec));
    }
    return records;
}

void write_metric_csv(std::ostream& out, const std::vector<MetricRecord>& records,
                      const NumericalDataset& dataset) {
    int vol_exponent = 0;
    for (int e : dataset.scale_exponents) {
        vol_exponent += e;
    }
    out << "method,draw_index,freq,vol,vol_times_freq,wall_us,seed\n";
    char wall[32];
    for (const auto& rec : records) {
        std::snprintf(wall, sizeof wall, "%.3f", rec.wall_us);
        out << rec.method << ',' << rec.draw_index << ',' << rec.freq << ','
            << decimal_string(rec.vol, vol_exponent) << ','
            << decimal_string(rec.vol_times_freq, vol_exponent) << ',' << wall << ',' << rec.seed
            << "\n";
    }
}

} // namespace ips
