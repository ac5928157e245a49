#pragma once

#include "ips/common.hpp"
#include "ips/dataset.hpp"
#include "ips/patterns.hpp"
#include "ips/rng.hpp"
#include "ips/sampler.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ips {

// One evaluation output row.
struct MetricRecord {
    std::string method;
    std::uint64_t draw_index = 0;
    std::uint32_t freq = 0;
    BigInt vol;            // scaled units
    BigInt vol_times_freq; // scaled units
    double wall_us = 0.0;
    std::uint64_t seed = 0;
};

// Derives the seed of repetition `rep` from a base seed; repetitions are
// paired across methods by using the same derived seed.
std::uint64_t rep_seed(std::uint64_t base, std::uint64_t rep);

// Measure values of the patterns, sorted descending.
std::vector<BigInt> measure_curve(const std::vector<IntervalPattern>& patterns,
                                  const NumericalDataset& dataset, Measure measure);

// Pointwise mean of equally long curves.
std::vector<Rational> mean_curve(const std::vector<std::vector<BigInt>>& curves);

// Fraction of positions where a >= b (curves of equal length).
Rational dominance_fraction(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Fraction of patterns whose measure is below threshold x the measure's
// maximum attainable value (|G| for freq; |G| x full-range volume for
// vol x freq).
Rational tail_fraction(const std::vector<IntervalPattern>& patterns, const NumericalDataset& dataset,
                       Measure measure, const Rational& threshold);

// Distinct cover sets divided by the number of patterns.
Rational diversity_eq_classes(const std::vector<IntervalPattern>& patterns,
                              const NumericalDataset& dataset);

// For each threshold theta, the fraction of unordered pattern pairs whose
// cover Jaccard similarity is <= theta. Two empty covers count as similarity 1
// (only the naive baseline can produce them). Requires >= 2 patterns and
// thresholds in [0, 1].
std::vector<Rational> jaccard_cdf(const std::vector<IntervalPattern>& patterns,
                                  const NumericalDataset& dataset,
                                  const std::vector<Rational>& thetas, int workers = 0);
std::vector<Rational> jaccard_cdf_ref(const std::vector<IntervalPattern>& patterns,
                                      const NumericalDataset& dataset,
                                      const std::vector<Rational>& thetas);

// A dataset with per-attribute values swapped between random object pairs;
// every column keeps its exact value multiset, so all W_m survive unchanged.
struct RandomizedDataset {
    const NumericalDataset* base = nullptr;
    std::uint64_t swaps_per_attribute = 0;
    NumericalDataset data;
};

RandomizedDataset randomize(const NumericalDataset& dataset, Rng& rng,
                            std::uint64_t swaps_per_attribute);

// Normalized frequency drop of the patterns between the original dataset and
// R swap-randomized copies (randomization j uses stream Rng(seed, j)):
//   sum_ij (freq(p_i, N) - freq(p_i, N_rand_j)) / (R x sum_i freq(p_i, N)).
// At most 1; higher means the patterns depend on real inter-attribute
// structure. Every pattern must have freq >= 1 in the original dataset.
Rational plausibility(const std::vector<IntervalPattern>& patterns, const NumericalDataset& dataset,
                      std::size_t r_randomizations, std::uint64_t seed,
                      std::uint64_t swaps_per_attribute, int workers = 0);
Rational plausibility_ref(const std::vector<IntervalPattern>& patterns,
                          const NumericalDataset& dataset, std::size_t r_randomizations,
                          std::uint64_t seed, std::uint64_t swaps_per_attribute);

struct BandSampleResult {
    std::vector<IntervalPattern> patterns;
    std::uint64_t draws_used = 0;
    bool time_limit_hit = false;
};

// Draws until k patterns fall inside the relative-frequency band
// [lo, hi] x |G| or the time limit expires. Draw i always consumes stream
// Rng(seed, i), so accepted patterns depend only on the seed.
BandSampleResult rejection_sample_in_band(const Sampler& sampler, const Rational& lo,
                                          const Rational& hi, std::size_t k,
                                          double time_limit_seconds, std::uint64_t seed);

struct TimingResult {
    double preprocess_seconds = 0.0;
    std::vector<double> per_draw_us;
};

// Preprocessing plus k individually timed draws, pinned to one worker.
TimingResult timing_run(Method method, const NumericalDataset& dataset, std::size_t k,
                        std::uint64_t seed);

// Metric rows for a list of sampled patterns; per-draw wall times are 0 when
// not supplied.
std::vector<MetricRecord> build_metric_records(const std::string& method,
                                               const std::vector<IntervalPattern>& patterns,
                                               const NumericalDataset& dataset, std::uint64_t seed,
                                               const std::vector<double>* per_draw_us = nullptr);

// CSV with unscaled decimal measure columns.
void write_metric_csv(std::ostream& out, const std::vector<MetricRecord>& records,
                      const NumericalDataset& dataset);

} // namespace ips
