#pragma once

#include "ips/baselines.hpp"
#include "ips/fips.hpp"
#include "ips/hips.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ips {

enum class Method {
    fips,
    hips,
    random_cover,
    uniform_naive,
};

// Accepts "fips", "hips", "random-cover", "uniform-naive".
Method parse_method(const std::string& name);
std::string method_name(Method method);

// A preprocessed sampler of any method, ready to draw.
struct Sampler {
    Method method = Method::fips;
    const NumericalDataset* dataset = nullptr;
    std::optional<FipsState> fips;
    std::optional<HipsState> hips;
    double preprocess_seconds = 0.0;

    IntervalPattern draw(Rng& rng) const;
};

Sampler make_sampler(Method method, const NumericalDataset& dataset, int workers = 0);

// k draws with replacement; draw i consumes stream Rng(seed, i), so output is
// identical for any worker count and for the serial reference.
std::vector<IntervalPattern> sample_k(const Sampler& sampler, std::size_t k, std::uint64_t seed,
                                      int workers = 0);
std::vector<IntervalPattern> sample_k_ref(const Sampler& sampler, std::size_t k, std::uint64_t seed);

} // namespace ips
