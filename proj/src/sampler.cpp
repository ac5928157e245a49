#include "ips/sampler.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ips {

Method parse_method(const std::string& name) {
    if (name == "fips") {
        return Method::fips;
    }
    if (name == "hips") {
        return Method::hips;
    }
    if (name == "random-cover") {
        return Method::random_cover;
    }
    if (name == "uniform-naive") {
        return Method::uniform_naive;
    }
    throw Error(ErrorKind::usage, "unknown method '" + name +
                                      "' (expected fips, hips, random-cover, or uniform-naive)");
}

std::string method_name(Method method) {
    switch (method) {
    case Method::fips:
        return "fips";
    case Method::hips:
        return "hips";
    case Method::random_cover:
        return "random-cover";
    case Method::uniform_naive:
        return "uniform-naive";
    }
    return "?";
}

IntervalPattern Sampler::draw(Rng& rng) const {
    switch (method) {
    case Method::fips:
        return sample_fips(*fips, rng);
    case Method::hips:
        return sample_hips(*hips, rng);
    case Method::random_cover:
        return sample_random_cover(*dataset, rng);
    case Method::uniform_naive:
        return sample_uniform_naive(*dataset, rng);
    }
    throw Error(ErrorKind::usage, "invalid method");
}

Sampler make_sampler(Method method, const NumericalDataset& dataset, int workers) {
    Sampler sampler;
    sampler.method = method;
    sampler.dataset = &dataset;
    const auto start = std::chrono::steady_clock::now();
    if (method == Method::fips) {
        sampler.fips = preprocess_fips(dataset, workers);
    } else if (method == Method::hips) {
        sampler.hips = preprocess_hips(dataset, workers);
    }
    sampler.preprocess_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sampler;
}

std::vector<IntervalPattern> sample_k(const Sampler& sampler, std::size_t k, std::uint64_t seed,
                                      int workers) {
    std::vector<IntervalPattern> out(k);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(seed, i);
        out[i] = sampler.draw(rng);
    }
    (void)workers;
    return out;
}

std::vector<IntervalPattern> sample_k_ref(const Sampler& sampler, std::size_t k, std::uint64_t seed) {
    std::vector<IntervalPattern> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rng rng(seed, i);
        out[i] = sampler.draw(rng);
    }
    return out;
}

} // namespace ips
