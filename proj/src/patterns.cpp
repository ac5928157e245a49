#include "ips/patterns.hpp"

#include <sstream>

namespace ips {

namespace {

void check_dimension(const IntervalPattern& pattern, const NumericalDataset& dataset) {
    if (pattern.bounds.size() != dataset.n_attributes()) {
        throw Error(ErrorKind::usage, "pattern has " + std::to_string(pattern.bounds.size()) +
                                          " intervals, dataset has " +
                                          std::to_string(dataset.n_attributes()) + " attributes");
    }
}

} // namespace

bool covers(const IntervalPattern& pattern, const NumericalDataset& dataset, std::size_t g) {
    check_dimension(pattern, dataset);
    for (std::size_t m = 0; m < pattern.bounds.size(); ++m) {
        const ScaledValue v = dataset.value(g, m);
        if (v < pattern.bounds[m].first || v > pattern.bounds[m].second) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> cover(const IntervalPattern& pattern, const NumericalDataset& dataset) {
    check_dimension(pattern, dataset);
    std::vector<std::uint32_t> out;
    for (std::size_t g = 0; g < dataset.n_objects(); ++g) {
        bool inside = true;
        for (std::size_t m = 0; m < pattern.bounds.size(); ++m) {
            const ScaledValue v = dataset.value(g, m);
            if (v < pattern.bounds[m].first || v > pattern.bounds[m].second) {
                inside = false;
                break;
            }
        }
        if (inside) {
            out.push_back(static_cast<std::uint32_t>(g));
        }
    }
    return out;
}

std::uint32_t frequency(const IntervalPattern& pattern, const NumericalDataset& dataset) {
    check_dimension(pattern, dataset);
    std::uint32_t count = 0;
    for (std::size_t g = 0; g < dataset.n_objects(); ++g) {
        bool inside = true;
        for (std::size_t m = 0; m < pattern.bounds.size(); ++m) {
            const ScaledValue v = dataset.value(g, m);
            if (v < pattern.bounds[m].first || v > pattern.bounds[m].second) {
                inside = false;
                break;
            }
        }
        count += inside;
    }
    return count;
}

BigInt hyper_volume(const IntervalPattern& pattern) {
    BigInt vol = 1;
    for (const auto& [lo, hi] : pattern.bounds) {
        vol *= BigInt(hi) - lo;
    }
    return vol;
}

IntervalPattern desc(std::span<const std::uint32_t> objects, const NumericalDataset& dataset) {
    if (objects.empty()) {
        throw Error(ErrorKind::usage, "desc: empty object set");
    }
    IntervalPattern pattern;
    pattern.bounds.reserve(dataset.n_attributes());
    for (std::size_t m = 0; m < dataset.n_attributes(); ++m) {
        ScaledValue lo = dataset.value(objects[0], m);
        ScaledValue hi = lo;
        for (std::uint32_t g : objects.subspan(1)) {
            const ScaledValue v = dataset.value(g, m);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        pattern.bounds.emplace_back(lo, hi);
    }
    return pattern;
}

BigInt measure_value(const IntervalPattern& pattern, const NumericalDataset& dataset, Measure measure) {
    const BigInt f = frequency(pattern, dataset);
    if (measure == Measure::freq) {
        return f;
    }
    return hyper_volume(pattern) * f;
}

std::string serialize_pattern(const IntervalPattern& pattern, const NumericalDataset& dataset) {
    check_dimension(pattern, dataset);
    int vol_exponent = 0;
    std::ostringstream os;
    os << "{\"bounds\":[";
    for (std::size_t m = 0; m < pattern.bounds.size(); ++m) {
        const int e = dataset.scale_exponents[m];
        vol_exponent += e;
        if (m > 0) {
            os << ',';
        }
        os << '[' << decimal_string(pattern.bounds[m].first, e) << ','
           << decimal_string(pattern.bounds[m].second, e) << ']';
    }
    os << "],\"freq\":" << frequency(pattern, dataset) << ",\"vol\":\""
       << decimal_string(hyper_volume(pattern), vol_exponent) << "\"}";
    return os.str();
}

} // namespace ips
