#pragma once

#include "ips/common.hpp"
#include "ips/dataset.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ips {

// One closed interval [lower, upper] per attribute, in canonical attribute
// order. Bounds are scaled values drawn from the attribute's W_m.
struct IntervalPattern {
    std::vector<std::pair<ScaledValue, ScaledValue>> bounds;

    bool operator==(const IntervalPattern&) const = default;
    auto operator<=>(const IntervalPattern&) const = default;
};

// Which measure a pattern is weighed by.
enum class Measure {
    freq,
    vol_times_freq,
};

bool covers(const IntervalPattern& pattern, const NumericalDataset& dataset, std::size_t g);
std::vector<std::uint32_t> cover(const IntervalPattern& pattern, const NumericalDataset& dataset);
std::uint32_t frequency(const IntervalPattern& pattern, const NumericalDataset& dataset);

// Product of interval lengths, in scaled units. Zero iff any interval is
// degenerate.
BigInt hyper_volume(const IntervalPattern& pattern);

// Smallest pattern covering the given objects: per-attribute min/max.
IntervalPattern desc(std::span<const std::uint32_t> objects, const NumericalDataset& dataset);

BigInt measure_value(const IntervalPattern& pattern, const NumericalDataset& dataset, Measure measure);

// One-line JSON serialization with unscaled decimal bounds:
//   {"bounds":[[2,6],[7,12],[91,130]],"freq":5,"vol":"780"}
// The hyper-volume is quoted because it can exceed double precision.
std::string serialize_pattern(const IntervalPattern& pattern, const NumericalDataset& dataset);

} // namespace ips
