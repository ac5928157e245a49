#pragma once

#include "ips/dataset.hpp"
#include "ips/oracle.hpp"
#include "ips/patterns.hpp"
#include "ips/rng.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace test_util {

// The worked five-object, three-attribute example dataset used throughout the
// unit tests; all golden constants below were computed by independent
// enumeration.
inline ips::NumericalDataset table1() {
    std::istringstream in("m1,m2,m3\n2,8,130\n4,12,102\n3,7,91\n2,9,101\n6,12,110\n");
    return ips::parse_csv(in);
}

inline std::string data_path(const std::string& name) {
    return std::string(IPS_SOURCE_DIR) + "/data/" + name;
}

inline ips::NumericalDataset from_csv(const std::string& text) {
    std::istringstream in(text);
    return ips::parse_csv(in);
}

// Uniform random integer dataset. With require_volume, every attribute is
// guaranteed at least two distinct values, so some pattern has positive
// hyper-volume.
inline ips::NumericalDataset random_dataset(ips::Rng& rng, std::size_t max_objects,
                                            std::size_t max_attributes, std::uint64_t max_value,
                                            bool require_volume) {
    for (;;) {
        const std::size_t n_g = 2 + rng.uniform_u64(max_objects - 1);
        const std::size_t n_m = 1 + rng.uniform_u64(max_attributes);
        std::vector<std::string> names;
        for (std::size_t m = 0; m < n_m; ++m) {
            names.push_back("a" + std::to_string(m));
        }
        std::vector<ips::ScaledValue> values(n_g * n_m);
        for (auto& v : values) {
            v = static_cast<ips::ScaledValue>(rng.uniform_u64(max_value));
        }
        ips::NumericalDataset ds =
            ips::make_dataset(names, std::vector<int>(n_m, 0), std::move(values));
        if (require_volume) {
            bool ok = true;
            for (const auto& index : ds.indexes) {
                ok = ok && index.size() >= 2;
            }
            if (!ok) {
                continue;
            }
        }
        return ds;
    }
}

inline ips::NumericalDataset synthetic(std::size_t n_objects, std::size_t n_attributes,
                                       std::uint64_t n_values, std::uint64_t seed) {
    ips::Rng rng(seed);
    std::vector<std::string> names;
    for (std::size_t m = 0; m < n_attributes; ++m) {
        names.push_back("a" + std::to_string(m));
    }
    std::vector<ips::ScaledValue> values(n_objects * n_attributes);
    for (auto& v : values) {
        v = static_cast<ips::ScaledValue>(rng.uniform_u64(n_values));
    }
    return ips::make_dataset(names, std::vector<int>(n_attributes, 0), std::move(values));
}

// Total-variation distance between the empirical distribution of `draws` and
// an exact target over the enumerated space.
inline ips::Rational tv_distance(const std::vector<ips::IntervalPattern>& draws,
                                 const ips::EnumeratedSpace& space,
                                 const std::vector<ips::Rational>& target) {
    std::vector<std::uint64_t> counts(space.count, 0);
    for (const auto& p : draws) {
        ++counts[space.index_of(p)];
    }
    ips::Rational tv = 0;
    const std::uint64_t n = draws.size();
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        const ips::Rational diff = ips::Rational(counts[idx], n) - target[idx];
        tv += diff < 0 ? -diff : diff;
    }
    return tv / 2;
}

// Pattern bounds mapped to per-attribute ranks, for comparisons across
// monotone value transforms.
inline std::vector<std::pair<std::size_t, std::size_t>>
rank_tuple(const ips::IntervalPattern& pattern, const ips::NumericalDataset& ds) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t m = 0; m < pattern.bounds.size(); ++m) {
        out.emplace_back(ds.indexes[m].rank_of(pattern.bounds[m].first),
                         ds.indexes[m].rank_of(pattern.bounds[m].second));
    }
    return out;
}

// ErrorKind thrown by f, or nullopt if it does not throw an ips::Error.
template <typename F>
inline std::optional<ips::ErrorKind> thrown_kind(F&& f) {
    try {
        f();
    } catch (const ips::Error& e) {
        return e.kind();
    } catch (...) {
    }
    return std::nullopt;
}

} // namespace test_util
