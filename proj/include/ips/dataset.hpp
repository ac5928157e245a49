#pragma once

#include "ips/common.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ips {

// Values are stored as exact scaled integers: raw decimal x 10^scale_exponent,
// one exponent per attribute. All weight formulas are exact integer
// expressions over these, so no floating point enters the samplers.
using ScaledValue = std::int64_t;

// Per-attribute distinct-value structure: W_m sorted ascending, with exact
// prefix sums. For a value of rank r there are r+1 candidate lower bounds
// (values <= it) and |W_m| - r candidate upper bounds (values >= it).
struct AttributeIndex {
    std::vector<ScaledValue> distinct_sorted; // W_m, strictly increasing
    std::vector<BigInt> prefix_sums;          // prefix_sums[i] = sum of distinct_sorted[0..i]

    std::size_t size() const { return distinct_sorted.size(); }

    // Rank of a value known to occur in the column.
    std::size_t rank_of(ScaledValue v) const;

    // Rank of an arbitrary value, or nullopt if it is not in W_m.
    std::optional<std::size_t> find_rank(ScaledValue v) const;

    // Sum of distinct_sorted[lo..hi], inclusive, from the prefix sums.
    BigInt range_sum(std::size_t lo, std::size_t hi) const;
};

struct NumericalDataset {
    std::vector<std::string> attributes;   // canonical order = column order
    std::vector<ScaledValue> values;       // row-major, |G| x |M|
    std::vector<int> scale_exponents;      // per attribute
    std::vector<AttributeIndex> indexes;   // built at construction
    std::size_t rows = 0;

    std::size_t n_objects() const { return rows; }
    std::size_t n_attributes() const { return attributes.size(); }
    ScaledValue value(std::size_t g, std::size_t m) const {
        return values[g * attributes.size() + m];
    }
    std::size_t rank(std::size_t g, std::size_t m) const {
        return indexes[m].rank_of(value(g, m));
    }
};

// Assembles a dataset from parsed content and builds all attribute indexes.
NumericalDataset make_dataset(std::vector<std::string> attributes, std::vector<int> scale_exponents,
                              std::vector<ScaledValue> values);

// Builds the distinct-value index of one column.
AttributeIndex build_index(const NumericalDataset& dataset, std::size_t m);

// CSV ingestion: UTF-8, comma separated, mandatory header row, plain decimal
// numbers (no exponent notation), LF or CRLF line endings.
NumericalDataset parse_csv(std::istream& in);
NumericalDataset load_csv(const std::string& path);

// Number of interval patterns over the dataset: product over attributes of
// |W_m| (|W_m| + 1) / 2.
BigInt search_space_size(const NumericalDataset& dataset);

// Exact decimal rendering of value x 10^-exponent, without trailing zeros
// ("2.5", "3", "-0.05"). Inverse of the CSV scaling.
std::string decimal_string(const BigInt& scaled, int exponent);
std::string decimal_string(ScaledValue scaled, int exponent);

} // namespace ips
