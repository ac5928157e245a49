#include "ips/dataset.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace ips {

namespace {

// Magnitude cap on stored scaled values. Keeps every pairwise difference
// representable in the signed 64-bit domain before it is widened.
constexpr ScaledValue kMaxMagnitude = ScaledValue{1} << 62;

struct ParsedDecimal {
    std::int64_t digits = 0; // signed significand, fraction zeros stripped
    int exponent = 0;        // value = digits * 10^-exponent
};

[[noreturn]] void data_error(const std::string& what) {
    throw Error(ErrorKind::data, what);
}

ParsedDecimal parse_decimal(const std::string& field, std::size_t row, std::size_t col) {
    auto fail = [&](const char* why) -> ParsedDecimal {
        std::ostringstream os;
        os << "row " << row << ", column " << col + 1 << ": non-numeric cell '" << field << "' ("
           << why << ")";
        data_error(os.str());
    };

    std::size_t i = 0;
    bool negative = false;
    if (i < field.size() && (field[i] == '+' || field[i] == '-')) {
        negative = field[i] == '-';
        ++i;
    }
    std::uint64_t magnitude = 0;
    int exponent = 0;
    bool any_digit = false;
    bool seen_point = false;
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    for (; i < field.size(); ++i) {
        const char c = field[i];
        if (c == '.') {
            if (seen_point) {
                return fail("second decimal point");
            }
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            any_digit = true;
            if (magnitude > (kLimit - (c - '0')) / 10) {
                data_error("row " + std::to_string(row) + ", column " + std::to_string(col + 1) +
                           ": value magnitude exceeds the supported range");
            }
            magnitude = magnitude * 10 + static_cast<std::uint64_t>(c - '0');
            if (seen_point) {
                ++exponent;
            }
        } else {
            return fail("unexpected character");
        }
    }
    if (!any_digit) {
        return fail("no digits");
    }
    // Strip trailing fraction zeros so the exponent is minimal for this field.
    while (exponent > 0 && magnitude % 10 == 0) {
        magnitude /= 10;
        --exponent;
    }
    ParsedDecimal out;
    out.digits = negative ? -static_cast<std::int64_t>(magnitude) : static_cast<std::int64_t>(magnitude);
    out.exponent = exponent;
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        const auto b = f.find_first_not_of(" \t");
        const auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string{} : f.substr(b, e - b + 1);
    }
    return fields;
}

} // namespace

std::size_t AttributeIndex::rank_of(ScaledValue v) const {
    auto it = std::lower_bound(distinct_sorted.begin(), distinct_sorted.end(), v);
    assert(it != distinct_sorted.end() && *it == v);
    return static_cast<std::size_t>(it - distinct_sorted.begin());
}

std::optional<std::size_t> AttributeIndex::find_rank(ScaledValue v) const {
    auto it = std::lower_bound(distinct_sorted.begin(), distinct_sorted.end(), v);
    if (it == distinct_sorted.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - distinct_sorted.begin());
}

BigInt AttributeIndex::range_sum(std::size_t lo, std::size_t hi) const {
    assert(lo <= hi && hi < prefix_sums.size());
    BigInt s = prefix_sums[hi];
    if (lo > 0) {
        s -= prefix_sums[lo - 1];
    }
    return s;
}

AttributeIndex build_index(const NumericalDataset& dataset, std::size_t m) {
    AttributeIndex index;
    index.distinct_sorted.reserve(dataset.rows);
    for (std::size_t g = 0; g < dataset.rows; ++g) {
        index.distinct_sorted.push_back(dataset.value(g, m));
    }
    std::sort(index.distinct_sorted.begin(), index.distinct_sorted.end());
    index.distinct_sorted.erase(std::unique(index.distinct_sorted.begin(), index.distinct_sorted.end()),
                                index.distinct_sorted.end());
    index.prefix_sums.reserve(index.distinct_sorted.size());
    BigInt running = 0;
    for (ScaledValue v : index.distinct_sorted) {
        running += v;
        index.prefix_sums.push_back(running);
    }
    return index;
}

NumericalDataset make_dataset(std::vector<std::string> attributes, std::vector<int> scale_exponents,
                              std::vector<ScaledValue> values) {
    NumericalDataset ds;
    ds.attributes = std::move(attributes);
    ds.scale_exponents = std::move(scale_exponents);
    ds.values = std::move(values);
    assert(!ds.attributes.empty());
    assert(ds.values.size() % ds.attributes.size() == 0);
    ds.rows = ds.values.size() / ds.attributes.size();
    ds.indexes.reserve(ds.attributes.size());
    for (std::size_t m = 0; m < ds.attributes.size(); ++m) {
        ds.indexes.push_back(build_index(ds, m));
    }
    return ds;
}

NumericalDataset parse_csv(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (content.size() >= 3 && content.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        content.erase(0, 3);
    }

    std::vector<std::string> lines;
    std::string cur;
    for (char c : content) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        lines.push_back(cur);
    }
    for (auto& line : lines) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        data_error("empty input: missing header row");
    }

    const std::vector<std::string> header = split_fields(lines[0]);
    const std::size_t n_attrs = header.size();
    if (lines.size() < 2) {
        data_error("empty dataset: no data rows after the header");
    }

    struct Cell {
        std::int64_t digits;
        int exponent;
    };
    std::vector<Cell> cells;
    cells.reserve((lines.size() - 1) * n_attrs);
    std::vector<int> scale(n_attrs, 0);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (lines[r].empty()) {
            data_error("row " + std::to_string(r) + " is empty");
        }
        const auto fields = split_fields(lines[r]);
        if (fields.size() != n_attrs) {
            data_error("row " + std::to_string(r) + " has " + std::to_string(fields.size()) +
                       " fields, expected " + std::to_string(n_attrs));
        }
        for (std::size_t m = 0; m < n_attrs; ++m) {
            const ParsedDecimal d = parse_decimal(fields[m], r, m);
            cells.push_back({d.digits, d.exponent});
            scale[m] = std::max(scale[m], d.exponent);
        }
    }

    std::vector<ScaledValue> values;
    values.reserve(cells.size());
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        const std::size_t m = idx % n_attrs;
        ScaledValue v = cells[idx].digits;
        for (int e = cells[idx].exponent; e < scale[m]; ++e) {
            if (v > kMaxMagnitude / 10 || v < -(kMaxMagnitude / 10)) {
                data_error("column " + std::to_string(m + 1) +
                           ": scaled value exceeds the supported range");
            }
            v *= 10;
        }
        if (v > kMaxMagnitude || v < -kMaxMagnitude) {
            data_error("column " + std::to_string(m + 1) +
                       ": scaled value exceeds the supported range");
        }
        values.push_back(v);
    }

    return make_dataset(header, std::move(scale), std::move(values));
}

NumericalDataset load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        data_error("cannot open input file: " + path);
    }
    return parse_csv(in);
}

BigInt search_space_size(const NumericalDataset& dataset) {
    BigInt total = 1;
    for (const auto& index : dataset.indexes) {
        const BigInt k = index.size();
        total *= k * (k + 1) / 2;
    }
    return total;
}

std::string decimal_string(const BigInt& scaled, int exponent) {
    assert(exponent >= 0);
    BigInt v = scaled;
    const bool negative = v < 0;
    if (negative) {
        v = -v;
    }
    std::string digits = v.str();
    if (exponent > 0) {
        if (digits.size() <= static_cast<std::size_t>(exponent)) {
            digits.insert(0, static_cast<std::size_t>(exponent) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(exponent), ".");
        while (digits.back() == '0') {
            digits.pop_back();
        }
        if (digits.back() == '.') {
            digits.pop_back();
        }
    }
    return negative && digits != "0" ? "-" + digits : digits;
}

std::string decimal_string(ScaledValue scaled, int exponent) {
    return decimal_string(BigInt(scaled), exponent);
}

} // namespace ips
