#include "test_util.hpp"

#include "ips/dataset.hpp"

#include <doctest.h>

using namespace ips;

TEST_CASE("csv parsing builds the expected value sets") {
    const NumericalDataset ds = test_util::table1();
    CHECK(ds.n_objects() == 5);
    CHECK(ds.n_attributes() == 3);
    CHECK(ds.attributes == std::vector<std::string>{"m1", "m2", "m3"});
    CHECK(ds.scale_exponents == std::vector<int>{0, 0, 0});

    CHECK(ds.indexes[0].distinct_sorted == std::vector<ScaledValue>{2, 3, 4, 6});
    CHECK(ds.indexes[1].distinct_sorted == std::vector<ScaledValue>{7, 8, 9, 12});
    CHECK(ds.indexes[2].distinct_sorted == std::vector<ScaledValue>{91, 101, 102, 110, 130});

    CHECK(ds.value(0, 2) == 130);
    CHECK(ds.rank(0, 2) == 4);
    CHECK(ds.rank(4, 0) == 3);
}

TEST_CASE("decimal columns are scaled to a shared integer grid") {
    const NumericalDataset ds = test_util::from_csv("a,b\n2.5,3\n1,4.25\n");
    CHECK(ds.scale_exponents == std::vector<int>{1, 2});
    CHECK(ds.value(0, 0) == 25);
    CHECK(ds.value(1, 0) == 10);
    CHECK(ds.value(0, 1) == 300);
    CHECK(ds.value(1, 1) == 425);

    CHECK(decimal_string(ds.value(0, 0), 1) == "2.5");
    CHECK(decimal_string(ds.value(1, 0), 1) == "1");
    CHECK(decimal_string(ds.value(0, 1), 2) == "3");
    CHECK(decimal_string(ds.value(1, 1), 2) == "4.25");
}

TEST_CASE("decimal_string renders exact values") {
    CHECK(decimal_string(ScaledValue(-5), 2) == "-0.05");
    CHECK(decimal_string(ScaledValue(30), 1) == "3");
    CHECK(decimal_string(ScaledValue(0), 3) == "0");
    CHECK(decimal_string(ScaledValue(12345), 0) == "12345");
    CHECK(decimal_string(BigInt(1875), 3) == "1.875");
    CHECK(decimal_string(BigInt(-1), 4) == "-0.0001");
}

TEST_CASE("negative and zero values parse exactly") {
    const NumericalDataset ds = test_util::from_csv("x\n-0.05\n0\n1.20\n");
    CHECK(ds.scale_exponents == std::vector<int>{2});
    CHECK(ds.indexes[0].distinct_sorted == std::vector<ScaledValue>{-5, 0, 120});
}

TEST_CASE("byte-order mark and CRLF line endings are accepted") {
    const NumericalDataset ds = test_util::from_csv("\xEF\xBB\xBFm1,m2\r\n1,2\r\n3,4\r\n");
    CHECK(ds.n_objects() == 2);
    CHECK(ds.attributes == std::vector<std::string>{"m1", "m2"});
    CHECK(ds.value(1, 1) == 4);
}

TEST_CASE("malformed csv input raises data errors") {
    auto kind_of = [](const std::string& text) {
        return test_util::thrown_kind([&] { test_util::from_csv(text); });
    };
    CHECK(kind_of("a,b\n1\n") == ErrorKind::data);          // ragged row
    CHECK(kind_of("a,b\n1,2,3\n") == ErrorKind::data);      // too many fields
    CHECK(kind_of("a\nfoo\n") == ErrorKind::data);          // non-numeric
    CHECK(kind_of("a\n1e5\n") == ErrorKind::data);          // exponent notation
    CHECK(kind_of("") == ErrorKind::data);                  // empty input
    CHECK(kind_of("a,b\n") == ErrorKind::data);             // header only
    CHECK(kind_of("a\n\n1\n") == ErrorKind::data);          // interior blank line
    CHECK(kind_of("a\n9223372036854775807\n") == ErrorKind::data); // magnitude overflow
    CHECK(kind_of("a\n1..2\n") == ErrorKind::data);         // double decimal point
}

TEST_CASE("missing files raise data errors") {
    CHECK(test_util::thrown_kind([] { load_csv("/nonexistent/path.csv"); }) == ErrorKind::data);
}

TEST_CASE("candidate bound counts satisfy |I(v)| + |J(v)| = |W| + 1") {
    const NumericalDataset ds = test_util::table1();
    for (std::size_t m = 0; m < ds.n_attributes(); ++m) {
        const std::size_t k = ds.indexes[m].size();
        for (std::size_t g = 0; g < ds.n_objects(); ++g) {
            const std::size_t r = ds.rank(g, m);
            const std::size_t n_lower = r + 1;    // values <= v
            const std::size_t n_upper = k - r;    // values >= v
            CHECK(n_lower + n_upper == k + 1);
        }
    }
}

TEST_CASE("search space size multiplies per-attribute interval counts") {
    CHECK(search_space_size(test_util::table1()) == 1500);
    CHECK(search_space_size(test_util::from_csv("a\n5\n")) == 1);
    CHECK(search_space_size(test_util::from_csv("a\n1\n2\n3\n")) == 6);
}

TEST_CASE("attribute index prefix sums answer range queries") {
    const NumericalDataset ds = test_util::table1();
    const AttributeIndex& idx = ds.indexes[2];
    CHECK(idx.range_sum(0, 4) == 91 + 101 + 102 + 110 + 130);
    CHECK(idx.range_sum(1, 2) == 101 + 102);
    CHECK(idx.range_sum(3, 3) == 110);
    CHECK(idx.rank_of(102) == 2);
    CHECK(idx.find_rank(103) == std::nullopt);
    CHECK(idx.find_rank(91) == std::size_t{0});
}

TEST_CASE("iris dataset loads with the documented characteristics") {
    const NumericalDataset ds = load_csv(test_util::data_path("iris.csv"));
    CHECK(ds.n_objects() == 150);
    CHECK(ds.n_attributes() == 4);
    std::size_t distinct = 0;
    for (const auto& index : ds.indexes) {
        distinct += index.size();
    }
    CHECK(distinct == 123);
    CHECK(ds.indexes[0].size() == 35);
    CHECK(ds.indexes[1].size() == 23);
    CHECK(ds.indexes[2].size() == 43);
    CHECK(ds.indexes[3].size() == 22);
    const BigInt expected = BigInt(630) * 276 * 946 * 253;
    CHECK(search_space_size(ds) == expected);
}
