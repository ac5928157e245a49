#include "test_util.hpp"

#include "ips/patterns.hpp"

#include <doctest.h>

using namespace ips;

namespace {

IntervalPattern pat(std::initializer_list<std::pair<ScaledValue, ScaledValue>> bounds) {
    IntervalPattern p;
    p.bounds.assign(bounds.begin(), bounds.end());
    return p;
}

} // namespace

TEST_CASE("cover and frequency select exactly the enclosed objects") {
    const NumericalDataset ds = test_util::table1();
    const IntervalPattern p = pat({{3, 4}, {7, 12}, {91, 130}});
    CHECK(cover(p, ds) == std::vector<std::uint32_t>{1, 2});
    CHECK(frequency(p, ds) == 2);
    CHECK(covers(p, ds, 1));
    CHECK(!covers(p, ds, 0));

    const IntervalPattern full = pat({{2, 6}, {7, 12}, {91, 130}});
    CHECK(frequency(full, ds) == 5);
    CHECK(cover(full, ds).size() == 5);
}

TEST_CASE("hyper-volume is the product of interval lengths") {
    CHECK(hyper_volume(pat({{2, 6}, {7, 12}, {91, 130}})) == 780);
    CHECK(hyper_volume(pat({{3, 4}, {7, 12}, {91, 130}})) == 195);
    CHECK(hyper_volume(pat({{3, 3}, {7, 12}, {91, 130}})) == 0); // degenerate interval
    CHECK(hyper_volume(pat({{6, 6}, {12, 12}, {110, 110}})) == 0);
}

TEST_CASE("desc builds the tightest pattern around an object set") {
    const NumericalDataset ds = test_util::table1();
    const std::vector<std::uint32_t> objects{1, 2};
    CHECK(desc(objects, ds) == pat({{3, 4}, {7, 12}, {91, 102}}));

    const std::vector<std::uint32_t> all{0, 1, 2, 3, 4};
    CHECK(desc(all, ds) == pat({{2, 6}, {7, 12}, {91, 130}}));

    const std::vector<std::uint32_t> one{4};
    CHECK(desc(one, ds) == pat({{6, 6}, {12, 12}, {110, 110}}));

    CHECK(test_util::thrown_kind([&] { desc(std::vector<std::uint32_t>{}, ds); }) ==
          ErrorKind::usage);
}

TEST_CASE("desc of a set covers at least that set") {
    const NumericalDataset ds = test_util::table1();
    ips::Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> objects;
        for (std::uint32_t g = 0; g < 5; ++g) {
            if (rng.uniform_u64(2) == 1) {
                objects.push_back(g);
            }
        }
        if (objects.empty()) {
            continue;
        }
        const IntervalPattern p = desc(objects, ds);
        CHECK(frequency(p, ds) >= objects.size());
        for (std::uint32_t g : objects) {
            CHECK(covers(p, ds, g));
        }
    }
}

TEST_CASE("measure_value selects freq or vol x freq") {
    const NumericalDataset ds = test_util::table1();
    const IntervalPattern full = pat({{2, 6}, {7, 12}, {91, 130}});
    CHECK(measure_value(full, ds, Measure::freq) == 5);
    CHECK(measure_value(full, ds, Measure::vol_times_freq) == 780 * 5);
    const IntervalPattern point = pat({{6, 6}, {12, 12}, {110, 110}});
    CHECK(measure_value(point, ds, Measure::freq) == 1);
    CHECK(measure_value(point, ds, Measure::vol_times_freq) == 0);
}

TEST_CASE("dimension mismatches are usage errors") {
    const NumericalDataset ds = test_util::table1();
    const IntervalPattern p = pat({{3, 4}, {7, 12}});
    CHECK(test_util::thrown_kind([&] { frequency(p, ds); }) == ErrorKind::usage);
}

TEST_CASE("patterns serialize to one exact JSON line") {
    const NumericalDataset ds = test_util::table1();
    const IntervalPattern full = pat({{2, 6}, {7, 12}, {91, 130}});
    CHECK(serialize_pattern(full, ds) ==
          R"({"bounds":[[2,6],[7,12],[91,130]],"freq":5,"vol":"780"})");
}

TEST_CASE("serialization restores original decimal scales") {
    const NumericalDataset ds = test_util::from_csv("a,b\n2.5,3\n1,4.25\n");
    IntervalPattern p;
    p.bounds = {{10, 25}, {300, 425}}; // full ranges in scaled units
    CHECK(frequency(p, ds) == 2);
    CHECK(serialize_pattern(p, ds) ==
          R"({"bounds":[[1,2.5],[3,4.25]],"freq":2,"vol":"1.875"})");
}
