#include "test_util.hpp"

#include "ips/rng.hpp"

#include <algorithm>
#include <doctest.h>

using namespace ips;

TEST_CASE("identical seed and stream reproduce the byte stream") {
    Rng a(1, 2), b(1, 2);
    for (int i = 0; i < 64; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("different streams of one seed are distinct") {
    Rng a(1, 0), b(1, 1);
    bool any_diff = false;
    for (int i = 0; i < 16; ++i) {
        any_diff |= a.next_u64() != b.next_u64();
    }
    CHECK(any_diff);
}

TEST_CASE("uniform_u64 stays in range and covers it") {
    Rng rng(7);
    CHECK(rng.uniform_u64(1) == 0);
    std::vector<bool> seen(5, false);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t v = rng.uniform_u64(5);
        REQUIRE(v < 5);
        seen[v] = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST_CASE("uniform_below handles arbitrary-precision bounds") {
    Rng rng(11);
    const BigInt small = 3;
    std::vector<int> counts(3, 0);
    for (int i = 0; i < 6000; ++i) {
        const BigInt v = rng.uniform_below(small);
        REQUIRE(v >= 0);
        REQUIRE(v < small);
        ++counts[v.convert_to<int>()];
    }
    for (int c : counts) {
        CHECK(c > 1700); // expectation 2000
        CHECK(c < 2300);
    }

    const BigInt huge = BigInt(1) << 300;
    bool any_large = false;
    for (int i = 0; i < 50; ++i) {
        const BigInt v = rng.uniform_below(huge);
        REQUIRE(v >= 0);
        REQUIRE(v < huge);
        any_large |= v > (BigInt(1) << 200);
    }
    CHECK(any_large);
    CHECK(rng.uniform_below(BigInt(1)) == 0);
}

TEST_CASE("cumulative_locate maps draws to weighted picks") {
    const std::vector<BigInt> cum{2, 5, 9};
    CHECK(cumulative_locate(cum, 0) == 0);
    CHECK(cumulative_locate(cum, 1) == 0);
    CHECK(cumulative_locate(cum, 2) == 1);
    CHECK(cumulative_locate(cum, 4) == 1);
    CHECK(cumulative_locate(cum, 5) == 2);
    CHECK(cumulative_locate(cum, 8) == 2);
}

TEST_CASE("shuffle is a deterministic permutation") {
    Rng a(3), b(3);
    std::vector<int> va{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<int> vb = va;
    a.shuffle(va);
    b.shuffle(vb);
    CHECK(va == vb);
    std::vector<int> sorted = va;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("scale_free_pick is proportional to the weights") {
    const std::vector<BigInt> weights{1, 2, 3, 4};
    std::vector<BigInt> cum;
    BigInt run = 0;
    for (const BigInt& w : weights) {
        run += w;
        cum.push_back(run);
    }
    Rng rng(17);
    std::vector<int> counts(4, 0);
    const int n = 60000;
    for (int i = 0; i < n; ++i) {
        ++counts[scale_free_pick([&](std::size_t j) { return cum[j]; }, 4, run, rng)];
    }
    for (std::size_t j = 0; j < 4; ++j) {
        const double expected = n * (j + 1) / 10.0;
        CHECK(counts[j] > expected * 0.9);
        CHECK(counts[j] < expected * 1.1);
    }
}

TEST_CASE("scale_free_pick consumes randomness independently of weight scale") {
    const std::vector<BigInt> base{5, 1, 7, 3, 9};
    auto run_sequence = [&](const BigInt& factor) {
        std::vector<BigInt> cum;
        BigInt run = 0;
        for (const BigInt& w : base) {
            run += w * factor;
            cum.push_back(run);
        }
        Rng rng(23, 4);
        std::vector<std::size_t> picks;
        for (int i = 0; i < 200; ++i) {
            picks.push_back(
                scale_free_pick([&](std::size_t j) { return cum[j]; }, base.size(), run, rng));
        }
        return picks;
    };
    CHECK(run_sequence(1) == run_sequence(1000));
    CHECK(run_sequence(1) == run_sequence(BigInt("1000000000000000000000")));
}
