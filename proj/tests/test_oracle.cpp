#include "test_util.hpp"

#include "ips/fips.hpp"
#include "ips/hips.hpp"
#include "ips/oracle.hpp"

#include <doctest.h>

using namespace ips;

TEST_CASE("enumeration of the worked example matches its golden totals") {
    const NumericalDataset ds = test_util::table1();
    const EnumeratedSpace space = enumerate_all(ds);
    CHECK(space.count == 1500);
    CHECK(space.z_f == 776);
    CHECK(space.z_hf == 67050);

    std::size_t with_freq = 0, with_vol_freq = 0;
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        if (space.freqs[idx] > 0) {
            ++with_freq;
            if (space.vol(idx) > 0) {
                ++with_vol_freq;
            }
        }
    }
    CHECK(with_freq == 597);
    CHECK(with_vol_freq == 255);
}

TEST_CASE("single-attribute space enumerates in interval order") {
    const NumericalDataset ds = test_util::from_csv("a\n1\n2\n");
    const EnumeratedSpace space = enumerate_all(ds);
    REQUIRE(space.count == 3);
    CHECK(space.pattern(0).bounds == std::vector<std::pair<ScaledValue, ScaledValue>>{{1, 1}});
    CHECK(space.pattern(1).bounds == std::vector<std::pair<ScaledValue, ScaledValue>>{{1, 2}});
    CHECK(space.pattern(2).bounds == std::vector<std::pair<ScaledValue, ScaledValue>>{{2, 2}});
    CHECK(std::vector<std::uint32_t>(space.freqs.begin(), space.freqs.end()) ==
          std::vector<std::uint32_t>{1, 2, 1});
    CHECK(space.z_f == 4);
    CHECK(space.z_hf == 2);
    CHECK(space.vol(1) == 1);
}

TEST_CASE("pattern indexes are lexicographic with attribute 0 most significant") {
    const NumericalDataset ds = test_util::table1();
    const EnumeratedSpace space = enumerate_all(ds);
    CHECK(space.pattern(0).bounds ==
          std::vector<std::pair<ScaledValue, ScaledValue>>{{2, 2}, {7, 7}, {91, 91}});
    CHECK(space.pattern(1).bounds ==
          std::vector<std::pair<ScaledValue, ScaledValue>>{{2, 2}, {7, 7}, {91, 101}});
    CHECK(space.pattern(1499).bounds ==
          std::vector<std::pair<ScaledValue, ScaledValue>>{{6, 6}, {12, 12}, {130, 130}});
}

TEST_CASE("index_of inverts pattern decoding across the whole space") {
    const NumericalDataset ds = test_util::table1();
    const EnumeratedSpace space = enumerate_all(ds);
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        CHECK(space.index_of(space.pattern(idx)) == idx);
    }

    IntervalPattern bad;
    bad.bounds = {{6, 2}, {7, 12}, {91, 130}};
    CHECK(test_util::thrown_kind([&] { space.index_of(bad); }) == ErrorKind::usage);
    bad.bounds = {{2, 5}, {7, 12}, {91, 130}}; // 5 does not occur in the column
    CHECK(test_util::thrown_kind([&] { space.index_of(bad); }) == ErrorKind::usage);
}

TEST_CASE("parallel enumeration equals the per-pattern reference") {
    const NumericalDataset t1 = test_util::table1();
    const EnumeratedSpace a = enumerate_all(t1);
    const EnumeratedSpace b = enumerate_all_ref(t1);
    CHECK(a.freqs == b.freqs);
    CHECK(a.z_f == b.z_f);
    CHECK(a.z_hf == b.z_hf);

    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const NumericalDataset ds = test_util::random_dataset(rng, 8, 3, 5, false);
        const EnumeratedSpace p = enumerate_all(ds);
        const EnumeratedSpace r = enumerate_all_ref(ds);
        CHECK(p.freqs == r.freqs);
        CHECK(p.z_f == r.z_f);
        CHECK(p.z_hf == r.z_hf);
    }
}

TEST_CASE("exact targets normalize and rate the unconstrained pattern correctly") {
    const NumericalDataset ds = test_util::table1();
    const EnumeratedSpace space = enumerate_all(ds);
    const std::vector<Rational> freq_target = exact_target(space, Measure::freq);
    const std::vector<Rational> hf_target = exact_target(space, Measure::vol_times_freq);

    Rational sum_f = 0, sum_hf = 0;
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        sum_f += freq_target[idx];
        sum_hf += hf_target[idx];
    }
    CHECK(sum_f == 1);
    CHECK(sum_hf == 1);

    IntervalPattern full;
    full.bounds = {{2, 6}, {7, 12}, {91, 130}};
    const std::uint64_t idx = space.index_of(full);
    CHECK(freq_target[idx] == Rational(5, 776));
    CHECK(hf_target[idx] == Rational(780 * 5, 67050));
}

TEST_CASE("step-probability audit equals the target distribution exactly") {
    const NumericalDataset ds = test_util::table1();
    const EnumeratedSpace space = enumerate_all(ds);
    CHECK(audit_sampler(space, Method::fips) == exact_target(space, Measure::freq));
    CHECK(audit_sampler(space, Method::hips) == exact_target(space, Measure::vol_times_freq));
}

TEST_CASE("normalization and audit identities hold on random datasets") {
    Rng rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        const NumericalDataset ds = test_util::random_dataset(rng, 8, 3, 5, true);
        const EnumeratedSpace space = enumerate_all(ds);

        BigInt sum_nip = 0, sum_iph = 0;
        for (std::size_t g = 0; g < ds.n_objects(); ++g) {
            sum_nip += nip(ds, g);
            sum_iph += iph(ds, g);
        }
        CHECK(space.z_f == sum_nip);
        CHECK(space.z_hf == sum_iph);

        CHECK(audit_sampler(space, Method::fips) == exact_target(space, Measure::freq));
        CHECK(audit_sampler(space, Method::hips) == exact_target(space, Measure::vol_times_freq));
    }
}

TEST_CASE("analytic interval-length totals equal the double-loop sum") {
    Rng rng(55);
    for (int trial = 0; trial < 6; ++trial) {
        const NumericalDataset ds = test_util::random_dataset(rng, 8, 3, 5, false);
        for (std::size_t m = 0; m < ds.n_attributes(); ++m) {
            for (std::size_t g = 0; g < ds.n_objects(); ++g) {
                CHECK(til(ds, m, g) == til_bruteforce(ds, m, g));
            }
        }
    }
    const NumericalDataset t1 = test_util::table1();
    for (std::size_t m = 0; m < 3; ++m) {
        for (std::size_t g = 0; g < 5; ++g) {
            CHECK(til(t1, m, g) == til_bruteforce(t1, m, g));
        }
    }
}

TEST_CASE("uniform_comparison agrees with directly computed probabilities") {
    Rng rng(91);
    for (int trial = 0; trial < 6; ++trial) {
        const NumericalDataset ds = test_util::random_dataset(rng, 8, 3, 5, true);
        const HipsState state = preprocess_hips(ds);
        for (std::size_t g = 0; g < ds.n_objects(); ++g) {
            const Rational p_g(state.iph_weights[g], state.z_hf);
            const Rational uniform(1, ds.n_objects());
            CHECK(uniform_comparison(state, g) == (p_g >= uniform));
        }
    }
}

TEST_CASE("uniform-naive empty mass is exact on the worked example") {
    const NumericalDataset ds = test_util::table1();
    const EnumeratedSpace space = enumerate_all(ds);
    CHECK(naive_empty_mass(space) == Rational(3143, 6400));
}

TEST_CASE("enumeration refuses spaces above the cap") {
    const NumericalDataset ds = test_util::table1();
    CHECK(test_util::thrown_kind([&] { enumerate_all(ds, 100); }) == ErrorKind::usage);
    CHECK(enumerate_all(ds, 1500).count == 1500); // boundary is inclusive
}

TEST_CASE("volume targets on a degenerate space are rejected") {
    const NumericalDataset ds = test_util::from_csv("a\n3\n3\n");
    const EnumeratedSpace space = enumerate_all(ds);
    CHECK(space.z_hf == 0);
    CHECK(test_util::thrown_kind([&] { exact_target(space, Measure::vol_times_freq); }) ==
          ErrorKind::degenerate_space);
}
