#include "ips/rng.hpp"

#include <algorithm>
#include <cassert>

namespace ips {

std::uint64_t Rng::uniform_u64(std::uint64_t n) {
    assert(n > 0);
    if (n == 1) {
        return 0;
    }
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) {
            return r % n;
        }
    }
}

BigInt Rng::uniform_below(const BigInt& n) {
    assert(n > 0);
    if (n == 1) {
        return 0;
    }
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    const unsigned chunks = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (chunks - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
        BigInt r = next_u64() & top_mask;
        for (unsigned c = 1; c < chunks; ++c) {
            r <<= 64;
            r |= next_u64();
        }
        if (r < n) {
            return r;
        }
    }
}

std::size_t cumulative_locate(const std::vector<BigInt>& cumulative, const BigInt& r) {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    assert(it != cumulative.end());
    return static_cast<std::size_t>(it - cumulative.begin());
}

} // namespace ips
