#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "egospread/errors.hpp"

namespace egospread {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// C(n,k) with overflow check; throws on 64-bit overflow.
inline i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i128 r = 1;
    for (i64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > i128(INT64_MAX)) throw Error("binomial overflow: C(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return i64(r);
}

// Exact integer ratio to double. Both operands fit a 64-bit mantissa, so the
// long double division is correctly rounded to within 1 ulp of the double result.
inline double exact_div(i64 num, i64 den) {
    return double(static_cast<long double>(num) / static_cast<long double>(den));
}

inline u64 fnv1a64(std::string_view s, u64 h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline u64 splitmix64(u64 z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based uniform double in [0,1). Stateless: the value depends only on
// (seed, counter), so sample streams can be split across workers at any
// boundary without changing the result.
inline double counter_uniform(u64 seed, u64 counter) {
    u64 v = splitmix64(splitmix64(seed) ^ splitmix64(counter * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL));
    return double(v >> 11) * 0x1.0p-53;
}

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace egospread
