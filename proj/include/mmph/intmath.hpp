#pragma once

#include <bit>
#include <cstdint>

namespace mmph {

// Universe sizes may be 2^64 exactly, which does not fit in uint64_t.
using u128 = unsigned __int128;

inline constexpr unsigned bit_width_u128(u128 x) {
    auto hi = static_cast<uint64_t>(x >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<uint64_t>(x));
}

// Smallest w with x <= 2^w.
inline constexpr unsigned ceil_log2_u128(u128 x) {
    if (x <= 1) return 0;
    return bit_width_u128(x - 1);
}

inline constexpr unsigned ceil_log2_u64(uint64_t x) {
    if (x <= 1) return 0;
    return std::bit_width(x - 1);
}

inline constexpr u128 ceil_div_u128(u128 a, u128 b) { return (a + b - 1) / b; }

// 64-bit finalizer used for seeding, key mixing and the counter RNG.
inline constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline constexpr uint64_t mix64(uint64_t a, uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

inline constexpr uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) {
    return splitmix64(a ^ splitmix64(b ^ splitmix64(c)));
}

}  // namespace mmph
