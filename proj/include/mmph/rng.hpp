#pragma once

#include <cstdint>

#include "mmph/intmath.hpp"

namespace mmph {

// Counter-based generator: the output at counter c is mix64(key, stream, c),
// so streams with distinct (seed, stream) pairs are independent and any
// position of the sequence can be reproduced without replay. Experiments
// record (seed, params) and replay bit-exactly.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : key_(splitmix64(seed)), stream_(splitmix64(stream ^ 0x5bf0363546e24f0dULL)) {}

    uint64_t next() { return mix64(key_, stream_, counter_++); }

    // Uniform on [0, bound), bound >= 1. Rejection keeps the draw unbiased.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return next() & 1; }

    // Uniform on [0,1); 53 random mantissa bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    uint64_t seed_key() const { return key_; }
    uint64_t stream() const { return stream_; }
    uint64_t counter() const { return counter_; }

private:
    uint64_t key_;
    uint64_t stream_;
    uint64_t counter_ = 0;
};

}  // namespace mmph
