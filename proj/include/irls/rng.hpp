#pragma once

#include <cstdint>
#include <vector>

namespace irls::rng {

// splitmix64 step. Self-contained so streams behave identically across
// platforms and standard-library versions (std distributions do not).
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent stream seed from a base seed and a stream id.
inline uint64_t mix(uint64_t seed, uint64_t stream_id) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
    (void)splitmix64(s);
    return splitmix64(s);
}

inline uint64_t mix3(uint64_t seed, uint64_t a, uint64_t b) {
    return mix(mix(seed, a), b);
}

class Stream {
public:
    explicit Stream(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1]
    double next_double_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // uniform integer in [0, n), n >= 1; rejection sampling, unbiased
    uint64_t next_below(uint64_t n) {
        const uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    bool bernoulli(double p) { return next_double() < p; }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (size_t i = xs.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(xs[i - 1], xs[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace irls::rng
