#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace mws {

/// Deterministic splittable generator (splitmix64 core). Identical output on
/// every platform, unlike std::shuffle / std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1. Rejection sampling, unbiased.
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() { return (next() >> 11) * 0x1.0p-53; }

    /// Independent child stream; derivation depends on (current seed, tag)
    /// only, not on how much this stream has been consumed.
    Rng split(std::uint64_t tag) const {
        std::uint64_t h = state_ ^ 0x2545f4914f6cdd1dULL;
        h ^= tag + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return Rng(h);
    }

    Rng split(std::string_view tag) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        return split(h);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    static std::vector<std::uint32_t> permutation(std::size_t n, Rng rng) {
        std::vector<std::uint32_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
        rng.shuffle(p);
        return p;
    }

private:
    std::uint64_t state_;
};

}  // namespace mws
