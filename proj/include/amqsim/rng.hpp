#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace amqsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seeded random source.  Every random choice in a run flows through one of
// these, so identical seeds reproduce identical transcripts bit for bit.
// Bounded draws use rejection sampling on the raw 64-bit stream; nothing
// depends on the standard library's distribution implementations.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, bound).
    int uniform_int(int bound) {
        if (bound <= 0) throw std::invalid_argument("uniform_int: bound must be positive");
        const auto span = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / span) * span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<int>(x % span);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Independent child source for parallel trials: trial i gets derive(i).
    RandomSource derive(std::uint64_t stream) const {
        return RandomSource(splitmix64(seed_ ^ splitmix64(stream + 0x51E5E75ULL)));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_int(static_cast<int>(i)));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Sorted uniform k-subset of {0, …, n-1} (Knuth's selection sampling).
    std::vector<std::size_t> sample_positions(std::size_t k, std::size_t n) {
        if (k > n) throw std::invalid_argument("sample_positions: k > n");
        std::vector<std::size_t> out;
        out.reserve(k);
        std::size_t chosen = 0;
        for (std::size_t t = 0; t < n && chosen < k; ++t) {
            const double need = static_cast<double>(k - chosen);
            const double left = static_cast<double>(n - t);
            if (uniform_real() * left < need) {
                out.push_back(t);
                ++chosen;
            }
        }
        return out;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace amqsim
