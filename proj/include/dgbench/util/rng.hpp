#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dgbench {

// All generators draw from a seeded mt19937_64 through the helpers below, so
// that identical seeds give identical artifacts across runs and platforms
// (std::uniform_int_distribution is implementation-defined; these are not).
using Rng = std::mt19937_64;

inline std::uint64_t next_u64(Rng& rng) { return rng(); }

// Uniform in [lo, hi], inclusive. Modulo bias is irrelevant at these ranges.
inline int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double uniform_real(Rng& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline bool chance(Rng& rng, double p) { return uniform_real(rng) < p; }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(items.size()) - 1))];
}

// Fisher-Yates; deterministic for a given seed, unlike std::shuffle.
template <typename T>
void shuffle(Rng& rng, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

// Stable seed derivation for per-instance streams (FNV-1a over the key).
inline std::uint64_t derive_seed(std::uint64_t base, const std::string& key) {
    std::uint64_t h = 1469598103934665603ull ^ base;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace dgbench
