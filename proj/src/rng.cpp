#include "vsmp/rng.hpp"

#include <numeric>
#include <utility>

#include "vsmp/error.hpp"

namespace vsmp {

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index) {
    return mix_seed(master_seed + 0x9E3779B97F4A7C15ULL * (run_index + 1));
}

std::uint64_t RandomSource::next_uint(std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidParameter("next_uint bound must be positive");
    }
    // Values below threshold would skew the distribution; draw again.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = engine_();
        if (r >= threshold) return r % bound;
    }
}

std::vector<Vertex> RandomSource::permutation(int n) {
    if (n < 1) {
        throw InvalidParameter("permutation size must be at least 1, got " +
                               std::to_string(n));
    }
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    for (std::uint64_t i = static_cast<std::uint64_t>(n) - 1; i > 0; --i) {
        const std::uint64_t j = next_uint(i + 1);
        std::swap(seq[i], seq[j]);
    }
    return seq;
}

} // namespace vsmp
