#ifndef VSMP_RNG_HPP
#define VSMP_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "vsmp/graph.hpp"

namespace vsmp {

/// splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed for run i (0-based) of a sequence of runs sharing a master seed.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index);

/// Deterministic random source. All randomness in the solvers flows through
/// this class so results are reproducible from a single seed across
/// platforms: mt19937_64 produces the same stream everywhere and the
/// sampling on top of it is spelled out here.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform value in [0, bound). Rejection sampling keeps the result
    /// exactly uniform. bound must be positive.
    std::uint64_t next_uint(std::uint64_t bound);

    /// Uniform random permutation of 1..n (Fisher-Yates).
    std::vector<Vertex> permutation(int n);

private:
    std::mt19937_64 engine_;
};

} // namespace vsmp

#endif // VSMP_RNG_HPP
