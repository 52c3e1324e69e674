#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace sftcop {

// Deterministic random stream. All randomness in the library flows through
// Stream: the engine is std::mt19937_64, whose output sequence is fixed by
// the standard, and the value mappings below avoid std::uniform_*_distribution
// (whose outputs differ between standard library implementations). Two builds
// on different platforms therefore draw identical sequences.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    int uniform_int(int n) {
        return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

// Child-seed derivation. A run owns one root seed; every (task, episode, ...)
// gets its own stream via derive_seed(root, {tag, index, ...}). Independent
// streams are what make serial and parallel execution byte-identical.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path);

Stream substream(std::uint64_t root, std::initializer_list<std::uint64_t> path);

// Stream tags used in derive_seed paths.
inline constexpr std::uint64_t kTaskStream = 0x7461736bULL;
inline constexpr std::uint64_t kEpisodeStream = 0x65706973ULL;
inline constexpr std::uint64_t kRolloutStream = 0x726f6c6cULL;
inline constexpr std::uint64_t kInstanceStream = 0x696e7374ULL;

}  // namespace sftcop
