#pragma once

#include <cstdint>
#include <limits>

namespace levyclt {

// Counter-based generator: output i is the splitmix64 finaliser applied to
// key + i * golden-gamma. Streams are cheap values; disjoint keys give
// independent streams, and the i-th output never depends on history.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) : key_(key) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

    result_type operator()() {
        std::uint64_t z = key_ + (counter_++) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in (0, 1] from the top 53 bits.
    double uniform() {
        const std::uint64_t bits = (*this)() >> 11;
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    std::uint64_t key() const { return key_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// One round of the splitmix64 finaliser (stream-key derivation).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Pure function of (seed, operation, grid index, block index); replicate
// blocks of kBlockRows rows each own one stream, so partitioning across
// threads cannot change the output.
inline constexpr std::uint32_t kBlockRows = 4096;

inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t op_id,
                                std::uint64_t grid_index, std::uint64_t block_index) {
    std::uint64_t k = mix64(seed + 0x9E3779B97F4A7C15ULL * (op_id + 1));
    k = mix64(k + 0x9E3779B97F4A7C15ULL * (grid_index + 1));
    k = mix64(k + 0x9E3779B97F4A7C15ULL * (block_index + 1));
    return k;
}

} // namespace levyclt
