#pragma once

#include <cstdint>
#include <vector>

namespace netresil {

/// splitmix64 generator (Vigna's reference constants). Every seeded draw in
/// the toolkit goes through this generator so that results are bit-identical
/// across platforms and reimplementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Partial Fisher-Yates: shuffles the first k slots of v in place, drawing
/// index offsets as next() % remaining. The pinned sampling procedure for
/// every without-replacement draw in the toolkit.
template <typename T>
void partial_shuffle(std::vector<T>& v, std::size_t k, SplitMix64& rng) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < k && i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next() % (n - i));
        std::swap(v[i], v[j]);
    }
}

}  // namespace netresil
