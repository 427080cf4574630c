#ifndef EC2_RANDOM_HPP
#define EC2_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ec2 {

/// Portable seeded generator. The engine is std::mt19937_64 (its output
/// sequence is fixed by the standard); bounded draws use rejection sampling
/// on raw 64-bit outputs so no library distribution is involved.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// Fisher-Yates, from the back.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent per-instance seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t instance_seed(std::uint64_t corpus_seed, std::uint64_t index) noexcept {
    return mix_seed(corpus_seed ^ mix_seed(index));
}

} // namespace ec2

#endif // EC2_RANDOM_HPP
