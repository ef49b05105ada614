#ifndef BERGE_RNG_HPP
#define BERGE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace berge {

// Seeded mt19937_64 wrapper. The standard pins the engine's output sequence,
// so runs are bit-reproducible across platforms as long as we avoid
// std::uniform_int_distribution (whose algorithm is implementation-defined).
class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    // Derived per-trial stream: seed xor trial index.
    static rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return rng(seed ^ trial);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int index(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    bool coin() { return (engine_() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

inline constexpr std::uint64_t default_seed = 1729;

} // namespace berge

#endif
