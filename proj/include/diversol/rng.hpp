#ifndef DIVERSOL_RNG_HPP
#define DIVERSOL_RNG_HPP

#include <cstdint>
#include <random>

namespace diversol {

// splitmix64 step; used both as a mixer for seed derivation and to expand
// a root seed into generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic sub-seed derivation: child streams are indexed by a tag so
// randomized phases are reproducible and independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag) {
    std::uint64_t s = root ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

// mt19937_64 with a portable bounded-uniform draw. std::uniform_int_distribution
// is implementation-defined, so we do rejection sampling ourselves to keep
// --seed output byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform value in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        while (true) {
            std::uint64_t v = gen_();
            if (v < limit) return v % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

private:
    std::mt19937_64 gen_;
};

}  // namespace diversol

#endif
