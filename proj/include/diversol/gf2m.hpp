#ifndef DIVERSOL_GF2M_HPP
#define DIVERSOL_GF2M_HPP

#include <cstdint>

#include "diversol/errors.hpp"
#include "diversol/rng.hpp"

namespace diversol {

// GF(2^m), 1 <= m <= 32. Elements are m-bit values; arithmetic is modulo a
// fixed irreducible polynomial x^m + reduction_low_bits(m), taken from a
// table of lexicographically-smallest irreducibles and re-verified at
// construction.
class Gf2m {
public:
    using Elem = std::uint64_t;

    explicit Gf2m(int degree);

    // Smallest field with at least `min_size` elements.
    static Gf2m with_min_size(std::uint64_t min_size);

    int degree() const { return degree_; }
    std::uint64_t size() const { return std::uint64_t{1} << degree_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return a ^ b; }

    Elem mul(Elem a, Elem b) const {
        Elem acc = 0;
        while (b) {
            if (b & 1) acc ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> degree_ & 1) a = (a & mask_) ^ low_bits_;
        }
        return acc;
    }

    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;

    Elem random_element(Rng& rng) const { return rng.below(size()); }
    Elem random_nonzero(Rng& rng) const { return 1 + rng.below(size() - 1); }

    static std::uint64_t reduction_low_bits(int degree);
    // f = x^degree + low_bits, as a bit polynomial over GF(2).
    static bool is_irreducible(int degree, std::uint64_t low_bits);

private:
    int degree_;
    std::uint64_t low_bits_;
    std::uint64_t mask_;
};

}  // namespace diversol

#endif
