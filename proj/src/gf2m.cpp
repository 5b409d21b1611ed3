#include "diversol/gf2m.hpp"

#include <array>
#include <bit>

namespace diversol {

namespace {

// Low bits of the lexicographically smallest irreducible x^m + ... over
// GF(2), for m = 1..32.
constexpr std::array<std::uint64_t, 33> kIrreducibleLowBits = {
    0,    0x1,  0x3,  0x3,  0x3,  0x5,  0x3,  0x3,  0x1B, 0x3,  0x9,
    0x5,  0x9,  0x1B, 0x21, 0x3,  0x2B, 0x9,  0x9,  0x27, 0x9,  0x5,
    0x3,  0x21, 0x1B, 0x9,  0x1B, 0x27, 0x3,  0x5,  0x3,  0x9,  0x8D};

int poly_degree(std::uint64_t f) { return 63 - std::countl_zero(f); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
    const int df = poly_degree(f);
    while (a && poly_degree(a) >= df) a ^= f << (poly_degree(a) - df);
    return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    // Carry-less multiply then reduce; degrees stay below 64 for m <= 32.
    std::uint64_t r = 0;
    for (int i = 0; b >> i; ++i)
        if (b >> i & 1) r ^= a << i;
    return poly_mod(r, f);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

// x^(2^k) mod f by repeated squaring.
std::uint64_t frobenius_power(int k, std::uint64_t f) {
    std::uint64_t t = 2;  // the polynomial x
    for (int i = 0; i < k; ++i) t = poly_mulmod(t, t, f);
    return t;
}

}  // namespace

bool Gf2m::is_irreducible(int degree, std::uint64_t low_bits) {
    if (degree < 1 || degree > 32) return false;
    const std::uint64_t f = (std::uint64_t{1} << degree) | low_bits;
    if (degree == 1) return low_bits <= 1;
    // Rabin: x^(2^m) == x mod f, and gcd(x^(2^(m/p)) - x, f) = 1 for every
    // prime p dividing m.
    if (frobenius_power(degree, f) != 2) return false;
    int rest = degree;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        if (poly_gcd(frobenius_power(degree / p, f) ^ 2, f) != 1) return false;
        while (rest % p == 0) rest /= p;
    }
    return true;
}

std::uint64_t Gf2m::reduction_low_bits(int degree) {
    if (degree < 1 || degree > 32) throw InputError("field degree must be in 1..32");
    return kIrreducibleLowBits[static_cast<std::size_t>(degree)];
}

Gf2m::Gf2m(int degree)
    : degree_(degree),
      low_bits_(reduction_low_bits(degree)),
      mask_((degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1)) {
    if (!is_irreducible(degree_, low_bits_))
        throw ContractError("reduction polynomial table entry is not irreducible");
}

Gf2m Gf2m::with_min_size(std::uint64_t min_size) {
    for (int m = 1; m <= 32; ++m)
        if ((std::uint64_t{1} << m) >= min_size) return Gf2m(m);
    throw BudgetError("requested field size exceeds 2^32");
}

Gf2m::Elem Gf2m::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Gf2m::Elem Gf2m::inv(Elem a) const {
    if (a == 0) throw InputError("inverse of zero");
    return pow(a, size() - 2);
}

}  // namespace diversol
