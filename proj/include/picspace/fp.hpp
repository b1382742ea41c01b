#pragma once

#include <cstdint>
#include <stdexcept>

namespace picspace {

// Arithmetic in F_p for an odd prime p < 2^62.
namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, p - 2, p);
}

inline std::uint64_t from_signed(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

inline void require_valid_modulus(std::uint64_t p, std::uint64_t min) {
    if (p < 3 || p % 2 == 0)
        throw std::domain_error("modulus must be an odd prime >= 3");
    if (p >= (std::uint64_t{1} << 62))
        throw std::domain_error("modulus too large (needs p < 2^62)");
    if (p <= min)
        throw std::domain_error("modulus too small for this graph");
}

}  // namespace fp

/// splitmix64; used to derive independent per-task streams from one
/// seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t task) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (task + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace picspace
