#pragma once

// Word-sized modular and integer helpers shared by every module.
// Moduli are assumed below 2^62 so that sums of two residues never wrap.

#include <cstdint>
#include <string>

namespace cmif {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Reduce a signed value into [0, m).
inline std::uint64_t to_residue(std::int64_t v, std::uint64_t m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// floor(sqrt(n)), exact for the full 64-bit range.
std::uint64_t isqrt(std::uint64_t n);
u128 isqrt128(u128 n);

/// Deterministic Miller-Rabin, exact for n < 2^64.
bool is_prime_u64(std::uint64_t n);

std::string to_string(u128 v);
std::string to_string(i128 v);

}  // namespace cmif
