#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rootw {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 powmod128(u64 a, u128 e, u64 m);

int v2_u64(u64 x);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n);

/// Euler phi for small arguments (trial factorization).
u64 euler_phi(u64 n);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
u64 multiplicative_order(u64 a, u64 m);

/// If q = p^k for a prime p and k >= 1, returns (p, k).
std::optional<std::pair<u64, int>> prime_power_split(u64 q);

/// Trial division by primes up to `bound`; returns the found factor
/// multiplicities and the remaining cofactor.
std::pair<std::map<u64, int>, u64> trial_division(u64 n, u64 bound);

/// Full factorization of |n| using trial division up to 10^6, then a
/// primality / perfect-power check on the cofactor. Throws FactorizationError
/// if the cofactor resists (spec'd explicit failure, never a silent skip).
std::map<u64, int> factor_or_throw(u64 n);

}  // namespace rootw
