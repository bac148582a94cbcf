#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mrlrc {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Prime factorization by trial division plus a prime cofactor check.
// Intended for n up to ~2^40 (cofactors past the 2^20 trial bound must be prime).
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors_sorted(std::uint64_t n);

// (p, k) with n == p^k and p prime, if n is a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

} // namespace mrlrc
