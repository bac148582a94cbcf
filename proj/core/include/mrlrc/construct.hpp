#pragma once

#include <cstdint>

#include "mrlrc/field.hpp"
#include "mrlrc/lrc.hpp"

namespace mrlrc {

struct FieldSearchResult {
    std::uint64_t q = 0;
    FieldPtr field;
    SubgroupData subgroup;
    std::uint64_t A = 0, B = 0;  // factorization witnesses, A*B = q-1
};

// Smallest product A*B >= a*b (ties by smaller A) with A >= a, B >= b and
// A*B+1 prime; sweep capped at A*B <= 64*a*b.
FieldSearchResult search_field_prime(std::uint64_t a, std::uint64_t b);

// Power-of-two order q with a size-A subgroup, A >= a and (q-1)/A >= b.
// Sweeps small powers of two first; the cyclotomic factorization of
// 2^(l*2^m) - 1 provides the guaranteed fallback and the sweep bound.
FieldSearchResult search_field_char2(std::uint64_t a, std::uint64_t b);

// Field for the two-heavy-parity construction: subgroup of size >= r with
// >= n/r cosets. Direct sweep over prime powers in (n, 8n], falling back to
// the constructive search.
FieldSearchResult find_field_h2(std::uint64_t n, std::uint64_t r, bool char2 = false);

// Base field q0 >= 2r+3 for the three-heavy-parity construction: subgroup of
// size >= r+2 with >= n/r cosets. Sweeps prime powers up to 8n.
FieldSearchResult find_field_h3(std::uint64_t n, std::uint64_t r);

// MR code with two heavy parities: Vandermonde local rows over subgroup
// elements, one constant heavy row per group keyed by coset representatives.
LrcCode construct_h2(std::uint64_t n, std::uint64_t r, std::uint64_t a,
                     const FieldSearchResult& field_result);

// MR code with three heavy parities over the cubic extension of the base
// field: Cauchy local rows, heavy rows scaled by 3-wise independent
// extension elements and coset representatives.
LrcCode construct_h3(std::uint64_t n, std::uint64_t r, std::uint64_t a,
                     const FieldSearchResult& base_field_result);

} // namespace mrlrc
