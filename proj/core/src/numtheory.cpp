#include "mrlrc/numtheory.hpp"

#include <algorithm>
#include <cstdint>

namespace mrlrc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set decides primality exactly for all 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p <= (1u << 20) && p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);  // prime cofactor for n <= ~2^40
    return out;
}

std::vector<u64> divisors_sorted(u64 n) {
    auto fac = factorize(n);
    std::vector<u64> divs{1};
    for (auto [p, e] : fac) {
        std::size_t sz = divs.size();
        u64 pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
    if (n < 2) return std::nullopt;
    for (u64 p = 2; p * p <= n && p <= (1u << 20); p == 2 ? p = 3 : p += 2) {
        if (n % p) continue;
        unsigned k = 0;
        while (n % p == 0) { n /= p; ++k; }
        if (n == 1) return std::make_pair(p, k);
        return std::nullopt;
    }
    if (is_prime(n)) return std::make_pair(n, 1u);
    return std::nullopt;
}

u64 sat_add(u64 a, u64 b) {
    u64 s = a + b;
    return s < a ? UINT64_MAX : s;
}

u64 sat_mul(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    u128 p = u128(a) * b;
    return p > UINT64_MAX ? UINT64_MAX : static_cast<u64>(p);
}

u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<u64>(r);
}

} // namespace mrlrc
