#include "mrlrc/construct.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "mrlrc/numtheory.hpp"

namespace mrlrc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

FieldSearchResult result_for(u64 q, u64 A, u64 B, u64 min_size, u64 min_cosets) {
    FieldSearchResult out;
    out.q = q;
    auto pk = prime_power(q);
    if (!pk) fail(Err::NotFound, std::to_string(q) + " is not a prime power");
    out.field = Field::make(pk->first, pk->second);
    auto sub = subgroup_with_cosets(out.field, min_size, min_cosets);
    if (!sub) fail(Err::NotFound, "field lost its subgroup");  // cannot happen for valid A,B
    out.subgroup = std::move(*sub);
    out.A = A;
    out.B = B;
    return out;
}

// smallest divisor >= lo of n whose cofactor is >= co; 0 when none
u64 qualifying_divisor(u64 n, u64 lo, u64 co) {
    for (u64 d : divisors_sorted(n))
        if (d >= lo && n / d >= co) return d;
    return 0;
}

} // namespace

FieldSearchResult search_field_prime(u64 a, u64 b) {
    if (a < 1 || b < 1) fail(Err::PreconditionViolated, "need a, b >= 1");
    if (sat_mul(a, b) > (u64(1) << 30)) fail(Err::PreconditionViolated, "a*b above 2^30");
    const u64 cap = 64 * a * b;
    // enumerate candidate products A*B in increasing order (ties by smaller A)
    using Cand = std::tuple<u64, u64, u64>;  // product, A, B
    std::priority_queue<Cand, std::vector<Cand>, std::greater<>> heap;
    heap.emplace(a * b, a, b);
    while (!heap.empty()) {
        auto [prod, A, B] = heap.top();
        heap.pop();
        if (prod > cap) break;
        if (is_prime(prod + 1)) return result_for(prod + 1, A, B, a, b);
        heap.emplace(A * (B + 1), A, B + 1);
        if (B == b) heap.emplace((A + 1) * b, A + 1, b);
    }
    fail(Err::SweepExhausted, "no prime A*B+1 with A*B <= 64ab; this contradicts the density bound");
}

FieldSearchResult search_field_char2(u64 a, u64 b) {
    if (a < 1 || b < 1) fail(Err::PreconditionViolated, "need a, b >= 1");
    const u64 n = sat_mul(a, b);
    if (n > (u64(1) << 30)) fail(Err::PreconditionViolated, "a*b above 2^30");

    // constructive bound: q = 2^(l*2^m) with (2^m - 1)^2 >= log2 n and l
    // minimal with 2^(l*(2^m-1)) >= C*n + 1, C = exp(sum 2^-2^j)
    const long double C = std::exp(0.5L + 0.25L + 0.0625L + std::pow(2.0L, -8) +
                                   std::pow(2.0L, -16) + std::pow(2.0L, -32));
    const long double log2n = n > 1 ? std::log2(static_cast<long double>(n)) : 0.0L;
    unsigned m = 1;
    while (static_cast<long double>((u64(1) << m) - 1) * ((u64(1) << m) - 1) < log2n) ++m;
    const u64 em = (u64(1) << m) - 1;  // 2^m - 1
    u64 l = 1;
    const long double threshold = C * n + 1;
    while (std::pow(2.0L, static_cast<long double>(l * em)) < threshold) ++l;
    if (l * (em + 1) > 40) fail(Err::Overflow, "constructive char-2 field exceeds 2^40");
    const u64 x = u64(1) << l;
    const u64 q_cons = u64(1) << (l * (em + 1));

    // A = product over the binary expansion of alpha, x^(alpha-1) < a <= x^alpha
    u64 alpha = 0;
    {
        u128 pw = 1;
        while (pw < a) { pw *= x; ++alpha; }
    }
    u64 A_cons = 1;
    for (unsigned bit = 0; bit < m; ++bit)
        if ((alpha >> bit) & 1) A_cons *= (u64(1) << (l * (u64(1) << bit))) + 1;  // 1 + x^(2^bit)
    u64 B_cons = (q_cons - 1) / A_cons;

    // sweep the small powers of two below the constructive bound
    for (u64 k = 1; (u64(1) << k) <= q_cons; ++k) {
        u64 q = u64(1) << k;
        u64 d = qualifying_divisor(q - 1, a, b);
        if (d) return result_for(q, d, (q - 1) / d, a, b);
    }
    return result_for(q_cons, A_cons, B_cons, a, b);
}

FieldSearchResult find_field_h2(u64 n, u64 r, bool char2) {
    if (r == 0 || n % r != 0) fail(Err::PreconditionViolated, "group size must divide length");
    const u64 g = n / r;
    if (char2) {
        FieldSearchResult cons = search_field_char2(r, g);
        for (u64 k = 1; (u64(1) << k) <= cons.q; ++k) {
            u64 q = u64(1) << k;
            if (q <= n) continue;
            u64 d = qualifying_divisor(q - 1, r, g);
            if (d) return result_for(q, d, (q - 1) / d, r, g);
        }
        return cons;
    }
    for (u64 q = n + 1; q <= 8 * n; ++q) {
        if (!prime_power(q)) continue;
        u64 d = qualifying_divisor(q - 1, r, g);
        if (d) return result_for(q, d, (q - 1) / d, r, g);
    }
    return search_field_prime(r, g);
}

FieldSearchResult find_field_h3(u64 n, u64 r) {
    if (r == 0 || n % r != 0) fail(Err::PreconditionViolated, "group size must divide length");
    const u64 g = n / r;
    for (u64 q0 = 2 * r + 3; q0 <= 8 * n; ++q0) {
        if (!prime_power(q0)) continue;
        u64 d = qualifying_divisor(q0 - 1, r + 2, g);
        if (d) return result_for(q0, d, (q0 - 1) / d, r + 2, g);
    }
    fail(Err::NotFound, "no base field up to 8n supports the construction");
}

LrcCode construct_h2(u64 n, u64 r, u64 a, const FieldSearchResult& fr) {
    if (r == 0 || n % r != 0 || a < 1 || a >= r) fail(Err::PreconditionViolated, "bad (n, r, a)");
    const u64 g = n / r;
    if (n <= g * a + 2) fail(Err::PreconditionViolated, "no information symbols left");
    if (fr.subgroup.size < r) fail(Err::PreconditionViolated, "subgroup smaller than the group size");
    if (fr.subgroup.coset_reps.size() < g) fail(Err::PreconditionViolated, "not enough cosets");
    const FieldPtr& f = fr.field;

    // distinct subgroup elements: successive powers of the subgroup generator
    std::vector<Elem> alphas(r);
    Elem cur = 1;
    for (u64 j = 0; j < r; ++j) {
        alphas[j] = cur;
        cur = f->mul(cur, fr.subgroup.generator);
    }
    Matrix A = vandermonde(f, alphas, a, 1);
    std::vector<Matrix> As(g, A), Bs;
    Bs.reserve(g);
    for (u64 i = 0; i < g; ++i) {
        Matrix B(f, 2, r);
        Elem lambda = fr.subgroup.coset_reps[i];
        for (u64 j = 0; j < r; ++j) {
            B(0, j) = lambda;
            B(1, j) = f->pow(alphas[j], a + 1);
        }
        Bs.push_back(std::move(B));
    }
    LrcParams p{n, r, a, 2, f};
    return assemble(p, std::move(As), std::move(Bs));
}

LrcCode construct_h3(u64 n, u64 r, u64 a, const FieldSearchResult& base_fr) {
    if (r == 0 || n % r != 0 || a < 1 || a >= r) fail(Err::PreconditionViolated, "bad (n, r, a)");
    const u64 g = n / r;
    if (n <= g * a + 3) fail(Err::PreconditionViolated, "no information symbols left");
    const FieldPtr& f0 = base_fr.field;
    const u64 q0 = f0->order();
    const u64 d = base_fr.subgroup.size;
    if (q0 < 2 * r + 3) fail(Err::PreconditionViolated, "base field below 2r+3");
    if (d < r + 2) fail(Err::PreconditionViolated, "subgroup smaller than r+2");
    if (base_fr.subgroup.coset_reps.size() < g) fail(Err::PreconditionViolated, "not enough cosets");

    auto in_subgroup = [&](Elem v) { return v != 0 && f0->pow(v, d) == 1; };

    // beta_{a+1}, beta_{a+2}, beta_{a+3}: first distinct elements keeping the
    // fractional-image set large enough
    Elem beta1 = 0, beta2 = 1, beta3 = 2;
    std::vector<Elem> omega;
    for (;;) {
        omega.clear();
        for (Elem v = 0; v < q0; ++v) {
            if (v == beta3) continue;
            Elem ratio = f0->div(f0->sub(v, beta2), f0->sub(v, beta3));
            if (in_subgroup(ratio)) omega.push_back(v);
        }
        u64 usable = omega.size();
        for (Elem v : omega)
            if (v == beta1) { --usable; break; }
        if (usable >= r) break;
        ++beta3;  // cannot happen for |G| >= r+2; guarded anyway
        if (beta3 >= q0) fail(Err::OmegaTooSmall, "image set smaller than the group size");
    }

    std::vector<Elem> alphas;
    for (Elem v : omega) {
        if (v == beta1) continue;
        alphas.push_back(v);
        if (alphas.size() == r) break;
    }
    if (alphas.size() < r) fail(Err::OmegaTooSmall, "image set smaller than the group size");

    std::vector<Elem> betas;
    for (Elem v = 0; betas.size() < a; ++v) {
        if (v >= q0) fail(Err::PreconditionViolated, "base field too small for the beta scan");
        if (v == beta1 || v == beta2 || v == beta3) continue;
        if (std::find(alphas.begin(), alphas.end(), v) != alphas.end()) continue;
        betas.push_back(v);
    }

    FieldPtr f = Field::cubic_extension(f0);
    auto embed = [&](Elem c) { return f->embed_base(c); };

    // lambda_i = v0 + gamma_i v1 + gamma_i^2 v2 over the power basis; any
    // three are independent over the base field
    std::vector<Elem> lambdas(g);
    for (u64 i = 0; i < g; ++i) {
        Elem gamma = static_cast<Elem>(i);  // i-th smallest base element
        lambdas[i] = f->from_components({1, gamma, f0->mul(gamma, gamma)});
    }

    Matrix A(f, a, r);
    for (u64 rr = 0; rr < a; ++rr)
        for (u64 j = 0; j < r; ++j)
            A(rr, j) = embed(f0->inv(f0->sub(alphas[j], betas[rr])));

    std::vector<Matrix> As(g, A), Bs;
    Bs.reserve(g);
    for (u64 i = 0; i < g; ++i) {
        Matrix B(f, 3, r);
        Elem mu = base_fr.subgroup.coset_reps[i];
        for (u64 j = 0; j < r; ++j) {
            B(0, j) = f->mul(lambdas[i], embed(f0->inv(f0->sub(alphas[j], beta1))));
            B(1, j) = embed(f0->div(mu, f0->sub(alphas[j], beta2)));
            B(2, j) = embed(f0->inv(f0->sub(alphas[j], beta3)));
        }
        Bs.push_back(std::move(B));
    }
    LrcParams p{n, r, a, 3, f};
    return assemble(p, std::move(As), std::move(Bs));
}

} // namespace mrlrc
