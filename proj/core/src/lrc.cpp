#include "mrlrc/lrc.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "mrlrc/numtheory.hpp"

namespace mrlrc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

void LrcParams::validate() const {
    if (!field) fail(Err::ShapeMismatch, "params without a field");
    if (r == 0 || n == 0 || n % r != 0) fail(Err::PreconditionViolated, "group size must divide length");
    if (a >= r) fail(Err::PreconditionViolated, "need a < r");
    u64 g = groups();
    if (g * a + h >= n) fail(Err::PreconditionViolated, "no information symbols left");
}

ErasurePattern ErasurePattern::of(std::vector<u32> idx) {
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        fail(Err::PreconditionViolated, "repeated erasure index");
    return ErasurePattern{std::move(idx)};
}

std::vector<u32> ErasurePattern::group_counts(const LrcParams& p) const {
    std::vector<u32> counts(p.groups(), 0);
    for (u32 i : indices) {
        if (i >= p.n) fail(Err::PreconditionViolated, "erasure index out of range");
        ++counts[i / p.r];
    }
    return counts;
}

std::string ErasurePattern::to_text() const {
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(indices[i]);
    }
    return s;
}

ErasurePattern ErasurePattern::parse(const std::string& s) {
    std::vector<u32> idx;
    if (s.empty()) return ErasurePattern{};
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail(Err::ParseError, "bad erasure list '" + s + "'");
        idx.push_back(static_cast<u32>(std::stoul(tok)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return of(std::move(idx));
}

// --- combination helpers (lexicographic) ---

namespace {

bool next_comb(std::vector<u32>& c, u32 n) {
    u32 k = static_cast<u32>(c.size());
    u32 j = k;
    while (j > 0 && c[j - 1] == n - k + (j - 1)) --j;
    if (j == 0) return false;
    ++c[j - 1];
    for (u32 i = j; i < k; ++i) c[i] = c[i - 1] + 1;
    return true;
}

void first_comb(std::vector<u32>& c, u32 k) {
    c.resize(k);
    for (u32 i = 0; i < k; ++i) c[i] = i;
}

void unrank_comb(u64 idx, u32 n, u32 k, std::vector<u32>& out) {
    out.resize(k);
    u32 v = 0;
    for (u32 pos = 0; pos < k; ++pos) {
        for (;; ++v) {
            u64 cnt = binomial(n - 1 - v, k - 1 - pos);
            if (idx < cnt) { out[pos] = v++; break; }
            idx -= cnt;
        }
    }
}

// All per-group extras vectors (c_i = a + e_i) in lexicographic order.
std::vector<std::vector<u32>> extras_vectors(u64 g, u64 h, u64 emax) {
    std::vector<std::vector<u32>> out;
    std::vector<u32> e(g, 0);
    auto rec = [&](auto&& self, std::size_t i, u64 rem) -> void {
        if (i == g) {
            if (rem == 0) out.push_back(e);
            return;
        }
        u64 cap = std::min<u64>(emax, rem);
        u64 tail_cap = (g - i - 1) * emax;
        for (u64 v = (rem > tail_cap ? rem - tail_cap : 0); v <= cap; ++v) {
            e[i] = static_cast<u32>(v);
            self(self, i + 1, rem - v);
        }
        e[i] = 0;
    };
    rec(rec, 0, h);
    return out;
}

} // namespace

// --- assembly ---

LrcCode assemble(LrcParams params, std::vector<Matrix> A, std::vector<Matrix> B) {
    params.validate();
    const u64 g = params.groups(), r = params.r, a = params.a, h = params.h;
    if (A.size() != g || B.size() != g) fail(Err::ShapeMismatch, "need one A and one B block per group");
    for (u64 i = 0; i < g; ++i) {
        if (A[i].rows() != a || A[i].cols() != r)
            fail(Err::ShapeMismatch, "A block " + std::to_string(i) + " is not a x r");
        if (B[i].rows() != h || B[i].cols() != r)
            fail(Err::ShapeMismatch, "B block " + std::to_string(i) + " is not h x r");
        if (!A[i].field() || !Field::same(*A[i].field(), *params.field) ||
            !B[i].field() || !Field::same(*B[i].field(), *params.field))
            fail(Err::ShapeMismatch, "block over the wrong field");
    }
    // local MDS: every a x a minor of every A_i is nonzero
    if (a > 0) {
        std::vector<u32> comb;
        for (u64 i = 0; i < g; ++i) {
            first_comb(comb, static_cast<u32>(a));
            do {
                std::vector<std::size_t> cols(comb.begin(), comb.end());
                if (det(A[i].columns(cols)) == 0)
                    fail(Err::LocalNotMDS, "group " + std::to_string(i) + " minor {" +
                                              [&] {
                                                  std::string s;
                                                  for (std::size_t k = 0; k < comb.size(); ++k) {
                                                      if (k) s += ',';
                                                      s += std::to_string(comb[k]);
                                                  }
                                                  return s;
                                              }() +
                                              "} is singular");
            } while (next_comb(comb, static_cast<u32>(r)));
        }
    }
    LrcCode code;
    code.params_ = params;
    code.H_ = Matrix(params.field, g * a + h, params.n);
    for (u64 i = 0; i < g; ++i) {
        for (u64 rr = 0; rr < a; ++rr)
            for (u64 c = 0; c < r; ++c) code.H_(i * a + rr, i * r + c) = A[i](rr, c);
        for (u64 rr = 0; rr < h; ++rr)
            for (u64 c = 0; c < r; ++c) code.H_(g * a + rr, i * r + c) = B[i](rr, c);
    }
    if (rank(code.H_) != g * a + h) fail(Err::RankDeficient, "parity-check matrix is rank deficient");
    code.A_ = std::move(A);
    code.B_ = std::move(B);
    return code;
}

// --- pattern enumeration ---

u64 mr_pattern_count(const LrcParams& p) {
    const u64 g = p.groups(), r = p.r, a = p.a, h = p.h;
    u64 emax = std::min<u64>(r - a, h);
    u64 total = 0;
    for (const auto& e : extras_vectors(g, h, emax)) {
        u64 prod = 1;
        for (u64 i = 0; i < g; ++i) prod = sat_mul(prod, binomial(r, a + e[i]));
        total = sat_add(total, prod);
    }
    return total;
}

void for_each_mr_pattern(const LrcParams& p, const std::function<bool(const ErasurePattern&)>& fn) {
    const u64 g = p.groups(), r = p.r, a = p.a, h = p.h;
    u64 emax = std::min<u64>(r - a, h);
    std::vector<std::vector<u32>> combs(g);
    for (const auto& e : extras_vectors(g, h, emax)) {
        for (u64 i = 0; i < g; ++i) first_comb(combs[i], static_cast<u32>(a + e[i]));
        for (;;) {
            std::vector<u32> idx;
            idx.reserve(g * a + h);
            for (u64 i = 0; i < g; ++i)
                for (u32 c : combs[i]) idx.push_back(static_cast<u32>(i * r) + c);
            if (!fn(ErasurePattern{std::move(idx)})) return;
            // advance, last group fastest
            std::size_t gi = g;
            while (gi > 0) {
                if (next_comb(combs[gi - 1], static_cast<u32>(r))) break;
                first_comb(combs[gi - 1], static_cast<u32>(a + e[gi - 1]));
                --gi;
            }
            if (gi == 0) break;
        }
    }
}

bool is_correctable(const LrcCode& code, const ErasurePattern& pattern) {
    (void)pattern.group_counts(code.params());  // validates range
    std::vector<std::size_t> cols(pattern.indices.begin(), pattern.indices.end());
    return rank(code.H().columns(cols)) == cols.size();
}

// --- the verifier ---

namespace {

// B_i(S) * basis(ker A_i(S)): the h x t matrix whose column space decides
// correctability of patterns erasing S in group i. Row-major into out.
void compute_excess_block(const LrcCode& code, u64 gi, const u32* S, u32 ssize, Elem* out) {
    const Field& f = *code.params().field;
    const u64 a = code.params().a, h = code.params().h;
    const u32 t = ssize - static_cast<u32>(a);
    const Matrix& A = code.A(gi);
    const Matrix& B = code.B(gi);
    Matrix sub(code.params().field, a, ssize);
    for (u64 rr = 0; rr < a; ++rr)
        for (u32 c = 0; c < ssize; ++c) sub(rr, c) = A(rr, S[c]);
    Matrix K = null_space(sub);  // ssize x t
    for (u64 rr = 0; rr < h; ++rr)
        for (u32 c = 0; c < t; ++c) {
            Elem acc = 0;
            for (u32 j = 0; j < ssize; ++j) {
                Elem b = B(rr, S[j]);
                Elem k = K(j, c);
                if (b && k) acc = f.add(acc, f.mul(b, k));
            }
            out[rr * t + c] = acc;
        }
}

bool det_is_zero(const Field& f, Elem* M, u32 h) {
    switch (h) {
        case 0: return false;
        case 1: return M[0] == 0;
        case 2: return f.sub(f.mul(M[0], M[3]), f.mul(M[1], M[2])) == 0;
        case 3: {
            Elem c0 = f.sub(f.mul(M[4], M[8]), f.mul(M[5], M[7]));
            Elem c1 = f.sub(f.mul(M[3], M[8]), f.mul(M[5], M[6]));
            Elem c2 = f.sub(f.mul(M[3], M[7]), f.mul(M[4], M[6]));
            Elem d = f.sub(f.mul(M[0], c0), f.mul(M[1], c1));
            return f.add(d, f.mul(M[2], c2)) == 0;
        }
        default: {
            // in-place elimination
            for (u32 col = 0; col < h; ++col) {
                u32 pr = col;
                while (pr < h && M[pr * h + col] == 0) ++pr;
                if (pr == h) return true;
                if (pr != col)
                    for (u32 c = col; c < h; ++c) std::swap(M[pr * h + c], M[col * h + c]);
                Elem inv = f.inv(M[col * h + col]);
                for (u32 rr = col + 1; rr < h; ++rr) {
                    if (M[rr * h + col] == 0) continue;
                    Elem factor = f.mul(M[rr * h + col], inv);
                    for (u32 c = col; c < h; ++c)
                        M[rr * h + c] = f.sub(M[rr * h + c], f.mul(factor, M[col * h + c]));
                }
            }
            return false;
        }
    }
}

struct CvPlan {
    std::vector<u32> e;             // extras per group
    std::vector<u32> extra_groups;  // ascending
    std::vector<u64> sizes;         // combination counts per extra group
    u64 classes = 0;
    u64 class_base = 0;
    u64 prefixes = 0;
    u64 prefix_base = 0;
    u64 inner = 1;  // classes / sizes[0]
};

struct ExcessCache {
    // per group, per t: flat blocks of h*t elems indexed by combination rank
    std::vector<std::vector<std::vector<Elem>>> data;  // [group][t]
    bool enabled = false;
};

} // namespace

VerifyResult verify_mr(const LrcCode& code, const VerifyOptions& opts) {
    const LrcParams& p = code.params();
    const Field& f = *p.field;
    const u64 g = p.groups(), r = p.r, a = p.a, h = p.h;
    const u64 emax = std::min<u64>(r - a, h);

    VerifyResult result;
    result.pattern_count = mr_pattern_count(p);

    // local MDS re-check; the class reduction below depends on it
    u64 local_checks = 0;
    if (a > 0) {
        std::vector<u32> comb;
        for (u64 i = 0; i < g; ++i) {
            first_comb(comb, static_cast<u32>(a));
            do {
                std::vector<std::size_t> cols(comb.begin(), comb.end());
                ++local_checks;
                if (det(code.A(i).columns(cols)) == 0)
                    fail(Err::LocalNotMDS, "group " + std::to_string(i) + " lost the local MDS property");
            } while (next_comb(comb, static_cast<u32>(r)));
        }
    }

    // plan the class space
    std::vector<CvPlan> plan;
    u64 total_classes = 0, total_prefixes = 0;
    for (auto& e : extras_vectors(g, h, emax)) {
        CvPlan cv;
        cv.e = e;
        for (u64 i = 0; i < g; ++i)
            if (e[i] > 0) cv.extra_groups.push_back(static_cast<u32>(i));
        if (cv.extra_groups.empty()) continue;  // h == 0: nothing beyond local MDS
        cv.classes = 1;
        for (u32 gi : cv.extra_groups) {
            u64 c = binomial(r, a + cv.e[gi]);
            cv.sizes.push_back(c);
            cv.classes = sat_mul(cv.classes, c);
        }
        cv.prefixes = cv.sizes[0];
        cv.inner = cv.classes / cv.prefixes;
        cv.class_base = total_classes;
        cv.prefix_base = total_prefixes;
        total_classes = sat_add(total_classes, cv.classes);
        total_prefixes = sat_add(total_prefixes, cv.prefixes);
        plan.push_back(std::move(cv));
    }

    u64 planned = sat_add(local_checks, total_classes);
    if (planned > opts.budget)
        fail(Err::BudgetExceeded, "verification needs " + std::to_string(planned) +
                                      " rank checks over " + std::to_string(result.pattern_count) +
                                      " patterns, budget is " + std::to_string(opts.budget));

    // cache the excess blocks unless they would be oversized
    ExcessCache cache;
    {
        u64 cache_elems = 0;
        for (u64 t = 1; t <= emax; ++t)
            cache_elems = sat_add(cache_elems, sat_mul(g, sat_mul(binomial(r, a + t), h * t)));
        cache.enabled = cache_elems <= (u64(16) << 20);
        if (cache.enabled) {
            cache.data.assign(g, std::vector<std::vector<Elem>>(emax + 1));
            std::vector<u32> comb;
            for (u64 i = 0; i < g; ++i) {
                for (u64 t = 1; t <= emax; ++t) {
                    u64 cnt = binomial(r, a + t);
                    auto& blocks = cache.data[i][t];
                    blocks.resize(cnt * h * t);
                    first_comb(comb, static_cast<u32>(a + t));
                    u64 idx = 0;
                    do {
                        compute_excess_block(code, i, comb.data(), static_cast<u32>(a + t),
                                             blocks.data() + idx * h * t);
                        ++idx;
                    } while (next_comb(comb, static_cast<u32>(r)));
                }
            }
        }
    }

    constexpr u64 kNone = UINT64_MAX;
    std::atomic<u64> next_prefix{0};
    std::atomic<u64> best{kNone};
    std::atomic<u64> checks_total{0};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
        std::vector<u32> s_first;
        std::vector<std::vector<u32>> subs;
        std::vector<Elem> M(h * h), scratch;
        u64 checks = 0;
        for (;;) {
            if (stop.load(std::memory_order_relaxed)) break;
            u64 pfx = next_prefix.fetch_add(1, std::memory_order_relaxed);
            if (pfx >= total_prefixes) break;
            // locate the count vector
            std::size_t lo = 0, hi = plan.size();
            while (lo + 1 < hi) {
                std::size_t mid = (lo + hi) / 2;
                if (plan[mid].prefix_base <= pfx) lo = mid; else hi = mid;
            }
            const CvPlan& cv = plan[lo];
            u64 combo0 = pfx - cv.prefix_base;
            u64 base_ordinal = cv.class_base + combo0 * cv.inner;
            if (opts.find_first && base_ordinal > best.load(std::memory_order_relaxed)) continue;
            if (opts.focus && cv.e[opts.focus->first] == 0) continue;

            const std::size_t m = cv.extra_groups.size();
            u32 first_gi = cv.extra_groups[0];
            unrank_comb(combo0, static_cast<u32>(r), static_cast<u32>(a + cv.e[first_gi]), s_first);
            if (opts.focus && first_gi == opts.focus->first &&
                !std::binary_search(s_first.begin(), s_first.end(), opts.focus->second))
                continue;

            subs.assign(m, {});
            subs[0] = s_first;
            std::vector<u64> sub_idx(m, 0);
            sub_idx[0] = combo0;
            for (std::size_t k = 1; k < m; ++k)
                first_comb(subs[k], static_cast<u32>(a + cv.e[cv.extra_groups[k]]));

            u64 inner_idx = 0;
            for (;;) {
                u64 ordinal = base_ordinal + inner_idx;
                if (opts.find_first && ordinal > best.load(std::memory_order_relaxed)) break;
                if (stop.load(std::memory_order_relaxed)) break;
                bool skip = false;
                if (opts.focus && first_gi != opts.focus->first) {
                    for (std::size_t k = 1; k < m && !skip; ++k) {
                        if (cv.extra_groups[k] == opts.focus->first &&
                            !std::binary_search(subs[k].begin(), subs[k].end(), opts.focus->second))
                            skip = true;
                    }
                }
                if (!skip) {
                    // gather the h x h matrix column block by column block
                    u32 col = 0;
                    for (std::size_t k = 0; k < m; ++k) {
                        u32 gi = cv.extra_groups[k];
                        u32 t = cv.e[gi];
                        const Elem* P;
                        if (cache.enabled) {
                            P = cache.data[gi][t].data() + sub_idx[k] * h * t;
                        } else {
                            scratch.resize(h * t);
                            compute_excess_block(code, gi, subs[k].data(),
                                                 static_cast<u32>(a + t), scratch.data());
                            P = scratch.data();
                        }
                        for (u64 rr = 0; rr < h; ++rr)
                            for (u32 c = 0; c < t; ++c) M[rr * h + col + c] = P[rr * t + c];
                        col += t;
                    }
                    ++checks;
                    if (det_is_zero(f, M.data(), static_cast<u32>(h))) {
                        u64 cur = best.load(std::memory_order_relaxed);
                        while (ordinal < cur &&
                               !best.compare_exchange_weak(cur, ordinal, std::memory_order_relaxed)) {
                        }
                        if (!opts.find_first) {
                            stop.store(true, std::memory_order_relaxed);
                            break;
                        }
                        break;  // later ordinals in this prefix cannot improve
                    }
                }
                // advance inner odometer, last group fastest
                if (m == 1) break;
                std::size_t k = m;
                bool done = false;
                while (k > 1) {
                    if (next_comb(subs[k - 1], static_cast<u32>(r))) {
                        ++sub_idx[k - 1];
                        break;
                    }
                    first_comb(subs[k - 1], static_cast<u32>(a + cv.e[cv.extra_groups[k - 1]]));
                    sub_idx[k - 1] = 0;
                    --k;
                    if (k == 1) done = true;
                }
                if (done) break;
                ++inner_idx;
            }
        }
        checks_total.fetch_add(checks, std::memory_order_relaxed);
    };

    unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(std::min<u64>(nthreads, std::max<u64>(1, total_prefixes)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    result.checks = local_checks + checks_total.load();
    u64 bad = best.load();
    if (bad == kNone) {
        result.ok = true;
        return result;
    }
    // reconstruct the failing pattern: groups at exactly a erasures take their
    // lexicographically first index choice
    const CvPlan* cv = nullptr;
    for (const auto& c : plan)
        if (bad >= c.class_base && bad < sat_add(c.class_base, c.classes)) { cv = &c; break; }
    u64 idx = bad - cv->class_base;
    std::vector<u64> digits(cv->extra_groups.size());
    for (std::size_t k = cv->extra_groups.size(); k-- > 0;) {
        digits[k] = idx % cv->sizes[k];
        idx /= cv->sizes[k];
    }
    std::vector<u32> indices;
    std::vector<u32> comb;
    std::size_t ek = 0;
    for (u64 i = 0; i < g; ++i) {
        if (cv->e[i] > 0) {
            unrank_comb(digits[ek], static_cast<u32>(r), static_cast<u32>(a + cv->e[i]), comb);
            ++ek;
            for (u32 c : comb) indices.push_back(static_cast<u32>(i * r) + c);
        } else {
            for (u64 c = 0; c < a; ++c) indices.push_back(static_cast<u32>(i * r + c));
        }
    }
    result.ok = false;
    result.counterexample = ErasurePattern::of(std::move(indices));
    return result;
}

// --- encode / decode ---

Matrix generator_matrix(const LrcCode& code) {
    const LrcParams& p = code.params();
    const Field& f = *p.field;
    Matrix ns = null_space(code.H());  // n x k
    if (ns.cols() != p.dimension()) fail(Err::RankDeficient, "parity-check matrix is rank deficient");
    // reduce so G carries an identity on the lexicographically first
    // information set
    Matrix m = ns.transpose();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(row, c));
        Elem inv = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            if (rr == row || m(rr, col) == 0) continue;
            Elem factor = m(rr, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(rr, c) = f.sub(m(rr, c), f.mul(factor, m(row, c)));
        }
        ++row;
    }
    return m;
}

std::vector<Elem> encode(const LrcCode& code, const std::vector<Elem>& message) {
    if (message.size() != code.params().dimension())
        fail(Err::LengthMismatch, "message length must be the code dimension");
    return vec_mat(message, generator_matrix(code));
}

DecodeResult decode_erasures(const LrcCode& code, const std::vector<Elem>& word,
                             const ErasurePattern& erased) {
    const LrcParams& p = code.params();
    const Field& f = *p.field;
    if (word.size() != p.n) fail(Err::LengthMismatch, "word length must be n");
    (void)erased.group_counts(p);  // validates indices
    const Matrix& H = code.H();
    std::vector<bool> is_erased(p.n, false);
    for (u32 i : erased.indices) is_erased[i] = true;

    // H_E x = -(H restricted to kept coordinates) * word
    std::vector<Elem> rhs(H.rows(), 0);
    for (std::size_t row = 0; row < H.rows(); ++row) {
        Elem acc = 0;
        for (std::size_t j = 0; j < p.n; ++j)
            if (!is_erased[j] && H(row, j) && word[j]) acc = f.add(acc, f.mul(H(row, j), word[j]));
        rhs[row] = f.neg(acc);
    }
    std::vector<std::size_t> cols(erased.indices.begin(), erased.indices.end());
    Matrix He = H.columns(cols);
    if (rank(He) != cols.size()) return {DecodeStatus::uncorrectable, {}};
    auto x = solve(He, rhs);
    if (!x) return {DecodeStatus::inconsistent, {}};
    std::vector<Elem> out = word;
    for (std::size_t k = 0; k < cols.size(); ++k) out[cols[k]] = (*x)[k];
    return {DecodeStatus::ok, std::move(out)};
}

std::vector<Elem> local_repair(const LrcCode& code, std::size_t group,
                               const std::function<std::optional<Elem>(std::size_t)>& fetch) {
    const LrcParams& p = code.params();
    const Field& f = *p.field;
    if (group >= p.groups()) fail(Err::PreconditionViolated, "group index out of range");
    const u64 r = p.r, a = p.a;
    std::vector<Elem> symbols(r, 0);
    std::vector<std::size_t> missing;
    for (u64 c = 0; c < r; ++c) {
        auto v = fetch(group * r + c);
        if (v)
            symbols[c] = *v;
        else
            missing.push_back(c);
    }
    if (missing.empty()) return symbols;
    if (missing.size() > a) fail(Err::TooManyErasures, std::to_string(missing.size()) +
                                                           " erasures in a group repairing at most " +
                                                           std::to_string(a));
    const Matrix& A = code.A(group);
    std::vector<Elem> rhs(a, 0);
    for (u64 row = 0; row < a; ++row) {
        Elem acc = 0;
        std::size_t mi = 0;
        for (u64 c = 0; c < r; ++c) {
            if (mi < missing.size() && missing[mi] == c) { ++mi; continue; }
            if (A(row, c) && symbols[c]) acc = f.add(acc, f.mul(A(row, c), symbols[c]));
        }
        rhs[row] = f.neg(acc);
    }
    auto x = solve(A.columns(missing), rhs);
    if (!x) fail(Err::Inconsistent, "group symbols violate the local parities");
    for (std::size_t k = 0; k < missing.size(); ++k) symbols[missing[k]] = (*x)[k];
    return symbols;
}

std::vector<Elem> local_repair(const LrcCode& code, std::size_t group,
                               const std::vector<std::optional<Elem>>& word) {
    if (word.size() != code.params().n) fail(Err::LengthMismatch, "word length must be n");
    return local_repair(code, group, [&](std::size_t i) { return word[i]; });
}

// --- lower bound ---

std::string BoundReport::to_text() const {
    if (exact) return "exact q>=" + std::to_string(q_min);
    std::int64_t num = alpha_num + static_cast<std::int64_t>(alpha_den);  // 1 + alpha
    std::uint64_t den = alpha_den;
    std::int64_t gg = std::gcd(num < 0 ? -num : num, static_cast<std::int64_t>(den));
    if (gg > 1) { num /= gg; den /= static_cast<std::uint64_t>(gg); }
    std::string frac = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    return "exponent 1+alpha=" + frac;
}

BoundReport lower_bound_q(u64 n, u64 r, u64 a, u64 h) {
    if (h < 2) fail(Err::OutOfScope, "bound requires h >= 2");
    if (r == 0 || n % r != 0) fail(Err::PreconditionViolated, "group size must divide length");
    u64 g = n / r;
    BoundReport rep;
    if (g >= h) {
        rep.exact = true;
        u64 binom = (a + 2 <= h) ? binomial(r, a + 1) : binomial(r - a + h - 2, h - 1);
        // ceil(((g - h + 1) * binom) / (h - 1)) - 4
        __int128 num = static_cast<__int128>(g - h + 1) * static_cast<__int128>(binom);
        __int128 den = static_cast<__int128>(h - 1);
        __int128 v = (num + den - 1) / den - 4;
        const __int128 lim = static_cast<__int128>(INT64_MAX);
        rep.q_min = v > lim ? INT64_MAX : static_cast<std::int64_t>(v);
        return rep;
    }
    u64 t = (h + g - 1) / g;  // ceil(h/g)
    std::int64_t cap = static_cast<std::int64_t>(h) - 2 * static_cast<std::int64_t>(t);
    rep.exact = false;
    rep.alpha_num = std::min<std::int64_t>(static_cast<std::int64_t>(a), cap);
    rep.alpha_den = t;
    std::int64_t gg = std::gcd(rep.alpha_num < 0 ? -rep.alpha_num : rep.alpha_num,
                               static_cast<std::int64_t>(rep.alpha_den));
    if (gg > 1) { rep.alpha_num /= gg; rep.alpha_den /= static_cast<std::uint64_t>(gg); }
    return rep;
}

// --- file format ---

void write_lrc(std::ostream& out, const LrcCode& code) {
    const LrcParams& p = code.params();
    out << "lrc v1\n";
    out << p.field->header() << '\n';
    out << "params n=" << p.n << " r=" << p.r << " a=" << p.a << " h=" << p.h << '\n';
    write_matrix(out, code.H());
}

LrcCode read_lrc(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "lrc v1") fail(Err::ParseError, "not an lrc v1 file");
    FieldPtr f = Field::parse_header(in);
    if (!std::getline(in, line)) fail(Err::ParseError, "missing params line");
    LrcParams p;
    p.field = f;
    {
        std::istringstream ss(line);
        std::string word;
        ss >> word;
        if (word != "params") fail(Err::ParseError, "expected params line");
        while (ss >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) fail(Err::ParseError, "bad params token '" + word + "'");
            std::string key = word.substr(0, eq);
            u64 val = std::stoull(word.substr(eq + 1));
            if (key == "n") p.n = val;
            else if (key == "r") p.r = val;
            else if (key == "a") p.a = val;
            else if (key == "h") p.h = val;
            else fail(Err::ParseError, "unknown params key '" + key + "'");
        }
    }
    p.validate();
    Matrix H = read_matrix(in, f);
    u64 g = p.groups();
    if (H.rows() != g * p.a + p.h || H.cols() != p.n) fail(Err::ParseError, "matrix shape does not match params");
    std::vector<Matrix> A, B;
    for (u64 i = 0; i < g; ++i) {
        Matrix Ai(f, p.a, p.r), Bi(f, p.h, p.r);
        for (u64 rr = 0; rr < p.a; ++rr)
            for (u64 c = 0; c < p.r; ++c) Ai(rr, c) = H(i * p.a + rr, i * p.r + c);
        for (u64 rr = 0; rr < p.h; ++rr)
            for (u64 c = 0; c < p.r; ++c) Bi(rr, c) = H(g * p.a + rr, i * p.r + c);
        A.push_back(std::move(Ai));
        B.push_back(std::move(Bi));
    }
    LrcCode code = assemble(p, std::move(A), std::move(B));
    if (!(code.H() == H)) fail(Err::ParseError, "matrix is not in block parity-check form");
    return code;
}

} // namespace mrlrc
