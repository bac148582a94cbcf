#include "mrlrc/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "mrlrc/matrix.hpp"
#include "mrlrc/numtheory.hpp"

namespace mrlrc {

using u64 = std::uint64_t;

ProjectivePoint normalize_point(const FieldPtr& f, Elem x, Elem y, Elem z) {
    if (x == 0 && y == 0 && z == 0) fail(Err::ZeroInput, "projective point needs a nonzero coordinate");
    Elem last = z ? z : (y ? y : x);
    Elem s = f->inv(last);
    return ProjectivePoint{f->mul(x, s), f->mul(y, s), f->mul(z, s)};
}

bool collinear(const FieldPtr& f, const ProjectivePoint& p, const ProjectivePoint& q,
               const ProjectivePoint& s) {
    Matrix m(f, 3, 3);
    m(0, 0) = p.x; m(0, 1) = p.y; m(0, 2) = p.z;
    m(1, 0) = q.x; m(1, 1) = q.y; m(1, 2) = q.z;
    m(2, 0) = s.x; m(2, 1) = s.y; m(2, 2) = s.z;
    return det(std::move(m)) == 0;
}

SingularCurve make_curve(FieldPtr f, Elem alpha, Elem beta) {
    if (alpha == beta) fail(Err::PreconditionViolated, "curve needs distinct slopes");
    return SingularCurve{std::move(f), alpha, beta};
}

ProjectivePoint curve_infinity() { return ProjectivePoint{0, 1, 0}; }

bool on_curve_nonsingular(const SingularCurve& c, const ProjectivePoint& p) {
    const Field& f = *c.field;
    if (p == curve_infinity()) return true;
    if (p.z != 1) return false;               // normalized affine points have z == 1
    if (p.x == 0 && p.y == 0) return false;   // the singular point
    Elem lhs = f.mul(f.sub(p.y, f.mul(c.alpha, p.x)), f.sub(p.y, f.mul(c.beta, p.x)));
    return lhs == f.mul(p.x, f.mul(p.x, p.x));
}

Elem curve_phi(const SingularCurve& c, const ProjectivePoint& p) {
    const Field& f = *c.field;
    if (p == curve_infinity()) return 1;
    if (p.x == 0 && p.y == 0 && p.z == 1) fail(Err::SingularPoint, "the singular point has no image");
    if (!on_curve_nonsingular(c, p)) fail(Err::NotOnCurve, "point does not satisfy the curve equation");
    return f.div(f.sub(p.y, f.mul(c.beta, p.x)), f.sub(p.y, f.mul(c.alpha, p.x)));
}

ProjectivePoint phi_inverse(const SingularCurve& c, Elem u) {
    const Field& f = *c.field;
    if (u == 0) fail(Err::ZeroInput, "0 is not in the multiplicative group");
    if (u == 1) return curve_infinity();
    // (y - beta x)/(y - alpha x) = u with y = kx forces k = (beta - u alpha)/(1 - u),
    // and the curve equation then pins x = (k - alpha)(k - beta).
    Elem k = f.div(f.sub(c.beta, f.mul(u, c.alpha)), f.sub(1, u));
    Elem x = f.mul(f.sub(k, c.alpha), f.sub(k, c.beta));
    Elem y = f.mul(k, x);
    ProjectivePoint p{x, y, 1};
    if (!on_curve_nonsingular(c, p) || curve_phi(c, p) != u)
        fail(Err::NotOnCurve, "inverse image fell off the curve");  // postcondition
    return p;
}

// --- AP-free sets ---

namespace {

std::vector<u64> greedy_ap_free(u64 M) {
    std::vector<u64> b;
    std::vector<char> in(M + 1, 0);
    for (u64 x = 1; x <= M; ++x) {
        bool ok = true;
        for (u64 z : b) {
            u64 y = 2 * z;  // looking for prior y with y + x = 2z
            if (y > x && y - x <= M && in[y - x]) { ok = false; break; }
        }
        if (ok) {
            b.push_back(x);
            in[x] = 1;
        }
    }
    return b;
}

std::vector<u64> sphere_ap_free(u64 M) {
    // digit vectors in base d with digits below d/2, one squared-norm shell;
    // sweep dimension and base, keep the largest shell
    std::vector<u64> best;
    for (unsigned k = 2; k <= 24; ++k) {
        u64 d = static_cast<u64>(std::pow(static_cast<double>(M), 1.0 / k));
        while (d >= 3 && std::pow(static_cast<double>(d), static_cast<double>(k)) > 2.0 * M) --d;
        for (u64 dd : {d, d + 1}) {
            if (dd < 3) continue;
            u64 L = (dd + 1) / 2;  // digits in [0, L), below dd/2
            double count = std::pow(static_cast<double>(L), static_cast<double>(k));
            if (count > 4e6) continue;
            std::map<u64, std::vector<u64>> shells;
            std::vector<u64> digit(k, 0);
            for (;;) {
                u64 val = 0, norm = 0;
                bool overflow = false;
                for (unsigned i = k; i-- > 0;) {
                    val = val * dd + digit[i];
                    if (val > M) { overflow = true; break; }
                }
                if (!overflow && val >= 1) {
                    for (unsigned i = 0; i < k; ++i) norm += digit[i] * digit[i];
                    shells[norm].push_back(val);
                }
                unsigned pos = 0;
                while (pos < k && ++digit[pos] == L) digit[pos++] = 0;
                if (pos == k) break;
            }
            for (auto& [norm, vals] : shells)
                if (vals.size() > best.size()) best = vals;
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

void assert_ap_free(const std::vector<u64>& b) {
    std::unordered_set<u64> in(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            u64 s = b[i] + b[j];
            if (s % 2 == 0 && s / 2 != b[i] && in.count(s / 2))
                fail(Err::PreconditionViolated, "progression-free check failed");
        }
}

} // namespace

std::vector<u64> behrend_set(u64 M) {
    if (M < 1) fail(Err::PreconditionViolated, "need M >= 1");
    std::vector<u64> b = M <= 5000 ? greedy_ap_free(M) : sphere_ap_free(M);
    assert_ap_free(b);
    return b;
}

std::vector<u64> TriSumSet::elements() const {
    std::vector<u64> out;
    out.reserve(triples.size() * 3);
    for (const auto& t : triples) out.insert(out.end(), t.begin(), t.end());
    return out;
}

TriSumSet matching_trisum_set(u64 N) {
    if (N < 60) fail(Err::PreconditionViolated, "need N >= 60");
    std::vector<u64> b = behrend_set(N / 20);
    TriSumSet out;
    out.modulus = N;
    for (;;) {
        out.triples.clear();
        const u64 third = N / 3;
        std::unordered_set<u64> seen;
        bool collision = false;
        for (u64 x : b) {
            std::array<u64, 3> t{x % N, (third + x) % N, (2 * N - third - 2 * x) % N};
            for (u64 v : t)
                if (!seen.insert(v).second) collision = true;
            out.triples.push_back(t);
        }
        if (!collision) break;
        b.pop_back();  // cannot happen for N >= 60 with B below N/20; shrink and retry
        if (b.empty()) fail(Err::PreconditionViolated, "translated blocks collide");
    }
    // every triple sums to 0 by construction; check the converse
    std::vector<u64> elems = out.elements();
    std::set<std::array<u64, 3>> zero_sums;
    for (const auto& t : out.triples) {
        std::array<u64, 3> s = t;
        std::sort(s.begin(), s.end());
        zero_sums.insert(s);
    }
    auto is_matched = [&](u64 x, u64 y, u64 z) {
        std::array<u64, 3> s{x, y, z};
        std::sort(s.begin(), s.end());
        return zero_sums.count(s) > 0;
    };
    if (N <= 3000) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j)
                for (std::size_t k = j + 1; k < elems.size(); ++k) {
                    bool zero = (elems[i] + elems[j] + elems[k]) % N == 0;
                    if (zero != is_matched(elems[i], elems[j], elems[k]))
                        fail(Err::PreconditionViolated, "tri-sum property failed");
                }
    } else {
        // sampled check
        u64 s = 0x9e3779b97f4a7c15ull;
        auto rnd = [&]() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            return s;
        };
        for (int it = 0; it < 100000; ++it) {
            std::size_t i = rnd() % elems.size(), j = rnd() % elems.size(), k = rnd() % elems.size();
            if (i == j || j == k || i == k) continue;
            bool zero = (elems[i] + elems[j] + elems[k]) % N == 0;
            if (zero != is_matched(elems[i], elems[j], elems[k]))
                fail(Err::PreconditionViolated, "tri-sum property failed");
        }
    }
    return out;
}

TripleFamily matching_collinear_family(const FieldPtr& f) {
    const u64 q = f->order();
    if (q < 61) fail(Err::PreconditionViolated, "need q >= 61");
    SingularCurve curve = make_curve(f, 0, 1);
    TriSumSet ts = matching_trisum_set(q - 1);
    Elem g = primitive_element(f);
    TripleFamily fam;
    fam.field = f;
    for (const auto& t : ts.triples) {
        std::array<std::size_t, 3> idx{};
        for (int i = 0; i < 3; ++i) {
            idx[i] = fam.points.size();
            fam.points.push_back(phi_inverse(curve, f->pow(g, t[i])));
        }
        fam.triples.push_back(idx);
    }
    if (fam.points.size() <= 300 && !family_invariant_holds(fam))
        fail(Err::NotCollinear, "family lost the matching-collinear property");
    return fam;
}

bool family_invariant_holds(const TripleFamily& fam, std::array<std::size_t, 3>* bad) {
    const FieldPtr& f = fam.field;
    std::vector<char> used(fam.points.size(), 0);
    std::set<std::array<std::size_t, 3>> matched;
    for (auto t : fam.triples) {
        for (std::size_t i : t) {
            if (i >= fam.points.size() || used[i]) return false;  // not a partition
            used[i] = 1;
        }
        std::sort(t.begin(), t.end());
        matched.insert(t);
    }
    for (char u : used)
        if (!u) return false;
    const std::size_t m = fam.points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                bool col = collinear(f, fam.points[i], fam.points[j], fam.points[k]);
                bool match = matched.count({i, j, k}) > 0;
                if (col != match) {
                    if (bad) *bad = {i, j, k};
                    return false;
                }
            }
    return true;
}

LrcCode triples_to_code(const TripleFamily& fam) {
    const FieldPtr& f = fam.field;
    const u64 g = fam.triples.size();
    if (g < 2) fail(Err::PreconditionViolated, "need at least two triples");
    std::vector<Matrix> As, Bs;
    As.reserve(g);
    Bs.reserve(g);
    Matrix ones(f, 1, 3);
    ones(0, 0) = ones(0, 1) = ones(0, 2) = 1;
    for (const auto& t : fam.triples) {
        Matrix m(f, 3, 3);
        for (int c = 0; c < 3; ++c) {
            const ProjectivePoint& p = fam.points[t[c]];
            m(0, c) = p.x;
            m(1, c) = p.y;
            m(2, c) = p.z;
        }
        Matrix ker = null_space(m);
        if (ker.cols() == 0) fail(Err::NotCollinear, "triple is not collinear");
        if (ker.cols() > 1) fail(Err::DegenerateScaling, "triple spans less than a plane");
        Elem s0 = ker(0, 0), s1 = ker(1, 0), s2 = ker(2, 0);
        if (s0 == 0 || s1 == 0 || s2 == 0)
            fail(Err::DegenerateScaling, "zero scaling coefficient");
        // scaled vectors a+b+c = 0
        std::array<Elem, 3> b{}, c{};
        for (int rr = 0; rr < 3; ++rr) {
            b[rr] = f->mul(s1, m(rr, 1));
            c[rr] = f->mul(s2, m(rr, 2));
        }
        Matrix B(f, 3, 3);
        for (int rr = 0; rr < 3; ++rr) {
            B(rr, 0) = 0;
            B(rr, 1) = f->neg(b[rr]);
            B(rr, 2) = c[rr];
        }
        As.push_back(ones);
        Bs.push_back(std::move(B));
    }
    LrcParams p{3 * g, 3, 1, 3, f};
    return assemble(p, std::move(As), std::move(Bs));
}

TripleFamily code_to_triples(const LrcCode& code) {
    const LrcParams& p = code.params();
    if (p.r != 3 || p.h != 3 || p.a != 1) fail(Err::ShapeMismatch, "need an (n, r=3, h=3, a=1) code");
    const FieldPtr& f = p.field;
    TripleFamily fam;
    fam.field = f;
    for (u64 i = 0; i < p.groups(); ++i) {
        const Matrix& A = code.A(i);
        const Matrix& B = code.B(i);
        // column scaling normalizes the local row to all ones
        std::array<std::array<Elem, 3>, 3> v{};
        for (int c = 0; c < 3; ++c) {
            Elem s = f->inv(A(0, c));
            for (int rr = 0; rr < 3; ++rr) v[c][rr] = f->mul(B(rr, c), s);
        }
        std::array<std::size_t, 3> idx{};
        for (int c = 0; c < 3; ++c) {
            std::array<Elem, 3> diff{};
            int u = (c + 1) % 3;
            for (int rr = 0; rr < 3; ++rr) diff[rr] = f->sub(v[u][rr], v[c][rr]);
            if (diff[0] == 0 && diff[1] == 0 && diff[2] == 0)
                fail(Err::DegenerateScaling, "identical heavy columns in a group");
            idx[c] = fam.points.size();
            fam.points.push_back(normalize_point(f, diff[0], diff[1], diff[2]));
        }
        fam.triples.push_back(idx);
    }
    if (fam.points.size() <= 300 && !family_invariant_holds(fam))
        fail(Err::NotCollinear, "code does not induce matching collinear triples");
    return fam;
}

void write_family(std::ostream& out, const TripleFamily& fam) {
    out << "triples v1\n" << fam.field->header() << '\n';
    const Field& f = *fam.field;
    for (const auto& t : fam.triples) {
        bool first = true;
        for (std::size_t i : t) {
            const ProjectivePoint& p = fam.points[i];
            for (Elem coord : {p.x, p.y, p.z}) {
                if (!first) out << ' ';
                out << f.to_text(coord);
                first = false;
            }
        }
        out << '\n';
    }
}

TripleFamily read_family(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "triples v1") fail(Err::ParseError, "not a triples v1 file");
    TripleFamily fam;
    fam.field = Field::parse_header(in);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::array<std::size_t, 3> idx{};
        for (int pt = 0; pt < 3; ++pt) {
            std::string tx, ty, tz;
            if (!(ss >> tx >> ty >> tz)) fail(Err::ParseError, "triple line needs nine renderings");
            ProjectivePoint p{fam.field->parse_element(tx), fam.field->parse_element(ty),
                              fam.field->parse_element(tz)};
            ProjectivePoint norm = normalize_point(fam.field, p.x, p.y, p.z);
            if (!(norm == p)) fail(Err::ParseError, "point is not in canonical form");
            idx[pt] = fam.points.size();
            fam.points.push_back(p);
        }
        std::string extra;
        if (ss >> extra) fail(Err::ParseError, "trailing tokens in triple line");
        fam.triples.push_back(idx);
    }
    return fam;
}

} // namespace mrlrc
