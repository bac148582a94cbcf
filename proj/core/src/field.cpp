#include "mrlrc/field.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "mrlrc/numtheory.hpp"

namespace mrlrc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

// --- dense polynomials over GF(p), little-endian coefficient vectors ---

using Poly = std::vector<u64>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// a*b mod f, f monic of degree m, deg a, deg b < m
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    std::size_t m = f.size() - 1;
    std::vector<u64> prod(2 * m, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    for (std::size_t d = 2 * m; d-- > m;) {
        u64 c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (!f[j]) continue;
            u64 sub = mulmod(c, f[j], p);
            prod[d - m + j] = (prod[d - m + j] + p - sub % p) % p;
        }
    }
    prod.resize(m);
    poly_trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// x^(p^reps) mod f
Poly frobenius_power(const Poly& f, u64 p, unsigned reps) {
    Poly t{0, 1};
    for (unsigned i = 0; i < reps; ++i) t = poly_powmod(t, p, f, p);
    return t;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        u64 lead_inv = powmod(b.back(), p - 2, p);
        Poly bm = b;
        for (auto& c : bm) c = mulmod(c, lead_inv, p);
        while (a.size() >= bm.size() && !a.empty()) {
            u64 c = a.back();
            std::size_t shift = a.size() - bm.size();
            if (c) {
                for (std::size_t j = 0; j < bm.size(); ++j) {
                    u64 sub = mulmod(c, bm[j], p);
                    a[shift + j] = (a[shift + j] + p - sub) % p;
                }
            }
            poly_trim(a);
            if (a.size() < bm.size()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin's test: f (monic, degree m) is irreducible over GF(p) iff
// x^(p^m) == x mod f and gcd(f, x^(p^(m/l)) - x) is constant for every
// prime l dividing m.
bool poly_irreducible(const Poly& f, u64 p) {
    std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    Poly xqm = frobenius_power(f, p, static_cast<unsigned>(m));
    // x^(p^m) - x must be 0 mod f
    Poly diff = xqm;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (auto [l, e] : factorize(m)) {
        (void)e;
        Poly t = frobenius_power(f, p, static_cast<unsigned>(m / l));
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        poly_trim(t);
        Poly g = poly_gcd(f, t, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<u64> digits_of(u64 code, u64 base, unsigned n) {
    std::vector<u64> d(n);
    for (unsigned i = 0; i < n; ++i) {
        d[i] = code % base;
        code /= base;
    }
    return d;
}

} // namespace

// --- construction ---

FieldPtr Field::make(u64 p, unsigned m) {
    if (!is_prime(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) fail(Err::Overflow, "degree must be positive");
    u128 q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) fail(Err::Overflow, "field order exceeds 2^40");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->local_m_ = m;
    f->q_ = static_cast<u64>(q);
    f->b_ = p;
    if (m > 1) {
        // lowest irreducible monic of degree m, low coefficients scanned in
        // increasing encoding order
        for (u64 code = 0;; ++code) {
            Poly cand = digits_of(code, p, m);
            cand.push_back(1);
            if (poly_irreducible(cand, p)) {
                f->kind_ = Kind::ext;
                f->mod_ = cand;
                break;
            }
        }
    }
    return f;
}

FieldPtr Field::cubic_extension(const FieldPtr& base) {
    if (!base) fail(Err::Overflow, "null base field");
    if (base->order() > (u64(1) << 13)) fail(Err::Overflow, "base order above 2^13");
    if (base->prime_field()) return make(base->characteristic(), 3);
    u64 q0 = base->order();
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::tower;
    f->p_ = base->characteristic();
    f->m_ = 3 * base->degree();
    f->local_m_ = 3;
    f->q_ = q0 * q0 * q0;
    f->b_ = q0;
    f->base_ = base;
    for (u64 code = 0;; ++code) {
        if (code >= f->q_) fail(Err::NotFound, "no irreducible cubic found");
        std::vector<Elem> c = digits_of(code, q0, 3);
        // monic cubic x^3 + c2 x^2 + c1 x + c0; irreducible over the base
        // iff it has no base root
        bool has_root = false;
        for (u64 e = 0; e < q0 && !has_root; ++e) {
            Elem v = base->add(base->mul(base->add(base->mul(base->add(e, c[2]), e), c[1]), e), c[0]);
            if (v == 0) has_root = true;
        }
        if (!has_root) {
            f->mod_ = {c[0], c[1], c[2], 1};
            break;
        }
    }
    return f;
}

bool Field::same(const Field& a, const Field& b) {
    if (&a == &b) return true;
    if (a.kind_ != b.kind_ || a.p_ != b.p_ || a.m_ != b.m_ || a.q_ != b.q_) return false;
    if (a.mod_ != b.mod_) return false;
    if (a.base_ && b.base_) return same(*a.base_, *b.base_);
    return !a.base_ && !b.base_;
}

// --- digit helpers ---

std::vector<Elem> Field::decompose(Elem a) const { return digits_of(a, b_, local_m_); }

Elem Field::recompose(const std::vector<Elem>& d) const {
    Elem acc = 0;
    for (unsigned i = local_m_; i-- > 0;) acc = acc * b_ + d[i];
    return acc;
}

std::vector<Elem> Field::components(Elem a) const { return decompose(a); }

Elem Field::from_components(const std::vector<Elem>& c) const {
    if (c.size() != local_m_) fail(Err::LengthMismatch, "component count");
    for (Elem d : c)
        if (d >= b_) fail(Err::ParseError, "component out of range");
    return recompose(c);
}

Elem Field::embed_base(Elem c) const {
    if (c >= b_) fail(Err::ParseError, "base element out of range");
    return c;  // codes over the immediate base occupy the low digit
}

// --- arithmetic ---

Elem Field::add(Elem a, Elem b) const {
    switch (kind_) {
        case Kind::prime: return (a + b) % p_;
        case Kind::ext: {
            if (p_ == 2) return a ^ b;
            auto da = decompose(a), db = decompose(b);
            for (unsigned i = 0; i < local_m_; ++i) da[i] = (da[i] + db[i]) % p_;
            return recompose(da);
        }
        case Kind::tower: {
            auto da = decompose(a), db = decompose(b);
            for (unsigned i = 0; i < 3; ++i) da[i] = base_->add(da[i], db[i]);
            return recompose(da);
        }
    }
    return 0;
}

Elem Field::neg(Elem a) const {
    switch (kind_) {
        case Kind::prime: return a ? p_ - a : 0;
        case Kind::ext: {
            if (p_ == 2) return a;
            auto d = decompose(a);
            for (auto& c : d) c = c ? p_ - c : 0;
            return recompose(d);
        }
        case Kind::tower: {
            auto d = decompose(a);
            for (auto& c : d) c = base_->neg(c);
            return recompose(d);
        }
    }
    return 0;
}

Elem Field::sub(Elem a, Elem b) const {
    if (kind_ == Kind::prime) return (a + p_ - b) % p_;
    if (kind_ == Kind::ext && p_ == 2) return a ^ b;
    return add(a, neg(b));
}

Elem Field::mul_ext(Elem a, Elem b) const {
    if (p_ == 2) {
        // carry-less multiply, then reduce by the modulus bit pattern
        u64 mod_bits = 0;
        for (unsigned i = 0; i <= local_m_; ++i) mod_bits |= (mod_[i] & 1) << i;
        u64 prod_lo = 0, prod_hi = 0;  // up to 2m-1 < 80 bits
        for (unsigned i = 0; i < local_m_; ++i) {
            if (!((a >> i) & 1)) continue;
            u64 lo = b << i;
            u64 hi = i ? (b >> (64 - i)) : 0;
            prod_lo ^= lo;
            prod_hi ^= hi;
        }
        for (int d = 2 * int(local_m_) - 2; d >= int(local_m_); --d) {
            bool bit = d < 64 ? ((prod_lo >> d) & 1) : ((prod_hi >> (d - 64)) & 1);
            if (!bit) continue;
            int s = d - int(local_m_);
            u64 lo = s < 64 ? (mod_bits << s) : 0;
            u64 hi = s ? (s < 64 ? (mod_bits >> (64 - s)) : (mod_bits << (s - 64))) : 0;
            prod_lo ^= lo;
            prod_hi ^= hi;
        }
        return prod_lo & ((u64(1) << local_m_) - 1);
    }
    auto da = decompose(a), db = decompose(b);
    return recompose(poly_mulmod_digits(da, db));
}

std::vector<Elem> Field::poly_mulmod_digits(const std::vector<Elem>& da,
                                            const std::vector<Elem>& db) const {
    unsigned m = local_m_;
    std::vector<Elem> prod(2 * m - 1, 0);
    if (kind_ == Kind::tower) {
        for (unsigned i = 0; i < m; ++i) {
            if (!da[i]) continue;
            for (unsigned j = 0; j < m; ++j) {
                if (!db[j]) continue;
                prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
            }
        }
        for (unsigned d = 2 * m - 2; d >= m; --d) {
            Elem c = prod[d];
            if (!c) { if (d == m) break; continue; }
            prod[d] = 0;
            for (unsigned j = 0; j < m; ++j)
                prod[d - m + j] = base_->sub(prod[d - m + j], base_->mul(c, mod_[j]));
            if (d == m) break;
        }
    } else {
        for (unsigned i = 0; i < m; ++i) {
            if (!da[i]) continue;
            for (unsigned j = 0; j < m; ++j) {
                if (!db[j]) continue;
                prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
            }
        }
        for (unsigned d = 2 * m - 2; d >= m; --d) {
            Elem c = prod[d];
            if (c) {
                prod[d] = 0;
                for (unsigned j = 0; j < m; ++j) {
                    if (!mod_[j]) continue;
                    u64 sub = mulmod(c, mod_[j], p_);
                    prod[d - m + j] = (prod[d - m + j] + p_ - sub) % p_;
                }
            }
            if (d == m) break;
        }
    }
    prod.resize(m);
    return prod;
}

Elem Field::mul(Elem a, Elem b) const {
    switch (kind_) {
        case Kind::prime: return mulmod(a, b, p_);
        case Kind::ext: return mul_ext(a, b);
        case Kind::tower: {
            auto da = decompose(a), db = decompose(b);
            return recompose(poly_mulmod_digits(da, db));
        }
    }
    return 0;
}

Elem Field::pow(Elem a, u64 e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(Err::DivideByZero, "inverse of zero");
    return pow(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const {
    if (b == 0) fail(Err::DivideByZero, "division by zero");
    return mul(a, inv(b));
}

// --- text forms ---

std::string Field::to_text(Elem a) const {
    if (prime_field()) return std::to_string(a);
    auto d = decompose(a);
    std::string s;
    for (unsigned i = 0; i < local_m_; ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

Elem Field::parse_element(const std::string& s) const {
    if (s.empty()) fail(Err::ParseError, "empty element");
    std::vector<Elem> d;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail(Err::ParseError, "bad element token '" + s + "'");
        d.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (prime_field()) {
        if (d.size() != 1 || d[0] >= p_) fail(Err::ParseError, "element out of range '" + s + "'");
        return d[0];
    }
    if (d.size() != local_m_) fail(Err::ParseError, "expected " + std::to_string(local_m_) + " digits");
    return from_components(d);
}

std::string Field::header() const {
    std::string h = "field p=" + std::to_string(p_) + " m=" + std::to_string(m_);
    if (!mod_.empty()) {
        h += " poly=";
        for (std::size_t i = 0; i < mod_.size(); ++i) {
            if (i) h += ',';
            h += std::to_string(mod_[i]);
        }
    }
    if (kind_ == Kind::tower) h += "\ntower " + base_->header();
    return h;
}

namespace {

struct HeaderLine {
    u64 p = 0;
    unsigned m = 0;
    std::vector<u64> poly;
};

HeaderLine parse_field_line(const std::string& line) {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word != "field") fail(Err::ParseError, "expected 'field' header, got '" + line + "'");
    HeaderLine out;
    bool have_p = false, have_m = false;
    while (ss >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) fail(Err::ParseError, "bad field header token '" + word + "'");
        std::string key = word.substr(0, eq), val = word.substr(eq + 1);
        if (key == "p") { out.p = std::stoull(val); have_p = true; }
        else if (key == "m") { out.m = static_cast<unsigned>(std::stoul(val)); have_m = true; }
        else if (key == "poly") {
            std::size_t pos = 0;
            while (pos <= val.size()) {
                auto comma = val.find(',', pos);
                out.poly.push_back(std::stoull(val.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else fail(Err::ParseError, "unknown field header key '" + key + "'");
    }
    if (!have_p || !have_m) fail(Err::ParseError, "field header missing p or m");
    return out;
}

} // namespace

FieldPtr Field::parse_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(Err::ParseError, "missing field header");
    HeaderLine main = parse_field_line(line);

    // optional tower line describing the base field
    std::streampos mark = in.tellg();
    std::string next;
    bool tower = false;
    HeaderLine base_line;
    if (std::getline(in, next) && next.rfind("tower ", 0) == 0) {
        base_line = parse_field_line(next.substr(6));
        tower = true;
    } else if (mark != std::streampos(-1)) {
        in.clear();
        in.seekg(mark);
    } else {
        fail(Err::ParseError, "unseekable stream");
    }

    if (!tower) {
        FieldPtr f = make(main.p, main.m);
        if (main.m > 1 && f->modulus() != main.poly)
            fail(Err::ParseError, "unsupported modulus in field header");
        return f;
    }
    FieldPtr base = make(base_line.p, base_line.m);
    if (base_line.m > 1 && base->modulus() != base_line.poly)
        fail(Err::ParseError, "unsupported modulus in tower base header");
    if (main.m != 3 * base->degree() || main.p != base->characteristic())
        fail(Err::ParseError, "inconsistent tower header");
    FieldPtr f = cubic_extension(base);
    if (f->modulus() != main.poly) fail(Err::ParseError, "unsupported tower modulus");
    return f;
}

// --- multiplicative structure ---

Elem primitive_element(const FieldPtr& f) {
    u64 q = f->order();
    if (q == 2) return 1;
    auto fac = factorize(q - 1);
    for (Elem g = 1; g < q; ++g) {
        bool ok = true;
        for (auto [l, e] : fac) {
            (void)e;
            if (f->pow(g, (q - 1) / l) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    fail(Err::NotFound, "no primitive element");  // unreachable
}

std::optional<SubgroupData> subgroup_with_cosets(const FieldPtr& f, u64 min_size, u64 min_cosets) {
    u64 q = f->order();
    u64 n1 = q - 1;
    for (u64 d : divisors_sorted(n1)) {
        if (d < min_size) continue;
        if (n1 / d < min_cosets) continue;
        SubgroupData out;
        out.field = f;
        out.size = d;
        Elem g = primitive_element(f);
        out.generator = f->pow(g, n1 / d);
        out.coset_reps.reserve(min_cosets);
        Elem rep = 1;
        for (u64 i = 0; i < min_cosets; ++i) {
            out.coset_reps.push_back(rep);
            rep = f->mul(rep, g);
        }
        return out;
    }
    return std::nullopt;
}

u64 discrete_log(const FieldPtr& f, Elem g, Elem u) {
    if (u == 0) fail(Err::NotInGroup, "zero has no discrete log");
    u64 q = f->order();
    if (q <= (u64(1) << 24)) {
        // full table
        Elem x = 1;
        for (u64 k = 0; k < q - 1; ++k) {
            if (x == u) return k;
            x = f->mul(x, g);
        }
        fail(Err::NotInGroup, "generator is not primitive");
    }
    // baby-step giant-step
    u64 m = static_cast<u64>(std::sqrt(static_cast<double>(q - 1))) + 1;
    std::unordered_map<Elem, u64> baby;
    baby.reserve(m * 2);
    Elem x = 1;
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(x, j);
        x = f->mul(x, g);
    }
    Elem giant = f->inv(f->pow(g, m));
    Elem cur = u;
    for (u64 i = 0; i <= m; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) return (i * m + it->second) % (q - 1);
        cur = f->mul(cur, giant);
    }
    fail(Err::NotInGroup, "generator is not primitive");
}

} // namespace mrlrc
