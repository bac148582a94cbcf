#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mrlrc/error.hpp"

namespace mrlrc {

// A field element is its canonical integer encoding: the base-p evaluation of
// the coefficient vector (components over the immediate base for towers).
// Always in [0, order).
using Elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p), GF(p^m) as polynomials over the prime field, or a cubic tower over
// another field. Immutable; share freely across threads.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 40;

    // Deterministic construction: the modulus is the lowest irreducible in
    // increasing encoding order, so equal parameters give identical fields.
    static FieldPtr make(std::uint64_t p, unsigned m);
    static FieldPtr cubic_extension(const FieldPtr& base);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return m_; } // over GF(p)
    std::uint64_t order() const { return q_; }
    bool prime_field() const { return m_ == 1; }

    // Non-null only when this field was built as an extension of a non-prime
    // base (GF(q0^3) towers).
    const FieldPtr& tower_base() const { return base_; }
    unsigned local_degree() const { return local_m_; }  // over the immediate base
    std::uint64_t base_order() const { return b_; }
    // Monic modulus, coefficients encoded over the immediate base,
    // size local_degree()+1. Empty for prime fields.
    const std::vector<Elem>& modulus() const { return mod_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // DivideByZero on 0
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;

    // Digits over the immediate base, least significant first, fixed length
    // local_degree().
    std::vector<Elem> components(Elem a) const;
    Elem from_components(const std::vector<Elem>& c) const;
    Elem embed_base(Elem c) const;  // immediate-base code -> element here

    // Canonical textual form: bare integer for prime fields, comma-separated
    // digits over the immediate base otherwise.
    std::string to_text(Elem a) const;
    Elem parse_element(const std::string& s) const;

    // "field p=<p> m=<m>[ poly=<c0,...,cm>]", plus a second
    // "tower field ..." line describing the base for tower fields.
    std::string header() const;
    static FieldPtr parse_header(std::istream& in);

    static bool same(const Field& a, const Field& b);

private:
    enum class Kind { prime, ext, tower };

    Field() = default;

    Kind kind_ = Kind::prime;
    std::uint64_t p_ = 0, q_ = 0, b_ = 0;
    unsigned m_ = 1, local_m_ = 1;
    std::vector<Elem> mod_;
    FieldPtr base_;

    std::vector<Elem> decompose(Elem a) const;
    Elem recompose(const std::vector<Elem>& d) const;
    Elem mul_ext(Elem a, Elem b) const;
    std::vector<Elem> poly_mulmod_digits(const std::vector<Elem>& da,
                                         const std::vector<Elem>& db) const;
};

struct SubgroupData {
    FieldPtr field;
    Elem generator = 0;          // generates the subgroup G
    std::uint64_t size = 0;      // |G|, divides q-1
    std::vector<Elem> coset_reps; // pairwise distinct cosets of G, reps[0] == 1
};

// Smallest element (in encoding order) of multiplicative order q-1.
Elem primitive_element(const FieldPtr& f);

// Smallest divisor d of q-1 with d >= min_size and (q-1)/d >= min_cosets;
// G = <g^((q-1)/d)> with coset representatives g^0..g^(min_cosets-1) for a
// primitive g. nullopt when no divisor qualifies.
std::optional<SubgroupData> subgroup_with_cosets(const FieldPtr& f,
                                                 std::uint64_t min_size,
                                                 std::uint64_t min_cosets);

// k in [0, q-1) with g^k == u, for primitive g. Full table up to 2^24,
// baby-step/giant-step beyond.
std::uint64_t discrete_log(const FieldPtr& f, Elem g, Elem u);

} // namespace mrlrc
