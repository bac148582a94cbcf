#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mrlrc/field.hpp"
#include "mrlrc/lrc.hpp"

namespace mrlrc {

// Point of the projective plane, scaled so the last nonzero coordinate is 1.
struct ProjectivePoint {
    Elem x = 0, y = 0, z = 0;
    bool operator==(const ProjectivePoint&) const = default;
};

ProjectivePoint normalize_point(const FieldPtr& f, Elem x, Elem y, Elem z);
bool collinear(const FieldPtr& f, const ProjectivePoint& p, const ProjectivePoint& q,
               const ProjectivePoint& s);

// (Y - alpha X)(Y - beta X) Z = X^3, singular at (0:0:1); the nonsingular
// points form a group isomorphic to the multiplicative group of the field.
struct SingularCurve {
    FieldPtr field;
    Elem alpha = 0, beta = 0;
};

SingularCurve make_curve(FieldPtr f, Elem alpha, Elem beta);
ProjectivePoint curve_infinity();  // (0:1:0)
bool on_curve_nonsingular(const SingularCurve& c, const ProjectivePoint& p);

// The isomorphism to the multiplicative group: infinity -> 1,
// (x,y,1) -> (y - beta x)/(y - alpha x).
Elem curve_phi(const SingularCurve& c, const ProjectivePoint& p);
ProjectivePoint phi_inverse(const SingularCurve& c, Elem u);

// 3-AP-free subset of {1..M}: the greedy sequence up to 5000, the sphere
// construction above. Output verified AP-free.
std::vector<std::uint64_t> behrend_set(std::uint64_t M);

// Subset of Z/NZ partitioned into triples summing to 0 where no other
// 3-subset sums to 0.
struct TriSumSet {
    std::uint64_t modulus = 0;
    std::vector<std::array<std::uint64_t, 3>> triples;
    std::vector<std::uint64_t> elements() const;
};

TriSumSet matching_trisum_set(std::uint64_t N);  // N >= 60

// Points partitioned into collinear triples with no other collinear 3-subset.
struct TripleFamily {
    FieldPtr field;
    std::vector<ProjectivePoint> points;
    std::vector<std::array<std::size_t, 3>> triples;  // indices into points
};

// Transports a matching tri-sum set of Z/(q-1)Z onto the curve through a
// primitive root; q >= 61.
TripleFamily matching_collinear_family(const FieldPtr& f);

// Brute-force check of the defining property; intended for families of at
// most a few hundred points. bad, when given, receives an offending triple.
bool family_invariant_holds(const TripleFamily& fam, std::array<std::size_t, 3>* bad = nullptr);

// MR (3g, r=3, h=3, a=1) code from a family of g matching collinear triples:
// triple members rescaled to sum to zero, A_i all-ones, B_i = [0 | -b | c].
LrcCode triples_to_code(const TripleFamily& fam);

// The reverse direction: per group the cyclic differences of the (column
// scaled) heavy columns, as projective points.
TripleFamily code_to_triples(const LrcCode& code);

// "triples v1" file: field header, then one line of nine renderings per triple.
void write_family(std::ostream& out, const TripleFamily& fam);
TripleFamily read_family(std::istream& in);

} // namespace mrlrc
