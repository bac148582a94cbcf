#include "doctest.h"

#include <set>
#include <sstream>

#include "mrlrc/field.hpp"
#include "mrlrc/numtheory.hpp"
#include "testutil.hpp"

using namespace mrlrc;

TEST_SUITE("field") {

TEST_CASE("make_field prime") {
    FieldPtr f = Field::make(13, 1);
    CHECK(f->order() == 13);
    CHECK(f->degree() == 1);
    CHECK(f->modulus().empty());
    CHECK(f->tower_base() == nullptr);
}

TEST_CASE("make_field GF(8) picks the first rootless cubic") {
    // independent scan over all 8 monic cubics over GF(2)
    std::vector<std::uint64_t> expected;
    for (std::uint64_t code = 0; code < 8; ++code) {
        std::uint64_t c0 = code & 1, c1 = (code >> 1) & 1, c2 = (code >> 2) & 1;
        bool root = false;
        for (std::uint64_t x = 0; x < 2; ++x)
            if (((x * x * x) ^ (c2 * x * x) ^ (c1 * x) ^ c0) % 2 == 0) root = true;
        if (!root) {
            expected = {c0, c1, c2, 1};
            break;
        }
    }
    REQUIRE(expected == std::vector<std::uint64_t>{1, 1, 0, 1});  // x^3 + x + 1
    FieldPtr f = Field::make(2, 3);
    CHECK(f->order() == 8);
    CHECK(f->modulus() == expected);
}

TEST_CASE("make_field rejects composites") {
    CHECK_THROWS_AS(Field::make(4, 1), Error);
    try {
        Field::make(4, 1);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::NotPrime);
    }
    CHECK_THROWS_AS(Field::make(2, 41), Error);  // 2^41 > 2^40
}

TEST_CASE("cubic extension of GF(13)") {
    // oracle: first c with x^3 + c rootless mod 13, via plain integers
    std::uint64_t expect_c = 0;
    for (std::uint64_t c = 0;; ++c) {
        bool root = false;
        for (std::uint64_t x = 0; x < 13; ++x)
            if ((x * x * x + c) % 13 == 0) root = true;
        if (!root) { expect_c = c; break; }
    }
    FieldPtr base = Field::make(13, 1);
    FieldPtr f = Field::cubic_extension(base);
    CHECK(f->order() == 2197);
    CHECK(f->degree() == 3);
    CHECK(f->modulus() == std::vector<std::uint64_t>{expect_c, 0, 0, 1});
    CHECK(f->tower_base() == nullptr);  // prime base folds into a plain extension

    // power basis 1, X, X^2 is independent: codes 1, 13, 169 are distinct and
    // no nontrivial base combination of them vanishes
    Elem v0 = f->from_components({1, 0, 0});
    Elem v1 = f->from_components({0, 1, 0});
    Elem v2 = f->from_components({0, 0, 1});
    for (Elem c0 = 0; c0 < 13; ++c0)
        for (Elem c1 = 0; c1 < 13; ++c1)
            for (Elem c2 = 0; c2 < 13; ++c2) {
                Elem s = f->add(f->add(f->mul(f->embed_base(c0), v0), f->mul(f->embed_base(c1), v1)),
                                f->mul(f->embed_base(c2), v2));
                if (s == 0) CHECK((c0 == 0 && c1 == 0 && c2 == 0));
            }
}

TEST_CASE("cubic extension of GF(2) equals GF(8)") {
    FieldPtr f = Field::cubic_extension(Field::make(2, 1));
    CHECK(f->order() == 8);
    CHECK(Field::same(*f, *Field::make(2, 3)));
}

TEST_CASE("cubic extension of a non-prime base is a tower") {
    FieldPtr base = Field::make(5, 2);
    FieldPtr f = Field::cubic_extension(base);
    CHECK(f->order() == 25 * 25 * 25);
    CHECK(f->tower_base() == base);
    CHECK(f->local_degree() == 3);
    CHECK(f->degree() == 6);
    // modulus is a rootless cubic over GF(25)
    const auto& mod = f->modulus();
    REQUIRE(mod.size() == 4);
    for (Elem x = 0; x < 25; ++x) {
        Elem v = base->add(base->mul(base->add(base->mul(base->add(x, mod[2]), x), mod[1]), x), mod[0]);
        CHECK(v != 0);
    }
}

TEST_CASE("arithmetic examples") {
    FieldPtr f7 = Field::make(7, 1);
    CHECK(f7->mul(3, 5) == 1);

    for (auto f : {Field::make(7, 1), Field::make(2, 3), Field::make(13, 1)})
        CHECK(f->inv(1) == 1);

    FieldPtr f8 = Field::make(2, 3);
    // X * X^2 = X + 1 under x^3 + x + 1
    CHECK(f8->mul(2, 4) == 3);
}

TEST_CASE("division errors") {
    FieldPtr f = Field::make(7, 1);
    CHECK_THROWS_AS(f->inv(0), Error);
    CHECK_THROWS_AS(f->div(3, 0), Error);
}

TEST_CASE("primitive elements") {
    CHECK(primitive_element(Field::make(7, 1)) == 3);
    CHECK(primitive_element(Field::make(13, 1)) == 2);
    CHECK(primitive_element(Field::make(2, 1)) == 1);
}

TEST_CASE("subgroup_with_cosets on GF(13)") {
    FieldPtr f = Field::make(13, 1);
    auto s = subgroup_with_cosets(f, 4, 3);
    REQUIRE(s.has_value());
    CHECK(s->size == 4);
    CHECK(s->coset_reps.size() == 3);
    CHECK(f->pow(s->generator, 4) == 1);

    CHECK(!subgroup_with_cosets(f, 5, 3).has_value());

    auto t = subgroup_with_cosets(f, 1, 1);
    REQUIRE(t.has_value());
    CHECK(t->size == 1);
    CHECK(t->generator == 1);
}

TEST_CASE("subgroup output invariants") {
    for (auto f : {Field::make(13, 1), Field::make(2, 4), Field::make(31, 1)}) {
        auto s = subgroup_with_cosets(f, 3, 2);
        if (!s) continue;
        // exact order
        std::set<Elem> powers;
        Elem x = 1;
        for (std::uint64_t i = 0; i < s->size; ++i) {
            powers.insert(x);
            x = f->mul(x, s->generator);
        }
        CHECK(powers.size() == s->size);
        CHECK(x == 1);  // generator^d == 1
        // reps in pairwise distinct cosets: x * y^-1 outside G
        for (std::size_t i = 0; i < s->coset_reps.size(); ++i)
            for (std::size_t j = 0; j < s->coset_reps.size(); ++j) {
                if (i == j) continue;
                Elem ratio = f->div(s->coset_reps[i], s->coset_reps[j]);
                CHECK(f->pow(ratio, s->size) != 1);
            }
    }
}

TEST_CASE("discrete log examples") {
    FieldPtr f = Field::make(7, 1);
    CHECK(discrete_log(f, 3, 1) == 0);
    CHECK(discrete_log(f, 3, 3) == 1);
    CHECK(discrete_log(f, 3, 6) == 3);
    CHECK_THROWS_AS(discrete_log(f, 3, 0), Error);
}

TEST_CASE("discrete log round trip exhaustively") {
    for (auto f : {Field::make(13, 1), Field::make(2, 3), Field::make(2, 10)}) {
        Elem g = primitive_element(f);
        for (std::uint64_t k = 0; k + 1 < f->order(); ++k)
            CHECK(discrete_log(f, g, f->pow(g, k)) == k);
    }
}

TEST_CASE("field axioms on random triples") {
    auto panel = {Field::make(13, 1), Field::make(2, 3), Field::make(2, 10),
                  Field::cubic_extension(Field::make(13, 1))};
    for (const auto& f : panel) {
        testutil::Rng rng(0x5eed0001);
        for (int it = 0; it < 10000; ++it) {
            Elem a = rng.elem(f), b = rng.elem(f), c = rng.elem(f);
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
        }
    }
}

TEST_CASE("Lagrange: u^(q-1) == 1 exhaustively") {
    auto panel = {Field::make(13, 1), Field::make(2, 3), Field::make(2, 10),
                  Field::cubic_extension(Field::make(13, 1)), Field::make(5, 2)};
    for (const auto& f : panel) {
        REQUIRE(f->order() <= 4096);
        for (Elem u = 1; u < f->order(); ++u) CHECK(f->pow(u, f->order() - 1) == 1);
    }
}

TEST_CASE("primitive element generates everything") {
    for (auto f : {Field::make(13, 1), Field::make(2, 3), Field::make(2, 10), Field::make(11, 2)}) {
        Elem g = primitive_element(f);
        std::set<Elem> seen;
        Elem x = 1;
        for (std::uint64_t k = 0; k + 1 < f->order(); ++k) {
            seen.insert(x);
            x = f->mul(x, g);
        }
        CHECK(seen.size() == f->order() - 1);
        CHECK(x == 1);
    }
}

TEST_CASE("textual forms round trip") {
    FieldPtr f13 = Field::make(13, 1);
    CHECK(f13->to_text(7) == "7");
    CHECK(f13->parse_element("7") == 7);

    FieldPtr f = Field::cubic_extension(Field::make(13, 1));
    Elem e = f->from_components({3, 0, 1});
    CHECK(f->to_text(e) == "3,0,1");
    CHECK(f->parse_element("3,0,1") == e);

    FieldPtr tower = Field::cubic_extension(Field::make(5, 2));
    testutil::Rng rng(0x5eed0002);
    for (int it = 0; it < 200; ++it) {
        Elem v = rng.elem(tower);
        CHECK(tower->parse_element(tower->to_text(v)) == v);
    }
    CHECK_THROWS_AS(f13->parse_element("13"), Error);
    CHECK_THROWS_AS(f13->parse_element("x"), Error);
    CHECK_THROWS_AS(f->parse_element("1,2"), Error);
}

TEST_CASE("headers round trip") {
    for (auto f : {Field::make(13, 1), Field::make(2, 10), Field::cubic_extension(Field::make(13, 1)),
                   Field::cubic_extension(Field::make(5, 2))}) {
        std::stringstream ss(f->header() + "\n");
        FieldPtr back = Field::parse_header(ss);
        CHECK(Field::same(*f, *back));
        CHECK(back->header() == f->header());
    }
}

} // TEST_SUITE
