#include "doctest.h"

#include <sstream>

#include "mrlrc/matrix.hpp"
#include "testutil.hpp"

using namespace mrlrc;

namespace {

Matrix from_rows(const FieldPtr& f, std::vector<std::vector<Elem>> rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

Matrix random_matrix(testutil::Rng& rng, const FieldPtr& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.elem(f);
    return m;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("rank basics") {
    FieldPtr f = Field::make(7, 1);
    CHECK(rank(Matrix(f, 3, 3)) == 0);
    CHECK(rank(Matrix::identity(f, 4)) == 4);
    CHECK(rank(from_rows(f, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("det basics") {
    FieldPtr f = Field::make(7, 1);
    CHECK(det(Matrix::identity(f, 5)) == 1);
    CHECK(det(from_rows(f, {{3, 6}, {2, 3}})) == 4);
    CHECK(det(from_rows(f, {{1, 2}, {2, 4}})) == 0);
    CHECK_THROWS_AS(det(Matrix(f, 2, 3)), Error);
}

TEST_CASE("solve basics") {
    FieldPtr f = Field::make(7, 1);
    auto x = solve(Matrix::identity(f, 3), {1, 5, 6});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Elem>{1, 5, 6});
    CHECK(!solve(from_rows(f, {{1, 1}, {0, 0}}), {0, 1}).has_value());
}

TEST_CASE("solve round trip on random full-rank systems") {
    testutil::Rng rng(0x5eed1001);
    for (auto f : {Field::make(13, 1), Field::make(2, 4)}) {
        for (int it = 0; it < 100; ++it) {
            std::size_t n = 1 + rng.below(5);
            Matrix m = random_matrix(rng, f, n, n);
            if (det(m) == 0) continue;
            std::vector<Elem> x0(n);
            for (auto& v : x0) v = rng.elem(f);
            auto back = solve(m, mat_vec(m, x0));
            REQUIRE(back.has_value());
            CHECK(*back == x0);
        }
    }
}

TEST_CASE("null space") {
    FieldPtr f = Field::make(7, 1);
    Matrix single = null_space(from_rows(f, {{1, 1}}));
    REQUIRE(single.cols() == 1);
    CHECK(single(0, 0) == 1);
    CHECK(single(1, 0) == 6);

    CHECK(null_space(Matrix::identity(f, 3)).cols() == 0);

    Matrix z = null_space(Matrix(f, 2, 3));
    CHECK(z == Matrix::identity(f, 3));
}

TEST_CASE("null space columns are kernel vectors") {
    testutil::Rng rng(0x5eed1002);
    for (auto f : {Field::make(13, 1), Field::make(2, 4)}) {
        for (int it = 0; it < 60; ++it) {
            Matrix m = random_matrix(rng, f, 2 + rng.below(4), 2 + rng.below(5));
            Matrix k = null_space(m);
            CHECK(k.cols() == m.cols() - rank(m));
            for (std::size_t c = 0; c < k.cols(); ++c) {
                std::vector<Elem> v(m.cols());
                bool nonzero = false;
                for (std::size_t r = 0; r < m.cols(); ++r) {
                    v[r] = k(r, c);
                    nonzero |= v[r] != 0;
                }
                CHECK(nonzero);
                for (Elem e : mat_vec(m, v)) CHECK(e == 0);
            }
        }
    }
}

TEST_CASE("rank equals rank of the transpose") {
    testutil::Rng rng(0x5eed1003);
    FieldPtr f = Field::make(13, 1);
    for (int it = 0; it < 100; ++it) {
        Matrix m = random_matrix(rng, f, 1 + rng.below(6), 1 + rng.below(6));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("vandermonde") {
    FieldPtr f = Field::make(7, 1);
    CHECK(vandermonde(f, {2, 3}, 2, 1) == from_rows(f, {{2, 3}, {4, 2}}));
    CHECK(vandermonde(f, {5}, 1, 0) == from_rows(f, {{1}}));
    CHECK_THROWS_AS(vandermonde(f, {2, 2}, 1, 1), Error);
    CHECK_THROWS_AS(vandermonde(f, {0, 2}, 1, 1), Error);
}

TEST_CASE("vandermonde minors are nonzero") {
    FieldPtr f = Field::make(13, 1);
    std::vector<Elem> elems{1, 2, 3, 4, 5, 6, 7, 8};
    for (std::size_t r = 2; r <= 8; ++r) {
        std::vector<Elem> pts(elems.begin(), elems.begin() + r);
        for (std::size_t a = 1; a <= 3 && a <= r; ++a) {
            Matrix m = vandermonde(f, pts, a, 1);
            // every a x a minor
            std::vector<std::size_t> comb(a);
            for (std::size_t i = 0; i < a; ++i) comb[i] = i;
            for (;;) {
                CHECK(det(m.columns(comb)) != 0);
                std::size_t j = a;
                while (j > 0 && comb[j - 1] == r - a + (j - 1)) --j;
                if (j == 0) break;
                ++comb[j - 1];
                for (std::size_t i = j; i < a; ++i) comb[i] = comb[i - 1] + 1;
            }
        }
    }
}

TEST_CASE("cauchy") {
    FieldPtr f = Field::make(7, 1);
    CHECK(cauchy(f, {1, 2}, {3, 4}) == from_rows(f, {{3, 6}, {2, 3}}));
    CHECK(cauchy(f, {2}, {1}) == from_rows(f, {{1}}));
    CHECK_THROWS_AS(cauchy(f, {1, 2}, {2, 5}), Error);
}

TEST_CASE("cauchy determinant closed form") {
    FieldPtr f = Field::make(7, 1);
    CHECK(cauchy_det_closed_form(f, {1, 2}, {3, 4}) == 4);
    CHECK(cauchy_det_closed_form(f, {2}, {1}) == f->inv(f->sub(2, 1)));

    testutil::Rng rng(0x5eed1004);
    auto panel = {Field::make(13, 1), Field::make(2, 4), Field::cubic_extension(Field::make(13, 1))};
    for (const auto& fp : panel) {
        for (int it = 0; it < 100; ++it) {
            std::size_t sz = 1 + rng.below(5);
            auto pts = rng.distinct(fp, 2 * sz);
            std::vector<Elem> alphas(pts.begin(), pts.begin() + sz);
            std::vector<Elem> betas(pts.begin() + sz, pts.end());
            CHECK(cauchy_det_closed_form(fp, alphas, betas) == det(cauchy(fp, alphas, betas)));
        }
    }
}

TEST_CASE("all minors of a 5x5 cauchy matrix are nonsingular") {
    FieldPtr f = Field::make(13, 1);
    std::vector<Elem> alphas{1, 2, 3, 4, 5}, betas{6, 7, 8, 9, 10};
    Matrix m = cauchy(f, alphas, betas);
    // every square minor, orders 1..5
    for (std::size_t k = 1; k <= 5; ++k) {
        std::vector<std::size_t> rc(k), cc(k);
        auto next = [&](std::vector<std::size_t>& comb) {
            std::size_t j = k;
            while (j > 0 && comb[j - 1] == 5 - k + (j - 1)) --j;
            if (j == 0) return false;
            ++comb[j - 1];
            for (std::size_t i = j; i < k; ++i) comb[i] = comb[i - 1] + 1;
            return true;
        };
        for (std::size_t i = 0; i < k; ++i) rc[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) cc[i] = i;
            do {
                CHECK(det(m.rows_of(rc).columns(cc)) != 0);
            } while (next(cc));
        } while (next(rc));
    }
}

TEST_CASE("block determinant identity") {
    testutil::Rng rng(0x5eed1005);
    auto panel = {Field::make(13, 1), Field::make(2, 4), Field::cubic_extension(Field::make(13, 1))};
    struct Shape { std::size_t a, h; std::vector<std::size_t> t; };
    std::vector<Shape> shapes = {
        {1, 2, {1, 1}}, {2, 2, {1, 1}}, {1, 3, {1, 1, 1}}, {1, 3, {1, 2}}, {2, 3, {1, 2}}};
    for (const auto& f : panel) {
        for (const auto& s : shapes) {
            for (int it = 0; it < 60; ++it) {
                std::vector<Matrix> C, D;
                for (std::size_t t : s.t) {
                    C.push_back(random_matrix(rng, f, s.a, s.a + t));
                    D.push_back(random_matrix(rng, f, s.h, s.a + t));
                }
                CHECK(block_det_lhs(C, D) == block_det_rhs(C, D));
            }
        }
    }
}

TEST_CASE("block determinant all-ones-size case matches the determinant of determinants") {
    // h = 2, a = 1: the expansion is the 2x2 determinant of stacked
    // determinants with sign (-1)^(a h (h-1) / 2) = -1
    testutil::Rng rng(0x5eed1006);
    FieldPtr f = Field::make(13, 1);
    for (int it = 0; it < 50; ++it) {
        std::vector<Matrix> C{random_matrix(rng, f, 1, 2), random_matrix(rng, f, 1, 2)};
        std::vector<Matrix> D{random_matrix(rng, f, 2, 2), random_matrix(rng, f, 2, 2)};
        auto stacked = [&](std::size_t i, std::size_t row) {
            Matrix m(f, 2, 2);
            m(0, 0) = C[i](0, 0);
            m(0, 1) = C[i](0, 1);
            m(1, 0) = D[i](row, 0);
            m(1, 1) = D[i](row, 1);
            return det(std::move(m));
        };
        Matrix dd(f, 2, 2);
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 2; ++i) dd(j, i) = stacked(i, j);
        CHECK(block_det_lhs(C, D) == f->neg(det(dd)));
    }
}

TEST_CASE("block determinant degenerate cases") {
    testutil::Rng rng(0x5eed1007);
    FieldPtr f = Field::make(13, 1);
    // a = 0 reduces both sides to the plain column-split determinant
    std::vector<Matrix> C{Matrix(f, 0, 1), Matrix(f, 0, 2)};
    std::vector<Matrix> D{random_matrix(rng, f, 3, 1), random_matrix(rng, f, 3, 2)};
    Matrix joined(f, 3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        joined(r, 0) = D[0](r, 0);
        joined(r, 1) = D[1](r, 0);
        joined(r, 2) = D[1](r, 1);
    }
    CHECK(block_det_lhs(C, D) == det(joined));
    CHECK(block_det_rhs(C, D) == det(joined));

    // all-zero strips vanish on both sides
    std::vector<Matrix> C2{random_matrix(rng, f, 1, 2), random_matrix(rng, f, 1, 2)};
    std::vector<Matrix> D2{Matrix(f, 2, 2), Matrix(f, 2, 2)};
    CHECK(block_det_lhs(C2, D2) == 0);
    CHECK(block_det_rhs(C2, D2) == 0);
}

TEST_CASE("matrix text round trip") {
    testutil::Rng rng(0x5eed1008);
    for (auto f : {Field::make(13, 1), Field::cubic_extension(Field::make(5, 2))}) {
        Matrix m = random_matrix(rng, f, 3, 5);
        std::stringstream ss;
        write_matrix(ss, m);
        Matrix back = read_matrix(ss, f);
        CHECK(back == m);
        std::stringstream ss2;
        write_matrix(ss2, back);
        CHECK(ss2.str() == ss.str());
    }
}

} // TEST_SUITE
