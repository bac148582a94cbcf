#include "mrlrc/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace mrlrc {

Matrix Matrix::identity(const FieldPtr& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix m(f_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
    return m;
}

Matrix Matrix::rows_of(const std::vector<std::size_t>& idx) const {
    Matrix m(f_, idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(idx[r], c);
    return m;
}

static void check_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field() || !b.field() || !Field::same(*a.field(), *b.field()))
        fail(Err::ShapeMismatch, "matrices over different fields");
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows()) fail(Err::ShapeMismatch, "inner dimensions differ");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Elem aik = a(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Elem bkj = b(k, j);
                if (!bkj) continue;
                out(i, j) = f.add(out(i, j), f.mul(aik, bkj));
            }
        }
    return out;
}

std::vector<Elem> mat_vec(const Matrix& m, const std::vector<Elem>& x) {
    if (x.size() != m.cols()) fail(Err::ShapeMismatch, "vector length");
    const Field& f = *m.field();
    std::vector<Elem> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) && x[j]) out[i] = f.add(out[i], f.mul(m(i, j), x[j]));
    return out;
}

std::vector<Elem> vec_mat(const std::vector<Elem>& x, const Matrix& m) {
    if (x.size() != m.rows()) fail(Err::ShapeMismatch, "vector length");
    const Field& f = *m.field();
    std::vector<Elem> out(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) out[j] = f.add(out[j], f.mul(x[i], m(i, j)));
    }
    return out;
}

// Row-reduce in place to reduced row echelon form; returns pivot columns.
static std::vector<std::size_t> rref(Matrix& m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(row, c));
        Elem piv_inv = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), piv_inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Elem factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Elem det(Matrix m) {
    if (m.rows() != m.cols()) fail(Err::NotSquare, "determinant of rectangular matrix");
    const Field& f = *m.field();
    std::size_t n = m.rows();
    bool negate = false;
    Elem d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && m(pr, col) == 0) ++pr;
        if (pr == n) return 0;
        if (pr != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m(pr, c), m(col, c));
            negate = !negate;
        }
        Elem piv = m(col, col);
        d = f.mul(d, piv);
        Elem piv_inv = f.inv(piv);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            Elem factor = f.mul(m(r, col), piv_inv);
            for (std::size_t c = col; c < n; ++c)
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
        }
    }
    return negate ? f.neg(d) : d;
}

std::optional<std::vector<Elem>> solve(Matrix m, std::vector<Elem> b) {
    if (b.size() != m.rows()) fail(Err::ShapeMismatch, "rhs length");
    const Field& f = *m.field();
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
    std::vector<Elem> x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    (void)f;
    return x;
}

Matrix null_space(const Matrix& m) {
    const Field& f = *m.field();
    Matrix r = m;
    auto pivots = rref(r);
    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    Matrix basis(m.field(), m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = f.neg(r(i, fc));
        // scale so the first nonzero coordinate is 1
        for (std::size_t row = 0; row < m.cols(); ++row) {
            if (basis(row, k) == 0) continue;
            Elem s = f.inv(basis(row, k));
            if (s != 1)
                for (std::size_t rr = row; rr < m.cols(); ++rr)
                    basis(rr, k) = f.mul(basis(rr, k), s);
            break;
        }
    }
    return basis;
}

Matrix vandermonde(const FieldPtr& f, const std::vector<Elem>& elems,
                   std::size_t num_rows, unsigned start_power) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (start_power >= 1 && elems[i] == 0)
            fail(Err::DuplicateElements, "zero element with positive start power");
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (elems[i] == elems[j]) fail(Err::DuplicateElements, "repeated evaluation point");
    }
    Matrix m(f, num_rows, elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        Elem v = f->pow(elems[i], start_power);
        for (std::size_t j = 0; j < num_rows; ++j) {
            m(j, i) = v;
            v = f->mul(v, elems[i]);
        }
    }
    return m;
}

static void check_cauchy_args(const std::vector<Elem>& alphas, const std::vector<Elem>& betas) {
    std::vector<Elem> all;
    all.insert(all.end(), alphas.begin(), alphas.end());
    all.insert(all.end(), betas.begin(), betas.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        fail(Err::Collision, "alphas and betas must all be distinct");
}

Matrix cauchy(const FieldPtr& f, const std::vector<Elem>& alphas, const std::vector<Elem>& betas) {
    check_cauchy_args(alphas, betas);
    Matrix m(f, betas.size(), alphas.size());
    for (std::size_t j = 0; j < betas.size(); ++j)
        for (std::size_t i = 0; i < alphas.size(); ++i)
            m(j, i) = f->inv(f->sub(alphas[i], betas[j]));
    return m;
}

Elem cauchy_det_closed_form(const FieldPtr& f, const std::vector<Elem>& alphas,
                            const std::vector<Elem>& betas) {
    if (alphas.size() != betas.size()) fail(Err::NotSquare, "cauchy determinant needs m == n");
    check_cauchy_args(alphas, betas);
    Elem num = 1, den = 1;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            num = f->mul(num, f->sub(alphas[i], alphas[j]));
            num = f->mul(num, f->sub(betas[j], betas[i]));
        }
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = 0; j < betas.size(); ++j)
            den = f->mul(den, f->sub(alphas[i], betas[j]));
    return f->div(num, den);
}

static void check_block_shapes(const std::vector<Matrix>& C, const std::vector<Matrix>& D,
                               std::size_t& a, std::size_t& h) {
    if (C.empty() || C.size() != D.size()) fail(Err::ShapeMismatch, "need equal nonempty block lists");
    a = C[0].rows();
    h = D[0].rows();
    std::size_t tsum = 0;
    for (std::size_t i = 0; i < C.size(); ++i) {
        check_same_field(C[i], D[i]);
        check_same_field(C[0], C[i]);
        if (C[i].rows() != a || D[i].rows() != h) fail(Err::ShapeMismatch, "inconsistent block heights");
        if (C[i].cols() != D[i].cols()) fail(Err::ShapeMismatch, "C/D width mismatch");
        if (C[i].cols() < a + 1) fail(Err::ShapeMismatch, "block needs at least one extra column");
        tsum += C[i].cols() - a;
    }
    if (tsum != h) fail(Err::ShapeMismatch, "extra columns must sum to the strip height");
}

Elem block_det_lhs(const std::vector<Matrix>& C, const std::vector<Matrix>& D) {
    std::size_t a, h;
    check_block_shapes(C, D, a, h);
    std::size_t l = C.size();
    std::size_t n = a * l + h;
    Matrix m(C[0].field(), n, n);
    std::size_t col0 = 0;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t r = 0; r < a; ++r)
            for (std::size_t c = 0; c < C[i].cols(); ++c) m(i * a + r, col0 + c) = C[i](r, c);
        for (std::size_t r = 0; r < h; ++r)
            for (std::size_t c = 0; c < D[i].cols(); ++c) m(a * l + r, col0 + c) = D[i](r, c);
        col0 += C[i].cols();
    }
    return det(std::move(m));
}

namespace {

// sign of the permutation taking (1..h) to the concatenation of the
// increasing-ordered parts
bool partition_sign_negative(const std::vector<std::vector<std::size_t>>& parts) {
    std::vector<std::size_t> seq;
    for (const auto& s : parts) seq.insert(seq.end(), s.begin(), s.end());
    unsigned long long inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions & 1;
}

Elem stacked_det(const Matrix& C, const Matrix& D, const std::vector<std::size_t>& rows) {
    std::size_t a = C.rows(), w = C.cols();
    Matrix m(C.field(), a + rows.size(), w);
    for (std::size_t r = 0; r < a; ++r)
        for (std::size_t c = 0; c < w; ++c) m(r, c) = C(r, c);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t c = 0; c < w; ++c) m(a + k, c) = D(rows[k], c);
    return det(std::move(m));
}

} // namespace

Elem block_det_rhs(const std::vector<Matrix>& C, const std::vector<Matrix>& D) {
    std::size_t a, h;
    check_block_shapes(C, D, a, h);
    const FieldPtr& f = C[0].field();
    std::size_t l = C.size();
    std::vector<std::size_t> t(l);
    for (std::size_t i = 0; i < l; ++i) t[i] = C[i].cols() - a;

    Elem sum = 0;
    std::vector<std::vector<std::size_t>> parts(l);
    std::vector<std::size_t> remaining(h);
    for (std::size_t i = 0; i < h; ++i) remaining[i] = i;

    // recursive enumeration of ordered partitions with |S_i| = t_i
    auto rec = [&](auto&& self, std::size_t i, const std::vector<std::size_t>& rem) -> void {
        if (i == l) {
            Elem term = 1;
            for (std::size_t k = 0; k < l; ++k)
                term = f->mul(term, stacked_det(C[k], D[k], parts[k]));
            if (partition_sign_negative(parts)) term = f->neg(term);
            sum = f->add(sum, term);
            return;
        }
        std::size_t ti = t[i], n = rem.size();
        std::vector<std::size_t> pick(ti);
        for (std::size_t k = 0; k < ti; ++k) pick[k] = k;
        for (;;) {
            parts[i].clear();
            std::vector<std::size_t> next_rem;
            std::size_t pi = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (pi < ti && pick[pi] == k) {
                    parts[i].push_back(rem[k]);
                    ++pi;
                } else {
                    next_rem.push_back(rem[k]);
                }
            }
            self(self, i + 1, next_rem);
            // advance pick to the next size-ti combination of [0, n)
            std::size_t j = ti;
            while (j > 0 && pick[j - 1] == n - ti + (j - 1)) --j;
            if (j == 0) return;
            ++pick[j - 1];
            for (std::size_t k = j; k < ti; ++k) pick[k] = pick[k - 1] + 1;
        }
    };
    rec(rec, 0, remaining);

    unsigned long long exp = 0;
    for (std::size_t i = 0; i < l; ++i) exp += a * t[i] * (l - 1 - i);
    return (exp & 1) ? f->neg(sum) : sum;
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
    const Field& f = *m.field();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << f.to_text(m(r, c));
        }
        out << '\n';
    }
}

Matrix read_matrix(std::istream& in, const FieldPtr& f) {
    std::string line;
    if (!std::getline(in, line)) fail(Err::ParseError, "missing matrix header");
    std::istringstream hs(line);
    std::string word;
    std::size_t rows = 0, cols = 0;
    hs >> word >> rows >> cols;
    if (word != "matrix" || hs.fail()) fail(Err::ParseError, "bad matrix header '" + line + "'");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) fail(Err::ParseError, "truncated matrix");
        std::istringstream ls(line);
        for (std::size_t c = 0; c < cols; ++c) {
            std::string tok;
            if (!(ls >> tok)) fail(Err::ParseError, "short matrix row");
            m(r, c) = f->parse_element(tok);
        }
        std::string extra;
        if (ls >> extra) fail(Err::ParseError, "trailing tokens in matrix row");
    }
    return m;
}

} // namespace mrlrc
