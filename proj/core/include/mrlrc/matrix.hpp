#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mrlrc/field.hpp"

namespace mrlrc {

// Dense row-major matrix over a single field. Exact arithmetic only.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

    static Matrix identity(const FieldPtr& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    Elem operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix rows_of(const std::vector<std::size_t>& idx) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_ &&
               (f_ == o.f_ || (f_ && o.f_ && Field::same(*f_, *o.f_)));
    }

private:
    FieldPtr f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> v_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<Elem> mat_vec(const Matrix& m, const std::vector<Elem>& x);   // m * x
std::vector<Elem> vec_mat(const std::vector<Elem>& x, const Matrix& m);   // x * m

// Gaussian elimination with first-nonzero pivoting.
std::size_t rank(Matrix m);
Elem det(Matrix m);  // NotSquare on rectangular input

// Any x with m*x == b; nullopt when the system is inconsistent.
std::optional<std::vector<Elem>> solve(Matrix m, std::vector<Elem> b);

// Columns form a basis of the kernel, each scaled so its first nonzero
// coordinate is 1. cols() == m.cols() - rank(m).
Matrix null_space(const Matrix& m);

// entry(j, i) = elems[i]^(start_power + j)
Matrix vandermonde(const FieldPtr& f, const std::vector<Elem>& elems,
                   std::size_t num_rows, unsigned start_power);

// entry(j, i) = 1 / (alphas[i] - betas[j])
Matrix cauchy(const FieldPtr& f, const std::vector<Elem>& alphas,
              const std::vector<Elem>& betas);

// prod_{i>j} (a_i-a_j)(b_j-b_i) / prod_{i,j} (a_i-b_j); equals det(cauchy).
Elem cauchy_det_closed_form(const FieldPtr& f, const std::vector<Elem>& alphas,
                            const std::vector<Elem>& betas);

// Determinant of the block matrix with C_1..C_l (a x (a+t_i)) on the diagonal
// and D_1..D_l (h x (a+t_i)) as the bottom strip, sum t_i == h.
Elem block_det_lhs(const std::vector<Matrix>& C, const std::vector<Matrix>& D);

// The same determinant via the partition expansion:
// (-1)^(a * sum t_i (l - i)) * sum over ordered partitions S_1 + .. + S_l of
// [h] with |S_i| = t_i of sgn(S_1..S_l) * prod det [C_i ; D_i rows S_i].
Elem block_det_rhs(const std::vector<Matrix>& C, const std::vector<Matrix>& D);

// "matrix <rows> <cols>" then one row per line, canonical element renderings.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in, const FieldPtr& f);

} // namespace mrlrc
