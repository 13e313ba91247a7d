#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alg2/scalar.hpp"

namespace alg2 {

/// Dense row-major matrix of exact rationals. Column vectors are n x 1 matrices.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat column(std::span<const Scalar> v);
    /// Standard basis column e_i of length n.
    static Mat unit_column(std::size_t n, std::size_t i);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Scalar>& entries() const { return data_; }

    Mat col(std::size_t j) const;
    Mat row(std::size_t i) const;
    std::vector<Scalar> col_vector(std::size_t j) const;
    /// Columns [first, first + count).
    Mat col_range(std::size_t first, std::size_t count) const;
    Mat row_range(std::size_t first, std::size_t count) const;
    Mat select_rows(std::span<const std::size_t> idx) const;
    Mat select_cols(std::span<const std::size_t> idx) const;

    Mat transpose() const;

    /// Row-major flattening as a (rows*cols) x 1 column.
    Mat flatten() const;
    /// Inverse of flatten().
    static Mat unflatten(const Mat& column, std::size_t rows, std::size_t cols);

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Scalar& s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
    friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
    friend Mat operator-(Mat a) { return a *= Scalar(-1); }
    friend Mat operator*(const Mat& a, const Mat& b);

    friend bool operator==(const Mat& a, const Mat& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Kronecker product; the (i, j) pair of factor indices maps to i * dim2 + j.
Mat kron(const Mat& a, const Mat& b);
/// kron(a, I_n) * s without forming the Kronecker product.
Mat kron_apply_left(const Mat& a, std::size_t n, const Mat& s);
/// kron(I_m, b) * s without forming the Kronecker product.
Mat kron_apply_right(std::size_t m, const Mat& b, const Mat& s);
Mat direct_sum(const Mat& a, const Mat& b);
Mat hstack(std::span<const Mat> blocks);
Mat vstack(std::span<const Mat> blocks);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct Rref {
    Mat reduced;
    std::vector<std::size_t> pivots;
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);
bool is_invertible(const Mat& m);
/// Throws SingularMatrix.
Mat inverse(const Mat& m);

/// Row space of a matrix kept in reduced row-echelon form. Coordinates of a member
/// vector in this basis are its entries at the pivot positions.
class Subspace {
public:
    Subspace() = default;
    /// Spanned by the rows of `generators`; reduced on construction.
    static Subspace row_space(const Mat& generators);
    static Subspace whole(std::size_t n);
    /// Adopts rows already in reduced row-echelon form with the given pivots.
    static Subspace from_reduced(Mat basis, std::vector<std::size_t> pivots);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Basis as columns (ambient x dim).
    Mat basis_columns() const { return basis_.transpose(); }
    /// Coordinate matrix (dim x ambient) that reads pivot entries; only meaningful on members.
    Mat coordinate_map() const;
    bool contains(const Mat& column) const;
    /// Coordinates of member columns: their pivot rows.
    Mat coordinates(const Mat& columns) const { return columns.select_rows(pivots_); }

private:
    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// Incremental reduced row-echelon basis over sparse rows; cheap when the added vectors are sparse.
class RowReducer {
public:
    using Entry = std::pair<std::size_t, Scalar>;
    using Row = std::vector<Entry>;  // sorted by column, no zeros

    explicit RowReducer(std::size_t ambient);

    /// Adds a vector; returns true when it enlarged the span.
    bool add(Row v);
    /// Adds every row of m.
    void add_rows(const Mat& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == ambient_; }
    Subspace subspace() const;

private:
    std::size_t ambient_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivot_;           // per row
    std::vector<std::ptrdiff_t> row_of_pivot_;  // per column, -1 when not a pivot
};

/// Right null space {x : m x = 0}.
Subspace kernel_basis(const Mat& m);

/// Some x with m x = rhs (free variables set to zero), or nullopt when inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& rhs);

/// Quotient of the target of m by its column space. The complement is spanned by the
/// standard basis vectors at the non-pivot positions of the echelon column space.
struct Cokernel {
    Mat proj;  ///< quotient_dim x m.rows(), proj * m == 0
    Mat sect;  ///< m.rows() x quotient_dim, proj * sect == identity
    std::size_t dim() const { return proj.rows(); }
};

Cokernel cokernel(const Mat& m);
/// Quotient of the ambient space by s.
Cokernel quotient(const Subspace& s);

/// Row space of the vertical stack of the blocks, reduced block by block so the working
/// matrix never exceeds rank + block height rows.
Subspace stacked_row_space(std::span<const Mat> blocks, std::size_t ambient);

}  // namespace alg2
