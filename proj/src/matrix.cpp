#include "alg2/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "alg2/error.hpp"

namespace alg2 {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("Mat: entry count does not match shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("Mat: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::column(std::span<const Scalar> v) { return Mat(v.size(), 1, std::vector<Scalar>(v.begin(), v.end())); }

Mat Mat::unit_column(std::size_t n, std::size_t i) {
    Mat m(n, 1);
    m(i, 0) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Mat Mat::col(std::size_t j) const {
    Mat c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

Mat Mat::row(std::size_t i) const {
    Mat r(1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
}

std::vector<Scalar> Mat::col_vector(std::size_t j) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::col_range(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw ShapeError("col_range out of bounds");
    Mat out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

Mat Mat::row_range(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw ShapeError("row_range out of bounds");
    Mat out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
    Mat out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
    Mat out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::flatten() const { return Mat(rows_ * cols_, 1, data_); }

Mat Mat::unflatten(const Mat& column, std::size_t rows, std::size_t cols) {
    if (column.cols() != 1 || column.rows() != rows * cols) throw ShapeError("unflatten: bad column");
    return Mat(rows, cols, column.data_);
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Mat +: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Mat -: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
        throw ShapeError("Mat *: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                         std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Mat c(a.rows_, b.cols_);
    Scalar t;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (sgn(bkj) == 0) continue;
                t = aik * bkj;
                c(i, j) += t;
            }
        }
    }
    return c;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
    Mat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (sgn(aij) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

Mat kron_apply_left(const Mat& a, std::size_t n, const Mat& s) {
    if (a.cols() * n != s.rows()) throw ShapeError("kron_apply_left: shape mismatch");
    Mat out(a.rows() * n, s.cols());
    Scalar t;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t x = 0; x < a.cols(); ++x) {
            const Scalar& f = a(r, x);
            if (sgn(f) == 0) continue;
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t c = 0; c < s.cols(); ++c) {
                    const Scalar& v = s(x * n + y, c);
                    if (sgn(v) == 0) continue;
                    t = f * v;
                    out(r * n + y, c) += t;
                }
        }
    return out;
}

Mat kron_apply_right(std::size_t m, const Mat& b, const Mat& s) {
    if (m * b.cols() != s.rows()) throw ShapeError("kron_apply_right: shape mismatch");
    const std::size_t n = b.cols(), n2 = b.rows();
    Mat out(m * n2, s.cols());
    Scalar t;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t r = 0; r < n2; ++r)
            for (std::size_t y = 0; y < n; ++y) {
                const Scalar& f = b(r, y);
                if (sgn(f) == 0) continue;
                for (std::size_t c = 0; c < s.cols(); ++c) {
                    const Scalar& v = s(x * n + y, c);
                    if (sgn(v) == 0) continue;
                    t = f * v;
                    out(x * n2 + r, c) += t;
                }
            }
    return out;
}

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat d(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) d(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) d(a.rows() + i, a.cols() + j) = b(i, j);
    return d;
}

Mat hstack(std::span<const Mat> blocks) {
    if (blocks.empty()) return {};
    const std::size_t r = blocks.front().rows();
    std::size_t c = 0;
    for (const auto& b : blocks) {
        if (b.rows() != r) throw ShapeError("hstack: row mismatch");
        c += b.cols();
    }
    Mat out(r, c);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
        off += b.cols();
    }
    return out;
}

Mat vstack(std::span<const Mat> blocks) {
    if (blocks.empty()) return {};
    const std::size_t c = blocks.front().cols();
    std::size_t r = 0;
    for (const auto& b : blocks) {
        if (b.cols() != c) throw ShapeError("vstack: column mismatch");
        r += b.rows();
    }
    Mat out(r, c);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < c; ++j) out(off + i, j) = b(i, j);
        off += b.rows();
    }
    return out;
}

Mat hstack(const Mat& a, const Mat& b) {
    const Mat parts[] = {a, b};
    return hstack(parts);
}

Mat vstack(const Mat& a, const Mat& b) {
    const Mat parts[] = {a, b};
    return vstack(parts);
}

Rref rref(const Mat& m) {
    Rref out{m, {}};
    Mat& r = out.reduced;
    const std::size_t rows = r.rows(), cols = r.cols();
    std::size_t lead = 0;
    Scalar f, t;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && sgn(r(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != lead)
            for (std::size_t j = c; j < cols; ++j) std::swap(r(p, j), r(lead, j));
        if (r(lead, c) != 1) {
            const Scalar inv = 1 / r(lead, c);
            for (std::size_t j = c; j < cols; ++j) r(lead, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || sgn(r(i, c)) == 0) continue;
            f = r(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(r(lead, j)) == 0) continue;
                t = f * r(lead, j);
                r(i, j) -= t;
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw SingularMatrix("inverse: matrix is not square");
    const std::size_t n = m.rows();
    const Rref r = rref(hstack(m, Mat::identity(n)));
    if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw SingularMatrix("inverse: matrix is singular");
    return r.reduced.col_range(n, n);
}

Subspace Subspace::row_space(const Mat& generators) {
    Subspace s;
    s.ambient_ = generators.cols();
    Rref r = rref(generators);
    s.pivots_ = std::move(r.pivots);
    s.basis_ = r.reduced.row_range(0, s.pivots_.size());
    return s;
}

Subspace Subspace::from_reduced(Mat basis, std::vector<std::size_t> pivots) {
    Subspace s;
    s.ambient_ = basis.cols();
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::whole(std::size_t n) {
    Subspace s;
    s.ambient_ = n;
    s.basis_ = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
    return s;
}

Mat Subspace::coordinate_map() const {
    Mat c(dim(), ambient_);
    for (std::size_t k = 0; k < pivots_.size(); ++k) c(k, pivots_[k]) = 1;
    return c;
}

bool Subspace::contains(const Mat& column) const {
    if (column.rows() != ambient_ || column.cols() != 1) throw ShapeError("Subspace::contains: bad vector");
    return basis_columns() * (coordinate_map() * column) == column;
}

Subspace kernel_basis(const Mat& m) {
    const Rref r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Mat> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Mat v(1, n);
        v(0, f) = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v(0, r.pivots[k]) = -r.reduced(k, f);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return Subspace::row_space(Mat(0, n));
    return Subspace::row_space(vstack(rows));
}

std::optional<Mat> solve(const Mat& m, const Mat& rhs) {
    if (m.rows() != rhs.rows()) throw ShapeError("solve: row mismatch");
    const std::size_t n = m.cols();
    const Rref r = rref(hstack(m, rhs));
    Mat x(n, rhs.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        const std::size_t p = r.pivots[k];
        if (p >= n) return std::nullopt;
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(p, j) = r.reduced(k, n + j);
    }
    return x;
}

Cokernel cokernel(const Mat& m) { return quotient(Subspace::row_space(m.transpose())); }

Subspace stacked_row_space(std::span<const Mat> blocks, std::size_t ambient) {
    RowReducer acc(ambient);
    for (const Mat& b : blocks) {
        if (b.cols() != ambient) throw ShapeError("stacked_row_space: column mismatch");
        if (acc.full()) break;
        acc.add_rows(b);
    }
    return acc.subspace();
}

namespace {

/// a - f b on sorted sparse rows.
RowReducer::Row axpy_row(const RowReducer::Row& a, const Scalar& f, const RowReducer::Row& b) {
    RowReducer::Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Scalar t;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            t = f * b[j].second;
            out.emplace_back(b[j].first, -t);
            ++j;
        } else {
            t = a[i].second - f * b[j].second;
            if (sgn(t) != 0) out.emplace_back(a[i].first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

const Scalar* find_entry(const RowReducer::Row& r, std::size_t col) {
    auto it = std::lower_bound(r.begin(), r.end(), col, [](const RowReducer::Entry& e, std::size_t c) { return e.first < c; });
    return it != r.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace

RowReducer::RowReducer(std::size_t ambient) : ambient_(ambient), row_of_pivot_(ambient, -1) {}

bool RowReducer::add(Row v) {
    // rows are fully reduced, so eliminating the pivot columns present in v never creates new ones
    std::vector<std::size_t> hits;
    for (const auto& e : v)
        if (row_of_pivot_[e.first] >= 0) hits.push_back(e.first);
    for (std::size_t c : hits) {
        const Scalar* f = find_entry(v, c);
        if (!f) continue;
        const Scalar factor = *f;
        v = axpy_row(v, factor, rows_[static_cast<std::size_t>(row_of_pivot_[c])]);
    }
    if (v.empty()) return false;
    const std::size_t q = v.front().first;
    if (v.front().second != 1) {
        const Scalar inv = 1 / v.front().second;
        for (auto& e : v) e.second *= inv;
    }
    for (auto& r : rows_)
        if (const Scalar* f = find_entry(r, q)) {
            const Scalar factor = *f;
            r = axpy_row(r, factor, v);
        }
    row_of_pivot_[q] = static_cast<std::ptrdiff_t>(rows_.size());
    pivot_.push_back(q);
    rows_.push_back(std::move(v));
    return true;
}

void RowReducer::add_rows(const Mat& m) {
    if (m.cols() != ambient_) throw ShapeError("RowReducer: column mismatch");
    for (std::size_t i = 0; i < m.rows() && !full(); ++i) {
        Row r;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) r.emplace_back(j, m(i, j));
        if (!r.empty()) add(std::move(r));
    }
}

Subspace RowReducer::subspace() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
    Mat basis(rows_.size(), ambient_);
    std::vector<std::size_t> pivots;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (const auto& e : rows_[order[k]]) basis(k, e.first) = e.second;
        pivots.push_back(pivot_[order[k]]);
    }
    return Subspace::from_reduced(std::move(basis), std::move(pivots));
}

Cokernel quotient(const Subspace& image) {
    const std::size_t n = image.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : image.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t t = 0; t < n; ++t)
        if (!is_pivot[t]) free.push_back(t);

    Cokernel c{Mat(free.size(), n), Mat(n, free.size())};
    for (std::size_t u = 0; u < free.size(); ++u) {
        c.proj(u, free[u]) = 1;
        c.sect(free[u], u) = 1;
        for (std::size_t k = 0; k < image.pivots().size(); ++k) c.proj(u, image.pivots()[k]) = -image.basis()(k, free[u]);
    }
    return c;
}

}  // namespace alg2
