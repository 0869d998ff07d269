#include "qglue/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qglue {

namespace {

struct RationalOps {
    using T = mpq_class;
    bool zero(const T& x) const { return sgn(x) == 0; }
    T inv(const T& x) const { return mpq_class(1) / x; }
    void scale(T& x, const T& s) const { x *= s; }
    void sub_mul(T& y, const T& a, const T& x) const { y -= a * x; }
};

struct ResidueOps {
    using T = std::uint64_t;
    std::uint64_t p;
    bool zero(T x) const { return x == 0; }
    T inv(T x) const { return mod_inv(x, p); }
    void scale(T& x, T s) const { x = mod_mul(x, s, p); }
    void sub_mul(T& y, T a, T x) const { y = mod_sub(y, mod_mul(a, x, p), p); }
};

// Gauss-Jordan on a row-major array, pivoting only within the first `limit` columns.
template <class Ops>
std::vector<std::size_t> gauss_jordan(const Ops& ops, std::vector<typename Ops::T>& a,
                                      std::size_t rows, std::size_t cols, std::size_t limit) {
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && ops.zero(a[pr * cols + c])) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            std::swap_ranges(a.begin() + pr * cols, a.begin() + (pr + 1) * cols, a.begin() + r * cols);
        }
        T s = ops.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) ops.scale(a[r * cols + j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || ops.zero(a[i * cols + c])) continue;
            T f = a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!ops.zero(a[r * cols + j])) ops.sub_mul(a[i * cols + j], f, a[r * cols + j]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::size_t> eliminate(Matrix& m, std::size_t limit) {
    if (m.field().is_rational()) {
        return gauss_jordan(RationalOps{}, m.rational_data(), m.rows(), m.cols(), limit);
    }
    return gauss_jordan(ResidueOps{m.field().modulus()}, m.residue_data(), m.rows(), m.cols(), limit);
}

Matrix as_row(const Matrix& v, std::size_t n) {
    if (v.rows() == 1 && v.cols() == n) return v;
    if (v.cols() == 1 && v.rows() == n) return v.transpose();
    throw std::invalid_argument("vector length mismatch");
}

}  // namespace

RowEchelon rref(const Matrix& a) {
    RowEchelon e{a, {}};
    e.pivots = eliminate(e.reduced, a.cols());
    return e;
}

std::size_t rank(const Matrix& a) {
    if (a.empty()) return 0;
    Matrix m = a;
    return eliminate(m, m.cols()).size();
}

Matrix kernel_basis(const Matrix& a) {
    RowEchelon e = rref(a);
    std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Matrix k(a.field(), n, n - e.pivots.size());
    std::size_t col = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        k.set_int(f, col, 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            if (!e.reduced.is_zero_at(i, f)) k.set(e.pivots[i], col, -e.reduced.at(i, f));
        }
        ++col;
    }
    return k;
}

std::vector<Matrix> kernel_vectors(const Matrix& a) {
    Matrix k = kernel_basis(a);
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(k.col(j));
    return out;
}

Matrix image_basis(const Matrix& a) {
    RowEchelon e = rref(a);
    Matrix out(a.field(), a.rows(), e.pivots.size());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.set_block(0, i, a.col(e.pivots[i]));
    return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    if (b.rows() != a.rows()) throw std::invalid_argument("dimension mismatch in solve");
    std::size_t n = a.cols();
    Matrix aug = hstack({a, b});
    if (a.rows() == 0) return Matrix(a.field(), n, b.cols());
    std::vector<std::size_t> piv = eliminate(aug, n);
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        for (std::size_t j = n; j < aug.cols(); ++j)
            if (!aug.is_zero_at(i, j)) return std::nullopt;
    Matrix x(a.field(), n, b.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(piv[i], j, aug.at(i, n + j));
    return x;
}

bool is_invertible(const Matrix& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    if (a.rows() == 0) return a;
    Matrix aug = hstack({a, Matrix::identity(a.field(), a.rows())});
    std::vector<std::size_t> piv = eliminate(aug, a.cols());
    if (piv.size() != a.rows()) throw std::domain_error("matrix is singular");
    return aug.block(0, a.cols(), a.rows(), a.rows());
}

SpanTracker::SpanTracker(const Field& f, std::size_t n) : field_(f), n_(n) {}

Matrix SpanTracker::reduce(const Matrix& v) const {
    Matrix w = as_row(v, n_);
    if (!(w.field() == field_)) throw FieldMismatch();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = pivots_[i];
        if (w.is_zero_at(0, p)) continue;
        w -= rows_[i].scaled(w.at(0, p));
    }
    return w;
}

bool SpanTracker::contains(const Matrix& v) const {
    return reduce(v).is_zero();
}

bool SpanTracker::add(const Matrix& v) {
    Matrix w = reduce(v);
    for (std::size_t j = 0; j < n_; ++j) {
        if (w.is_zero_at(0, j)) continue;
        rows_.push_back(w.scaled(w.at(0, j).inverse()));
        pivots_.push_back(j);
        return true;
    }
    return false;
}

void SpanTracker::add_columns(const Matrix& a) {
    Matrix basis = image_basis(a);
    for (std::size_t j = 0; j < basis.cols(); ++j) add(basis.col(j));
}

}  // namespace qglue
