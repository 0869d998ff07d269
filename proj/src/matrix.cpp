#include "qglue/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qglue {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (f.is_rational()) q_.assign(rows * cols, mpq_class(0));
    else r_.assign(rows * cols, 0);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(const Field& f, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries) {
    if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    Matrix m(f, rows, cols);
    std::size_t k = 0;
    for (long v : entries) {
        m.set_int(k / cols, k % cols, v);
        ++k;
    }
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_scalars(const Field& f, std::size_t rows, std::size_t cols,
                            const std::vector<Scalar>& entries) {
    if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.set(k / cols, k % cols, entries[k]);
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries, const Field& f) {
    return from_scalars(f, entries.size(), 1, entries);
}

Matrix Matrix::unit(const Field& f, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(f, rows, cols);
    m.set_int(i, j, 1);
    return m;
}

Matrix Matrix::random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    if (f.is_rational()) {
        std::uniform_int_distribution<long> small(-2, 2);
        for (auto& x : m.q_) x = small(rng);
        return m;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    for (auto& x : m.r_) x = dist(rng);
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return field_.is_rational() ? Scalar(field_, q_[i * cols_ + j])
                                : Scalar::residue(field_, r_[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    if (!(v.field() == field_)) throw FieldMismatch();
    if (field_.is_rational()) q_[i * cols_ + j] = v.rational();
    else r_[i * cols_ + j] = v.residue();
}

void Matrix::set_int(std::size_t i, std::size_t j, long v) {
    set(i, j, Scalar(field_, v));
}

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const {
    return field_.is_rational() ? sgn(q_[i * cols_ + j]) == 0 : r_[i * cols_ + j] == 0;
}

bool Matrix::is_zero() const {
    if (field_.is_rational()) {
        for (const auto& x : q_)
            if (sgn(x) != 0) return false;
    } else {
        for (auto x : r_)
            if (x != 0) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Scalar v = at(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.is_rational()) t.q_[j * rows_ + i] = q_[i * cols_ + j];
            else t.r_[j * rows_ + i] = r_[i * cols_ + j];
        }
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            if (field_.is_rational()) b.q_[i * nc + j] = q_[(r0 + i) * cols_ + c0 + j];
            else b.r_[i * nc + j] = r_[(r0 + i) * cols_ + c0 + j];
        }
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (!(b.field_ == field_)) throw FieldMismatch();
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            if (field_.is_rational()) q_[(r0 + i) * cols_ + c0 + j] = b.q_[i * b.cols_ + j];
            else r_[(r0 + i) * cols_ + c0 + j] = b.r_[i * b.cols_ + j];
        }
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (!(b.field_ == field_)) throw FieldMismatch();
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block out of range");
    std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            std::size_t k = (r0 + i) * cols_ + c0 + j;
            if (field_.is_rational()) q_[k] += b.q_[i * b.cols_ + j];
            else r_[k] = mod_add(r_[k], b.r_[i * b.cols_ + j], p);
        }
}

std::vector<Scalar> Matrix::entries() const {
    std::vector<Scalar> out;
    out.reserve(size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

Matrix Matrix::converted(const Field& target) const {
    if (target == field_) return *this;
    if (!field_.is_rational()) throw std::invalid_argument("only rational matrices can be reduced");
    Matrix m(target, rows_, cols_);
    for (std::size_t k = 0; k < size(); ++k) {
        if (target.is_rational()) m.q_[k] = q_[k];
        else m.r_[k] = reduce_rational(q_[k], target.modulus());
    }
    return m;
}

void Matrix::check_same(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
}

Matrix& Matrix::operator+=(const Matrix& o) {
    check_same(o);
    if (field_.is_rational()) {
        for (std::size_t k = 0; k < q_.size(); ++k) q_[k] += o.q_[k];
    } else {
        for (std::size_t k = 0; k < r_.size(); ++k) r_[k] = mod_add(r_[k], o.r_[k], field_.modulus());
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    check_same(o);
    if (field_.is_rational()) {
        for (std::size_t k = 0; k < q_.size(); ++k) q_[k] -= o.q_[k];
    } else {
        for (std::size_t k = 0; k < r_.size(); ++k) r_[k] = mod_sub(r_[k], o.r_[k], field_.modulus());
    }
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix z(field_, rows_, cols_);
    return z -= *this;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (!(s.field() == field_)) throw FieldMismatch();
    Matrix m = *this;
    if (field_.is_rational()) {
        for (auto& x : m.q_) x *= s.rational();
    } else {
        for (auto& x : m.r_) x = mod_mul(x, s.residue(), field_.modulus());
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    if (a.field_.is_rational()) {
        mpq_class t;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const mpq_class& x = a.q_[i * a.cols_ + k];
                if (sgn(x) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const mpq_class& y = b.q_[k * b.cols_ + j];
                    if (sgn(y) == 0) continue;
                    t = x * y;
                    c.q_[i * b.cols_ + j] += t;
                }
            }
    } else {
        std::uint64_t p = a.field_.modulus();
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                std::uint64_t x = a.r_[i * a.cols_ + k];
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    std::uint64_t& z = c.r_[i * b.cols_ + j];
                    z = (z + x * b.r_[k * b.cols_ + j]) % p;
                }
            }
    }
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ && a.r_ == b.r_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.is_zero_at(i, j)) continue;
            k.set_block(i * b.rows(), j * b.cols(), b.scaled(a.at(i, j)));
        }
    return k;
}

Matrix hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) return Matrix();
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != parts.front().rows()) throw std::invalid_argument("hstack row mismatch");
        cols += p.cols();
    }
    Matrix m(parts.front().field(), parts.front().rows(), cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        m.set_block(0, c, p);
        c += p.cols();
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) return Matrix();
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != parts.front().cols()) throw std::invalid_argument("vstack column mismatch");
        rows += p.rows();
    }
    Matrix m(parts.front().field(), rows, parts.front().cols());
    std::size_t r = 0;
    for (const auto& p : parts) {
        m.set_block(r, 0, p);
        r += p.rows();
    }
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Scalar trace(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace of a non-square matrix");
    Scalar t(a.field(), 0L);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m.at(i, j).to_string();
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace qglue
