#pragma once

#include "qglue/field.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace qglue {

// Dense row-major matrix over a single Field. Rational entries live in q_,
// residues in r_; exactly one of the two is populated.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                            std::initializer_list<long> entries);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<long>>& rows);
    static Matrix from_scalars(const Field& f, std::size_t rows, std::size_t cols,
                               const std::vector<Scalar>& entries);
    static Matrix column(const std::vector<Scalar>& entries, const Field& f);
    static Matrix unit(const Field& f, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    // Uniform over F_p; over Q entries are integers in [-2, 2].
    static Matrix random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return rows_ * cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);
    void set_int(std::size_t i, std::size_t j, long v);
    bool is_zero_at(std::size_t i, std::size_t j) const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    void add_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
    std::vector<Scalar> entries() const;
    Matrix converted(const Field& target) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::vector<mpq_class>& rational_data() { return q_; }
    const std::vector<mpq_class>& rational_data() const { return q_; }
    std::vector<std::uint64_t>& residue_data() { return r_; }
    const std::vector<std::uint64_t>& residue_data() const { return r_; }

    std::string to_string() const;

private:
    void check_same(const Matrix& o) const;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> q_;
    std::vector<std::uint64_t> r_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace qglue
