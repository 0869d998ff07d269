#pragma once

#include "qglue/matrix.hpp"

#include <optional>
#include <vector>

namespace qglue {

struct RowEchelon {
    Matrix reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Columns of the result form a basis of the right null space.
Matrix kernel_basis(const Matrix& a);
std::vector<Matrix> kernel_vectors(const Matrix& a);

// Columns of the result form a basis of the column space (chosen among the columns of a).
Matrix image_basis(const Matrix& a);

// Some x with a*x = b, where b is a column vector (or several columns solved at once).
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

// Incrementally maintained reduced echelon basis of a subspace of k^n.
class SpanTracker {
public:
    SpanTracker(const Field& f, std::size_t n);

    std::size_t dimension() const { return pivots_.size(); }
    std::size_t ambient() const { return n_; }
    // Adds v (a column or row vector of length n); returns false if v was already in the span.
    bool add(const Matrix& v);
    bool contains(const Matrix& v) const;
    void add_columns(const Matrix& a);

private:
    Matrix reduce(const Matrix& v) const;

    Field field_;
    std::size_t n_;
    std::vector<Matrix> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qglue
