#pragma once

#include "qglue/representation.hpp"

#include <optional>
#include <string>

namespace qglue {

struct EndAlgebra {
    std::size_t dim = 0;
    std::vector<Morphism> basis;
    // left[i] is the matrix of left multiplication by basis[i] in basis coordinates;
    // column j holds the coordinates of basis[i] o basis[j].
    std::vector<Matrix> left;
    std::optional<std::size_t> radical_dim;

    Matrix coordinates(const Morphism& f) const;
    Morphism element(const Matrix& coords) const;

    Matrix basis_matrix;  // columns are the vectorized basis morphisms
};

EndAlgebra end_algebra(const Representation& x);
// Dimension of the radical of the trace form tr(L_a L_b); equals the Jacobson radical in characteristic 0
// and for primes exceeding the algebra dimension.
std::size_t trace_radical_dim(const EndAlgebra& e);

enum class Verdict { indecomposable, decomposable, unknown };
std::string to_string(Verdict v);

struct IndecResult {
    Verdict verdict = Verdict::unknown;
    std::optional<Morphism> witness;
    std::size_t end_dim = 0;
    std::size_t radical_dim = 0;
    std::string note;
};

IndecResult indecomposable(const Representation& x, std::uint64_t seed = 0);
bool is_schurian(const Representation& x);

struct Splitting {
    Representation image;
    Representation kernel;
    std::vector<Matrix> base_change;  // [image basis | kernel basis] per vertex
    bool verified = false;
};

bool is_idempotent(const Morphism& e);
bool is_nontrivial_idempotent(const Representation& x, const Morphism& e);
// Splits X along an idempotent endomorphism and checks that the block-diagonal base change reproduces X.
Splitting split_by_idempotent(const Representation& x, const Morphism& e);

// Idempotent built from a coprime factorization of the characteristic polynomial of phi, if one exists.
std::optional<Morphism> idempotent_from_element(const Representation& x, const Morphism& phi);

}  // namespace qglue
