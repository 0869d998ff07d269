#pragma once

#include "qglue/io.hpp"
#include "qglue/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qglue {

struct CoefficientVertex {
    std::size_t vertex;  // vertex of Q
    std::size_t index;   // position in the basis of X_vertex
};

struct CoefficientArrow {
    std::size_t arrow;
    std::size_t source;  // indices into CoefficientQuiver::vertices
    std::size_t target;
    Scalar value;
};

struct CoefficientQuiver {
    std::vector<CoefficientVertex> vertices;
    std::vector<CoefficientArrow> arrows;
};

// basis[q] holds the chosen basis of X_q as columns; an empty list means the standard bases.
CoefficientQuiver coefficient_quiver(const Representation& x, const std::vector<Matrix>& basis = {});
std::size_t arrow_count(const Representation& x, const std::vector<Matrix>& basis = {});
bool is_tree(const CoefficientQuiver& c);
bool is_tree_basis(const Representation& x, const std::vector<Matrix>& basis = {});
std::string to_dot(const CoefficientQuiver& c, const Representation& x);

Representation push_down(const CoverFragment& f);
// Reads a coefficient quiver back as a cover fragment carrying its coefficients.
CoverFragment fragment_from_coefficients(const CoefficientQuiver& c, const Representation& x);

// A vertexwise invertible morphism X -> Y, searched among random elements of Hom(X,Y).
std::optional<Morphism> isomorphism_certificate(const Representation& x, const Representation& y,
                                                std::uint64_t seed = 0);

}  // namespace qglue
