#pragma once

#include "qglue/linalg.hpp"
#include "qglue/quiver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qglue {

class Representation {
public:
    Representation() = default;
    // All maps zero.
    Representation(Quiver q, Field f, DimVector dims);
    Representation(Quiver q, Field f, DimVector dims, std::vector<Matrix> maps);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const DimVector& dims() const { return dims_; }
    std::size_t dim(std::size_t q) const { return static_cast<std::size_t>(dims_.at(q)); }
    std::size_t total_dim() const;
    const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
    const std::vector<Matrix>& maps() const { return maps_; }
    void set_map(std::size_t arrow, const Matrix& m);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.quiver_ == b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
    }

private:
    void check_map(std::size_t arrow, const Matrix& m) const;

    Quiver quiver_;
    Field field_;
    DimVector dims_;
    std::vector<Matrix> maps_;
    std::string name_;
};

// Per-vertex family of linear maps X_q -> Y_q.
struct Morphism {
    std::vector<Matrix> blocks;
    friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Per-arrow family of linear maps X_q -> Y_{q'} for rho : q -> q'.
struct MapBundle {
    std::vector<Matrix> arrows;
    friend bool operator==(const MapBundle&, const MapBundle&) = default;
};

void check_compatible(const Representation& x, const Representation& y);

Representation simple_rep(const Quiver& q, std::size_t vertex, const Field& f);
Representation zero_rep(const Quiver& q, const Field& f);
Representation direct_sum(const Representation& x, const Representation& y);
Representation random_rep(const Quiver& q, const DimVector& a, std::uint64_t prime, std::uint64_t seed);
Representation random_rep(const Quiver& q, const DimVector& a, const Field& f, std::mt19937_64& rng);
Representation converted(const Representation& x, const Field& f);

Morphism zero_morphism(const Representation& x, const Representation& y);
Morphism identity_morphism(const Representation& x);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism operator+(const Morphism& a, const Morphism& b);
Morphism scaled(const Morphism& f, const Scalar& s);
bool is_zero(const Morphism& f);
bool shapes_match(const Representation& x, const Representation& y, const Morphism& f);
bool is_morphism(const Representation& x, const Representation& y, const Morphism& f);
// Block-diagonal matrix on the total space, vertices in declaration order.
Matrix total_matrix(const Morphism& f);

// Columns: vertex blocks Y_q x X_q; rows: arrow blocks Y_{q'} x X_q; column-major inside blocks.
Matrix d_matrix(const Representation& x, const Representation& y);
Matrix vectorize(const Morphism& f);
Matrix vectorize(const MapBundle& g);
Morphism morphism_from_vector(const Representation& x, const Representation& y, const Matrix& v);
MapBundle bundle_from_vector(const Representation& x, const Representation& y, const Matrix& v);
MapBundle boundary(const Representation& x, const Representation& y, const Morphism& f);
MapBundle zero_bundle(const Representation& x, const Representation& y);
MapBundle elementary_bundle(const Representation& x, const Representation& y, std::size_t arrow,
                            std::size_t row, std::size_t col);
bool shapes_match(const Representation& x, const Representation& y, const MapBundle& g);

std::vector<Morphism> hom_space(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);
std::size_t ext_dim(const Representation& x, const Representation& y);
Representation ext_middle_term(const Representation& x, const Representation& y, const MapBundle& g);
bool same_ext_class(const Representation& x, const Representation& y, const MapBundle& g, const MapBundle& h);

// Subrepresentation spanned by per-vertex column bases; throws if the subspaces are not invariant.
Representation restrict_to(const Representation& x, const std::vector<Matrix>& bases);
// X'_rho = P_{q'}^{-1} X_rho P_q
Representation change_basis(const Representation& x, const std::vector<Matrix>& p);

}  // namespace qglue
