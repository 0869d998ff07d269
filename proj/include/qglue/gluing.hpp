#pragma once

#include "qglue/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qglue {

// Coordinate bundle E(row, col) on a single arrow, read as a class in Ext(M_source, M_target).
// All indices are 0-based; files and printed output use 1-based numbering.
struct ExtBasisElement {
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t label = 0;
    std::size_t arrow = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    friend bool operator==(const ExtBasisElement&, const ExtBasisElement&) = default;
};

MapBundle bundle_of(const Representation& x, const Representation& y, const ExtBasisElement& e);

// Greedy choice in (arrow, row, col) order of coordinate bundles independent modulo Im(d_{X,Y}).
std::vector<ExtBasisElement> tree_shaped_ext_basis(const Representation& x, const Representation& y);
bool is_ext_basis(const Representation& x, const Representation& y, const std::vector<ExtBasisElement>& b);

struct GluingData {
    std::vector<Representation> M;
    // basis[k] is the element behind arrow k of qm
    std::vector<ExtBasisElement> basis;
    Quiver qm;

    std::size_t arrows_between(std::size_t i, std::size_t j) const;
};

// Missing pairs are filled with tree_shaped_ext_basis; supplied pairs must form a basis.
GluingData build_gluing(const std::vector<Representation>& m,
                        const std::vector<ExtBasisElement>& supplied = {});
std::string print_gluing(const GluingData& g);

Representation apply_F(const GluingData& g, const Representation& x);
Morphism apply_F_mor(const GluingData& g, const Representation& x, const Representation& y, const Morphism& f);

struct ConditionReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;
    bool passed() const;
    std::string to_string() const;
};

ConditionReport check_elementary(const std::vector<Representation>& m);

struct GluingConditionReport : ConditionReport {
    bool cond1 = false, cond2 = false, cond3 = false;
    bool theta_a = false, theta_b = false, theta_c = false, theta_d = false;
};

GluingConditionReport check_gluing_conditions(const std::vector<Representation>& m);
// Variant allowing Hom(M_r, M_i): evaluated on the reversed sequence over the opposite quiver.
GluingConditionReport check_gluing_conditions_dual(const std::vector<Representation>& m);
Representation opposite_rep(const Representation& x);

struct ThetaCheck {
    bool iso = false;
    std::size_t source_dim = 0;  // sum of n_{i1} * dim X_{m_i}
    std::size_t image_rank = 0;
    std::size_t ext_dim = 0;     // dim Ext(FX_2, M_1)
};

ThetaCheck check_theta_iso(const GluingData& g, const Representation& x);

struct LoopGluingData {
    Representation M;
    std::vector<ExtBasisElement> basis;
    Quiver ln;
};

LoopGluingData build_loop_gluing(const Representation& m, const std::vector<ExtBasisElement>& supplied = {});
Representation apply_loop_F(const LoopGluingData& l, const Representation& x);
// Representation of L(n) with X_m = k and the given loop scalars.
Representation loop_scalars(const LoopGluingData& l, const std::vector<long>& values);

}  // namespace qglue
