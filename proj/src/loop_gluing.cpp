#include "qglue/gluing.hpp"

#include <algorithm>
#include <stdexcept>

namespace qglue {

LoopGluingData build_loop_gluing(const Representation& m, const std::vector<ExtBasisElement>& supplied) {
    if (hom_dim(m, m) != 1) throw std::invalid_argument("the loop functor needs a Schurian representation");
    LoopGluingData l;
    l.M = m;
    if (supplied.empty()) {
        l.basis = tree_shaped_ext_basis(m, m);
    } else {
        l.basis = supplied;
        std::sort(l.basis.begin(), l.basis.end(), [](const auto& u, const auto& v) { return u.label < v.label; });
        if (!is_ext_basis(m, m, l.basis)) throw std::invalid_argument("supplied basis is not a basis of Ext(M, M)");
    }
    for (std::size_t k = 0; k < l.basis.size(); ++k) {
        l.basis[k].source = l.basis[k].target = 0;
        l.basis[k].label = k;
    }
    l.ln = loop_quiver(l.basis.size());
    return l;
}

Representation apply_loop_F(const LoopGluingData& l, const Representation& x) {
    if (x.quiver().arrow_count() != l.basis.size() || x.quiver().vertex_count() != 1) {
        throw std::invalid_argument("expected a representation of L(" + std::to_string(l.basis.size()) + ")");
    }
    if (!(x.field() == l.M.field())) throw FieldMismatch();
    const Quiver& q = l.M.quiver();
    std::size_t n = x.dim(0);
    DimVector dims(q.vertex_count());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = l.M.dims()[v] * static_cast<long>(n);
    Representation out(q, x.field(), dims);
    Matrix id = Matrix::identity(x.field(), n);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        Matrix m = kron(l.M.map(a), id);
        for (std::size_t k = 0; k < l.basis.size(); ++k) {
            const ExtBasisElement& e = l.basis[k];
            if (e.arrow == a) m.add_block(e.row * n, e.col * n, x.map(k));
        }
        out.set_map(a, m);
    }
    return out;
}

Representation loop_scalars(const LoopGluingData& l, const std::vector<long>& values) {
    if (values.size() != l.basis.size()) throw std::invalid_argument("wrong number of loop scalars");
    std::vector<Matrix> maps;
    for (long v : values) maps.push_back(Matrix::from_rows(l.M.field(), {{v}}));
    return Representation(l.ln, l.M.field(), {1}, maps);
}

}  // namespace qglue
