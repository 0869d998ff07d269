#include "qglue/treemod.hpp"
#include "qglue/linalg.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace qglue {

CoefficientQuiver coefficient_quiver(const Representation& x, const std::vector<Matrix>& basis) {
    const Quiver& q = x.quiver();
    std::vector<Matrix> b = basis;
    if (b.empty())
        for (std::size_t v = 0; v < q.vertex_count(); ++v) b.push_back(Matrix::identity(x.field(), x.dim(v)));
    if (b.size() != q.vertex_count()) throw std::invalid_argument("one basis per vertex expected");
    std::vector<Matrix> inv;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        if (b[v].rows() != x.dim(v) || b[v].cols() != x.dim(v) || !is_invertible(b[v]))
            throw std::invalid_argument("basis at vertex " + q.vertex(v) + " is not invertible");
        inv.push_back(inverse(b[v]));
    }
    CoefficientQuiver c;
    std::vector<std::size_t> first(q.vertex_count() + 1, 0);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        first[v + 1] = first[v] + x.dim(v);
        for (std::size_t i = 0; i < x.dim(v); ++i) c.vertices.push_back({v, i});
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix m = inv[ar.target] * x.map(a) * b[ar.source];
        for (std::size_t col = 0; col < m.cols(); ++col)
            for (std::size_t row = 0; row < m.rows(); ++row)
                if (!m.is_zero_at(row, col))
                    c.arrows.push_back({a, first[ar.source] + col, first[ar.target] + row, m.at(row, col)});
    }
    return c;
}

std::size_t arrow_count(const Representation& x, const std::vector<Matrix>& basis) {
    return coefficient_quiver(x, basis).arrows.size();
}

bool is_tree(const CoefficientQuiver& c) {
    std::size_t n = c.vertices.size();
    if (n == 0 || c.arrows.size() + 1 != n) return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::size_t components = n;
    for (const auto& a : c.arrows) {
        std::size_t s = find(a.source), t = find(a.target);
        if (s != t) {
            parent[s] = t;
            --components;
        }
    }
    return components == 1;
}

bool is_tree_basis(const Representation& x, const std::vector<Matrix>& basis) {
    return is_tree(coefficient_quiver(x, basis));
}

std::string to_dot(const CoefficientQuiver& c, const Representation& x) {
    const Quiver& q = x.quiver();
    auto name = [&](std::size_t v) {
        return q.vertex(c.vertices[v].vertex) + "_" + std::to_string(c.vertices[v].index + 1);
    };
    std::ostringstream os;
    os << "digraph coefficients {\n";
    for (std::size_t v = 0; v < c.vertices.size(); ++v) os << "  \"" << name(v) << "\";\n";
    for (const auto& a : c.arrows) {
        os << "  \"" << name(a.source) << "\" -> \"" << name(a.target) << "\" [label=\"" << q.arrow(a.arrow).name
           << " " << a.value.to_string() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

Representation push_down(const CoverFragment& f) {
    const Quiver& q = f.base;
    const Quiver& fq = f.rep.quiver();
    std::vector<std::size_t> label(f.vertices.size()), offset(f.vertices.size());
    DimVector dims(q.vertex_count(), 0);
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        auto v = q.find_vertex(f.vertices[i].base_vertex);
        if (!v) throw std::invalid_argument("fragment vertex " + f.vertices[i].id + " has an unknown label");
        label[i] = *v;
        offset[i] = static_cast<std::size_t>(dims[*v]);
        dims[*v] += static_cast<long>(f.rep.dim(i));
    }
    Representation out(q, f.rep.field(), dims);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        maps.emplace_back(f.rep.field(), out.dim(ar.target), out.dim(ar.source));
    }
    for (std::size_t k = 0; k < f.arrows.size(); ++k) {
        auto a = q.find_arrow(f.arrows[k].base_arrow);
        if (!a) throw std::invalid_argument("fragment arrow " + f.arrows[k].id + " has an unknown label");
        const Arrow& ar = q.arrow(*a);
        const Arrow& fa = fq.arrow(k);
        if (label[fa.source] != ar.source || label[fa.target] != ar.target)
            throw std::invalid_argument("fragment arrow " + f.arrows[k].id + " is inconsistent with its label " +
                                        ar.name);
        maps[*a].add_block(offset[fa.target], offset[fa.source], f.rep.map(k));
    }
    for (std::size_t a = 0; a < maps.size(); ++a) out.set_map(a, maps[a]);
    return out;
}

CoverFragment fragment_from_coefficients(const CoefficientQuiver& c, const Representation& x) {
    const Quiver& q = x.quiver();
    CoverFragment f;
    f.name = "coefficients";
    f.base = q;
    std::vector<std::string> ids;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        std::string id = q.vertex(c.vertices[v].vertex) + "_" + std::to_string(c.vertices[v].index + 1);
        ids.push_back(id);
        f.vertices.push_back({id, q.vertex(c.vertices[v].vertex), "w" + std::to_string(v + 1)});
    }
    Quiver fq(f.name, ids);
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < c.arrows.size(); ++k) {
        const auto& a = c.arrows[k];
        std::string id = "x" + std::to_string(k + 1);
        fq.add_arrow(id, a.source, a.target);
        f.arrows.push_back({id, ids[a.source], ids[a.target], q.arrow(a.arrow).name});
        maps.push_back(Matrix::from_scalars(x.field(), 1, 1, {a.value}));
    }
    f.rep = Representation(fq, x.field(), DimVector(c.vertices.size(), 1), maps);
    return f;
}

std::optional<Morphism> isomorphism_certificate(const Representation& x, const Representation& y,
                                                std::uint64_t seed) {
    if (x.dims() != y.dims()) return std::nullopt;
    auto basis = hom_space(x, y);
    if (basis.empty()) {
        if (x.total_dim() == 0) return zero_morphism(x, y);
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix c = Matrix::random(x.field(), basis.size(), 1, rng);
        Morphism f = zero_morphism(x, y);
        for (std::size_t i = 0; i < basis.size(); ++i) f = f + scaled(basis[i], c.at(i, 0));
        bool ok = true;
        for (const auto& b : f.blocks) ok = ok && is_invertible(b);
        if (ok) return f;
    }
    return std::nullopt;
}

}  // namespace qglue
