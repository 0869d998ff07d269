#include "qglue/gluing.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qglue {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Per-vertex offsets of the blocks (M_i)_q (x) X_{m_i} inside (FX)_q.
std::vector<std::vector<std::size_t>> block_offsets(const GluingData& g, const DimVector& xd) {
    std::size_t nq = g.M.front().quiver().vertex_count();
    std::vector<std::vector<std::size_t>> off(nq, std::vector<std::size_t>(g.M.size() + 1, 0));
    for (std::size_t q = 0; q < nq; ++q)
        for (std::size_t i = 0; i < g.M.size(); ++i)
            off[q][i + 1] = off[q][i] + g.M[i].dim(q) * static_cast<std::size_t>(xd[i]);
    return off;
}

}  // namespace

MapBundle bundle_of(const Representation& x, const Representation& y, const ExtBasisElement& e) {
    return elementary_bundle(x, y, e.arrow, e.row, e.col);
}

std::vector<ExtBasisElement> tree_shaped_ext_basis(const Representation& x, const Representation& y) {
    Matrix d = d_matrix(x, y);
    std::size_t n = d.rows() - rank(d);
    std::vector<ExtBasisElement> out;
    if (n == 0) return out;
    SpanTracker span(x.field(), d.rows());
    span.add_columns(d);
    const Quiver& q = x.quiver();
    for (std::size_t a = 0; a < q.arrow_count() && out.size() < n; ++a) {
        const Arrow& ar = q.arrow(a);
        for (std::size_t r = 0; r < y.dim(ar.target) && out.size() < n; ++r)
            for (std::size_t c = 0; c < x.dim(ar.source) && out.size() < n; ++c) {
                if (span.add(vectorize(elementary_bundle(x, y, a, r, c)))) {
                    ExtBasisElement e;
                    e.label = out.size();
                    e.arrow = a;
                    e.row = r;
                    e.col = c;
                    out.push_back(e);
                }
            }
    }
    return out;
}

bool is_ext_basis(const Representation& x, const Representation& y, const std::vector<ExtBasisElement>& b) {
    Matrix d = d_matrix(x, y);
    if (b.size() != d.rows() - rank(d)) return false;
    SpanTracker span(x.field(), d.rows());
    span.add_columns(d);
    for (const auto& e : b) {
        const Arrow& ar = x.quiver().arrow(e.arrow);
        if (e.row >= y.dim(ar.target) || e.col >= x.dim(ar.source)) return false;
        if (!span.add(vectorize(bundle_of(x, y, e)))) return false;
    }
    return true;
}

std::size_t GluingData::arrows_between(std::size_t i, std::size_t j) const {
    std::size_t n = 0;
    for (const auto& e : basis) n += (e.source == i && e.target == j);
    return n;
}

GluingData build_gluing(const std::vector<Representation>& m, const std::vector<ExtBasisElement>& supplied) {
    if (m.empty()) throw std::invalid_argument("empty sequence");
    for (const auto& x : m) check_compatible(m.front(), x);
    GluingData g;
    g.M = m;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m.size(); ++i) names.push_back("m" + std::to_string(i + 1));
    g.qm = Quiver("Q(M)", names);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ExtBasisElement>> given;
    for (const auto& e : supplied) {
        if (e.source >= m.size() || e.target >= m.size() || e.source == e.target) {
            throw std::invalid_argument("basis element refers to an invalid pair " + pair_text(e.source, e.target));
        }
        given[{e.source, e.target}].push_back(e);
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j) continue;
            std::vector<ExtBasisElement> b;
            auto it = given.find({i, j});
            if (it != given.end()) {
                b = it->second;
                std::sort(b.begin(), b.end(), [](const auto& u, const auto& v) { return u.label < v.label; });
                if (!is_ext_basis(m[i], m[j], b)) {
                    throw std::invalid_argument("supplied basis for pair " + pair_text(i, j) +
                                                " is not a basis of Ext(M_i, M_j)");
                }
            } else {
                b = tree_shaped_ext_basis(m[i], m[j]);
            }
            for (std::size_t l = 0; l < b.size(); ++l) {
                b[l].source = i;
                b[l].target = j;
                b[l].label = l;
                g.qm.add_arrow("chi_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
                                   std::to_string(l + 1),
                               i, j);
                g.basis.push_back(b[l]);
            }
        }
    return g;
}

std::string print_gluing(const GluingData& g) {
    std::ostringstream os;
    os << "quiver " << g.qm.name() << '\n';
    for (const auto& v : g.qm.vertices()) os << "vertex " << v << '\n';
    const Quiver& base = g.M.front().quiver();
    for (std::size_t k = 0; k < g.basis.size(); ++k) {
        const Arrow& a = g.qm.arrow(k);
        os << "arrow " << a.name << ' ' << g.qm.vertex(a.source) << ' ' << g.qm.vertex(a.target) << '\n';
    }
    for (const auto& e : g.basis) {
        os << "extbasis " << e.source + 1 << ' ' << e.target + 1 << ' ' << e.label + 1 << ' '
           << base.arrow(e.arrow).name << ' ' << e.row + 1 << ' ' << e.col + 1 << '\n';
    }
    return os.str();
}

Representation apply_F(const GluingData& g, const Representation& x) {
    if (!(x.quiver() == g.qm)) throw std::invalid_argument("representation is not over Q(M)");
    const Field& f = g.M.front().field();
    if (!(x.field() == f)) throw FieldMismatch();
    const Quiver& q = g.M.front().quiver();
    auto off = block_offsets(g, x.dims());
    DimVector dims(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[v] = static_cast<long>(off[v].back());
    Representation out(q, f, dims);
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix m(f, out.dim(ar.target), out.dim(ar.source));
        for (std::size_t i = 0; i < g.M.size(); ++i) {
            Matrix id = Matrix::identity(f, x.dim(i));
            m.set_block(off[ar.target][i], off[ar.source][i], kron(g.M[i].map(a), id));
        }
        for (std::size_t k = 0; k < g.basis.size(); ++k) {
            const ExtBasisElement& e = g.basis[k];
            if (e.arrow != a) continue;
            std::size_t xi = x.dim(e.source), xj = x.dim(e.target);
            m.add_block(off[ar.target][e.target] + e.row * xj, off[ar.source][e.source] + e.col * xi, x.map(k));
        }
        out.set_map(a, m);
    }
    return out;
}

Morphism apply_F_mor(const GluingData& g, const Representation& x, const Representation& y, const Morphism& f) {
    if (!is_morphism(x, y, f)) throw std::invalid_argument("input is not a morphism of Q(M)-representations");
    const Quiver& q = g.M.front().quiver();
    const Field& fld = g.M.front().field();
    auto ox = block_offsets(g, x.dims());
    auto oy = block_offsets(g, y.dims());
    Morphism out;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        Matrix b(fld, oy[v].back(), ox[v].back());
        for (std::size_t i = 0; i < g.M.size(); ++i)
            b.set_block(oy[v][i], ox[v][i], kron(Matrix::identity(fld, g.M[i].dim(v)), f.blocks[i]));
        out.blocks.push_back(b);
    }
    if (!is_morphism(apply_F(g, x), apply_F(g, y), out)) throw std::logic_error("F(f) does not intertwine");
    return out;
}

}  // namespace qglue
