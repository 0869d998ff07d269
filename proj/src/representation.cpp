#include "qglue/representation.hpp"

#include <stdexcept>

namespace qglue {

Representation::Representation(Quiver q, Field f, DimVector dims)
    : quiver_(std::move(q)), field_(f), dims_(std::move(dims)) {
    if (dims_.size() != quiver_.vertex_count()) throw std::invalid_argument("dimension vector length mismatch");
    for (long d : dims_)
        if (d < 0) throw std::invalid_argument("negative dimension in " + to_string(dims_));
    for (const auto& a : quiver_.arrows()) maps_.emplace_back(field_, dim(a.target), dim(a.source));
}

Representation::Representation(Quiver q, Field f, DimVector dims, std::vector<Matrix> maps)
    : Representation(std::move(q), f, std::move(dims)) {
    if (maps.size() != maps_.size()) throw std::invalid_argument("wrong number of arrow matrices");
    for (std::size_t i = 0; i < maps.size(); ++i) set_map(i, maps[i]);
}

std::size_t Representation::total_dim() const {
    return static_cast<std::size_t>(total_dimension(dims_));
}

void Representation::check_map(std::size_t arrow, const Matrix& m) const {
    const Arrow& a = quiver_.arrow(arrow);
    if (!(m.field() == field_)) throw FieldMismatch();
    if (m.rows() != dim(a.target) || m.cols() != dim(a.source)) {
        throw std::invalid_argument("map for arrow '" + a.name + "' must be " + std::to_string(dim(a.target)) + "x" +
                                    std::to_string(dim(a.source)) + ", got " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    }
}

void Representation::set_map(std::size_t arrow, const Matrix& m) {
    check_map(arrow, m);
    maps_[arrow] = m;
}

void check_compatible(const Representation& x, const Representation& y) {
    if (!(x.field() == y.field())) throw FieldMismatch();
    if (!(x.quiver() == y.quiver())) throw std::invalid_argument("representations live on different quivers");
}

Representation simple_rep(const Quiver& q, std::size_t vertex, const Field& f) {
    return Representation(q, f, unit_vector(q, vertex));
}

Representation zero_rep(const Quiver& q, const Field& f) {
    return Representation(q, f, DimVector(q.vertex_count(), 0));
}

Representation direct_sum(const Representation& x, const Representation& y) {
    check_compatible(x, y);
    Representation s(x.quiver(), x.field(), x.dims() + y.dims());
    for (std::size_t i = 0; i < x.quiver().arrow_count(); ++i) s.set_map(i, direct_sum(x.map(i), y.map(i)));
    return s;
}

Representation random_rep(const Quiver& q, const DimVector& a, const Field& f, std::mt19937_64& rng) {
    Representation r(q, f, a);
    for (std::size_t i = 0; i < q.arrow_count(); ++i) {
        const Arrow& ar = q.arrow(i);
        r.set_map(i, Matrix::random(f, r.dim(ar.target), r.dim(ar.source), rng));
    }
    return r;
}

Representation random_rep(const Quiver& q, const DimVector& a, std::uint64_t prime, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_rep(q, a, Field::prime(prime), rng);
}

Representation converted(const Representation& x, const Field& f) {
    std::vector<Matrix> maps;
    for (const auto& m : x.maps()) maps.push_back(m.converted(f));
    Representation r(x.quiver(), f, x.dims(), maps);
    r.set_name(x.name());
    return r;
}

Morphism zero_morphism(const Representation& x, const Representation& y) {
    check_compatible(x, y);
    Morphism f;
    for (std::size_t q = 0; q < x.quiver().vertex_count(); ++q) f.blocks.emplace_back(x.field(), y.dim(q), x.dim(q));
    return f;
}

Morphism identity_morphism(const Representation& x) {
    Morphism f;
    for (std::size_t q = 0; q < x.quiver().vertex_count(); ++q) f.blocks.push_back(Matrix::identity(x.field(), x.dim(q)));
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (g.blocks.size() != f.blocks.size()) throw std::invalid_argument("morphisms over different quivers");
    Morphism h;
    for (std::size_t q = 0; q < f.blocks.size(); ++q) h.blocks.push_back(g.blocks[q] * f.blocks[q]);
    return h;
}

Morphism operator+(const Morphism& a, const Morphism& b) {
    if (a.blocks.size() != b.blocks.size()) throw std::invalid_argument("morphisms over different quivers");
    Morphism h;
    for (std::size_t q = 0; q < a.blocks.size(); ++q) h.blocks.push_back(a.blocks[q] + b.blocks[q]);
    return h;
}

Morphism scaled(const Morphism& f, const Scalar& s) {
    Morphism h;
    for (const auto& b : f.blocks) h.blocks.push_back(b.scaled(s));
    return h;
}

bool is_zero(const Morphism& f) {
    for (const auto& b : f.blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool shapes_match(const Representation& x, const Representation& y, const Morphism& f) {
    if (f.blocks.size() != x.quiver().vertex_count()) return false;
    for (std::size_t q = 0; q < f.blocks.size(); ++q) {
        const Matrix& b = f.blocks[q];
        if (!(b.field() == x.field()) || b.rows() != y.dim(q) || b.cols() != x.dim(q)) return false;
    }
    return true;
}

bool is_morphism(const Representation& x, const Representation& y, const Morphism& f) {
    check_compatible(x, y);
    if (!shapes_match(x, y, f)) return false;
    for (std::size_t i = 0; i < x.quiver().arrow_count(); ++i) {
        const Arrow& a = x.quiver().arrow(i);
        if (!(y.map(i) * f.blocks[a.source] == f.blocks[a.target] * x.map(i))) return false;
    }
    return true;
}

Matrix total_matrix(const Morphism& f) {
    std::size_t r = 0, c = 0;
    for (const auto& b : f.blocks) {
        r += b.rows();
        c += b.cols();
    }
    Field fld = f.blocks.empty() ? Field() : f.blocks.front().field();
    Matrix m(fld, r, c);
    r = c = 0;
    for (const auto& b : f.blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

namespace {

std::vector<std::size_t> vertex_offsets(const Representation& x, const Representation& y) {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (std::size_t q = 0; q < x.quiver().vertex_count(); ++q) {
        off.push_back(o);
        o += y.dim(q) * x.dim(q);
    }
    off.push_back(o);
    return off;
}

std::vector<std::size_t> arrow_offsets(const Representation& x, const Representation& y) {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (const auto& a : x.quiver().arrows()) {
        off.push_back(o);
        o += y.dim(a.target) * x.dim(a.source);
    }
    off.push_back(o);
    return off;
}

void write_blocks(const std::vector<Matrix>& blocks, const std::vector<std::size_t>& off, Matrix& v) {
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const Matrix& b = blocks[k];
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t r = 0; r < b.rows(); ++r)
                if (!b.is_zero_at(r, c)) v.set(off[k] + c * b.rows() + r, 0, b.at(r, c));
    }
}

Matrix read_block(const Matrix& v, std::size_t off, std::size_t rows, std::size_t cols) {
    Matrix b(v.field(), rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if (!v.is_zero_at(off + c * rows + r, 0)) b.set(r, c, v.at(off + c * rows + r, 0));
    return b;
}

}  // namespace

Matrix d_matrix(const Representation& x, const Representation& y) {
    check_compatible(x, y);
    const Quiver& q = x.quiver();
    auto voff = vertex_offsets(x, y);
    auto aoff = arrow_offsets(x, y);
    Matrix d(x.field(), aoff.back(), voff.back());
    for (std::size_t i = 0; i < q.arrow_count(); ++i) {
        const Arrow& a = q.arrow(i);
        std::size_t s = a.source, t = a.target;
        std::size_t rows_blk = y.dim(t);  // arrow block is y_t x x_s
        const Matrix& Y = y.map(i);       // y_t x y_s
        const Matrix& X = x.map(i);       // x_t x x_s
        // + Y_rho f_s : f_s entry (r, c) feeds arrow entry (i', c) with coefficient Y[i'][r]
        for (std::size_t c = 0; c < x.dim(s); ++c)
            for (std::size_t r = 0; r < y.dim(s); ++r)
                for (std::size_t ip = 0; ip < rows_blk; ++ip) {
                    if (Y.is_zero_at(ip, r)) continue;
                    std::size_t row = aoff[i] + c * rows_blk + ip;
                    std::size_t col = voff[s] + c * y.dim(s) + r;
                    d.set(row, col, d.at(row, col) + Y.at(ip, r));
                }
        // - f_t X_rho : f_t entry (r, c) feeds arrow entry (r, j) with coefficient X[c][j]
        for (std::size_t c = 0; c < x.dim(t); ++c)
            for (std::size_t r = 0; r < y.dim(t); ++r)
                for (std::size_t j = 0; j < x.dim(s); ++j) {
                    if (X.is_zero_at(c, j)) continue;
                    std::size_t row = aoff[i] + j * rows_blk + r;
                    std::size_t col = voff[t] + c * y.dim(t) + r;
                    d.set(row, col, d.at(row, col) - X.at(c, j));
                }
    }
    return d;
}

Matrix vectorize(const Morphism& f) {
    std::size_t n = 0;
    std::vector<std::size_t> off;
    for (const auto& b : f.blocks) {
        off.push_back(n);
        n += b.size();
    }
    Field fld = f.blocks.empty() ? Field() : f.blocks.front().field();
    Matrix v(fld, n, 1);
    write_blocks(f.blocks, off, v);
    return v;
}

Matrix vectorize(const MapBundle& g) {
    return vectorize(Morphism{g.arrows});
}

Morphism morphism_from_vector(const Representation& x, const Representation& y, const Matrix& v) {
    auto off = vertex_offsets(x, y);
    if (v.rows() != off.back() || v.cols() != 1) throw std::invalid_argument("morphism vector length mismatch");
    Morphism f;
    for (std::size_t q = 0; q < x.quiver().vertex_count(); ++q) f.blocks.push_back(read_block(v, off[q], y.dim(q), x.dim(q)));
    return f;
}

MapBundle bundle_from_vector(const Representation& x, const Representation& y, const Matrix& v) {
    auto off = arrow_offsets(x, y);
    if (v.rows() != off.back() || v.cols() != 1) throw std::invalid_argument("bundle vector length mismatch");
    MapBundle g;
    for (std::size_t i = 0; i < x.quiver().arrow_count(); ++i) {
        const Arrow& a = x.quiver().arrow(i);
        g.arrows.push_back(read_block(v, off[i], y.dim(a.target), x.dim(a.source)));
    }
    return g;
}

MapBundle boundary(const Representation& x, const Representation& y, const Morphism& f) {
    check_compatible(x, y);
    if (!shapes_match(x, y, f)) throw std::invalid_argument("morphism shape mismatch");
    MapBundle g;
    for (std::size_t i = 0; i < x.quiver().arrow_count(); ++i) {
        const Arrow& a = x.quiver().arrow(i);
        g.arrows.push_back(y.map(i) * f.blocks[a.source] - f.blocks[a.target] * x.map(i));
    }
    return g;
}

MapBundle zero_bundle(const Representation& x, const Representation& y) {
    check_compatible(x, y);
    MapBundle g;
    for (const auto& a : x.quiver().arrows()) g.arrows.emplace_back(x.field(), y.dim(a.target), x.dim(a.source));
    return g;
}

MapBundle elementary_bundle(const Representation& x, const Representation& y, std::size_t arrow,
                            std::size_t row, std::size_t col) {
    MapBundle g = zero_bundle(x, y);
    Matrix& m = g.arrows.at(arrow);
    if (row >= m.rows() || col >= m.cols()) {
        throw std::invalid_argument("coordinate (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                                    ") outside the " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    " block of arrow '" + x.quiver().arrow(arrow).name + "'");
    }
    m.set_int(row, col, 1);
    return g;
}

bool shapes_match(const Representation& x, const Representation& y, const MapBundle& g) {
    if (g.arrows.size() != x.quiver().arrow_count()) return false;
    for (std::size_t i = 0; i < g.arrows.size(); ++i) {
        const Arrow& a = x.quiver().arrow(i);
        const Matrix& m = g.arrows[i];
        if (!(m.field() == x.field()) || m.rows() != y.dim(a.target) || m.cols() != x.dim(a.source)) return false;
    }
    return true;
}

std::vector<Morphism> hom_space(const Representation& x, const Representation& y) {
    Matrix k = kernel_basis(d_matrix(x, y));
    std::vector<Morphism> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(morphism_from_vector(x, y, k.col(j)));
    return out;
}

std::size_t hom_dim(const Representation& x, const Representation& y) {
    Matrix d = d_matrix(x, y);
    return d.cols() - rank(d);
}

std::size_t ext_dim(const Representation& x, const Representation& y) {
    Matrix d = d_matrix(x, y);
    return d.rows() - rank(d);
}

Representation ext_middle_term(const Representation& x, const Representation& y, const MapBundle& g) {
    check_compatible(x, y);
    if (!shapes_match(x, y, g)) throw std::invalid_argument("map bundle shape mismatch");
    Representation e(x.quiver(), x.field(), y.dims() + x.dims());
    for (std::size_t i = 0; i < x.quiver().arrow_count(); ++i) {
        const Arrow& a = x.quiver().arrow(i);
        Matrix m(x.field(), e.dim(a.target), e.dim(a.source));
        m.set_block(0, 0, y.map(i));
        m.set_block(0, y.dim(a.source), g.arrows[i]);
        m.set_block(y.dim(a.target), y.dim(a.source), x.map(i));
        e.set_map(i, m);
    }
    return e;
}

bool same_ext_class(const Representation& x, const Representation& y, const MapBundle& g, const MapBundle& h) {
    if (!shapes_match(x, y, g) || !shapes_match(x, y, h)) throw std::invalid_argument("map bundle shape mismatch");
    Matrix diff = vectorize(g) - vectorize(h);
    return solve(d_matrix(x, y), diff).has_value();
}

Representation restrict_to(const Representation& x, const std::vector<Matrix>& bases) {
    const Quiver& q = x.quiver();
    if (bases.size() != q.vertex_count()) throw std::invalid_argument("one basis per vertex expected");
    DimVector dims;
    for (std::size_t v = 0; v < bases.size(); ++v) {
        if (bases[v].rows() != x.dim(v)) throw std::invalid_argument("basis has wrong ambient dimension");
        dims.push_back(static_cast<long>(bases[v].cols()));
    }
    Representation s(q, x.field(), dims);
    for (std::size_t i = 0; i < q.arrow_count(); ++i) {
        const Arrow& a = q.arrow(i);
        Matrix img = x.map(i) * bases[a.source];
        auto coords = solve(bases[a.target], img);
        if (!coords) throw std::invalid_argument("subspaces are not invariant under arrow '" + a.name + "'");
        s.set_map(i, *coords);
    }
    return s;
}

Representation change_basis(const Representation& x, const std::vector<Matrix>& p) {
    const Quiver& q = x.quiver();
    if (p.size() != q.vertex_count()) throw std::invalid_argument("one basis per vertex expected");
    std::vector<Matrix> inv;
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (p[v].rows() != x.dim(v) || !is_invertible(p[v])) {
            throw std::invalid_argument("basis change at vertex '" + q.vertex(v) + "' is not invertible");
        }
        inv.push_back(inverse(p[v]));
    }
    Representation r(q, x.field(), x.dims());
    for (std::size_t i = 0; i < q.arrow_count(); ++i) {
        const Arrow& a = q.arrow(i);
        r.set_map(i, inv[a.target] * x.map(i) * p[a.source]);
    }
    return r;
}

}  // namespace qglue
