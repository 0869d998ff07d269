#include "qglue/endomorphism.hpp"

#include "qglue/polynomial.hpp"

#include <random>
#include <stdexcept>

namespace qglue {

Matrix EndAlgebra::coordinates(const Morphism& f) const {
    auto c = solve(basis_matrix, vectorize(f));
    if (!c) throw std::invalid_argument("morphism is not an endomorphism");
    return *c;
}

Morphism EndAlgebra::element(const Matrix& coords) const {
    if (coords.rows() != dim) throw std::invalid_argument("coordinate vector length mismatch");
    Morphism f = basis.empty() ? Morphism{} : scaled(basis[0], coords.at(0, 0));
    for (std::size_t i = 1; i < dim; ++i) f = f + scaled(basis[i], coords.at(i, 0));
    return f;
}

EndAlgebra end_algebra(const Representation& x) {
    EndAlgebra e;
    Matrix d = d_matrix(x, x);
    e.basis_matrix = kernel_basis(d);
    e.dim = e.basis_matrix.cols();
    for (std::size_t j = 0; j < e.dim; ++j) e.basis.push_back(morphism_from_vector(x, x, e.basis_matrix.col(j)));
    for (std::size_t i = 0; i < e.dim; ++i) {
        Matrix products(x.field(), e.basis_matrix.rows(), e.dim);
        for (std::size_t j = 0; j < e.dim; ++j) products.set_block(0, j, vectorize(compose(e.basis[i], e.basis[j])));
        auto l = solve(e.basis_matrix, products);
        if (!l) throw std::logic_error("endomorphisms are not closed under composition");
        e.left.push_back(*l);
    }
    if (x.field().is_rational()) e.radical_dim = trace_radical_dim(e);
    return e;
}

std::size_t trace_radical_dim(const EndAlgebra& e) {
    if (e.dim == 0) return 0;
    const Field& f = e.left.front().field();
    Matrix t(f, e.dim, e.dim);
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t j = i; j < e.dim; ++j) {
            Scalar v = trace(e.left[i] * e.left[j]);
            t.set(i, j, v);
            t.set(j, i, v);
        }
    return e.dim - rank(t);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::indecomposable: return "indecomposable";
        case Verdict::decomposable: return "decomposable";
        default: return "unknown";
    }
}

bool is_schurian(const Representation& x) {
    return hom_dim(x, x) == 1;
}

bool is_idempotent(const Morphism& e) {
    return compose(e, e) == e;
}

bool is_nontrivial_idempotent(const Representation& x, const Morphism& e) {
    return is_morphism(x, x, e) && is_idempotent(e) && !is_zero(e) && !(e == identity_morphism(x));
}

Splitting split_by_idempotent(const Representation& x, const Morphism& e) {
    Splitting s;
    if (!is_morphism(x, x, e) || !is_idempotent(e)) return s;
    std::vector<Matrix> im, ker;
    Morphism comp = identity_morphism(x) + scaled(e, Scalar(x.field(), -1L));
    for (std::size_t q = 0; q < x.quiver().vertex_count(); ++q) {
        im.push_back(image_basis(e.blocks[q]));
        ker.push_back(image_basis(comp.blocks[q]));
        Matrix p(x.field(), x.dim(q), x.dim(q));
        p.set_block(0, 0, im.back());
        p.set_block(0, im.back().cols(), ker.back());
        s.base_change.push_back(p);
    }
    s.image = restrict_to(x, im);
    s.kernel = restrict_to(x, ker);
    for (const auto& p : s.base_change)
        if (!is_invertible(p)) return s;
    s.verified = change_basis(x, s.base_change) == direct_sum(s.image, s.kernel);
    return s;
}

std::optional<Morphism> idempotent_from_element(const Representation& x, const Morphism& phi) {
    Matrix m = total_matrix(phi);
    if (m.rows() == 0) return std::nullopt;
    const Field& f = x.field();
    Polynomial cp = characteristic_polynomial(m);
    auto sq = squarefree_decomposition(cp);
    std::optional<Polynomial> a;
    auto power = [](const Polynomial& p, int k) {
        Polynomial r = Polynomial::constant(Scalar(p.field(), 1L));
        for (int i = 0; i < k; ++i) r = r * p;
        return r;
    };
    if (sq.size() >= 2) {
        a = power(sq[0].first, sq[0].second);
    } else if (sq.size() == 1 && sq[0].first.degree() > 1) {
        if (f.is_rational()) {
            auto roots = rational_roots(sq[0].first);
            if (!roots.empty()) a = power(Polynomial::linear_root(Scalar(f, roots.front())), sq[0].second);
        } else {
            auto roots = roots_mod_p(sq[0].first);
            if (!roots.empty()) a = power(Polynomial::linear_root(Scalar::residue(f, roots.front())), sq[0].second);
        }
    }
    if (!a) return std::nullopt;
    Polynomial b = cp.monic() / *a;
    Bezout bz = extended_gcd(*a, b);
    if (bz.g.degree() != 0) return std::nullopt;
    Polynomial ua = bz.u * *a;
    Morphism e;
    for (const auto& blk : phi.blocks) e.blocks.push_back(ua.evaluate(blk));
    if (!is_nontrivial_idempotent(x, e)) return std::nullopt;
    return e;
}

IndecResult indecomposable(const Representation& x, std::uint64_t seed) {
    IndecResult r;
    if (!x.field().is_rational()) {
        r.note = "indecomposability verdicts require the rationals";
        return r;
    }
    if (x.total_dim() == 0) {
        r.note = "zero representation";
        return r;
    }
    EndAlgebra e = end_algebra(x);
    r.end_dim = e.dim;
    r.radical_dim = *e.radical_dim;
    if (e.dim - *e.radical_dim == 1) {
        r.verdict = Verdict::indecomposable;
        return r;
    }
    r.verdict = Verdict::decomposable;
    std::vector<Morphism> candidates = e.basis;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int t = 0; t < 32; ++t) {
        Matrix c(x.field(), e.dim, 1);
        for (std::size_t i = 0; i < e.dim; ++i) c.set_int(i, 0, coef(rng));
        candidates.push_back(e.element(c));
    }
    for (const auto& phi : candidates) {
        if (auto w = idempotent_from_element(x, phi)) {
            r.witness = *w;
            return r;
        }
    }
    r.note = "no witness idempotent found";
    return r;
}

}  // namespace qglue
