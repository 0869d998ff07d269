#include "qglue/decompose.hpp"
#include "qglue/linalg.hpp"

#include <functional>

namespace qglue {

namespace {

// Calls f on every non-negative vector of length n with entry sum t until f returns true.
bool for_each_composition(std::size_t n, long t, const std::function<bool(const DimVector&)>& f) {
    DimVector v(n, 0);
    std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i + 1 == n) {
            v[i] = left;
            return f(v);
        }
        for (long x = left; x >= 0; --x) {
            v[i] = x;
            if (rec(i + 1, left - x)) return true;
        }
        return false;
    };
    return n > 0 && rec(0, t);
}

}  // namespace

std::optional<std::vector<long>> integer_coordinates(const std::vector<DimVector>& v, const DimVector& a) {
    Field Q = Field::rationals();
    if (v.empty()) {
        for (long x : a)
            if (x != 0) return std::nullopt;
        return std::vector<long>{};
    }
    Matrix m(Q, a.size(), v.size());
    Matrix b(Q, a.size(), 1);
    for (std::size_t r = 0; r < a.size(); ++r) {
        b.set_int(r, 0, a[r]);
        for (std::size_t c = 0; c < v.size(); ++c) m.set_int(r, c, v[c].at(r));
    }
    if (rank(m) != v.size()) return std::nullopt;
    auto x = solve(m, b);
    if (!x) return std::nullopt;
    std::vector<long> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpq_class q = x->at(i, 0).rational();
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
        out.push_back(q.get_num().get_si());
    }
    return out;
}

std::vector<DimVector> perp_simples(const Quiver& q, const std::vector<DimVector>& e, PerpSide side,
                                    const Oracle& o, long bound) {
    std::size_t n = q.vertex_count();
    if (e.size() > n) throw std::invalid_argument("more exceptional roots than vertices");
    std::size_t want = n - e.size();
    std::vector<DimVector> out;
    if (want == 0) return out;
    if (bound <= 0)
        for (const auto& x : e) bound += total_dimension(x);
    bound = std::max<long>(bound, 1);
    auto numeric_perp = [&](const DimVector& g) {
        for (const auto& x : e) {
            long v = side == PerpSide::right ? euler_form(q, x, g) : euler_form(q, g, x);
            if (v != 0) return false;
        }
        return true;
    };
    auto combination = [&](const DimVector& g) {
        auto c = integer_coordinates(out, g);
        if (!c) return false;
        for (long x : *c)
            if (x < 0) return false;
        return true;
    };
    auto hom_perp = [&](const DimVector& g) {
        for (const auto& x : e) {
            std::size_t h = side == PerpSide::right ? generic_hom(q, x, g, o) : generic_hom(q, g, x, o);
            if (h != 0) return false;
        }
        return true;
    };
    for (long t = 1; t <= bound && out.size() < want; ++t) {
        for_each_composition(n, t, [&](const DimVector& g) {
            if (!numeric_perp(g) || euler_form(q, g, g) != 1 || combination(g)) return false;
            if (!hom_perp(g) || !generically_schurian(q, g, o)) return false;
            out.push_back(g);
            return out.size() == want;
        });
    }
    if (out.size() < want) throw OracleError("bound exhausted");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            if (i != j && generic_hom(q, out[i], out[j], o) != 0)
                throw OracleError("perpendicular simples " + to_string(out[i]) + " and " + to_string(out[j]) +
                                  " admit homomorphisms");
    if (!integer_coordinates(out, DimVector(n, 0))) throw OracleError("perpendicular simples are dependent");
    return out;
}

Quiver perpendicular_quiver(const Quiver& q, const std::vector<DimVector>& simples, const Oracle& o) {
    std::string name = q.name() + "[";
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < simples.size(); ++i) {
        name += (i ? ";" : "") + to_string(simples[i]);
        vs.push_back("s" + std::to_string(i + 1));
    }
    Quiver p(name + "]", vs);
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = 0; j < simples.size(); ++j) {
            if (i == j) continue;
            long x = generic_ext(q, simples[i], simples[j], o);
            for (long l = 0; l < x; ++l)
                p.add_arrow("e" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(l + 1),
                            i, j);
        }
    return p;
}

}  // namespace qglue
