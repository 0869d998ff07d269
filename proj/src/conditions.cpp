#include "qglue/gluing.hpp"

#include <sstream>
#include <stdexcept>

namespace qglue {

namespace {

std::string idx(std::size_t i) {
    return std::to_string(i + 1);
}

}  // namespace

bool ConditionReport::passed() const {
    for (const auto& c : checks)
        if (!c.second) return false;
    return true;
}

std::string ConditionReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) os << c.first << ": " << (c.second ? "pass" : "fail") << '\n';
    for (const auto& n : notes) os << "note: " << n << '\n';
    return os.str();
}

ConditionReport check_elementary(const std::vector<Representation>& m) {
    ConditionReport r;
    bool schur = true, hom = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (hom_dim(m[i], m[i]) != 1) {
            schur = false;
            r.notes.push_back("M" + idx(i) + " is not Schurian");
        }
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j || hom_dim(m[i], m[j]) == 0) continue;
            hom = false;
            r.notes.push_back("Hom(M" + idx(i) + ",M" + idx(j) + ") != 0");
        }
    r.checks = {{"schurian", schur}, {"hom vanishing", hom}};
    return r;
}

GluingConditionReport check_gluing_conditions(const std::vector<Representation>& m) {
    GluingConditionReport r;
    std::size_t n = m.size();
    auto fail = [&](const std::string& s) { r.notes.push_back(s); };
    r.cond1 = true;
    for (std::size_t j = 1; j < n; ++j)
        if (hom_dim(m[j], m[j]) != 1) {
            r.cond1 = false;
            fail("(1) M" + idx(j) + " is not Schurian");
        }
    r.cond2 = true;
    r.cond3 = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (hom_dim(m[i], m[j]) != 0 || ext_dim(m[i], m[j]) != 0) {
                r.cond2 = false;
                fail("(2) Hom or Ext(M" + idx(i) + ",M" + idx(j) + ") != 0");
            }
            if (i != 0 && hom_dim(m[j], m[i]) != 0) {
                r.cond3 = false;
                fail("(3) Hom(M" + idx(j) + ",M" + idx(i) + ") != 0");
            }
        }
    std::vector<bool> hom_to_first(n, false);
    r.theta_a = true;
    for (std::size_t i = 1; i < n; ++i) {
        hom_to_first[i] = hom_dim(m[i], m[0]) != 0;
        if (hom_to_first[i]) r.theta_a = false;
    }
    r.theta_d = true;
    r.theta_b = true;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            if (i == j || ext_dim(m[i], m[j]) == 0) continue;
            r.theta_d = false;
            if (hom_to_first[i] || hom_to_first[j]) r.theta_b = false;
        }
    r.theta_c = n == 2;
    r.checks = {{"condition (1)", r.cond1}, {"condition (2)", r.cond2}, {"condition (3)", r.cond3}};
    std::string via;
    if (r.theta_a) via += " a";
    if (r.theta_b) via += " b";
    if (r.theta_c) via += " c";
    if (r.theta_d) via += " d";
    r.notes.push_back(via.empty() ? "no sufficient theta condition holds" : "theta sufficient conditions:" + via);
    return r;
}

Representation opposite_rep(const Representation& x) {
    Representation out(opposite(x.quiver()), x.field(), x.dims());
    for (std::size_t a = 0; a < x.quiver().arrow_count(); ++a) out.set_map(a, x.map(a).transpose());
    out.set_name(x.name());
    return out;
}

GluingConditionReport check_gluing_conditions_dual(const std::vector<Representation>& m) {
    std::vector<Representation> rev;
    for (auto it = m.rbegin(); it != m.rend(); ++it) rev.push_back(opposite_rep(*it));
    return check_gluing_conditions(rev);
}

ThetaCheck check_theta_iso(const GluingData& g, const Representation& x) {
    if (x.dims().empty() || x.dim(0) != 1) throw std::invalid_argument("theta check requires dim X_{m_1} = 1");
    ThetaCheck out;
    std::size_t r = g.M.size();
    if (r == 1) {
        out.iso = true;
        return out;
    }
    GluingData g2;
    g2.M.assign(g.M.begin() + 1, g.M.end());
    std::vector<std::string> names;
    for (std::size_t i = 1; i < r; ++i) names.push_back(g.qm.vertex(i));
    g2.qm = Quiver("Q(M)_2", names);
    DimVector d2(x.dims().begin() + 1, x.dims().end());
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < g.basis.size(); ++k) {
        const auto& e = g.basis[k];
        if (e.source == 0 || e.target == 0) continue;
        ExtBasisElement e2 = e;
        e2.source -= 1;
        e2.target -= 1;
        g2.qm.add_arrow(g.qm.arrow(k).name, e2.source, e2.target);
        g2.basis.push_back(e2);
        maps.push_back(x.map(k));
    }
    Representation x2(g2.qm, x.field(), d2, maps);
    Representation fx2 = apply_F(g2, x2);
    const Representation& m1 = g.M.front();
    Matrix d = d_matrix(fx2, m1);
    std::size_t im = rank(d);
    out.ext_dim = d.rows() - im;
    const Quiver& q = m1.quiver();
    std::vector<std::vector<std::size_t>> off(q.vertex_count(), std::vector<std::size_t>(r, 0));
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        for (std::size_t i = 2; i < r; ++i) off[v][i] = off[v][i - 1] + g.M[i - 1].dim(v) * x.dim(i - 1);
    SpanTracker span(m1.field(), d.rows());
    span.add_columns(d);
    for (const auto& e : g.basis) {
        if (e.target != 0) continue;
        std::size_t xi = x.dim(e.source);
        const Arrow& ar = q.arrow(e.arrow);
        for (std::size_t c = 0; c < xi; ++c) {
            ++out.source_dim;
            MapBundle b = zero_bundle(fx2, m1);
            b.arrows[e.arrow].set_int(e.row, off[ar.source][e.source] + e.col * xi + c, 1);
            if (span.add(vectorize(b))) ++out.image_rank;
        }
    }
    out.iso = out.image_rank == out.source_dim && out.source_dim == out.ext_dim;
    return out;
}

}  // namespace qglue
