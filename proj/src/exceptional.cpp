#include "qglue/decompose.hpp"
#include "qglue/gluing.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qglue {

namespace {

using Seq = std::vector<std::pair<DimVector, long>>;

constexpr std::size_t kIterationCap = 64;

bool is_zero_vector(const DimVector& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

bool non_negative(const DimVector& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x >= 0; });
}

std::string vector_list(const std::vector<DimVector>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s;
}

class Decomposer {
public:
    Decomposer(const Oracle& o, long bound, std::vector<std::string>& audit)
        : cache_(o), bound_(bound), audit_(audit) {}

    Seq run(const Quiver& q, const DimVector& a) {
        if (is_zero_vector(a)) return {};
        if (cache_.exceptional(q, a)) return {{a, 1}};
        CanonicalDecomposition cd = canonical_decomposition(q, a, cache_.oracle());
        Seq exc;
        DimVector nu(a.size(), 0);
        for (const auto& [r, m] : cd.summands) {
            audit_.push_back("summand " + to_string(r) + " x" + std::to_string(m));
            if (cache_.exceptional(q, r))
                exc.emplace_back(r, static_cast<long>(m));
            else
                nu = nu + static_cast<long>(m) * r;
        }
        Seq s;
        if (is_zero_vector(nu)) {
            s = order_exceptional(q, exc);
        } else if (exc.empty()) {
            return trivial(q, a);
        } else {
            exc = order_exceptional(q, exc);
            std::vector<DimVector> e;
            for (const auto& x : exc) e.push_back(x.first);
            bool right = std::all_of(e.begin(), e.end(), [&](const DimVector& x) { return cache_.hom(q, x, nu) == 0; });
            bool left = !right &&
                        std::all_of(e.begin(), e.end(), [&](const DimVector& x) { return cache_.hom(q, nu, x) == 0; });
            if (right) {
                s = exc;
                Seq tail = in_perp(q, e, PerpSide::right, nu);
                s.insert(s.end(), tail.begin(), tail.end());
            } else if (left) {
                s = in_perp(q, e, PerpSide::left, nu);
                s.insert(s.end(), exc.begin(), exc.end());
            } else {
                return trivial(q, a);
            }
        }
        return repair(q, a, std::move(s));
    }

    std::size_t iterations() const { return iterations_; }

private:
    Seq in_perp(const Quiver& q, const std::vector<DimVector>& e, PerpSide side, const DimVector& nu) {
        if (is_zero_vector(nu)) return {};
        long bound = std::max(bound_, total_dimension(nu));
        std::vector<DimVector> simples = perp_simples(q, e, side, cache_.oracle(), bound);
        auto d = integer_coordinates(simples, nu);
        if (!d || std::any_of(d->begin(), d->end(), [](long x) { return x < 0; }))
            throw OracleError(to_string(nu) + " is not a non-negative combination of perpendicular simples");
        audit_.push_back("step " + std::to_string(++step_) + " perp " + vector_list(simples));
        Quiver qc = perpendicular_quiver(q, simples, cache_.oracle());
        Seq inner = run(qc, DimVector(d->begin(), d->end()));
        Seq out;
        for (const auto& [r, c] : inner) {
            DimVector v(q.vertex_count(), 0);
            for (std::size_t i = 0; i < simples.size(); ++i) v = v + r[i] * simples[i];
            out.emplace_back(v, c);
        }
        return out;
    }

    // Simple roots, ordered so that no arrow points from an earlier to a later vertex.
    Seq trivial(const Quiver& q, const DimVector& a) {
        std::vector<bool> placed(q.vertex_count(), false);
        Seq out;
        std::vector<std::size_t> order;
        while (order.size() < q.vertex_count()) {
            std::size_t before = order.size();
            for (std::size_t v = 0; v < q.vertex_count(); ++v) {
                if (placed[v]) continue;
                bool ready = true;
                for (const auto& ar : q.arrows())
                    if (ar.source == v && !placed[ar.target]) ready = false;
                if (ready) {
                    placed[v] = true;
                    order.push_back(v);
                    break;
                }
            }
            if (order.size() == before) throw std::logic_error("quiver has an oriented cycle");
        }
        for (std::size_t v : order)
            if (a[v] > 0) out.emplace_back(unit_vector(q, v), a[v]);
        return out;
    }

    // Stable topological order in which y precedes x whenever hom(x,y) or ext(x,y) is nonzero.
    Seq order_exceptional(const Quiver& q, const Seq& s) {
        std::size_t n = s.size();
        std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y && (cache_.hom(q, s[x].first, s[y].first) != 0 || cache_.ext(q, s[x].first, s[y].first) != 0))
                    before[y][x] = true;
        Seq out;
        std::vector<bool> used(n, false);
        while (out.size() < n) {
            std::size_t pick = n;
            for (std::size_t x = 0; x < n && pick == n; ++x) {
                if (used[x]) continue;
                bool free = true;
                for (std::size_t y = 0; y < n; ++y)
                    if (!used[y] && before[y][x]) free = false;
                if (free) pick = x;
            }
            if (pick == n) throw OracleError("exceptional summands admit no exceptional ordering");
            used[pick] = true;
            out.push_back(s[pick]);
        }
        return out;
    }

    Seq repair(const Quiver& q, const DimVector& a, Seq s) {
        std::set<Seq> visited;
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> bad;
            for (std::size_t i = 0; i < s.size() && !bad; ++i)
                for (std::size_t j = i + 1; j < s.size() && !bad; ++j)
                    if (cache_.hom(q, s[j].first, s[i].first) != 0) bad = {i, j};
            if (!bad) return s;
            if (!visited.insert(s).second) return trivial(q, a);
            if (++iterations_ > kIterationCap) throw OracleError("iteration cap reached");
            const DimVector& sj = s[bad->second].first;
            const DimVector& si = s[bad->first].first;
            long c = euler_form(q, sj, a);
            DimVector g = a - c * sj;
            if (c >= 1 && non_negative(g) && cache_.hom(q, sj, g) == 0) {
                Seq next = {{sj, c}};
                Seq tail = in_perp(q, {sj}, PerpSide::right, g);
                next.insert(next.end(), tail.begin(), tail.end());
                s = std::move(next);
                continue;
            }
            c = euler_form(q, a, si);
            g = a - c * si;
            if (c >= 1 && non_negative(g) && cache_.hom(q, g, si) == 0) {
                Seq next = in_perp(q, {si}, PerpSide::left, g);
                next.emplace_back(si, c);
                s = std::move(next);
                continue;
            }
            return trivial(q, a);
        }
    }

    GenericCache cache_;
    long bound_;
    std::vector<std::string>& audit_;
    std::size_t step_ = 0;
    std::size_t iterations_ = 0;
};

}  // namespace

std::string DecompositionReport::to_string() const {
    std::ostringstream os;
    for (const auto& l : audit) os << l << '\n';
    for (const auto& l : verification) os << l << '\n';
    return os.str();
}

DecompositionReport exceptional_sequence_decomposition(const Quiver& q, const DimVector& a, const Oracle& o,
                                                       long bound) {
    if (classify_root(q, a).tag == RootTag::not_root) throw std::invalid_argument(to_string(a) + " is not a root");
    if (generically_schurian(q, a, o))
        throw std::invalid_argument(to_string(a) + " is a Schur root; the algorithm applies to non-Schur roots");
    DecompositionReport r;
    if (bound <= 0) bound = total_dimension(a);
    Decomposer dec(o, bound, r.audit);
    Seq s = dec.run(q, a);
    r.iterations = dec.iterations();
    for (const auto& [v, c] : s) {
        r.sequence.push_back(v);
        r.coefficients.push_back(c);
    }
    r.trivial = std::all_of(r.sequence.begin(), r.sequence.end(), [](const DimVector& v) { return total_dimension(v) == 1; });
    r.audit.push_back(std::string("result ") + (r.trivial ? "trivial" : "sequence"));
    for (std::size_t i = 0; i < s.size(); ++i)
        r.audit.push_back("coeff " + to_string(r.sequence[i]) + " " + std::to_string(r.coefficients[i]));
    SequenceCheck chk = verify_sequence(q, a, r.sequence, r.coefficients, o);
    r.verified = chk.passed;
    r.verification = chk.lines;
    return r;
}

SequenceCheck verify_sequence(const Quiver& q, const DimVector& a, const std::vector<DimVector>& eps,
                              const std::vector<long>& coeffs, const Oracle& o) {
    SequenceCheck out;
    bool ok = true;
    auto line = [&](const std::string& what, bool pass) {
        out.lines.push_back("check " + what + ": " + (pass ? "pass" : "fail"));
        ok = ok && pass;
    };
    if (eps.size() != coeffs.size()) throw std::invalid_argument("sequence and coefficients differ in length");
    DimVector sum(a.size(), 0);
    for (std::size_t i = 0; i < eps.size(); ++i) sum = sum + coeffs[i] * eps[i];
    line("sum", sum == a);
    auto unique = integer_coordinates(eps, a);
    line("coefficients unique", unique && *unique == coeffs);
    line("coefficients non-negative", std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c >= 0; }));
    std::vector<Representation> reps;
    for (const auto& e : eps) {
        try {
            reps.push_back(exceptional_rep(q, e, o));
        } catch (const OracleError&) {
            line("exceptional " + to_string(e), false);
            out.passed = false;
            return out;
        }
    }
    line("exceptional representatives", true);
    bool forward = true, backward = true;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (hom_dim(reps[i], reps[j]) != 0 || ext_dim(reps[i], reps[j]) != 0) forward = false;
            if (hom_dim(reps[j], reps[i]) != 0) backward = false;
        }
    line("exceptional sequence", forward);
    line("reduced", backward);
    if (!reps.empty() && std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c >= 0; }) &&
        std::any_of(coeffs.begin(), coeffs.end(), [](long c) { return c > 0; })) {
        GluingData g = build_gluing(reps);
        RootTag t = classify_root(g.qm, DimVector(coeffs.begin(), coeffs.end())).tag;
        line("root of Q(E) (" + to_string(t) + ")", t != RootTag::not_root);
    }
    out.passed = ok;
    return out;
}

}  // namespace qglue
