#include "qglue/decompose.hpp"
#include "qglue/endomorphism.hpp"

#include <algorithm>
#include <random>

namespace qglue {

namespace {

// Splits x into pieces with local endomorphism rings; false if some piece resists splitting.
bool split_fully(const Representation& x, std::mt19937_64& rng, std::vector<DimVector>& leaves) {
    if (x.total_dim() == 0) return true;
    EndAlgebra e = end_algebra(x);
    std::size_t rad = trace_radical_dim(e);
    if (e.dim - rad == 1) {
        leaves.push_back(x.dims());
        return true;
    }
    const Field& f = x.field();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix coeffs = Matrix::random(f, e.dim, 1, rng);
        auto idem = idempotent_from_element(x, e.element(coeffs));
        if (!idem) continue;
        Splitting s = split_by_idempotent(x, *idem);
        if (!s.verified) continue;
        return split_fully(s.image, rng, leaves) && split_fully(s.kernel, rng, leaves);
    }
    return false;
}

bool dim_order(const DimVector& u, const DimVector& v) {
    long tu = total_dimension(u), tv = total_dimension(v);
    if (tu != tv) return tu > tv;
    return u > v;
}

bool verify(const Quiver& q, const DimVector& a, const CanonicalDecomposition& c, const Oracle& o) {
    DimVector sum(a.size(), 0);
    for (const auto& [r, m] : c.summands) sum = sum + static_cast<long>(m) * r;
    if (sum != a) return false;
    for (const auto& [r, m] : c.summands) {
        if (!generically_schurian(q, r, o)) return false;
        if (m > 1 && generic_ext(q, r, r, o) != 0) return false;
    }
    for (std::size_t i = 0; i < c.summands.size(); ++i)
        for (std::size_t j = 0; j < c.summands.size(); ++j) {
            if (i != j && generic_ext(q, c.summands[i].first, c.summands[j].first, o) != 0) return false;
        }
    return true;
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const Quiver& q, const DimVector& a, const Oracle& o) {
    if (a.size() != q.vertex_count()) throw std::invalid_argument("dimension vector has the wrong length");
    if (std::any_of(a.begin(), a.end(), [](long x) { return x < 0; }))
        throw std::invalid_argument("dimension vector must be non-negative");
    Oracle cur = o;
    for (int round = 0; round <= 4; ++round, cur.samples *= 2) {
        for (std::size_t s = 0; s < cur.samples; ++s) {
            Representation x = sample_rep(q, a, cur, 5, s);
            std::mt19937_64 rng(sample_seed(cur, a, 6, s));
            std::vector<DimVector> leaves;
            if (!split_fully(x, rng, leaves)) continue;
            std::sort(leaves.begin(), leaves.end(), dim_order);
            CanonicalDecomposition c;
            c.samples_used = cur.samples;
            for (const auto& l : leaves) {
                if (!c.summands.empty() && c.summands.back().first == l)
                    ++c.summands.back().second;
                else
                    c.summands.emplace_back(l, 1);
            }
            if (verify(q, a, c, cur)) return c;
            break;
        }
    }
    throw OracleError("oracle unstable, increase samples");
}

}  // namespace qglue
