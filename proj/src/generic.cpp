#include "qglue/decompose.hpp"

#include <algorithm>
#include <random>

namespace qglue {

std::uint64_t sample_seed(const Oracle& o, const DimVector& a, std::uint64_t stream, std::size_t index) {
    std::vector<std::uint32_t> words = {static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                                        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
    for (long x : a) words.push_back(static_cast<std::uint32_t>(x));
    std::seed_seq seq(words.begin(), words.end());
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Representation sample_rep(const Quiver& q, const DimVector& a, const Oracle& o, std::uint64_t stream,
                          std::size_t index) {
    return random_rep(q, a, o.prime, sample_seed(o, a, stream, index));
}

std::size_t generic_hom(const Quiver& q, const DimVector& a, const DimVector& b, const Oracle& o) {
    if (o.samples == 0) throw std::invalid_argument("samples must be at least 1");
    long lower = std::max(0L, euler_form(q, a, b));
    std::size_t best = SIZE_MAX;
    for (std::size_t s = 0; s < o.samples; ++s) {
        Representation x = sample_rep(q, a, o, 1, s);
        Representation y = sample_rep(q, b, o, 2, s);
        best = std::min(best, hom_dim(x, y));
        if (static_cast<long>(best) == lower) break;
    }
    return best;
}

long generic_ext(const Quiver& q, const DimVector& a, const DimVector& b, const Oracle& o) {
    return static_cast<long>(generic_hom(q, a, b, o)) - euler_form(q, a, b);
}

bool generically_schurian(const Quiver& q, const DimVector& a, const Oracle& o) {
    for (std::size_t s = 0; s < o.samples; ++s) {
        Representation x = sample_rep(q, a, o, 3, s);
        if (hom_dim(x, x) == 1) return true;
    }
    return false;
}

bool is_exceptional_root(const Quiver& q, const DimVector& a, const Oracle& o) {
    return euler_form(q, a, a) == 1 && generically_schurian(q, a, o);
}

Representation exceptional_rep(const Quiver& q, const DimVector& a, const Oracle& o) {
    std::size_t tries = o.samples;
    for (int round = 0; round <= 4; ++round, tries *= 2) {
        for (std::size_t s = 0; s < tries; ++s) {
            Representation x = sample_rep(q, a, o, 4, s);
            if (hom_dim(x, x) == 1 && ext_dim(x, x) == 0) return x;
        }
    }
    throw OracleError("no exceptional representation of dimension " + to_string(a) + " found");
}

std::size_t GenericCache::hom(const Quiver& q, const DimVector& a, const DimVector& b) {
    auto key = std::make_tuple(q.name(), a, b);
    auto it = hom_.find(key);
    if (it != hom_.end()) return it->second;
    std::size_t h = generic_hom(q, a, b, oracle_);
    hom_.emplace(key, h);
    return h;
}

long GenericCache::ext(const Quiver& q, const DimVector& a, const DimVector& b) {
    return static_cast<long>(hom(q, a, b)) - euler_form(q, a, b);
}

bool GenericCache::schurian(const Quiver& q, const DimVector& a) {
    auto key = std::make_pair(q.name(), a);
    auto it = schur_.find(key);
    if (it != schur_.end()) return it->second;
    bool s = generically_schurian(q, a, oracle_);
    schur_.emplace(key, s);
    return s;
}

bool GenericCache::exceptional(const Quiver& q, const DimVector& a) {
    return euler_form(q, a, a) == 1 && schurian(q, a);
}

}  // namespace qglue
