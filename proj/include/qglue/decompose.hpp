#pragma once

#include "qglue/representation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qglue {

struct Oracle {
    std::size_t samples = 5;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
};

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Seed for the index-th sample of a given stream; stream separates X from Y draws.
std::uint64_t sample_seed(const Oracle& o, const DimVector& a, std::uint64_t stream, std::size_t index);
Representation sample_rep(const Quiver& q, const DimVector& a, const Oracle& o, std::uint64_t stream, std::size_t index);

std::size_t generic_hom(const Quiver& q, const DimVector& a, const DimVector& b, const Oracle& o);
long generic_ext(const Quiver& q, const DimVector& a, const DimVector& b, const Oracle& o);
bool generically_schurian(const Quiver& q, const DimVector& a, const Oracle& o);
bool is_exceptional_root(const Quiver& q, const DimVector& a, const Oracle& o);
// Sampled until Hom(X,X) = k and Ext(X,X) = 0; throws OracleError if no sample verifies.
Representation exceptional_rep(const Quiver& q, const DimVector& a, const Oracle& o);

// Memoizes generic hom per (quiver name, a, b).
class GenericCache {
public:
    explicit GenericCache(Oracle o) : oracle_(o) {}
    const Oracle& oracle() const { return oracle_; }
    std::size_t hom(const Quiver& q, const DimVector& a, const DimVector& b);
    long ext(const Quiver& q, const DimVector& a, const DimVector& b);
    bool exceptional(const Quiver& q, const DimVector& a);
    bool schurian(const Quiver& q, const DimVector& a);

private:
    Oracle oracle_;
    std::map<std::tuple<std::string, DimVector, DimVector>, std::size_t> hom_;
    std::map<std::pair<std::string, DimVector>, bool> schur_;
};

struct CanonicalDecomposition {
    std::vector<std::pair<DimVector, std::size_t>> summands;
    std::size_t samples_used = 0;
};

CanonicalDecomposition canonical_decomposition(const Quiver& q, const DimVector& a, const Oracle& o);

enum class PerpSide { left, right };

// Simples of E^perp (right) or ^perp E (left), by increasing total dimension up to bound (0 = sum of entries of E).
std::vector<DimVector> perp_simples(const Quiver& q, const std::vector<DimVector>& e, PerpSide side,
                                    const Oracle& o, long bound = 0);
// Quiver on the given simples with dim Ext(s_i, s_j) arrows from i to j.
Quiver perpendicular_quiver(const Quiver& q, const std::vector<DimVector>& simples, const Oracle& o);

struct DecompositionReport {
    bool trivial = true;
    std::vector<DimVector> sequence;
    std::vector<long> coefficients;
    std::vector<std::string> audit;
    std::size_t iterations = 0;
    bool verified = false;
    std::vector<std::string> verification;
    std::string to_string() const;
};

struct SequenceCheck {
    bool passed = false;
    std::vector<std::string> lines;
};

DecompositionReport exceptional_sequence_decomposition(const Quiver& q, const DimVector& a, const Oracle& o,
                                                       long bound = 0);
// Re-verifies a reduced exceptional sequence with sampled exceptional representatives.
SequenceCheck verify_sequence(const Quiver& q, const DimVector& a, const std::vector<DimVector>& eps,
                              const std::vector<long>& coeffs, const Oracle& o);
// Unique coefficients c with sum c_i v_i = a, if they exist and are integral.
std::optional<std::vector<long>> integer_coordinates(const std::vector<DimVector>& v, const DimVector& a);

}  // namespace qglue
