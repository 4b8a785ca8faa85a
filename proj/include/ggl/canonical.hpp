#pragma once

#include "ggl/numerical_semigroup.hpp"
#include "ggl/relative_ideal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ggl {

/// The ideals attached to the canonical ideal of k[[H]], computed once and
/// shared by the classifier, the Ulrich tests and the idealization module.
struct CanonicalData {
    SemigroupPtr base;
    RelativeIdeal ring;        // R = H
    RelativeIdeal maximal;     // 𝔪
    RelativeIdeal canonical;   // K, generated by f − c for c ∈ PF(H)
    RelativeIdeal blowup;      // S = R[K] as a relative ideal
    int reduction_number = 1;  // least n with K^{n+1} = K^n
    RelativeIdeal conductor;   // 𝔠 = R : S
    RelativeIdeal ring_colon_canonical;  // R : K
    RelativeIdeal trace;       // tr_R(K_R) = (R : K)K
};

CanonicalData canonical_data(const SemigroupPtr& h);

RelativeIdeal canonical_ideal(const SemigroupPtr& h);

struct BlowupAlgebra {
    NumericalSemigroup semigroup;
    int reduction_number;
};

BlowupAlgebra blowup_algebra(const SemigroupPtr& h);

/// 𝔠 = R : S. Throws ConsistencyFailure when R : S and K : S differ.
RelativeIdeal conductor_ideal(const SemigroupPtr& h);

RelativeIdeal trace_of_canonical(const SemigroupPtr& h);

/// Exponents x ∈ H ∖ 𝔞 with x + 𝔪 ⊆ 𝔞: a monomial basis of the socle of R/𝔞.
std::vector<int> socle_exponents(const RelativeIdeal& a);

struct GglWitness {
    std::vector<int> conductor_generators;
    std::vector<int> basis_exponents;  // f − c_i for i < r
    int socle = 0;                     // b with t^b spanning (𝔠 :_R 𝔪)/𝔠
    bool identity_holds = false;       // f + b = c_i + c_{r−i} for 1 <= i <= r−1

    bool operator==(const GglWitness&) const = default;
};

using RouteChecks = std::vector<std::pair<std::string, bool>>;

struct ClassificationReport {
    std::vector<int> raw_generators;
    std::vector<int> generators;
    BasicInvariants invariants;
    std::vector<int> pseudo_frobenius;

    std::vector<int> canonical_generators;
    int canonical_reduction_number = 1;
    int canonical_square_excess = 0;  // ℓ(K²/K)
    std::vector<int> blowup_generators;
    std::vector<int> conductor_generators;
    int conductor_colength = 0;  // ℓ(R/𝔠)
    std::vector<int> trace_generators;
    int trace_colength = 0;  // ℓ(R/tr)
    int e1 = 0;              // ℓ(S/R)

    bool gorenstein = false;
    bool agl = false;
    bool ggl = false;
    bool two_agl = false;
    bool ngl = false;
    bool minimal_multiplicity = false;

    std::optional<GglWitness> witness;
    RouteChecks route_consistency;

    bool consistent() const;
    /// Name of the first failing check, or empty.
    std::string first_failure() const;

    bool operator==(const ClassificationReport&) const = default;
};

/// Computes every flag and every cross-route check without throwing on a
/// failed check.
ClassificationReport analyze(const SemigroupPtr& h);

/// As analyze(), but raises ConsistencyFailure when any check fails.
ClassificationReport classify(const SemigroupPtr& h);

/// Present iff H is a non-Gorenstein GGL semigroup.
std::optional<GglWitness> ggl_witness(const SemigroupPtr& h);

inline ClassificationReport classify(const NumericalSemigroup& h) { return classify(share(h)); }
inline ClassificationReport analyze(const NumericalSemigroup& h) { return analyze(share(h)); }

} // namespace ggl
