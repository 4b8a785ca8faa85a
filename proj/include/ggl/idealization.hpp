#pragma once

#include "ggl/canonical.hpp"
#include "ggl/relative_ideal.hpp"

#include <vector>

namespace ggl {

/// The ideals making up L = (K:𝔞) ⊕ K, its square and A:L for A = R⋉𝔞.
struct PairComponents {
    RelativeIdeal k_colon_a;          // K:𝔞, first component of L
    RelativeIdeal k_colon_a_squared;  // (K:𝔞)², first component of L²
    RelativeIdeal k_colon_a_times_k;  // (K:𝔞)K, second component of L²
    RelativeIdeal a_colon_k;          // 𝔞:K, first component of A:L
    RelativeIdeal a_colon_k_colon_a;  // 𝔞:(K:𝔞), second component of A:L
};

/// Requires 0 ∉ 𝔞 ⊆ H; throws NotMPrimary otherwise.
PairComponents canonical_pair_components(const RelativeIdeal& a);

struct IdealizationReport {
    std::vector<int> base_generators;
    std::vector<int> overring_generators;
    std::vector<int> ideal_generators;  // 𝔞 = R:T
    bool route1 = false;                // R GGL and S = T
    bool route2 = false;                // T/R free over R/𝔞
    int overring_length = 0;            // ℓ(T/R)
    int overring_mu = 0;                // μ_R(T/R)
    int ideal_colength = 0;             // ℓ(R/𝔞)
    bool verdict = false;

    bool operator==(const IdealizationReport&) const = default;
};

/// Whether R⋉(R:T) is GGL. Requires H non-Gorenstein and K ⊆ T ≠ H.
/// Raises ConsistencyFailure if the two routes disagree or if a positive
/// verdict comes with 𝔞 ≠ 𝔠.
IdealizationReport idealization_is_ggl(const SemigroupPtr& h, const NumericalSemigroup& t);

/// T = S.
IdealizationReport idealization_of_conductor(const SemigroupPtr& h);

} // namespace ggl
