#pragma once

#include "ggl/numerical_semigroup.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ggl {

/// B = 𝔪:𝔪 = {z : z + M ⊆ M} with M = H ∖ {0}. Throws Trivial for H = ℤ≥0.
NumericalSemigroup endomorphism_semigroup(const NumericalSemigroup& h);

struct ChainRecord {
    ChainRecord(int step_index, NumericalSemigroup h) : step(step_index), semigroup(std::move(h)) {}

    int step = 0;
    NumericalSemigroup semigroup;
    bool gorenstein = false;
    bool agl = false;
    bool ggl = false;
    bool minimal_multiplicity = false;
    int e = 0;
    int v = 0;
    int n = 0;  // ℓ(R_j / tr_j)
    // Set when H_j is non-Gorenstein, GGL and of minimal multiplicity: the
    // next ring must then keep v = e = e(H_j), stay GGL and have n_j − 1
    // (or be Gorenstein when n_j = 1).
    std::optional<bool> step_theorem;

    bool operator==(const ChainRecord&) const = default;
};

inline constexpr int default_step_cap = 64;

/// H, B(H), B(B(H)), ... up to the first Gorenstein ring. Throws
/// StepCapExceeded after `cap` blow-ups.
std::vector<ChainRecord> blowup_chain(const NumericalSemigroup& h, int cap = default_step_cap);

struct Reconstruction {
    NumericalSemigroup base;  // H' = ⟨e, h_i − n·e⟩
    int n = 0;                // ℓ(R/𝔠)
    bool is_symmetric = false;
    bool apery_match = false;  // Ap_e(H') = {0} ∪ {h_i − n·e}
    bool round_trip = false;   // ⟨e, (Ap_e(H') ∖ {0}) + n·e⟩ = H
};

/// Requires H non-Gorenstein, GGL and of minimal multiplicity.
Reconstruction reconstruct_base(const NumericalSemigroup& h);

/// ⟨e, (Ap_e(H') ∖ {0}) + n·e⟩.
NumericalSemigroup forward_construction(const NumericalSemigroup& base, int e, int n);

} // namespace ggl
