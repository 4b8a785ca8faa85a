#pragma once

#include "ggl/canonical.hpp"
#include "ggl/numerical_semigroup.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ggl {

/// Exponent data of the defining ideal of a non-symmetric 3-generated
/// semigroup ⟨a1, a2, a3⟩:
///   c1·a1 = β'a2 + γa3,   c2·a2 = αa1 + γ'a3,   c3·a3 = α'a1 + βa2,
/// oriented so that n > m.
struct HerzogData {
    int a1 = 0, a2 = 0, a3 = 0;
    int alpha = 0, beta = 0, gamma = 0;
    int alpha_p = 0, beta_p = 0, gamma_p = 0;
    int c1 = 0, c2 = 0, c3 = 0;
    int d1 = 0, d2 = 0, d3 = 0;
    int m = 0, n = 0;
    int a = 0;  // n − m
    int d = 0;  // a1 + a2 + a3
    bool swapped = false;  // a2 and a3 were exchanged to get n > m

    std::array<int, 6> exponents() const { return {alpha, beta, gamma, alpha_p, beta_p, gamma_p}; }
    std::vector<int> pseudo_frobenius() const { return {m - d, n - d}; }

    bool operator==(const HerzogData&) const = default;
};

/// Throws NotThreeGenerated, SymmetricInput or NonUniqueRepresentation on
/// bad input and ConsistencyFailure if any structural identity fails.
HerzogData herzog_data(int a1, int a2, int a3);

struct GglByExponents {
    bool exp_criterion = false;  // α ≤ α', β ≤ β', γ ≤ γ'
    bool three_a_in_h = false;
    std::optional<std::vector<int>> conductor_pred;  // minimal gens of (αa1, βa2, γa3)
    std::optional<int> colength_pred;                // αβγ

    bool operator==(const GglByExponents&) const = default;
};

GglByExponents ggl_by_exponents(const HerzogData& hd);

struct TracePairs {
    bool verdict = false;  // at least two of (α,α'), (β,β'), (γ,γ') are equal
    // After rotating the unequal pair into position α: (a1, a2, a3) and the
    // predicted (3βγ, γ(2α+α'), β(2α'+α)).
    std::optional<std::array<int, 3>> rotated;
    std::optional<std::array<int, 3>> predicted;

    bool operator==(const TracePairs&) const = default;
};

TracePairs trace_ulrich_by_pairs(const HerzogData& hd);

enum class Mult5Family { Mult4, Mult5I, Mult5II };

std::string to_string(Mult5Family family);
Mult5Family parse_family(const std::string& name);

/// Generators of the GGL, non-AGL semigroups of multiplicity 4 and 5 with
/// three generators. Throws ParameterOutOfRange on invalid parameters.
std::array<int, 3> family_mult_le5(Mult5Family family, int alpha, int alpha_p);

/// Every exponent criterion compared with the direct classification.
RouteChecks three_generated_checks(const NumericalSemigroup& h);

} // namespace ggl
