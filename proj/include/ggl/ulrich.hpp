#pragma once

#include "ggl/canonical.hpp"
#include "ggl/relative_ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ggl {

enum class UlrichFailure { Principal, ReductionNumberExceedsOne, QuotientNotFree };

std::string to_string(UlrichFailure reason);

struct UlrichCertificate {
    std::vector<int> generators;
    int a0 = 0;              // min(I): exponent of the monomial reduction t^{a0}
    int mu = 0;              // μ_R(I)
    int colength = 0;        // ℓ(R/I)
    int quotient_length = 0; // ℓ(I/I²)
    bool verdict = false;
    std::optional<UlrichFailure> failure;

    bool operator==(const UlrichCertificate&) const = default;
};

/// Decides whether a monomial ideal 0 ∉ I ⊆ H is an Ulrich ideal of k[[H]].
/// For a monomial I the reduction can be taken to be t^{a0}, since the
/// colength of xI depends only on the valuation of x.
UlrichCertificate is_ulrich(const RelativeIdeal& i);

/// All monomial Ulrich ideals, ordered by a0 and then by generators.
std::vector<UlrichCertificate> enumerate_ulrich(const SemigroupPtr& h);

/// {(i·e) ∪ gens∖{e} : 1 <= i <= ℓ(R/tr)} as minimal generator lists, for
/// H non-Gorenstein, of minimal multiplicity and GGL.
std::vector<std::vector<int>> ulrich_set_minmult_ggl(const SemigroupPtr& h);

/// Whether tr(K) is Ulrich. Cross-checked against "GGL and S symmetric" and,
/// when true, against μ(tr) = r + 1; a mismatch raises ConsistencyFailure.
bool trace_is_ulrich(const SemigroupPtr& h);

inline std::vector<UlrichCertificate> enumerate_ulrich(const NumericalSemigroup& h) {
    return enumerate_ulrich(share(h));
}
inline bool trace_is_ulrich(const NumericalSemigroup& h) { return trace_is_ulrich(share(h)); }

} // namespace ggl
