#pragma once

#include "ggl/numerical_semigroup.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ggl {

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr share(NumericalSemigroup h) {
    return std::make_shared<const NumericalSemigroup>(std::move(h));
}

/// A relative ideal E ⊆ ℤ of a numerical semigroup H: bounded below and
/// closed under adding elements of H. This is the exponent set of a monomial
/// fractional ideal of k[[H]].
///
/// Stored as a membership table on [min_element, conductor); every integer at
/// or above the conductor is a member. The table is canonical, so two ideals
/// over the same base are equal exactly when their tables are.
class RelativeIdeal {
public:
    static RelativeIdeal from_generators(SemigroupPtr base, const std::vector<int>& gens);
    static RelativeIdeal whole_ring(SemigroupPtr base);
    /// 𝔪 = H ∖ {0}.
    static RelativeIdeal maximal_ideal(SemigroupPtr base);
    /// An overring T ⊇ H viewed as a relative ideal of H.
    static RelativeIdeal from_semigroup(SemigroupPtr base, const NumericalSemigroup& t);
    /// Members are exactly the set entries of `bits` placed at `lo`, plus every
    /// integer >= lo + bits.size().
    static RelativeIdeal from_window(SemigroupPtr base, int lo, const std::vector<std::uint8_t>& bits);

    const NumericalSemigroup& base() const noexcept { return *base_; }
    const SemigroupPtr& base_ptr() const noexcept { return base_; }

    int min_element() const noexcept { return min_; }
    int conductor() const noexcept { return conductor_; }
    const std::vector<int>& generators() const noexcept { return gens_; }
    int generator_count() const noexcept { return static_cast<int>(gens_.size()); }

    bool contains(long long z) const noexcept {
        if (z < min_) return false;
        if (z >= conductor_) return true;
        return bits_[static_cast<std::size_t>(z - min_)] != 0;
    }

    bool same_base(const RelativeIdeal& other) const noexcept;

    /// Requires min_element() == 0 and closure under addition.
    NumericalSemigroup to_semigroup() const;

    std::string to_string() const;

    bool operator==(const RelativeIdeal& other) const noexcept {
        return min_ == other.min_ && conductor_ == other.conductor_ && bits_ == other.bits_ &&
               same_base(other);
    }

private:
    RelativeIdeal() = default;

    SemigroupPtr base_;
    int min_ = 0;
    int conductor_ = 0;
    std::vector<std::uint8_t> bits_;  // [min_, conductor_)
    std::vector<int> gens_;
};

RelativeIdeal ideal_from_generators(SemigroupPtr base, const std::vector<int>& gens);

RelativeIdeal ideal_sum(const RelativeIdeal& i, const RelativeIdeal& j);

/// Minkowski sum {x + y : x ∈ I, y ∈ J}; realizes the product of monomial ideals.
RelativeIdeal ideal_product(const RelativeIdeal& i, const RelativeIdeal& j);

/// I : J = {z : z + J ⊆ I}.
RelativeIdeal colon(const RelativeIdeal& i, const RelativeIdeal& j);

RelativeIdeal power(const RelativeIdeal& i, int n);

struct RingClosure {
    RelativeIdeal closure;
    /// Least n >= 1 with I^{n+1} = I^n.
    int reduction_number;
};

/// Stable power of I. Requires min(I) = 0, i.e. R ⊆ I ⊆ ℤ≥0.
RingClosure ring_closure(const RelativeIdeal& i);

/// ℓ_R(I/J) = |I ∖ J|. Requires J ⊆ I.
int length_quotient(const RelativeIdeal& i, const RelativeIdeal& j);

/// ℓ_R(R/𝔞) for an ideal 𝔞 ⊆ H.
int colength(const RelativeIdeal& a);

/// μ_R(I).
int minimal_generators_count(const RelativeIdeal& i);

/// μ_R(I/J) = |I ∖ (J ∪ (𝔪 + I))|. Requires J ⊆ I.
int min_gens_of_quotient(const RelativeIdeal& i, const RelativeIdeal& j);

/// Whether I/J is free over R/𝔞, decided by ℓ(I/J) = μ(I/J)·ℓ(R/𝔞).
/// Requires J ⊆ I, 𝔞 ⊆ H and 𝔞 + I ⊆ J.
bool is_free_quotient(const RelativeIdeal& i, const RelativeIdeal& j, const RelativeIdeal& a);

RelativeIdeal shift(const RelativeIdeal& i, int k);

bool equals(const RelativeIdeal& i, const RelativeIdeal& j);

/// I ⊆ J.
bool is_subset(const RelativeIdeal& i, const RelativeIdeal& j);

} // namespace ggl
