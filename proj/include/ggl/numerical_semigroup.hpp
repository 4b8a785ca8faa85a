#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ggl {

struct BasicInvariants {
    int multiplicity = 0;         // e
    int embedding_dimension = 0;  // v
    int type = 0;                 // r = |PF(H)|
    int frobenius = 0;            // f
    int genus = 0;
    bool is_symmetric = false;
    bool has_minimal_multiplicity = false;

    bool operator==(const BasicInvariants&) const = default;
};

/// A numerical semigroup H = <a_1, ..., a_l> with gcd 1.
///
/// Membership is stored as a dense table on [0, f(H) + 1]; every integer
/// above f(H) is a member. The value is immutable once built.
class NumericalSemigroup {
public:
    /// Normalizes the generator list. Redundant generators are dropped from
    /// generators() but kept in raw_generators().
    explicit NumericalSemigroup(std::vector<int> raw_generators);

    /// Builds the semigroup whose members on [0, table.size()) are the set
    /// entries of `table`; everything at or above table.size() is a member.
    /// table[0] must be set and the set must be additively closed.
    static NumericalSemigroup from_membership(const std::vector<std::uint8_t>& table);

    const std::vector<int>& raw_generators() const noexcept { return raw_; }
    const std::vector<int>& generators() const noexcept { return gens_; }
    const std::vector<int>& gaps() const noexcept { return gaps_; }
    const std::vector<int>& pseudo_frobenius() const noexcept { return pf_; }

    int frobenius() const noexcept { return frobenius_; }
    int conductor() const noexcept { return frobenius_ + 1; }
    int genus() const noexcept { return static_cast<int>(gaps_.size()); }
    int multiplicity() const noexcept { return gens_.front(); }
    int embedding_dimension() const noexcept { return static_cast<int>(gens_.size()); }
    int type() const noexcept { return static_cast<int>(pf_.size()); }

    bool is_symmetric() const noexcept { return pf_.size() == 1; }
    bool has_minimal_multiplicity() const noexcept {
        return embedding_dimension() == multiplicity();
    }
    bool is_whole_line() const noexcept { return frobenius_ < 0; }

    bool contains(long long z) const noexcept {
        if (z < 0) return false;
        if (z > frobenius_) return true;
        return member_[static_cast<std::size_t>(z)] != 0;
    }

    /// Smallest member in each residue class mod e, indexed by residue.
    std::vector<int> apery_set(int e) const;

    BasicInvariants invariants() const;

    std::string to_string() const;

    bool operator==(const NumericalSemigroup& other) const noexcept {
        return gens_ == other.gens_;
    }

private:
    NumericalSemigroup() = default;
    void finish_from_table();

    std::vector<int> raw_;
    std::vector<int> gens_;
    std::vector<int> gaps_;
    std::vector<int> pf_;
    std::vector<std::uint8_t> member_;  // indices 0 .. f+1
    int frobenius_ = -1;
};

NumericalSemigroup make_semigroup(std::vector<int> raw_generators);

inline bool contains(const NumericalSemigroup& h, long long z) { return h.contains(z); }

std::vector<int> apery_set(const NumericalSemigroup& h, int e);

std::vector<int> pseudo_frobenius(const NumericalSemigroup& h);

BasicInvariants basic_invariants(const NumericalSemigroup& h);

/// All numerical semigroups T with H ⊆ T ⊆ ℤ≥0, ordered by genus descending
/// and then lexicographically on gap sets. H itself comes first and ℤ≥0 last.
std::vector<NumericalSemigroup> overrings(const NumericalSemigroup& h);

/// Overrings T of H whose elements outside H all satisfy `allowed`.
/// Same ordering as overrings().
std::vector<NumericalSemigroup> overrings_within(const NumericalSemigroup& h,
                                                 const std::function<bool(int)>& allowed);

} // namespace ggl
