#include "ggl/relative_ideal.hpp"

#include "ggl/error.hpp"

#include <algorithm>
#include <sstream>

namespace ggl {

namespace {

void require_same_base(const RelativeIdeal& i, const RelativeIdeal& j) {
    if (!i.same_base(j)) {
        fail(ErrorKind::BaseMismatch, "ideals over different semigroups: " + i.base().to_string() +
                                          " vs " + j.base().to_string());
    }
}

// z ∈ 𝔪 + E  ⇔  z − a ∈ E for some minimal generator a of H.
bool in_maximal_times(const RelativeIdeal& e, long long z) {
    for (int a : e.base().generators()) {
        if (e.contains(z - a)) return true;
    }
    return false;
}

} // namespace

bool RelativeIdeal::same_base(const RelativeIdeal& other) const noexcept {
    return base_ == other.base_ || base_->generators() == other.base_->generators();
}

RelativeIdeal RelativeIdeal::from_window(SemigroupPtr base, int lo, const std::vector<std::uint8_t>& bits) {
    RelativeIdeal e;
    e.base_ = std::move(base);
    const int n = static_cast<int>(bits.size());
    int first = 0;
    while (first < n && !bits[static_cast<std::size_t>(first)]) ++first;
    int last_gap = -1;
    for (int k = n - 1; k >= first; --k) {
        if (!bits[static_cast<std::size_t>(k)]) {
            last_gap = k;
            break;
        }
    }
    e.min_ = lo + first;
    e.conductor_ = last_gap < 0 ? e.min_ : lo + last_gap + 1;
    e.bits_.assign(bits.begin() + first, bits.begin() + (e.conductor_ - lo));

    const int top = e.conductor_ + e.base_->multiplicity();
    for (int z = e.min_; z < top; ++z) {
        if (e.contains(z) && !in_maximal_times(e, z)) e.gens_.push_back(z);
    }
    return e;
}

RelativeIdeal RelativeIdeal::from_generators(SemigroupPtr base, const std::vector<int>& gens) {
    if (gens.empty()) fail(ErrorKind::EmptyGenerators, "an ideal needs at least one generator");
    const auto [lo_it, hi_it] = std::minmax_element(gens.begin(), gens.end());
    const int lo = *lo_it;
    const int hi = *hi_it + base->conductor();
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(std::max(0, hi - lo)), 0);
    for (int z = lo; z < hi; ++z) {
        for (int g : gens) {
            if (base->contains(static_cast<long long>(z) - g)) {
                bits[static_cast<std::size_t>(z - lo)] = 1;
                break;
            }
        }
    }
    return from_window(std::move(base), lo, bits);
}

RelativeIdeal RelativeIdeal::whole_ring(SemigroupPtr base) { return from_generators(std::move(base), {0}); }

RelativeIdeal RelativeIdeal::maximal_ideal(SemigroupPtr base) {
    auto gens = base->generators();
    return from_generators(std::move(base), gens);
}

RelativeIdeal RelativeIdeal::from_semigroup(SemigroupPtr base, const NumericalSemigroup& t) {
    const int size = std::max(1, t.conductor());
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(size));
    for (int z = 0; z < size; ++z) bits[static_cast<std::size_t>(z)] = t.contains(z);
    auto e = from_window(std::move(base), 0, bits);
    for (int z = 0; z < e.conductor(); ++z) {
        if (e.base().contains(z) && !e.contains(z)) {
            fail(ErrorKind::NotContained, t.to_string() + " does not contain " + e.base().to_string());
        }
    }
    return e;
}

NumericalSemigroup RelativeIdeal::to_semigroup() const {
    if (min_ != 0) fail(ErrorKind::NotUnitary, "ideal " + to_string() + " does not have minimum 0");
    std::vector<std::uint8_t> table(static_cast<std::size_t>(std::max(1, conductor_)), 1);
    for (int z = 0; z < conductor_; ++z) table[static_cast<std::size_t>(z)] = contains(z);
    return NumericalSemigroup::from_membership(table);
}

std::string RelativeIdeal::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k) out << ',';
        out << gens_[k];
    }
    out << "}+H";
    return out.str();
}

RelativeIdeal ideal_from_generators(SemigroupPtr base, const std::vector<int>& gens) {
    return RelativeIdeal::from_generators(std::move(base), gens);
}

RelativeIdeal ideal_sum(const RelativeIdeal& i, const RelativeIdeal& j) {
    require_same_base(i, j);
    const int lo = std::min(i.min_element(), j.min_element());
    const int hi = std::max(lo, std::min(i.conductor(), j.conductor()));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(hi - lo));
    for (int z = lo; z < hi; ++z) bits[static_cast<std::size_t>(z - lo)] = i.contains(z) || j.contains(z);
    return RelativeIdeal::from_window(i.base_ptr(), lo, bits);
}

RelativeIdeal ideal_product(const RelativeIdeal& i, const RelativeIdeal& j) {
    require_same_base(i, j);
    const int lo = i.min_element() + j.min_element();
    const int hi = i.min_element() + j.conductor();
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(std::max(0, hi - lo)), 0);
    for (int z = lo; z < hi; ++z) {
        for (int g : i.generators()) {
            if (j.contains(static_cast<long long>(z) - g)) {
                bits[static_cast<std::size_t>(z - lo)] = 1;
                break;
            }
        }
    }
    return RelativeIdeal::from_window(i.base_ptr(), lo, bits);
}

RelativeIdeal colon(const RelativeIdeal& i, const RelativeIdeal& j) {
    require_same_base(i, j);
    // Below min(I) - min(J) nothing qualifies; from cond(I) - min(J) on everything does.
    const int lo = i.min_element() - j.min_element();
    const int hi = std::max(lo, i.conductor() - j.min_element());
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(hi - lo), 0);
    for (int z = lo; z < hi; ++z) {
        bool inside = true;
        for (int g : j.generators()) {
            if (!i.contains(static_cast<long long>(z) + g)) {
                inside = false;
                break;
            }
        }
        bits[static_cast<std::size_t>(z - lo)] = inside;
    }
    return RelativeIdeal::from_window(i.base_ptr(), lo, bits);
}

RelativeIdeal power(const RelativeIdeal& i, int n) {
    if (n < 1) fail(ErrorKind::PreconditionFailed, "power exponent must be >= 1");
    RelativeIdeal result = i;
    for (int k = 1; k < n; ++k) result = ideal_product(result, i);
    return result;
}

RingClosure ring_closure(const RelativeIdeal& i) {
    if (i.min_element() != 0) {
        fail(ErrorKind::NotUnitary, "ring closure needs R ⊆ I ⊆ ℤ≥0, got " + i.to_string());
    }
    RelativeIdeal current = i;
    int n = 1;
    while (true) {
        RelativeIdeal next = ideal_product(current, i);
        if (next == current) return {std::move(current), n};
        current = std::move(next);
        ++n;
    }
}

bool is_subset(const RelativeIdeal& i, const RelativeIdeal& j) {
    require_same_base(i, j);
    if (i.min_element() < j.min_element()) return false;
    const int hi = std::max(i.conductor(), j.conductor());
    for (int z = i.min_element(); z < hi; ++z) {
        if (i.contains(z) && !j.contains(z)) return false;
    }
    return true;
}

int length_quotient(const RelativeIdeal& i, const RelativeIdeal& j) {
    if (!is_subset(j, i)) {
        fail(ErrorKind::NotContained, j.to_string() + " is not contained in " + i.to_string());
    }
    const int hi = std::max(i.conductor(), j.conductor());
    int count = 0;
    for (int z = i.min_element(); z < hi; ++z) count += i.contains(z) && !j.contains(z);
    return count;
}

int colength(const RelativeIdeal& a) {
    return length_quotient(RelativeIdeal::whole_ring(a.base_ptr()), a);
}

int minimal_generators_count(const RelativeIdeal& i) { return i.generator_count(); }

int min_gens_of_quotient(const RelativeIdeal& i, const RelativeIdeal& j) {
    if (!is_subset(j, i)) {
        fail(ErrorKind::NotContained, j.to_string() + " is not contained in " + i.to_string());
    }
    int count = 0;
    for (int z = i.min_element(); z < j.conductor(); ++z) {
        if (i.contains(z) && !j.contains(z) && !in_maximal_times(i, z)) ++count;
    }
    return count;
}

bool is_free_quotient(const RelativeIdeal& i, const RelativeIdeal& j, const RelativeIdeal& a) {
    require_same_base(i, a);
    if (!is_subset(a, RelativeIdeal::whole_ring(a.base_ptr()))) {
        fail(ErrorKind::NotContained, a.to_string() + " is not an ideal of " + a.base().to_string());
    }
    const int length = length_quotient(i, j);
    if (!is_subset(ideal_product(a, i), j)) {
        fail(ErrorKind::DoesNotAnnihilate, a.to_string() + " does not annihilate " + i.to_string() +
                                               " / " + j.to_string());
    }
    return length == min_gens_of_quotient(i, j) * colength(a);
}

RelativeIdeal shift(const RelativeIdeal& i, int k) {
    const int lo = i.min_element();
    const int hi = i.conductor();
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(hi - lo));
    for (int z = lo; z < hi; ++z) bits[static_cast<std::size_t>(z - lo)] = i.contains(z);
    return RelativeIdeal::from_window(i.base_ptr(), lo + k, bits);
}

bool equals(const RelativeIdeal& i, const RelativeIdeal& j) {
    require_same_base(i, j);
    return i == j;
}

} // namespace ggl
