#include "ggl/ulrich.hpp"

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ggl;
using testing::ideal;
using testing::kind_of;
using testing::semigroup;

namespace {

using GenSet = std::set<std::vector<int>>;

// Tries every ideal a0 ∈ I ⊆ H∖{0} with min(I) = a0 and I ⊇ a0 + cond(H),
// for a0 up to 2·genus + e, and keeps those with I² = a0 + I, I ≠ a0 + H and
// ℓ(I/I²) = μ(I)·ℓ(R/I). Plain sets, nothing shared with the library.
GenSet brute_force_ulrich(const std::vector<int>& gens) {
    const int f = oracle::frobenius(gens);
    const int c = f + 1;
    const int e = *std::min_element(gens.begin(), gens.end());
    const int genus = static_cast<int>(oracle::gaps(gens).size());
    const auto mingens = oracle::minimal_generators(gens);
    const int top = 2 * (2 * genus + e + c) + 2 * e + 4;
    const auto h = oracle::members(gens, top);
    auto in_h = [&](int z) { return z >= 0 && (z > top || h[static_cast<std::size_t>(z)]); };

    GenSet found;
    for (int a0 = 1; a0 <= 2 * genus + e; ++a0) {
        if (!in_h(a0)) continue;
        std::vector<int> free_slots;
        for (int z = a0 + 1; z < a0 + c; ++z) {
            if (in_h(z)) free_slots.push_back(z);
        }
        const std::size_t k = free_slots.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<bool> in(static_cast<std::size_t>(top + 1), false);
            for (int z = a0 + c; z <= top; ++z) in[static_cast<std::size_t>(z)] = true;
            in[static_cast<std::size_t>(a0)] = true;
            for (std::size_t b = 0; b < k; ++b) {
                if (mask >> b & 1) in[static_cast<std::size_t>(free_slots[b])] = true;
            }
            auto member = [&](int z) { return z >= 0 && (z > top || in[static_cast<std::size_t>(z)]); };

            bool closed = true;
            for (int z = a0; z <= top && closed; ++z) {
                if (!member(z)) continue;
                for (int g : mingens) closed = closed && member(z + g);
            }
            if (!closed) continue;

            // Everything at or above 2·a0 + c lies in both I² and a0 + I.
            bool stable = true;
            bool principal = true;
            for (int z = 0; z < 2 * a0 + c && stable; ++z) {
                bool in_square = false;
                for (int x = a0; x <= z - a0 && !in_square; ++x) in_square = member(x) && member(z - x);
                stable = in_square == member(z - a0);
            }
            for (int z = a0; z < a0 + c; ++z) principal = principal && member(z) == in_h(z - a0);
            if (!stable || principal) continue;

            std::vector<int> igens;
            int colen = 0;
            for (int z = 0; z < a0 + c; ++z) {
                if (in_h(z) && !member(z)) ++colen;
            }
            for (int z = a0; z < a0 + c + e; ++z) {
                if (!member(z)) continue;
                bool reducible = false;
                for (int g : mingens) reducible = reducible || member(z - g);
                if (!reducible) igens.push_back(z);
            }
            if (a0 == static_cast<int>(igens.size()) * colen) found.insert(igens);
        }
    }
    return found;
}

GenSet generator_sets(const std::vector<UlrichCertificate>& certs) {
    GenSet out;
    for (const auto& cert : certs) out.insert(cert.generators);
    return out;
}

} // namespace

TEST_CASE("is_ulrich on reference ideals") {
    const auto h = semigroup({5, 6, 8});
    const auto c = is_ulrich(ideal(h, {10, 6, 8}));
    CHECK(c.verdict);
    CHECK(c.a0 == 6);
    CHECK(c.mu == 3);
    CHECK(c.colength == 2);
    CHECK(c.quotient_length == 6);
    CHECK_FALSE(c.failure.has_value());

    const auto m = is_ulrich(RelativeIdeal::maximal_ideal(h));
    CHECK_FALSE(m.verdict);
    REQUIRE(m.failure.has_value());
    CHECK(*m.failure == UlrichFailure::ReductionNumberExceedsOne);
    CHECK(to_string(*m.failure) == "reduction_number_exceeds_one");

    const auto g = semigroup({6, 7, 8, 9});
    CHECK(is_ulrich(ideal(g, {6, 9})).verdict);

    const auto cusp = semigroup({2, 3});
    CHECK(is_ulrich(RelativeIdeal::maximal_ideal(cusp)).verdict);

    const auto p = is_ulrich(ideal(h, {6}));
    CHECK_FALSE(p.verdict);
    CHECK(*p.failure == UlrichFailure::Principal);
}

TEST_CASE("is_ulrich rejects improper ideals") {
    const auto h = semigroup({3, 7, 8});
    CHECK(kind_of([&] { is_ulrich(RelativeIdeal::whole_ring(h)); }) == ErrorKind::NotProperIdeal);
    CHECK(kind_of([&] { is_ulrich(ideal(h, {1})); }) == ErrorKind::NotProperIdeal);
}

TEST_CASE("enumerate_ulrich reference sets") {
    CHECK(generator_sets(enumerate_ulrich(semigroup({3, 7, 8}))) == GenSet{{3, 7, 8}, {6, 7, 8}});
    CHECK(generator_sets(enumerate_ulrich(semigroup({5, 18, 26, 34, 42}))) ==
          GenSet{{5, 18, 26, 34, 42}, {10, 18, 26, 34, 42}});
    CHECK(generator_sets(enumerate_ulrich(semigroup({2, 3}))) == GenSet{{2, 3}});
    CHECK(enumerate_ulrich(semigroup({1})).empty());

    const auto list = enumerate_ulrich(semigroup({3, 7, 8}));
    REQUIRE(list.size() == 2);
    CHECK(list[0].a0 < list[1].a0);
    for (const auto& cert : list) {
        CHECK(cert.verdict);
        CHECK(cert.a0 == cert.mu * cert.colength);
    }
}

TEST_CASE("enumerate_ulrich agrees with exhaustive search") {
    int compared = 0;
    for (const auto& gens : corpus::kunz(5, 11)) {
        CAPTURE(gens);
        CHECK(generator_sets(enumerate_ulrich(semigroup(gens))) == brute_force_ulrich(gens));
        ++compared;
    }
    CHECK(compared > 50);
}

TEST_CASE("Ulrich ideals and the trace") {
    for (const auto& gens : corpus::kunz(5, 20)) {
        const auto h = semigroup(gens);
        if (h->type() == 1) continue;
        const auto data = canonical_data(h);
        CAPTURE(gens);
        for (const auto& cert : enumerate_ulrich(h)) {
            const auto i = ideal(h, cert.generators);
            if (cert.mu >= 3) CHECK(is_subset(data.trace, i));
            if (is_subset(i, data.conductor)) CHECK(i == data.conductor);
        }
    }
    // The two-generated exception: not contained in 𝔠.
    const auto g = semigroup({6, 7, 8, 9});
    CHECK_FALSE(is_subset(ideal(g, {6, 9}), canonical_data(g).conductor));
}

TEST_CASE("Ulrich sets of minimal-multiplicity GGL rings") {
    CHECK(ulrich_set_minmult_ggl(semigroup({3, 7, 8})) == std::vector<std::vector<int>>{{3, 7, 8}, {6, 7, 8}});
    CHECK(ulrich_set_minmult_ggl(semigroup({3, 4, 5})) == std::vector<std::vector<int>>{{3, 4, 5}});
    CHECK(ulrich_set_minmult_ggl(semigroup({5, 18, 26, 34, 42})).size() == 2);
    CHECK(kind_of([] { ulrich_set_minmult_ggl(semigroup({2, 3})); }) == ErrorKind::PreconditionFailed);
    CHECK(kind_of([] { ulrich_set_minmult_ggl(semigroup({5, 6, 8})); }) == ErrorKind::PreconditionFailed);
    CHECK(kind_of([] { ulrich_set_minmult_ggl(semigroup({4, 7, 9, 10})); }) == ErrorKind::PreconditionFailed);

    for (const auto& gens : corpus::kunz(6, 30)) {
        const auto h = semigroup(gens);
        const auto rep = classify(h);
        if (!rep.minimal_multiplicity || !rep.ggl || rep.gorenstein) continue;
        CAPTURE(gens);
        const auto formula = ulrich_set_minmult_ggl(h);
        CHECK(static_cast<int>(formula.size()) == rep.trace_colength);
        CHECK(generator_sets(enumerate_ulrich(h)) == GenSet(formula.begin(), formula.end()));
    }
}

TEST_CASE("trace_is_ulrich") {
    CHECK(trace_is_ulrich(semigroup({5, 6, 8})));
    CHECK_FALSE(trace_is_ulrich(semigroup({6, 7, 8, 9})));
    CHECK_FALSE(trace_is_ulrich(semigroup({4, 7, 9, 10})));
    CHECK(kind_of([] { trace_is_ulrich(semigroup({2, 3})); }) == ErrorKind::PreconditionFailed);

    for (const auto& gens : corpus::kunz(5, 25)) {
        const auto h = semigroup(gens);
        if (h->type() == 1) continue;
        const auto rep = classify(h);
        CAPTURE(gens);
        const bool s_symmetric = NumericalSemigroup(rep.blowup_generators).is_symmetric();
        CHECK(trace_is_ulrich(h) == (rep.ggl && s_symmetric));
    }
}
