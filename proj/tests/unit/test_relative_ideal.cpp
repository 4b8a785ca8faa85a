#include "ggl/canonical.hpp"
#include "ggl/relative_ideal.hpp"

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ggl;
using testing::ideal;
using testing::kind_of;
using testing::semigroup;

TEST_CASE("ideals from generators") {
    const auto h = semigroup({5, 6, 8});
    const auto e = ideal(h, {6, 8, 10});
    CHECK(e.min_element() == 6);
    CHECK(e.conductor() == 10);
    for (int z : {6, 8, 10, 11, 12, 13}) CHECK(e.contains(z));
    for (int z : {5, 7, 9}) CHECK_FALSE(e.contains(z));
    CHECK(ideal(h, {0}) == RelativeIdeal::whole_ring(h));
    CHECK(ideal(h, {0, 2, 4}).generators() == std::vector<int>{0, 2, 4});
    CHECK(kind_of([&] { ideal(h, {}); }) == ErrorKind::EmptyGenerators);
}

TEST_CASE("sums") {
    const auto h = semigroup({5, 6, 8});
    CHECK(ideal_sum(ideal(h, {0}), ideal(h, {2})).generators() == std::vector<int>{0, 2});
    const auto i = ideal(h, {6, 9});
    CHECK(ideal_sum(i, i) == i);
    CHECK(ideal_sum(ideal(h, {6, 8, 10}), ideal(h, {0})).generators() == std::vector<int>{0});
    CHECK(kind_of([&] { ideal_sum(i, ideal(semigroup({2, 3}), {0})); }) == ErrorKind::BaseMismatch);
}

TEST_CASE("products") {
    const auto h = semigroup({5, 6, 8});
    const auto k = ideal(h, {0, 2});
    CHECK(ideal_product(k, k).generators() == std::vector<int>{0, 2, 4});
    const auto i = ideal(h, {6, 9});
    CHECK(ideal_product(i, ideal(h, {0})) == i);

    const auto g = semigroup({6, 7, 8, 9});
    const auto j = ideal(g, {6, 9});
    CHECK(ideal_product(j, j) == shift(j, 6));
}

TEST_CASE("colons") {
    const auto h = semigroup({5, 6, 8});
    const auto ring = RelativeIdeal::whole_ring(h);
    const auto k = ideal(h, {0, 2});
    CHECK(colon(ring, k).generators() == std::vector<int>{6, 8, 10});
    const auto i = ideal(h, {-3, 4});
    CHECK(is_subset(ring, colon(i, i)));

    const auto g = semigroup({3, 7, 8});
    const auto kg = canonical_ideal(g);
    const auto whole = RelativeIdeal::from_semigroup(g, NumericalSemigroup({1}));
    CHECK(colon(kg, colon(RelativeIdeal::whole_ring(g), kg)) == whole);
}

TEST_CASE("powers and ring closure") {
    const auto h = semigroup({4, 7, 9, 10});
    const auto k = ideal(h, {0, 1, 3});
    const auto whole = RelativeIdeal::from_semigroup(h, NumericalSemigroup({1}));
    CHECK(power(k, 2) == whole);
    CHECK(power(k, 1) == k);
    CHECK(power(k, 3) == power(k, 2));
    CHECK(equals(ideal_product(k, k), power(k, 3)));
    CHECK(kind_of([&] { power(k, 0); }) == ErrorKind::PreconditionFailed);

    const auto a = semigroup({5, 6, 8});
    const auto ca = ring_closure(ideal(a, {0, 2}));
    CHECK(ca.reduction_number == 2);
    CHECK(ca.closure.to_semigroup().generators() == std::vector<int>{2, 5});

    const auto b = semigroup({3, 7, 8});
    const auto cb = ring_closure(ideal(b, {0, 1}));
    CHECK(cb.reduction_number == 2);
    CHECK(cb.closure.to_semigroup().is_whole_line());

    const auto c = semigroup({2, 3});
    const auto cc = ring_closure(RelativeIdeal::whole_ring(c));
    CHECK(cc.reduction_number == 1);
    CHECK(cc.closure == RelativeIdeal::whole_ring(c));

    CHECK(kind_of([&] { ring_closure(ideal(a, {5})); }) == ErrorKind::NotUnitary);
}

TEST_CASE("lengths and generator counts") {
    const auto h = semigroup({5, 6, 8});
    const auto data = canonical_data(h);
    CHECK(length_quotient(data.blowup, data.ring) == 4);
    CHECK(length_quotient(data.canonical, data.ring) == 2);
    CHECK(length_quotient(data.ring, data.ring) == 0);
    CHECK(kind_of([&] { length_quotient(data.ring, data.blowup); }) == ErrorKind::NotContained);

    CHECK(minimal_generators_count(ideal(h, {6, 8, 10})) == 3);
    CHECK(minimal_generators_count(data.ring) == 1);

    const auto g = semigroup({6, 7, 8, 9});
    const auto whole = RelativeIdeal::from_semigroup(g, NumericalSemigroup({1}));
    CHECK(min_gens_of_quotient(whole, RelativeIdeal::whole_ring(g)) == 5);
}

TEST_CASE("freeness of quotients") {
    const auto a = canonical_data(semigroup({5, 6, 8}));
    CHECK(is_free_quotient(a.canonical, a.ring, a.conductor));
    const auto b = canonical_data(semigroup({6, 7, 8, 9}));
    CHECK_FALSE(is_free_quotient(b.canonical, b.ring, b.conductor));
    CHECK(is_free_quotient(a.canonical, a.canonical, a.maximal));
    CHECK(kind_of([&] { is_free_quotient(a.canonical, a.ring, a.maximal); }) == ErrorKind::DoesNotAnnihilate);
    CHECK(kind_of([&] { is_free_quotient(a.canonical, a.ring, a.canonical); }) == ErrorKind::NotContained);
}

TEST_CASE("shifts and comparisons") {
    const auto h = semigroup({3, 7, 8});
    CHECK(shift(ideal(h, {3, 7, 8}), -3).generators() == std::vector<int>{0, 4, 5});
    const auto i = ideal(h, {3, 7});
    CHECK(shift(i, 0) == i);
    CHECK(is_subset(ideal(h, {6}), ideal(h, {3})));
    CHECK_FALSE(is_subset(ideal(h, {3}), ideal(h, {6})));
}

namespace {

struct RandomIdeals {
    explicit RandomIdeals(unsigned seed) : rng(seed) {}

    RelativeIdeal any(const SemigroupPtr& h) {
        std::uniform_int_distribution<int> count(1, 3);
        std::uniform_int_distribution<int> value(-4, h->frobenius() + 4);
        std::vector<int> gens(static_cast<std::size_t>(count(rng)));
        for (auto& g : gens) g = value(rng);
        return RelativeIdeal::from_generators(h, gens);
    }

    // An ideal of H: generated by members.
    RelativeIdeal inside(const SemigroupPtr& h) {
        std::uniform_int_distribution<int> count(1, 3);
        std::uniform_int_distribution<int> value(0, h->frobenius() + 2 * h->multiplicity());
        std::vector<int> gens;
        while (static_cast<int>(gens.size()) < count(rng) || gens.empty()) {
            const int z = value(rng);
            if (h->contains(z)) gens.push_back(z);
        }
        return RelativeIdeal::from_generators(h, gens);
    }

    std::mt19937 rng;
};

} // namespace

TEST_CASE("ideal arithmetic properties on random ideals") {
    RandomIdeals pick(20240917u);
    for (unsigned index = 0; index < 120; ++index) {
        const auto h = semigroup(corpus::random_generators(index, 20));
        CAPTURE(h->to_string());
        const auto ring = RelativeIdeal::whole_ring(h);
        const auto k = canonical_ideal(h);
        const auto i = pick.any(h);
        const auto j = ideal_product(i, pick.inside(h));
        const auto e = pick.any(h);

        // Canonical duality.
        CHECK(length_quotient(i, j) == length_quotient(colon(k, j), colon(k, i)));
        CHECK(colon(k, colon(k, i)) == i);
        CHECK(is_subset(ring, colon(i, i)));
        CHECK(is_subset(i, colon(ring, colon(ring, i))));
        CHECK(ideal_product(i, ideal_sum(j, e)) == ideal_sum(ideal_product(i, j), ideal_product(i, e)));
        CHECK(ideal_product(i, e) == ideal_product(e, i));

        const auto closure = ring_closure(k);
        const auto again = ring_closure(closure.closure);
        CHECK(again.closure == closure.closure);
        CHECK(again.reduction_number == 1);

        // ℓ(I / t^x I) = x for x ∈ H.
        for (int shift_by : {0, h->multiplicity(), h->generators().back(), h->conductor()}) {
            CHECK(length_quotient(i, shift(i, shift_by)) == shift_by);
        }
    }
}

TEST_CASE("products and colons against the window oracle") {
    RandomIdeals pick(77u);
    for (unsigned index = 0; index < 60; ++index) {
        const auto gens = corpus::random_generators(1000 + index, 15);
        const auto h = semigroup(gens);
        CAPTURE(h->to_string());
        const auto i = pick.any(h);
        const auto j = pick.any(h);
        const int w = 4 * (h->frobenius() + 12);
        const auto oi = oracle::ideal(gens, i.generators(), -w, 3 * w);
        const auto oj = oracle::ideal(gens, j.generators(), -w, 3 * w);
        const auto oc = oracle::colon(oi, oj, -w, w);
        const auto c = colon(i, j);
        const auto p = ideal_product(i, j);
        bool same_colon = true;
        bool same_product = true;
        for (int z = -w / 2; z < w; ++z) {
            same_colon = same_colon && c.contains(z) == oc.contains(z);
            bool in_product = false;
            for (int x = -w; x < 2 * w && !in_product; ++x) in_product = oi.contains(x) && oj.contains(z - x);
            same_product = same_product && p.contains(z) == in_product;
        }
        CHECK(same_colon);
        CHECK(same_product);
        CHECK(i.generators() == oracle::ideal_generators(oi, gens, -w, w));
    }
}
