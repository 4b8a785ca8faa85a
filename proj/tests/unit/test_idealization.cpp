#include "ggl/idealization.hpp"

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"

#include <doctest.h>

using namespace ggl;
using testing::ideal;
using testing::kind_of;
using testing::semigroup;

TEST_CASE("pair components") {
    const auto h = semigroup({3, 7, 8});
    const auto c = canonical_data(h).conductor;
    const auto p = canonical_pair_components(c);
    CHECK(p.k_colon_a == RelativeIdeal::from_semigroup(h, NumericalSemigroup({1})));
    CHECK(p.a_colon_k == c);
    CHECK(p.a_colon_k_colon_a == c);

    const auto g = semigroup({5, 6, 8});
    const auto q = canonical_pair_components(canonical_data(g).conductor);
    CHECK(q.k_colon_a.generators() == std::vector<int>{0, 2, 4});
    CHECK(q.k_colon_a_squared == q.k_colon_a);

    const auto cusp = semigroup({2, 3});
    const auto m = RelativeIdeal::maximal_ideal(cusp);
    CHECK(canonical_pair_components(m).k_colon_a == colon(RelativeIdeal::whole_ring(cusp), m));

    CHECK(kind_of([&] { canonical_pair_components(RelativeIdeal::whole_ring(h)); }) == ErrorKind::NotMPrimary);
}

TEST_CASE("idealization of the conductor") {
    const auto a = idealization_of_conductor(semigroup({3, 7, 8}));
    CHECK(a.verdict);
    CHECK(a.route1);
    CHECK(a.route2);
    CHECK(a.ideal_generators == std::vector<int>{6, 7, 8});

    const auto b = idealization_of_conductor(semigroup({6, 7, 8, 9}));
    CHECK_FALSE(b.verdict);
    CHECK(b.overring_length == 7);
    CHECK(b.overring_mu == 5);
    CHECK(b.ideal_colength == 5);

    const auto c = idealization_of_conductor(semigroup({3, 4, 5}));
    CHECK(c.verdict);

    CHECK(kind_of([] { idealization_of_conductor(semigroup({2, 3})); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("idealization preconditions") {
    const auto h = semigroup({3, 7, 8});
    CHECK(kind_of([&] { idealization_is_ggl(h, *h); }) == ErrorKind::PreconditionFailed);
    // ⟨3,4⟩ is not an overring of ⟨3,7,8⟩ containing K = {0,1} + H.
    CHECK(kind_of([&] { idealization_is_ggl(h, NumericalSemigroup({3, 5, 7})); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("idealization verdict equals GGL on the conductor") {
    int seen = 0;
    for (const auto& gens : corpus::kunz(5, 25)) {
        const auto h = semigroup(gens);
        if (h->type() == 1) continue;
        CAPTURE(gens);
        const auto rep = classify(h);
        const auto idl = idealization_of_conductor(h);
        CHECK(idl.verdict == rep.ggl);
        if (idl.verdict) CHECK(idl.ideal_generators == rep.conductor_generators);
        ++seen;
    }
    CHECK(seen > 100);
}

TEST_CASE("routes agree over every overring containing K") {
    for (const auto& gens : corpus::kunz(4, 14)) {
        const auto h = semigroup(gens);
        if (h->type() == 1) continue;
        const auto k = canonical_data(h).canonical;
        for (const auto& t : overrings(*h)) {
            if (t.generators() == h->generators()) continue;
            if (!is_subset(k, RelativeIdeal::from_semigroup(h, t))) continue;
            CAPTURE(gens);
            const auto r = idealization_is_ggl(h, t);
            CHECK(r.route1 == r.route2);
        }
    }
}
