#include "ggl/error.hpp"
#include "ggl/numerical_semigroup.hpp"

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using ggl::ErrorKind;
using ggl::NumericalSemigroup;

using testing::kind_of;

TEST_CASE("construction normalizes generators") {
    const NumericalSemigroup h({5, 6, 8});
    CHECK(h.generators() == std::vector<int>{5, 6, 8});
    CHECK(h.frobenius() == 9);
    CHECK(h.gaps() == std::vector<int>{1, 2, 3, 4, 7, 9});
    CHECK(h.genus() == 6);
    CHECK(h.gaps() == oracle::gaps({5, 6, 8}));

    const NumericalSemigroup redundant({4, 13, 14, 15, 19});
    CHECK(redundant.generators() == std::vector<int>{4, 13, 14, 15});
    CHECK(redundant.raw_generators() == std::vector<int>{4, 13, 14, 15, 19});
}

TEST_CASE("the whole line") {
    const NumericalSemigroup h({1});
    CHECK(h.generators() == std::vector<int>{1});
    CHECK(h.frobenius() == -1);
    CHECK(h.gaps().empty());
    CHECK(h.pseudo_frobenius() == std::vector<int>{-1});
    CHECK(h.type() == 1);
    CHECK(h.is_symmetric());
    CHECK(h.is_whole_line());
    CHECK(h.contains(0));
    CHECK(h.apery_set(1) == std::vector<int>{0});
    CHECK(ggl::overrings(h).size() == 1);
}

TEST_CASE("bad generator lists") {
    CHECK(kind_of([] { NumericalSemigroup({4, 6}); }) == ErrorKind::GcdNotOne);
    CHECK(kind_of([] { NumericalSemigroup(std::vector<int>{}); }) == ErrorKind::EmptyGenerators);
    CHECK(kind_of([] { NumericalSemigroup({0, 3}); }) == ErrorKind::PreconditionFailed);
    try {
        NumericalSemigroup({4, 6});
    } catch (const ggl::Error& e) {
        CHECK(std::string(e.what()) == "generators have gcd 2");
    }
}

TEST_CASE("membership") {
    const NumericalSemigroup h({5, 6, 8});
    CHECK_FALSE(h.contains(7));
    CHECK(h.contains(10));
    CHECK_FALSE(h.contains(-1));
    CHECK(h.contains(1000));
}

TEST_CASE("Apery sets") {
    CHECK(NumericalSemigroup({5, 6, 8}).apery_set(5) == std::vector<int>{0, 6, 12, 8, 14});
    CHECK(NumericalSemigroup({3, 7, 8}).apery_set(3) == std::vector<int>{0, 7, 8});
    CHECK(kind_of([] { NumericalSemigroup({5, 6, 8}).apery_set(7); }) == ErrorKind::NotAMember);
    CHECK(NumericalSemigroup({5, 6, 8}).apery_set(6) == oracle::apery({5, 6, 8}, 6));
}

TEST_CASE("pseudo-Frobenius numbers and invariants") {
    CHECK(NumericalSemigroup({5, 6, 8}).pseudo_frobenius() == std::vector<int>{7, 9});
    CHECK(NumericalSemigroup({4, 7, 9, 10}).pseudo_frobenius() == std::vector<int>{3, 5, 6});

    const auto a = ggl::basic_invariants(NumericalSemigroup({5, 6, 8}));
    CHECK(a.multiplicity == 5);
    CHECK(a.embedding_dimension == 3);
    CHECK(a.type == 2);
    CHECK_FALSE(a.is_symmetric);
    CHECK_FALSE(a.has_minimal_multiplicity);

    const auto b = ggl::basic_invariants(NumericalSemigroup({3, 7, 8}));
    CHECK(b.type == 2);
    CHECK(b.has_minimal_multiplicity);

    const auto c = ggl::basic_invariants(NumericalSemigroup({2, 3}));
    CHECK(c.type == 1);
    CHECK(c.is_symmetric);
    CHECK(c.has_minimal_multiplicity);
}

TEST_CASE("overrings") {
    auto listing = [](std::vector<int> gens) {
        std::vector<std::vector<int>> out;
        for (const auto& t : ggl::overrings(NumericalSemigroup(gens))) out.push_back(t.generators());
        return out;
    };
    CHECK(listing({2, 3}) == std::vector<std::vector<int>>{{2, 3}, {1}});
    CHECK(listing({3, 4, 5}) == std::vector<std::vector<int>>{{3, 4, 5}, {2, 3}, {1}});

    // Brute force: every subset of the gaps whose union with H is closed.
    const NumericalSemigroup h({4, 5, 11});
    const auto& g = h.gaps();
    std::set<std::vector<int>> expected;
    for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
        std::vector<int> kept;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!(mask >> i & 1u)) kept.push_back(g[i]);
        }
        auto member = [&](int z) { return z >= 0 && !std::binary_search(kept.begin(), kept.end(), z); };
        bool closed = true;
        for (int x = 1; x <= h.frobenius() && closed; ++x) {
            for (int y = x; x + y <= h.frobenius() && closed; ++y) {
                if (member(x) && member(y) && !member(x + y)) closed = false;
            }
        }
        if (closed) expected.insert(kept);
    }
    std::set<std::vector<int>> found;
    for (const auto& t : ggl::overrings(h)) found.insert(t.gaps());
    CHECK(found == expected);
}

TEST_CASE("invariants against oracles on small semigroups") {
    for (const auto& gens : corpus::kunz(5, 25)) {
        const NumericalSemigroup h(gens);
        CAPTURE(h.to_string());
        CHECK(h.frobenius() == oracle::frobenius(gens));
        CHECK(h.generators() == oracle::minimal_generators(gens));
        CHECK(h.pseudo_frobenius() == oracle::pseudo_frobenius(gens));
        // Symmetric iff z ∈ H xor f − z ∈ H for every z.
        bool pairing = true;
        for (int z = 0; z <= h.frobenius(); ++z) pairing = pairing && (h.contains(z) != h.contains(h.frobenius() - z));
        CHECK(h.is_symmetric() == pairing);
        // Minimal multiplicity iff Ap_e = {0} ∪ gens ∖ {e}.
        auto ap = h.apery_set(h.multiplicity());
        std::sort(ap.begin(), ap.end());
        std::vector<int> expected{0};
        expected.insert(expected.end(), h.generators().begin() + 1, h.generators().end());
        CHECK(h.has_minimal_multiplicity() == (ap == expected));
        if (!h.is_whole_line()) CHECK(h.frobenius() + 1 <= h.multiplicity() * h.genus());
    }
}
