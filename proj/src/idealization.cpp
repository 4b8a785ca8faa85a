#include "ggl/idealization.hpp"

#include "ggl/error.hpp"

namespace ggl {

PairComponents canonical_pair_components(const RelativeIdeal& a) {
    const auto base = a.base_ptr();
    if (a.contains(0) || !is_subset(a, RelativeIdeal::whole_ring(base))) {
        fail(ErrorKind::NotMPrimary, a.to_string() + " is not an 𝔪-primary ideal of " + a.base().to_string());
    }
    const auto k = canonical_ideal(base);
    auto k_colon_a = colon(k, a);
    auto squared = ideal_product(k_colon_a, k_colon_a);
    auto times_k = ideal_product(k_colon_a, k);
    auto a_colon_k = colon(a, k);
    auto a_colon_k_colon_a = colon(a, k_colon_a);
    return {std::move(k_colon_a), std::move(squared), std::move(times_k), std::move(a_colon_k),
            std::move(a_colon_k_colon_a)};
}

IdealizationReport idealization_is_ggl(const SemigroupPtr& h, const NumericalSemigroup& t) {
    if (h->is_symmetric()) fail(ErrorKind::PreconditionFailed, h->to_string() + " is Gorenstein");
    if (t == *h) fail(ErrorKind::PreconditionFailed, "the overring must differ from " + h->to_string());
    for (int z = 0; z <= h->frobenius(); ++z) {
        if (h->contains(z) && !t.contains(z)) {
            fail(ErrorKind::PreconditionFailed, t.to_string() + " is not an overring of " + h->to_string());
        }
    }
    const auto data = canonical_data(h);
    const auto t_ideal = RelativeIdeal::from_semigroup(h, t);
    if (!is_subset(data.canonical, t_ideal)) {
        fail(ErrorKind::PreconditionFailed, t.to_string() + " does not contain the canonical ideal " +
                                                data.canonical.to_string());
    }
    const auto a = colon(data.ring, t_ideal);
    const auto rep = analyze(h);

    IdealizationReport out;
    out.base_generators = h->generators();
    out.overring_generators = t.generators();
    out.ideal_generators = a.generators();
    out.overring_length = length_quotient(t_ideal, data.ring);
    out.overring_mu = min_gens_of_quotient(t_ideal, data.ring);
    out.ideal_colength = colength(a);
    out.route1 = rep.ggl && data.blowup == t_ideal;
    out.route2 = is_free_quotient(t_ideal, data.ring, a);
    if (out.route1 != out.route2) {
        fail(ErrorKind::ConsistencyFailure, "idealization routes disagree for " + h->to_string() + " and " +
                                                t.to_string());
    }
    out.verdict = out.route1;
    if (out.verdict && !(a == data.conductor)) {
        fail(ErrorKind::ConsistencyFailure, "GGL idealization with R:T != 𝔠 for " + h->to_string());
    }
    return out;
}

IdealizationReport idealization_of_conductor(const SemigroupPtr& h) {
    return idealization_is_ggl(h, blowup_algebra(h).semigroup);
}

} // namespace ggl
