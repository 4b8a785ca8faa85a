#include "ggl/verify.hpp"

#include "ggl/blowup_chain.hpp"
#include "ggl/error.hpp"
#include "ggl/herzog.hpp"
#include "ggl/idealization.hpp"
#include "ggl/ulrich.hpp"

#include <algorithm>
#include <functional>

namespace ggl {

namespace {

void guarded(RouteChecks& checks, const std::string& stage, const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::ConsistencyFailure && err.kind() != ErrorKind::StepCapExceeded) throw;
        checks.emplace_back(stage, false);
    }
}

bool ulrich_set_matches(const SemigroupPtr& h) {
    const auto expected = ulrich_set_minmult_ggl(h);
    const auto found = enumerate_ulrich(h);
    if (found.size() != expected.size()) return false;
    std::vector<RelativeIdeal> ideals;
    for (const auto& gens : expected) ideals.push_back(RelativeIdeal::from_generators(h, gens));
    for (const auto& cert : found) {
        const auto ideal = RelativeIdeal::from_generators(h, cert.generators);
        if (std::find(ideals.begin(), ideals.end(), ideal) == ideals.end()) return false;
    }
    // (i+1)e ∪ rest ⊆ i·e ∪ rest, so the formula set is a chain of length n.
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i) {
        if (!is_subset(ideals[i + 1], ideals[i]) || ideals[i + 1] == ideals[i]) return false;
    }
    return true;
}

} // namespace

RouteChecks verify_all(const NumericalSemigroup& h) {
    const auto base = share(h);
    RouteChecks checks;
    ClassificationReport rep;
    guarded(checks, "classification", [&] {
        rep = analyze(base);
        checks.insert(checks.end(), rep.route_consistency.begin(), rep.route_consistency.end());
    });
    if (!all_passed(checks)) return checks;

    if (!rep.gorenstein) {
        guarded(checks, "trace_ulrich_theorem", [&] { trace_is_ulrich(base); });
        guarded(checks, "conductor_idealization", [&] {
            checks.emplace_back("conductor_idealization_iff_ggl", idealization_of_conductor(base).verdict == rep.ggl);
        });
        if (rep.ggl && rep.minimal_multiplicity) {
            guarded(checks, "ulrich_set", [&] { checks.emplace_back("ulrich_set_formula", ulrich_set_matches(base)); });
            guarded(checks, "reconstruction", [&] {
                const auto rec = reconstruct_base(h);
                checks.emplace_back("reconstruction", rec.is_symmetric && rec.apery_match && rec.round_trip);
            });
        }
    }
    guarded(checks, "blowup_chain", [&] {
        const auto chain = blowup_chain(h);
        const bool ok = std::all_of(chain.begin(), chain.end(),
                                    [](const ChainRecord& r) { return r.step_theorem.value_or(true); });
        checks.emplace_back("blowup_chain_steps", ok);
        if (rep.ggl && rep.minimal_multiplicity && !rep.gorenstein) {
            checks.emplace_back("blowup_chain_length", static_cast<int>(chain.size()) == rep.trace_colength + 1);
        }
    });
    if (h.embedding_dimension() == 3 && !h.is_symmetric()) {
        guarded(checks, "three_generated", [&] {
            auto more = three_generated_checks(h);
            checks.insert(checks.end(), more.begin(), more.end());
        });
    }
    return checks;
}

bool all_passed(const RouteChecks& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string first_failed(const RouteChecks& checks) {
    for (const auto& [name, ok] : checks) {
        if (!ok) return name;
    }
    return {};
}

} // namespace ggl
