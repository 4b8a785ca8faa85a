#include "ggl/canonical.hpp"

#include "ggl/error.hpp"

#include <algorithm>

namespace ggl {

CanonicalData canonical_data(const SemigroupPtr& h) {
    const int f = h->frobenius();
    std::vector<int> k_gens;
    for (int c : h->pseudo_frobenius()) k_gens.push_back(f - c);

    auto ring = RelativeIdeal::whole_ring(h);
    auto maximal = RelativeIdeal::maximal_ideal(h);
    auto k = RelativeIdeal::from_generators(h, k_gens);
    auto closure = ring_closure(k);
    auto conductor = colon(ring, closure.closure);
    auto r_colon_k = colon(ring, k);
    auto trace = ideal_product(r_colon_k, k);
    return CanonicalData{h,
                         std::move(ring),
                         std::move(maximal),
                         std::move(k),
                         std::move(closure.closure),
                         closure.reduction_number,
                         std::move(conductor),
                         std::move(r_colon_k),
                         std::move(trace)};
}

RelativeIdeal canonical_ideal(const SemigroupPtr& h) { return canonical_data(h).canonical; }

BlowupAlgebra blowup_algebra(const SemigroupPtr& h) {
    auto data = canonical_data(h);
    return {data.blowup.to_semigroup(), data.reduction_number};
}

RelativeIdeal conductor_ideal(const SemigroupPtr& h) {
    auto data = canonical_data(h);
    if (!(colon(data.canonical, data.blowup) == data.conductor)) {
        fail(ErrorKind::ConsistencyFailure,
             "R:S differs from K:S for " + h->to_string() + " (expected 𝔠 = K:S)");
    }
    return data.conductor;
}

RelativeIdeal trace_of_canonical(const SemigroupPtr& h) { return canonical_data(h).trace; }

std::vector<int> socle_exponents(const RelativeIdeal& a) {
    const auto& h = a.base();
    auto ring = RelativeIdeal::whole_ring(a.base_ptr());
    if (!is_subset(a, ring)) fail(ErrorKind::NotContained, a.to_string() + " is not contained in R");
    if (a.contains(0)) fail(ErrorKind::NotMPrimary, a.to_string() + " is the unit ideal");
    std::vector<int> result;
    for (int x = 0; x < a.conductor(); ++x) {
        if (!h.contains(x) || a.contains(x)) continue;
        bool killed = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](int g) { return a.contains(x + g); });
        if (killed) result.push_back(x);
    }
    return result;
}

namespace {

// Route C: R/𝔠 is Gorenstein with socle t^b and f + b = c_i + c_{r−i}.
bool pf_symmetry_route(const NumericalSemigroup& h, const std::vector<int>& socle) {
    if (socle.size() != 1) return false;
    const auto& pf = h.pseudo_frobenius();
    const int r = static_cast<int>(pf.size());
    const int b = socle.front();
    for (int i = 1; i <= r - 1; ++i) {
        if (h.frobenius() + b != pf[static_cast<std::size_t>(i - 1)] + pf[static_cast<std::size_t>(r - i - 1)]) {
            return false;
        }
    }
    return true;
}

} // namespace

bool ClassificationReport::consistent() const {
    return std::all_of(route_consistency.begin(), route_consistency.end(),
                       [](const auto& check) { return check.second; });
}

std::string ClassificationReport::first_failure() const {
    for (const auto& [name, ok] : route_consistency) {
        if (!ok) return name;
    }
    return {};
}

ClassificationReport analyze(const SemigroupPtr& h) {
    const auto data = canonical_data(h);
    const auto& k = data.canonical;
    const auto k2 = ideal_product(k, k);
    const auto k3 = ideal_product(k2, k);
    const auto s = data.blowup.to_semigroup();

    ClassificationReport rep;
    rep.raw_generators = h->raw_generators();
    rep.generators = h->generators();
    rep.invariants = h->invariants();
    rep.pseudo_frobenius = h->pseudo_frobenius();
    rep.canonical_generators = k.generators();
    rep.canonical_reduction_number = data.reduction_number;
    rep.canonical_square_excess = length_quotient(k2, k);
    rep.blowup_generators = s.generators();
    rep.conductor_generators = data.conductor.generators();
    rep.conductor_colength = colength(data.conductor);
    rep.trace_generators = data.trace.generators();
    rep.trace_colength = colength(data.trace);
    rep.e1 = length_quotient(data.blowup, data.ring);

    const int r = h->type();
    const bool stable = k2 == k3;
    rep.gorenstein = r == 1;
    rep.minimal_multiplicity = h->has_minimal_multiplicity();
    rep.agl = rep.gorenstein || is_subset(ideal_product(data.maximal, k), data.ring);
    rep.two_agl = stable && rep.canonical_square_excess == 2;
    rep.ngl = is_subset(data.maximal, data.trace);

    std::vector<int> socle;
    bool route_free = true;
    bool route_e1 = true;
    bool route_pf = true;
    if (!rep.gorenstein) {
        socle = socle_exponents(data.conductor);
        route_free = is_free_quotient(k, data.ring, data.conductor);
        route_e1 = rep.e1 == rep.conductor_colength * r;
        route_pf = pf_symmetry_route(*h, socle);
    }
    rep.ggl = rep.gorenstein || route_free;

    if (rep.ggl && !rep.gorenstein) {
        GglWitness w;
        w.conductor_generators = rep.conductor_generators;
        for (int i = 0; i + 1 < r; ++i) w.basis_exponents.push_back(h->frobenius() - rep.pseudo_frobenius[static_cast<std::size_t>(i)]);
        w.socle = socle.empty() ? -1 : socle.front();
        w.identity_holds = route_pf;
        rep.witness = std::move(w);
    }

    auto& checks = rep.route_consistency;
    {
        const bool k_is_r = k == data.ring;
        const bool k_idempotent = k2 == k;
        const bool c_is_r = data.conductor == data.ring;
        const bool e1_zero = rep.e1 == 0;
        checks.emplace_back("gorenstein_equivalence", rep.gorenstein == k_is_r && k_is_r == k_idempotent &&
                                                          k_idempotent == c_is_r && c_is_r == e1_zero);
    }
    checks.emplace_back("conductor_colon", colon(k, data.blowup) == data.conductor);
    checks.emplace_back("ggl_routes", route_free == route_e1 && route_e1 == route_pf);
    {
        const bool trace_is_colon = data.trace == data.ring_colon_canonical;
        const bool colon_is_conductor = data.ring_colon_canonical == data.conductor;
        checks.emplace_back("trace_lemma", trace_is_colon == colon_is_conductor && colon_is_conductor == stable);
    }
    checks.emplace_back("implication_chain", (!rep.gorenstein || rep.agl) && (!rep.agl || rep.ggl));
    checks.emplace_back("agl_iff_ggl_and_ngl", rep.agl == (rep.ggl && rep.ngl));
    checks.emplace_back("conductor_in_trace", is_subset(data.conductor, data.trace));
    {
        bool ok = true;
        if (rep.ggl && !rep.gorenstein) {
            ok = data.trace == data.conductor && data.ring_colon_canonical == data.conductor &&
                 length_quotient(data.blowup, k) == rep.conductor_colength && socle.size() == 1;
        }
        checks.emplace_back("ggl_trace_conductor", ok);
    }
    checks.emplace_back("type_two_ggl_iff_stable", r != 2 || rep.ggl == stable);
    checks.emplace_back("multiplicity_le_3_ggl", h->multiplicity() > 3 || rep.ggl);
    checks.emplace_back("minmult_ggl_blowup_symmetric",
                        !(rep.minimal_multiplicity && rep.ggl && !rep.gorenstein) || s.is_symmetric());
    return rep;
}

ClassificationReport classify(const SemigroupPtr& h) {
    auto rep = analyze(h);
    if (!rep.consistent()) {
        fail(ErrorKind::ConsistencyFailure,
             "check '" + rep.first_failure() + "' failed for " + h->to_string());
    }
    return rep;
}

std::optional<GglWitness> ggl_witness(const SemigroupPtr& h) { return analyze(h).witness; }

} // namespace ggl
