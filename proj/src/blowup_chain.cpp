#include "ggl/blowup_chain.hpp"

#include "ggl/canonical.hpp"
#include "ggl/error.hpp"

#include <algorithm>

namespace ggl {

NumericalSemigroup endomorphism_semigroup(const NumericalSemigroup& h) {
    if (h.is_whole_line()) fail(ErrorKind::Trivial, "ℤ≥0 has no proper blow-up");
    const auto base = share(h);
    const auto m = RelativeIdeal::maximal_ideal(base);
    return colon(m, m).to_semigroup();
}

namespace {

ChainRecord make_record(int step, const NumericalSemigroup& h) {
    const auto rep = analyze(h);
    ChainRecord rec{step, h};
    rec.gorenstein = rep.gorenstein;
    rec.agl = rep.agl;
    rec.ggl = rep.ggl;
    rec.minimal_multiplicity = rep.minimal_multiplicity;
    rec.e = h.multiplicity();
    rec.v = h.embedding_dimension();
    rec.n = rep.trace_colength;
    return rec;
}

bool step_holds(const ChainRecord& from, const ChainRecord& to) {
    if (from.n == 1) return to.gorenstein;
    return to.ggl && !to.gorenstein && to.e == from.e && to.v == from.e && to.n == from.n - 1;
}

} // namespace

std::vector<ChainRecord> blowup_chain(const NumericalSemigroup& h, int cap) {
    std::vector<ChainRecord> chain;
    chain.push_back(make_record(0, h));
    while (!chain.back().gorenstein) {
        const int step = static_cast<int>(chain.size());
        if (step > cap) {
            fail(ErrorKind::StepCapExceeded,
                 "blow-up chain of " + h.to_string() + " exceeded " + std::to_string(cap) + " steps");
        }
        auto next = make_record(step, endomorphism_semigroup(chain.back().semigroup));
        auto& prev = chain.back();
        if (prev.ggl && prev.minimal_multiplicity) prev.step_theorem = step_holds(prev, next);
        chain.push_back(std::move(next));
    }
    return chain;
}

NumericalSemigroup forward_construction(const NumericalSemigroup& base, int e, int n) {
    std::vector<int> gens{e};
    for (int w : base.apery_set(e)) {
        if (w != 0) gens.push_back(w + n * e);
    }
    return NumericalSemigroup(gens);
}

Reconstruction reconstruct_base(const NumericalSemigroup& h) {
    const auto rep = classify(h);
    if (rep.gorenstein || !rep.ggl || !rep.minimal_multiplicity) {
        fail(ErrorKind::PreconditionFailed,
             h.to_string() + " must be non-Gorenstein, GGL and of minimal multiplicity");
    }
    const int e = h.multiplicity();
    const int n = rep.conductor_colength;
    std::vector<int> shifted;
    for (int g : h.generators()) {
        if (g == e) continue;
        if (g - n * e <= 0) {
            fail(ErrorKind::ConsistencyFailure, "generator " + std::to_string(g) + " of " + h.to_string() +
                                                    " is not above n·e");
        }
        shifted.push_back(g - n * e);
    }
    std::vector<int> gens{e};
    gens.insert(gens.end(), shifted.begin(), shifted.end());
    Reconstruction out{NumericalSemigroup(gens), n};
    out.is_symmetric = out.base.is_symmetric();

    auto apery = out.base.apery_set(e);
    std::sort(apery.begin(), apery.end());
    auto expected = shifted;
    expected.push_back(0);
    std::sort(expected.begin(), expected.end());
    out.apery_match = apery == expected;
    out.round_trip = forward_construction(out.base, e, n) == h;
    return out;
}

} // namespace ggl
