#include "ggl/ulrich.hpp"

#include "ggl/error.hpp"

#include <algorithm>

namespace ggl {

std::string to_string(UlrichFailure reason) {
    switch (reason) {
    case UlrichFailure::Principal: return "principal";
    case UlrichFailure::ReductionNumberExceedsOne: return "reduction_number_exceeds_one";
    case UlrichFailure::QuotientNotFree: return "quotient_not_free";
    }
    return "unknown";
}

UlrichCertificate is_ulrich(const RelativeIdeal& i) {
    const auto ring = RelativeIdeal::whole_ring(i.base_ptr());
    if (i.contains(0) || !is_subset(i, ring)) {
        fail(ErrorKind::NotProperIdeal, i.to_string() + " is not a proper ideal of " + i.base().to_string());
    }
    UlrichCertificate cert;
    cert.generators = i.generators();
    cert.a0 = i.min_element();
    cert.mu = i.generator_count();
    cert.colength = colength(i);

    const auto square = ideal_product(i, i);
    cert.quotient_length = length_quotient(i, square);
    if (cert.mu < 2) {
        cert.failure = UlrichFailure::Principal;
    } else if (!(square == shift(i, cert.a0))) {
        cert.failure = UlrichFailure::ReductionNumberExceedsOne;
    } else if (cert.quotient_length != cert.mu * cert.colength) {
        cert.failure = UlrichFailure::QuotientNotFree;
    }
    cert.verdict = !cert.failure.has_value();
    return cert;
}

// Every monomial Ulrich ideal is a0 + T for the overring T = I − a0. Since T
// is a semigroup, (a0 + T)² = a0 + (a0 + T) always holds, ℓ(I/I²) = a0 and
// ℓ(R/I) = a0 − ℓ(T/R). The freeness equation a0 = μ·(a0 − ℓ(T/R)) then
// leaves at most one admissible a0 per overring.
std::vector<UlrichCertificate> enumerate_ulrich(const SemigroupPtr& h) {
    const auto ring = RelativeIdeal::whole_ring(h);
    const int bound = 2 * h->genus();
    std::vector<UlrichCertificate> found;
    for (const auto& t : overrings(*h)) {
        const int d = h->genus() - t.genus();
        if (d == 0) continue;
        const auto t_ideal = RelativeIdeal::from_semigroup(h, t);
        const int mu = t_ideal.generator_count();
        if (mu < 2 || (mu * d) % (mu - 1) != 0) continue;
        const int a0 = mu * d / (mu - 1);
        if (a0 > bound) {
            fail(ErrorKind::ConsistencyFailure,
                 "Ulrich candidate over " + t.to_string() + " exceeds the a0 <= 2·genus bound");
        }
        auto candidate = shift(t_ideal, a0);
        if (!is_subset(candidate, ring)) continue;
        auto cert = is_ulrich(candidate);
        if (!cert.verdict) {
            fail(ErrorKind::ConsistencyFailure,
                 "closed-form Ulrich candidate " + candidate.to_string() + " failed the direct test");
        }
        found.push_back(std::move(cert));
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (x.a0 != y.a0) return x.a0 < y.a0;
        return x.generators < y.generators;
    });
    return found;
}

std::vector<std::vector<int>> ulrich_set_minmult_ggl(const SemigroupPtr& h) {
    const auto rep = classify(h);
    if (rep.gorenstein || !rep.minimal_multiplicity || !rep.ggl) {
        fail(ErrorKind::PreconditionFailed,
             h->to_string() + " must be non-Gorenstein, GGL and of minimal multiplicity");
    }
    const int e = h->multiplicity();
    std::vector<std::vector<int>> result;
    for (int i = 1; i <= rep.trace_colength; ++i) {
        std::vector<int> gens{i * e};
        for (int g : h->generators()) {
            if (g != e) gens.push_back(g);
        }
        result.push_back(RelativeIdeal::from_generators(h, gens).generators());
    }
    return result;
}

bool trace_is_ulrich(const SemigroupPtr& h) {
    const auto data = canonical_data(h);
    if (h->type() == 1) fail(ErrorKind::PreconditionFailed, h->to_string() + " is Gorenstein");
    const bool direct = is_ulrich(data.trace).verdict;
    const auto rep = analyze(h);
    const bool predicted = rep.ggl && data.blowup.to_semigroup().is_symmetric();
    if (direct != predicted) {
        fail(ErrorKind::ConsistencyFailure,
             "trace Ulrich test disagrees with 'GGL and S Gorenstein' for " + h->to_string());
    }
    if (direct && data.trace.generator_count() != h->type() + 1) {
        fail(ErrorKind::ConsistencyFailure, "μ(tr) != r + 1 for " + h->to_string());
    }
    return direct;
}

} // namespace ggl
