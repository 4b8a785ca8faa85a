#include "ggl/herzog.hpp"

#include "ggl/error.hpp"
#include "ggl/ulrich.hpp"

#include <algorithm>
#include <sstream>

namespace ggl {

namespace {

struct Relation {
    int c = 0;  // least k > 0 with k·a ∈ ⟨p, q⟩
    int x = 0;  // coefficient of p
    int y = 0;  // coefficient of q
};

std::string triple(int a, int b, int c) {
    std::ostringstream out;
    out << '(' << a << ',' << b << ',' << c << ')';
    return out.str();
}

Relation least_relation(int a, int p, int q) {
    for (int k = 1; k <= p + q; ++k) {
        const int target = k * a;
        std::vector<std::pair<int, int>> reps;
        for (int x = 0; x * p <= target; ++x) {
            const int rest = target - x * p;
            if (rest % q == 0) reps.emplace_back(x, rest / q);
        }
        if (reps.empty()) continue;
        if (reps.size() > 1) {
            fail(ErrorKind::NonUniqueRepresentation,
                 std::to_string(k) + "·" + std::to_string(a) + " has several representations in <" +
                     std::to_string(p) + "," + std::to_string(q) + ">");
        }
        return {k, reps.front().first, reps.front().second};
    }
    fail(ErrorKind::ConsistencyFailure, "no relation found for " + std::to_string(a));
}

HerzogData compute(int a1, int a2, int a3) {
    HerzogData hd;
    hd.a1 = a1;
    hd.a2 = a2;
    hd.a3 = a3;
    const auto r1 = least_relation(a1, a2, a3);  // c1·a1 = β'a2 + γa3
    const auto r2 = least_relation(a2, a1, a3);  // c2·a2 = αa1 + γ'a3
    const auto r3 = least_relation(a3, a1, a2);  // c3·a3 = α'a1 + βa2
    hd.c1 = r1.c;
    hd.c2 = r2.c;
    hd.c3 = r3.c;
    hd.beta_p = r1.x;
    hd.gamma = r1.y;
    hd.alpha = r2.x;
    hd.gamma_p = r2.y;
    hd.alpha_p = r3.x;
    hd.beta = r3.y;
    hd.d1 = a3 * hd.c3;
    hd.d2 = a1 * hd.c1;
    hd.d3 = a2 * hd.c2;
    hd.m = a1 * hd.alpha + hd.d1;
    hd.n = a1 * hd.alpha_p + hd.d3;
    hd.a = hd.n - hd.m;
    hd.d = a1 + a2 + a3;
    return hd;
}

void check(bool ok, const std::string& what, const HerzogData& hd) {
    if (!ok) {
        fail(ErrorKind::ConsistencyFailure,
             what + " fails for " + triple(hd.a1, hd.a2, hd.a3));
    }
}

} // namespace

HerzogData herzog_data(int a1, int a2, int a3) {
    const NumericalSemigroup h({a1, a2, a3});
    if (h.embedding_dimension() != 3) {
        fail(ErrorKind::NotThreeGenerated, h.to_string() + " is not minimally 3-generated");
    }
    if (h.is_symmetric()) fail(ErrorKind::SymmetricInput, h.to_string() + " is symmetric");

    const auto& g = h.generators();
    auto hd = compute(g[0], g[1], g[2]);
    if (hd.n < hd.m) {
        hd = compute(g[0], g[2], g[1]);
        hd.swapped = true;
    }

    const auto e = hd.exponents();
    check(std::all_of(e.begin(), e.end(), [](int x) { return x > 0; }), "positivity of exponents", hd);
    check(hd.c1 == hd.alpha + hd.alpha_p && hd.c2 == hd.beta + hd.beta_p && hd.c3 == hd.gamma + hd.gamma_p,
          "c_i as exponent sums", hd);
    check(hd.m == hd.a2 * hd.beta + hd.d2 && hd.m == hd.a3 * hd.gamma + hd.d3, "degree m", hd);
    check(hd.n == hd.a2 * hd.beta_p + hd.d1 && hd.n == hd.a3 * hd.gamma_p + hd.d2, "degree n", hd);
    check(hd.a > 0, "a = n − m > 0", hd);
    check(hd.a == hd.a2 * hd.beta_p - hd.a1 * hd.alpha && hd.a == hd.a3 * hd.gamma_p - hd.a2 * hd.beta &&
              hd.a == hd.a1 * hd.alpha_p - hd.a3 * hd.gamma,
          "three expressions of a", hd);
    check(hd.pseudo_frobenius() == h.pseudo_frobenius(), "PF(H) = {m − d, n − d}", hd);
    check(hd.a1 == hd.beta * hd.gamma + hd.beta_p * hd.gamma_p + hd.beta_p * hd.gamma &&
              hd.a2 == hd.alpha * hd.gamma + hd.alpha * hd.gamma_p + hd.alpha_p * hd.gamma_p &&
              hd.a3 == hd.alpha_p * hd.beta_p + hd.alpha_p * hd.beta + hd.alpha * hd.beta,
          "generators as 2x2 minors", hd);
    return hd;
}

GglByExponents ggl_by_exponents(const HerzogData& hd) {
    const NumericalSemigroup h({hd.a1, hd.a2, hd.a3});
    GglByExponents out;
    out.exp_criterion = hd.alpha <= hd.alpha_p && hd.beta <= hd.beta_p && hd.gamma <= hd.gamma_p;
    out.three_a_in_h = h.contains(3LL * hd.a);
    if (out.exp_criterion) {
        const auto c = RelativeIdeal::from_generators(share(h), {hd.alpha * hd.a1, hd.beta * hd.a2, hd.gamma * hd.a3});
        out.conductor_pred = c.generators();
        out.colength_pred = hd.alpha * hd.beta * hd.gamma;
    }
    return out;
}

TracePairs trace_ulrich_by_pairs(const HerzogData& hd) {
    const bool eq_a = hd.alpha == hd.alpha_p;
    const bool eq_b = hd.beta == hd.beta_p;
    const bool eq_c = hd.gamma == hd.gamma_p;
    TracePairs out;
    out.verdict = static_cast<int>(eq_a) + static_cast<int>(eq_b) + static_cast<int>(eq_c) >= 2;
    if (!out.verdict) return out;
    if (eq_a && eq_b && eq_c) {
        fail(ErrorKind::ConsistencyFailure,
             "all three exponent pairs agree for " + triple(hd.a1, hd.a2, hd.a3) + ", forcing a = 0");
    }

    // Cyclic renumbering a1 → a2 → a3 → a1 moves the unequal pair into position α.
    std::array<int, 3> gens{hd.a1, hd.a2, hd.a3};
    std::array<int, 3> low{hd.alpha, hd.beta, hd.gamma};
    std::array<int, 3> high{hd.alpha_p, hd.beta_p, hd.gamma_p};
    const int shift = !eq_a ? 0 : (!eq_b ? 1 : 2);
    std::rotate(gens.begin(), gens.begin() + shift, gens.end());
    std::rotate(low.begin(), low.begin() + shift, low.end());
    std::rotate(high.begin(), high.begin() + shift, high.end());
    const int al = low[0], be = low[1], ga = low[2], al_p = high[0];
    out.rotated = gens;
    out.predicted = std::array<int, 3>{3 * be * ga, ga * (2 * al + al_p), be * (2 * al_p + al)};
    return out;
}

std::string to_string(Mult5Family family) {
    switch (family) {
    case Mult5Family::Mult4: return "mult4";
    case Mult5Family::Mult5I: return "mult5_i";
    case Mult5Family::Mult5II: return "mult5_ii";
    }
    return "unknown";
}

Mult5Family parse_family(const std::string& name) {
    if (name == "mult4") return Mult5Family::Mult4;
    if (name == "mult5_i") return Mult5Family::Mult5I;
    if (name == "mult5_ii") return Mult5Family::Mult5II;
    fail(ErrorKind::ParameterOutOfRange, "unknown family '" + name + "'");
}

std::array<int, 3> family_mult_le5(Mult5Family family, int alpha, int alpha_p) {
    auto reject = [&](const std::string& why) {
        fail(ErrorKind::ParameterOutOfRange, to_string(family) + " with (" + std::to_string(alpha) + "," +
                                                 std::to_string(alpha_p) + "): " + why);
    };
    std::array<int, 3> gens{};
    switch (family) {
    case Mult5Family::Mult4:
        if (alpha < 3 || alpha_p < alpha) reject("needs α' >= α >= 3");
        if (alpha % 2 == 0) reject("needs α odd");
        gens = {4, 3 * alpha + 2 * alpha_p, alpha + 2 * alpha_p};
        break;
    case Mult5Family::Mult5I:
        if (alpha < 2 || alpha_p < alpha) reject("needs α' >= α >= 2");
        if ((2 * alpha + alpha_p) % 5 == 0) reject("needs 2α + α' not divisible by 5");
        gens = {5, 2 * alpha + alpha_p, alpha + 3 * alpha_p};
        break;
    case Mult5Family::Mult5II:
        if (alpha < 2 || alpha_p < alpha) reject("needs α' >= α >= 2");
        if ((alpha + 2 * alpha_p) % 5 == 0) reject("needs α + 2α' not divisible by 5");
        gens = {5, 4 * alpha + 3 * alpha_p, alpha + 2 * alpha_p};
        break;
    }
    const auto rep = classify(NumericalSemigroup({gens[0], gens[1], gens[2]}));
    if (!rep.ggl || rep.agl || rep.generators.size() != 3) {
        fail(ErrorKind::ConsistencyFailure, "family member " + triple(gens[0], gens[1], gens[2]) +
                                                " is not a 3-generated GGL, non-AGL semigroup");
    }
    return gens;
}

RouteChecks three_generated_checks(const NumericalSemigroup& h) {
    const auto& g = h.generators();
    const auto hd = herzog_data(g[0], g[1], g[2]);
    const auto rep = analyze(h);
    const auto ex = ggl_by_exponents(hd);
    const auto pairs = trace_ulrich_by_pairs(hd);

    const auto base = share(h);
    const auto data = canonical_data(base);
    const bool trace_ulrich = is_ulrich(data.trace).verdict;

    RouteChecks checks;
    checks.emplace_back("ggl_iff_three_a", rep.ggl == ex.three_a_in_h);
    checks.emplace_back("ggl_iff_exponents", rep.ggl == ex.exp_criterion);
    if (rep.ggl && ex.exp_criterion) {
        checks.emplace_back("conductor_from_exponents", *ex.conductor_pred == rep.conductor_generators);
        checks.emplace_back("conductor_colength_from_exponents", *ex.colength_pred == rep.conductor_colength);
    }
    checks.emplace_back("trace_ulrich_iff_pairs", trace_ulrich == pairs.verdict);
    checks.emplace_back("trace_ulrich_iff_ggl_and_s_symmetric",
                        trace_ulrich == (rep.ggl && data.blowup.to_semigroup().is_symmetric()));
    if (pairs.verdict) checks.emplace_back("trace_ulrich_generator_shape", pairs.rotated == pairs.predicted);
    return checks;
}

} // namespace ggl
