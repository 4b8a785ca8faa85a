#include "ggl/report.hpp"

#include "ggl/error.hpp"

#include <sstream>

namespace ggl {

namespace {

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

template <class T, class F>
Json list(const std::vector<T>& items, F&& convert) {
    Json out = Json::array();
    for (const auto& item : items) out.push_back(convert(item));
    return out;
}

std::optional<UlrichFailure> failure_from_string(const std::string& s) {
    for (auto f : {UlrichFailure::Principal, UlrichFailure::ReductionNumberExceedsOne, UlrichFailure::QuotientNotFree}) {
        if (to_string(f) == s) return f;
    }
    fail(ErrorKind::PreconditionFailed, "unknown Ulrich failure reason '" + s + "'");
}

template <class T>
Json optional_array(const std::optional<T>& value) {
    return value ? Json(*value) : Json(nullptr);
}

} // namespace

Json to_json(const RouteChecks& checks) {
    Json out = Json::object();
    for (const auto& [name, ok] : checks) out[name] = ok;
    return out;
}

RouteChecks checks_from_json(const Json& j) {
    RouteChecks out;
    for (const auto& [name, ok] : j.items()) out.emplace_back(name, ok.get<bool>());
    return out;
}

Json to_json(const ClassificationReport& rep) {
    Json j;
    j["generators"] = rep.generators;
    j["raw_generators"] = rep.raw_generators;
    const auto& inv = rep.invariants;
    j["invariants"] = {{"e", inv.multiplicity},
                       {"v", inv.embedding_dimension},
                       {"r", inv.type},
                       {"f", inv.frobenius},
                       {"genus", inv.genus},
                       {"symmetric", inv.is_symmetric},
                       {"minimal_multiplicity", inv.has_minimal_multiplicity}};
    j["pseudo_frobenius"] = rep.pseudo_frobenius;
    j["gorenstein"] = rep.gorenstein;
    j["agl"] = rep.agl;
    j["ggl"] = rep.ggl;
    j["two_agl"] = rep.two_agl;
    j["ngl"] = rep.ngl;
    j["minimal_multiplicity"] = rep.minimal_multiplicity;
    j["canonical"] = rep.canonical_generators;
    j["canonical_reduction_number"] = rep.canonical_reduction_number;
    j["canonical_square_excess"] = rep.canonical_square_excess;
    j["blowup"] = rep.blowup_generators;
    j["conductor"] = rep.conductor_generators;
    j["conductor_colength"] = rep.conductor_colength;
    j["trace"] = rep.trace_generators;
    j["trace_colength"] = rep.trace_colength;
    j["e1"] = rep.e1;
    if (rep.witness) {
        j["witness"] = {{"conductor", rep.witness->conductor_generators},
                        {"basis_exponents", rep.witness->basis_exponents},
                        {"socle", rep.witness->socle},
                        {"identity_holds", rep.witness->identity_holds}};
    } else {
        j["witness"] = nullptr;
    }
    j["route_consistency"] = to_json(rep.route_consistency);
    return j;
}

ClassificationReport classification_from_json(const Json& j) {
    ClassificationReport rep;
    rep.generators = ints(j.at("generators"));
    rep.raw_generators = ints(j.at("raw_generators"));
    const auto& inv = j.at("invariants");
    rep.invariants.multiplicity = inv.at("e");
    rep.invariants.embedding_dimension = inv.at("v");
    rep.invariants.type = inv.at("r");
    rep.invariants.frobenius = inv.at("f");
    rep.invariants.genus = inv.at("genus");
    rep.invariants.is_symmetric = inv.at("symmetric");
    rep.invariants.has_minimal_multiplicity = inv.at("minimal_multiplicity");
    rep.pseudo_frobenius = ints(j.at("pseudo_frobenius"));
    rep.gorenstein = j.at("gorenstein");
    rep.agl = j.at("agl");
    rep.ggl = j.at("ggl");
    rep.two_agl = j.at("two_agl");
    rep.ngl = j.at("ngl");
    rep.minimal_multiplicity = j.at("minimal_multiplicity");
    rep.canonical_generators = ints(j.at("canonical"));
    rep.canonical_reduction_number = j.at("canonical_reduction_number");
    rep.canonical_square_excess = j.at("canonical_square_excess");
    rep.blowup_generators = ints(j.at("blowup"));
    rep.conductor_generators = ints(j.at("conductor"));
    rep.conductor_colength = j.at("conductor_colength");
    rep.trace_generators = ints(j.at("trace"));
    rep.trace_colength = j.at("trace_colength");
    rep.e1 = j.at("e1");
    if (const auto& w = j.at("witness"); !w.is_null()) {
        GglWitness witness;
        witness.conductor_generators = ints(w.at("conductor"));
        witness.basis_exponents = ints(w.at("basis_exponents"));
        witness.socle = w.at("socle");
        witness.identity_holds = w.at("identity_holds");
        rep.witness = std::move(witness);
    }
    rep.route_consistency = checks_from_json(j.at("route_consistency"));
    return rep;
}

Json to_json(const UlrichCertificate& cert) {
    Json j;
    j["generators"] = cert.generators;
    j["a0"] = cert.a0;
    j["mu"] = cert.mu;
    j["colength"] = cert.colength;
    j["quotient_length"] = cert.quotient_length;
    j["verdict"] = cert.verdict;
    j["failure"] = cert.failure ? Json(to_string(*cert.failure)) : Json(nullptr);
    return j;
}

UlrichCertificate ulrich_from_json(const Json& j) {
    UlrichCertificate cert;
    cert.generators = ints(j.at("generators"));
    cert.a0 = j.at("a0");
    cert.mu = j.at("mu");
    cert.colength = j.at("colength");
    cert.quotient_length = j.at("quotient_length");
    cert.verdict = j.at("verdict");
    if (!j.at("failure").is_null()) cert.failure = failure_from_string(j.at("failure").get<std::string>());
    return cert;
}

Json to_json(const HerzogData& hd) {
    Json j;
    j["generators"] = {hd.a1, hd.a2, hd.a3};
    j["swapped"] = hd.swapped;
    j["exponents"] = {{"alpha", hd.alpha}, {"beta", hd.beta},       {"gamma", hd.gamma},
                      {"alpha_p", hd.alpha_p}, {"beta_p", hd.beta_p}, {"gamma_p", hd.gamma_p}};
    j["c"] = {hd.c1, hd.c2, hd.c3};
    j["d"] = {hd.d1, hd.d2, hd.d3};
    j["m"] = hd.m;
    j["n"] = hd.n;
    j["a"] = hd.a;
    j["sum"] = hd.d;
    j["pseudo_frobenius"] = hd.pseudo_frobenius();
    return j;
}

HerzogData herzog_from_json(const Json& j) {
    HerzogData hd;
    const auto g = ints(j.at("generators"));
    hd.a1 = g.at(0);
    hd.a2 = g.at(1);
    hd.a3 = g.at(2);
    hd.swapped = j.at("swapped");
    const auto& e = j.at("exponents");
    hd.alpha = e.at("alpha");
    hd.beta = e.at("beta");
    hd.gamma = e.at("gamma");
    hd.alpha_p = e.at("alpha_p");
    hd.beta_p = e.at("beta_p");
    hd.gamma_p = e.at("gamma_p");
    const auto c = ints(j.at("c"));
    hd.c1 = c.at(0);
    hd.c2 = c.at(1);
    hd.c3 = c.at(2);
    const auto d = ints(j.at("d"));
    hd.d1 = d.at(0);
    hd.d2 = d.at(1);
    hd.d3 = d.at(2);
    hd.m = j.at("m");
    hd.n = j.at("n");
    hd.a = j.at("a");
    hd.d = j.at("sum");
    return hd;
}

Json to_json(const GglByExponents& g) {
    Json j;
    j["exp_criterion"] = g.exp_criterion;
    j["three_a_in_h"] = g.three_a_in_h;
    j["conductor_pred"] = optional_array(g.conductor_pred);
    j["colength_pred"] = optional_array(g.colength_pred);
    return j;
}

GglByExponents ggl_by_exponents_from_json(const Json& j) {
    GglByExponents g;
    g.exp_criterion = j.at("exp_criterion");
    g.three_a_in_h = j.at("three_a_in_h");
    if (!j.at("conductor_pred").is_null()) g.conductor_pred = ints(j.at("conductor_pred"));
    if (!j.at("colength_pred").is_null()) g.colength_pred = j.at("colength_pred").get<int>();
    return g;
}

Json to_json(const TracePairs& p) {
    Json j;
    j["verdict"] = p.verdict;
    j["rotated"] = optional_array(p.rotated);
    j["predicted"] = optional_array(p.predicted);
    return j;
}

TracePairs trace_pairs_from_json(const Json& j) {
    TracePairs p;
    p.verdict = j.at("verdict");
    if (!j.at("rotated").is_null()) p.rotated = j.at("rotated").get<std::array<int, 3>>();
    if (!j.at("predicted").is_null()) p.predicted = j.at("predicted").get<std::array<int, 3>>();
    return p;
}

Json to_json(const ChainRecord& rec) {
    Json j;
    j["step"] = rec.step;
    j["generators"] = rec.semigroup.generators();
    j["gorenstein"] = rec.gorenstein;
    j["agl"] = rec.agl;
    j["ggl"] = rec.ggl;
    j["minimal_multiplicity"] = rec.minimal_multiplicity;
    j["e"] = rec.e;
    j["v"] = rec.v;
    j["n"] = rec.n;
    j["step_theorem"] = optional_array(rec.step_theorem);
    return j;
}

ChainRecord chain_record_from_json(const Json& j) {
    ChainRecord rec{j.at("step").get<int>(), NumericalSemigroup(ints(j.at("generators")))};
    rec.gorenstein = j.at("gorenstein");
    rec.agl = j.at("agl");
    rec.ggl = j.at("ggl");
    rec.minimal_multiplicity = j.at("minimal_multiplicity");
    rec.e = j.at("e");
    rec.v = j.at("v");
    rec.n = j.at("n");
    if (!j.at("step_theorem").is_null()) rec.step_theorem = j.at("step_theorem").get<bool>();
    return rec;
}

Json to_json(const IdealizationReport& rep) {
    Json j;
    j["generators"] = rep.base_generators;
    j["overring"] = rep.overring_generators;
    j["ideal"] = rep.ideal_generators;
    j["route1"] = rep.route1;
    j["route2"] = rep.route2;
    j["overring_length"] = rep.overring_length;
    j["overring_mu"] = rep.overring_mu;
    j["ideal_colength"] = rep.ideal_colength;
    j["verdict"] = rep.verdict;
    return j;
}

IdealizationReport idealization_from_json(const Json& j) {
    IdealizationReport rep;
    rep.base_generators = ints(j.at("generators"));
    rep.overring_generators = ints(j.at("overring"));
    rep.ideal_generators = ints(j.at("ideal"));
    rep.route1 = j.at("route1");
    rep.route2 = j.at("route2");
    rep.overring_length = j.at("overring_length");
    rep.overring_mu = j.at("overring_mu");
    rep.ideal_colength = j.at("ideal_colength");
    rep.verdict = j.at("verdict");
    return rep;
}

Json to_json(const ReportDocument& doc) {
    Json j;
    j["command"] = doc.command;
    j["input"] = doc.input;
    if (!doc.reports.empty()) j["reports"] = list(doc.reports, [](const auto& r) { return to_json(r); });
    if (!doc.ulrich.empty()) j["ulrich"] = list(doc.ulrich, [](const auto& c) { return to_json(c); });
    if (doc.herzog) j["herzog"] = to_json(*doc.herzog);
    if (doc.herzog_ggl) j["herzog_ggl"] = to_json(*doc.herzog_ggl);
    if (doc.herzog_pairs) j["herzog_pairs"] = to_json(*doc.herzog_pairs);
    if (!doc.chain.empty()) j["chain"] = list(doc.chain, [](const auto& c) { return to_json(c); });
    if (doc.idealization) j["idealization"] = to_json(*doc.idealization);
    j["checks"] = to_json(doc.checks);
    j["exit_status"] = doc.exit_status;
    return j;
}

ReportDocument document_from_json(const Json& j) {
    ReportDocument doc;
    doc.command = j.at("command");
    doc.input = ints(j.at("input"));
    if (j.contains("reports")) {
        for (const auto& r : j["reports"]) doc.reports.push_back(classification_from_json(r));
    }
    if (j.contains("ulrich")) {
        for (const auto& c : j["ulrich"]) doc.ulrich.push_back(ulrich_from_json(c));
    }
    if (j.contains("herzog")) doc.herzog = herzog_from_json(j["herzog"]);
    if (j.contains("herzog_ggl")) doc.herzog_ggl = ggl_by_exponents_from_json(j["herzog_ggl"]);
    if (j.contains("herzog_pairs")) doc.herzog_pairs = trace_pairs_from_json(j["herzog_pairs"]);
    if (j.contains("chain")) {
        for (const auto& c : j["chain"]) doc.chain.push_back(chain_record_from_json(c));
    }
    if (j.contains("idealization")) doc.idealization = idealization_from_json(j["idealization"]);
    doc.checks = checks_from_json(j.at("checks"));
    doc.exit_status = j.at("exit_status");
    return doc;
}

std::string serialize(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ReportDocument parse_document(const std::string& text) { return document_from_json(Json::parse(text)); }

std::string join_bar(const std::vector<int>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += '|';
        out += std::to_string(values[k]);
    }
    return out;
}

std::vector<int> split_bar(const std::string& cell) {
    std::vector<int> out;
    std::istringstream in(cell);
    std::string item;
    while (std::getline(in, item, '|')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::string render_table(const ClassificationReport& rep) {
    auto list_text = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
        return s + "}";
    };
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    const auto& inv = rep.invariants;
    std::ostringstream out;
    out << "H                  " << list_text(rep.generators) << '\n'
        << "e, v, r            " << inv.multiplicity << ", " << inv.embedding_dimension << ", " << inv.type << '\n'
        << "frobenius, genus   " << inv.frobenius << ", " << inv.genus << '\n'
        << "PF                 " << list_text(rep.pseudo_frobenius) << '\n'
        << "K                  " << list_text(rep.canonical_generators) << "  (reduction number "
        << rep.canonical_reduction_number << ")\n"
        << "S = R[K]           " << list_text(rep.blowup_generators) << '\n'
        << "conductor          " << list_text(rep.conductor_generators) << "  (colength " << rep.conductor_colength
        << ")\n"
        << "trace              " << list_text(rep.trace_generators) << "  (colength " << rep.trace_colength << ")\n"
        << "l(S/R)             " << rep.e1 << '\n'
        << "gorenstein         " << yes(rep.gorenstein) << '\n'
        << "agl                " << yes(rep.agl) << '\n'
        << "ggl                " << yes(rep.ggl) << '\n'
        << "2-agl              " << yes(rep.two_agl) << '\n'
        << "ngl                " << yes(rep.ngl) << '\n'
        << "minimal mult.      " << yes(rep.minimal_multiplicity) << '\n'
        << "consistent         " << yes(rep.consistent()) << '\n';
    return out.str();
}

} // namespace ggl
