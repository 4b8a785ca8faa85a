#pragma once

#include "ggl/blowup_chain.hpp"
#include "ggl/canonical.hpp"
#include "ggl/herzog.hpp"
#include "ggl/idealization.hpp"
#include "ggl/ulrich.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ggl {

using Json = nlohmann::ordered_json;

/// Everything one CLI invocation reports. Optional sections are omitted from
/// the JSON form when empty.
struct ReportDocument {
    std::string command;
    std::vector<int> input;
    std::vector<ClassificationReport> reports;
    std::vector<UlrichCertificate> ulrich;
    std::optional<HerzogData> herzog;
    std::optional<GglByExponents> herzog_ggl;
    std::optional<TracePairs> herzog_pairs;
    std::vector<ChainRecord> chain;
    std::optional<IdealizationReport> idealization;
    RouteChecks checks;
    int exit_status = 0;

    bool operator==(const ReportDocument&) const = default;
};

Json to_json(const ClassificationReport& rep);
ClassificationReport classification_from_json(const Json& j);

Json to_json(const UlrichCertificate& cert);
UlrichCertificate ulrich_from_json(const Json& j);

Json to_json(const HerzogData& hd);
HerzogData herzog_from_json(const Json& j);

Json to_json(const GglByExponents& g);
GglByExponents ggl_by_exponents_from_json(const Json& j);

Json to_json(const TracePairs& p);
TracePairs trace_pairs_from_json(const Json& j);

Json to_json(const ChainRecord& rec);
ChainRecord chain_record_from_json(const Json& j);

Json to_json(const IdealizationReport& rep);
IdealizationReport idealization_from_json(const Json& j);

Json to_json(const RouteChecks& checks);
RouteChecks checks_from_json(const Json& j);

Json to_json(const ReportDocument& doc);
ReportDocument document_from_json(const Json& j);

std::string serialize(const ReportDocument& doc);
ReportDocument parse_document(const std::string& text);

/// Human-readable rendering of a classification.
std::string render_table(const ClassificationReport& rep);

/// "a|b|c" as used inside CSV cells.
std::string join_bar(const std::vector<int>& values);
std::vector<int> split_bar(const std::string& cell);

} // namespace ggl
