#pragma once

#include "ecol/configs.hpp"
#include "ecol/discharge.hpp"
#include "ecol/embed.hpp"
#include "ecol/listcolor.hpp"
#include "ecol/reduce.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace ecol {

using Json = nlohmann::ordered_json;

Json faces_json(const EmbeddedGraph& g);
Json classify_json(const EmbeddedGraph& g, int u, int v);
Json match_json(const EmbeddedGraph& g, const ConfigMatch& m);
Json matches_json(const EmbeddedGraph& g, const std::map<ConfigId, std::vector<ConfigMatch>>& matches);
Json audit_json(const EmbeddedGraph& g, const AuditReport& report);
Json transfers_json(const EmbeddedGraph& g, const ChargeLedger& ledger);
// Witness lists keyed by edge label, in edge order.
Json witness_json(const ListAssignment& lists, const std::vector<std::string>& labels);
Json verdict_json(const Verdict& v, const std::vector<std::string>& labels = {});
Json claim_json(const ClaimReport& r);
Json run_all_json(const std::vector<ClaimReport>& reports);
Json recolor_json(const RecolorCheck& c);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

} // namespace ecol
