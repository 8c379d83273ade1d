#include "ecol/report.hpp"

namespace ecol {

Json faces_json(const EmbeddedGraph& g) {
    Json faces = Json::array();
    for (const auto& f : g.faces()) {
        Json walk = Json::array();
        for (int v : f.walk) walk.push_back(g.id(v));
        faces.push_back(Json{{"degree", f.degree()}, {"walk", walk}});
    }
    return Json{{"vertices", g.num_vertices()},
                {"edges", g.num_edges()},
                {"faces", g.num_faces()},
                {"euler", g.num_vertices() - g.num_edges() + g.num_faces()},
                {"walks", faces}};
}

Json classify_json(const EmbeddedGraph& g, int u, int v) {
    const NeighborClass c = neighbor_classification(g, u, v);
    return Json{{"u", g.id(u)},
                {"v", g.id(v)},
                {"degreeU", g.degree(u)},
                {"degreeV", g.degree(v)},
                {"base", base_name(c.base)},
                {"special", special_name(c.special)}};
}

Json match_json(const EmbeddedGraph& g, const ConfigMatch& m) {
    Json binding = Json::array(), faces = Json::array();
    for (int v : m.binding) binding.push_back(g.id(v));
    for (int f : m.witness_faces) faces.push_back(f);
    return Json{{"config", config_name(m.config)}, {"binding", binding}, {"witnessFaces", faces}};
}

Json matches_json(const EmbeddedGraph& g, const std::map<ConfigId, std::vector<ConfigMatch>>& matches) {
    Json out = Json::array();
    for (const auto& [id, list] : matches) {
        for (const auto& m : list) out.push_back(match_json(g, m));
    }
    return out;
}

Json audit_json(const EmbeddedGraph& g, const AuditReport& report) {
    Json negatives = Json::array();
    for (const auto& n : report.negatives)
        negatives.push_back(Json{{"element", element_name(g, n.element)}, {"charge", n.charge.str()}});
    Json found = Json::object();
    for (const auto& [id, count] : report.configs_found) found[config_name(id)] = count;
    return Json{{"initialTotal", report.initial_total.str()},
                {"finalTotal", report.final_total.str()},
                {"negatives", negatives},
                {"configsFound", found},
                {"contradictionFlag", report.contradiction}};
}

Json transfers_json(const EmbeddedGraph& g, const ChargeLedger& ledger) {
    Json out = Json::array();
    for (const auto& t : ledger.log) {
        out.push_back(Json{{"rule", "R" + std::to_string(t.rule)},
                           {"source", element_name(g, t.source)},
                           {"target", element_name(g, t.target)},
                           {"amount", t.amount.str()},
                           {"multiplicity", t.multiplicity}});
    }
    return out;
}

Json witness_json(const ListAssignment& lists, const std::vector<std::string>& labels) {
    Json out = Json::array();
    for (std::size_t e = 0; e < lists.size(); ++e) {
        const std::string label = e < labels.size() ? labels[e] : std::to_string(e);
        out.push_back(Json{{"edge", label}, {"colors", lists[e].to_vector()}});
    }
    return out;
}

Json verdict_json(const Verdict& v, const std::vector<std::string>& labels) {
    Json out{{"status", status_name(v.status)}, {"instances", v.instances}};
    if (v.rejected > 0) out["rejected"] = v.rejected;
    if (v.witness) out["witness"] = witness_json(*v.witness, labels);
    if (!v.notes.empty()) out["notes"] = v.notes;
    return out;
}

Json claim_json(const ClaimReport& r) {
    Json out{{"claim", r.claim},
             {"variant", r.variant},
             {"tier", r.tier},
             {"status", status_name(r.verdict.status)},
             {"instances", r.verdict.instances}};
    if (r.verdict.rejected > 0) out["rejected"] = r.verdict.rejected;
    if (r.verdict.witness) out["witness"] = witness_json(*r.verdict.witness, r.witness_labels);
    if (!r.verdict.notes.empty()) out["notes"] = r.verdict.notes;
    return out;
}

Json run_all_json(const std::vector<ClaimReport>& reports) {
    Json claims = Json::array();
    for (const auto& r : reports) claims.push_back(claim_json(r));
    return Json{{"status", all_pass(reports) ? "PASS" : "FAIL"}, {"claims", claims}};
}

Json recolor_json(const RecolorCheck& c) {
    Json out{{"claim", c.claim},
             {"bounds", c.bounds},
             {"weakened", c.weakened},
             {"instances", c.instances},
             {"failures", c.failures},
             {"disagreements", c.disagreements}};
    if (c.failure) {
        Json edges = Json::array();
        for (int e = 0; e < c.failure->graph.num_edges(); ++e) {
            edges.push_back(Json{{"current", c.failure->current[e]},
                                 {"allowed", c.failure->allowed[e].to_vector()},
                                 {"target", static_cast<bool>(c.failure->target[e])}});
        }
        out["failure"] = edges;
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace ecol
