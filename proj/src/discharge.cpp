#include "ecol/discharge.hpp"

#include "ecol/error.hpp"

#include <algorithm>
#include <numeric>

namespace ecol {

std::string Charge::str() const {
    if (t_ % 12 == 0) return std::to_string(t_ / 12);
    const std::int64_t g = std::gcd(t_ < 0 ? -t_ : t_, std::int64_t{12});
    return std::to_string(t_ / g) + "/" + std::to_string(12 / g);
}

std::string element_name(const EmbeddedGraph& g, Element e) {
    if (e.kind == Element::Kind::Vertex) return "v" + std::to_string(g.id(e.index));
    return "f" + std::to_string(e.index);
}

Charge ChargeLedger::total() const {
    Charge t;
    for (Charge c : vertex_charge) t += c;
    for (Charge c : face_charge) t += c;
    return t;
}

Charge ChargeLedger::charge(Element e) const {
    return e.kind == Element::Kind::Vertex ? vertex_charge.at(e.index) : face_charge.at(e.index);
}

ChargeLedger initial_charges(const EmbeddedGraph& g) {
    if (!g.connected() || g.num_vertices() == 0)
        throw Error(ErrorKind::Disconnected, "charges require a connected graph");
    ChargeLedger ledger;
    for (int v = 0; v < g.num_vertices(); ++v) ledger.vertex_charge.push_back(Charge::whole(g.degree(v) - 6));
    for (const Face& f : g.faces()) ledger.face_charge.push_back(Charge::whole(2 * f.degree() - 6));
    return ledger;
}

namespace {

constexpr Charge kOne = Charge::whole(1);
constexpr Charge kTwo = Charge::whole(2);
constexpr Charge kHalf = Charge::twelfths(6);
constexpr Charge kThird = Charge::twelfths(4);
constexpr Charge kQuarter = Charge::twelfths(3);

// Vertex-to-neighbor rule for u -> v, or 0 when none applies.
std::pair<int, Charge> vertex_rule(const EmbeddedGraph& g, int u, int v) {
    const int du = g.degree(u), dv = g.degree(v);
    if (du < 7 || dv > 5) return {0, {}};
    const NeighborClass c = neighbor_classification(g, u, v);
    if (c.base == Base::Weak && dv == 3) return {3, kOne};
    if (c.base == Base::SemiWeak && dv == 3) return {4, kHalf};
    if (c.base == Base::Weak && dv == 4) return {5, kHalf};
    switch (c.special) {
    case Special::E2: return {6, kHalf};
    case Special::E3: return {7, kThird};
    case Special::E4: return {8, kQuarter};
    case Special::S2: return {9, kHalf};
    case Special::S3: return {10, kThird};
    case Special::S4: return {11, kQuarter};
    case Special::None: break;
    }
    return {0, {}};
}

} // namespace

void apply_rules(const EmbeddedGraph& g, ChargeLedger& ledger) {
    if (ledger.rules_applied) throw Error(ErrorKind::RulesApplied, "rules were already applied to this ledger");
    if (ledger.vertex_charge.size() != static_cast<std::size_t>(g.num_vertices()) ||
        ledger.face_charge.size() != static_cast<std::size_t>(g.num_faces()))
        throw Error(ErrorKind::Malformed, "ledger does not belong to this graph");

    std::vector<Transfer> instances;
    for (int f = 0; f < g.num_faces(); ++f) {
        const Face& face = g.face(f);
        if (face.degree() < 4) continue;
        const Charge amount = face.degree() == 4 ? kOne : kTwo;
        const int rule = face.degree() == 4 ? 1 : 2;
        std::map<int, int> mult;
        for (int v : face.walk) {
            if (g.degree(v) <= 5) ++mult[v];
        }
        for (const auto& [v, k] : mult)
            instances.push_back({{Element::Kind::Face, f}, {Element::Kind::Vertex, v}, amount, rule, k});
    }
    for (int u = 0; u < g.num_vertices(); ++u) {
        for (int v : g.rotation(u)) {
            const auto [rule, amount] = vertex_rule(g, u, v);
            if (rule) instances.push_back({{Element::Kind::Vertex, u}, {Element::Kind::Vertex, v}, amount, rule, 1});
        }
    }
    for (const Transfer& t : instances) {
        const Charge total = t.total();
        if (t.source.kind == Element::Kind::Face) {
            ledger.face_charge[t.source.index] -= total;
        } else {
            ledger.vertex_charge[t.source.index] -= total;
        }
        ledger.vertex_charge[t.target.index] += total;
        ledger.log.push_back(t);
    }
    ledger.rules_applied = true;
}

namespace {

AuditReport audit_connected(const EmbeddedGraph& g) {
    AuditReport r;
    ChargeLedger ledger = initial_charges(g);
    r.initial_total = ledger.total();
    apply_rules(g, ledger);
    r.final_total = ledger.total();
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (ledger.vertex_charge[v] < Charge()) r.negatives.push_back({{Element::Kind::Vertex, v}, ledger.vertex_charge[v]});
    }
    for (int f = 0; f < g.num_faces(); ++f) {
        if (ledger.face_charge[f] < Charge()) r.negatives.push_back({{Element::Kind::Face, f}, ledger.face_charge[f]});
    }
    int found = 0;
    for (const auto& [id, ms] : match_all(g)) {
        r.configs_found[id] = static_cast<int>(ms.size());
        found += static_cast<int>(ms.size());
    }
    r.contradiction = g.num_edges() >= 1 && g.max_degree() <= 8 && found == 0;
    return r;
}

} // namespace

AuditReport audit(const EmbeddedGraph& g, const AuditOptions& options) {
    if (g.connected() && g.num_vertices() > 0) return audit_connected(g);
    if (!options.per_component) throw Error(ErrorKind::Disconnected, "audit requires a connected graph");

    // Element indices refer to the whole graph: vertices by index, faces by
    // their index in the whole graph's face list.
    AuditReport total;
    total.components = g.num_components();
    for (ConfigId id : kAllConfigs) total.configs_found[id] = 0;
    for (int c = 0; c < g.num_components(); ++c) {
        const EmbeddedGraph sub = g.component_graph(c);
        AuditReport r = audit_connected(sub);
        total.initial_total += r.initial_total;
        total.final_total += r.final_total;
        for (const auto& [id, k] : r.configs_found) total.configs_found[id] += k;
        total.contradiction = total.contradiction || r.contradiction;
        for (NegativeElement ne : r.negatives) {
            if (ne.element.kind == Element::Kind::Vertex) {
                ne.element.index = *g.index_of(sub.id(ne.element.index));
            } else {
                const Face& f = sub.face(ne.element.index);
                const int a = *g.index_of(sub.id(f.walk[0]));
                const int b = *g.index_of(sub.id(f.walk[1 % f.walk.size()]));
                ne.element.index = g.face_of_dart(a, b);
            }
            total.negatives.push_back(ne);
        }
    }
    std::stable_sort(total.negatives.begin(), total.negatives.end(),
                     [](const NegativeElement& a, const NegativeElement& b) { return a.element < b.element; });
    return total;
}

// ── Per-element explanation ─────────────────────────────────────

namespace {

std::string vertex_branch(const EmbeddedGraph& g, int x) {
    const int d = g.degree(x);
    std::string s = "vertex, d=" + std::to_string(d);
    if (d == 6) return s + ", gives nothing and receives nothing";
    if (d <= 5) {
        int tri = 0, quad = 0, big = 0;
        for (int w : g.rotation(x)) {
            const int fd = g.face(g.face_of_dart(x, w)).degree();
            if (fd == 3) ++tri; else if (fd == 4) ++quad; else ++big;
        }
        s += ", incident faces: " + std::to_string(tri) + " triangles, " + std::to_string(quad) + " 4-faces, " +
             std::to_string(big) + " 5+-faces";
        if (d == 5 && tri == 5) {
            const auto& nb = g.rotation(x);
            int six = 0;
            bool consecutive = false;
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (g.degree(nb[i]) == 6) {
                    ++six;
                    if (g.degree(nb[(i + 1) % nb.size()]) == 6) consecutive = true;
                }
            }
            s += ", " + std::to_string(six) + " degree-6 neighbors";
            if (six >= 2) s += consecutive ? ", two consecutive" : ", none consecutive";
        }
        return s;
    }
    int w3 = 0, s3 = 0, w4 = 0, w5 = 0;
    for (int v : g.rotation(x)) {
        const NeighborClass c = neighbor_classification(g, x, v);
        const int dv = g.degree(v);
        if (c.base == Base::Weak && dv == 3) ++w3;
        if (c.base == Base::SemiWeak && dv == 3) ++s3;
        if (c.base == Base::Weak && dv == 4) ++w4;
        if (c.base == Base::Weak && dv == 5) ++w5;
    }
    return s + ", weak degree-3 neighbors: " + std::to_string(w3) + ", semi-weak degree-3 neighbors: " +
           std::to_string(s3) + ", weak degree-4 neighbors: " + std::to_string(w4) +
           ", weak degree-5 neighbors: " + std::to_string(w5);
}

std::string face_branch(const EmbeddedGraph& g, int f) {
    const Face& face = g.face(f);
    int low = 0;
    for (int v : face.walk) {
        if (g.degree(v) <= 5) ++low;
    }
    std::string s = "face, d=" + std::to_string(face.degree());
    if (face.degree() == 3) return s + ", gives nothing and receives nothing";
    return s + ", incidences with vertices of degree at most 5: " + std::to_string(low);
}

} // namespace

Explanation explain_element(const EmbeddedGraph& g, const ChargeLedger& ledger, Element x) {
    const int limit = x.kind == Element::Kind::Vertex ? g.num_vertices() : g.num_faces();
    if (x.index < 0 || x.index >= limit) throw Error(ErrorKind::UnknownElement, "unknown element");
    Explanation ex;
    for (const Transfer& t : ledger.log) {
        if (t.source == x || t.target == x) ex.transfers.push_back(t);
    }
    ex.branch = x.kind == Element::Kind::Vertex ? vertex_branch(g, x.index) : face_branch(g, x.index);
    return ex;
}

std::vector<int> incident_vertices(const EmbeddedGraph& g, Element x) {
    if (x.kind == Element::Kind::Vertex) return {x.index};
    std::vector<int> vs = g.face(x.index).walk;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int match_distance(const EmbeddedGraph& g, Element x, const ConfigMatch& m) {
    const auto dist = g.distances_from(incident_vertices(g, x));
    int worst = 0;
    for (int v : m.binding) {
        if (dist[v] < 0) return -1;
        worst = std::max(worst, dist[v]);
    }
    return worst;
}

} // namespace ecol
