#pragma once

#include <string>
#include <vector>

namespace ecol {

struct EdgeGraph;

struct GadgetVertex {
    std::string name;
    // Degree in the host graph; boundary vertices carry their worst case.
    int degree = 0;
};

struct GadgetEdge {
    // Edge label, empty for unnamed colored edges.
    std::string label;
    int u = 0;
    int v = 0;
};

// Local subgraph of a reducibility argument. `uncolored` is the edge set left
// uncolored after coloring the rest of the graph; `recolorable` holds colored
// edges that the argument may recolor, and `targets` those among them whose
// recoloring breaks the bad situation.
struct Gadget {
    std::string config;
    std::string variant;
    std::vector<GadgetVertex> vertices;
    std::vector<GadgetEdge> edges;
    std::vector<int> uncolored;
    std::vector<int> recolorable;
    std::vector<int> targets;

    int vertex_index(const std::string& name) const;
    int edge_index(const std::string& label) const;
    // Uncolored edges followed by recolorable ones.
    std::vector<int> working_edges() const;
    EdgeGraph edge_graph(const std::vector<int>& edge_ids) const;
    std::vector<std::string> labels(const std::vector<int>& edge_ids) const;
};

} // namespace ecol
