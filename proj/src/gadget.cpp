#include "ecol/gadget.hpp"

#include "ecol/error.hpp"
#include "ecol/listcolor.hpp"

namespace ecol {

int Gadget::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].name == name) return static_cast<int>(i);
    }
    throw Error(ErrorKind::UnknownElement, "no vertex named " + name + " in " + config);
}

int Gadget::edge_index(const std::string& label) const {
    if (!label.empty()) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].label == label) return static_cast<int>(i);
        }
    }
    throw Error(ErrorKind::UnknownElement, "no edge labeled " + label + " in " + config);
}

std::vector<int> Gadget::working_edges() const {
    std::vector<int> out = uncolored;
    out.insert(out.end(), recolorable.begin(), recolorable.end());
    return out;
}

EdgeGraph Gadget::edge_graph(const std::vector<int>& edge_ids) const {
    EdgeGraph eg;
    eg.num_vertices = static_cast<int>(vertices.size());
    for (const auto& v : vertices) eg.vertex_names.push_back(v.name);
    for (int e : edge_ids) {
        eg.edges.emplace_back(edges[e].u, edges[e].v);
        eg.edge_labels.push_back(edges[e].label);
    }
    return eg;
}

std::vector<std::string> Gadget::labels(const std::vector<int>& edge_ids) const {
    std::vector<std::string> out;
    for (int e : edge_ids) out.push_back(edges[e].label);
    return out;
}

} // namespace ecol
