#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecol {

// Facial walk as a cyclic vertex sequence: the darts are walk[i] -> walk[i+1].
// A vertex may occur more than once; the degree counts multiplicity.
struct Face {
    std::vector<int> walk;
    int degree() const { return static_cast<int>(walk.size()); }
};

// Planar embedding given by a rotation system. Vertices are indexed 0..n-1 and
// carry the positive integer ids of the input file. Faces are traced with the
// convention: the dart after (u->v) is (v->w), where w is the clockwise
// successor of u in the rotation of v.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    // Validates symmetry, simplicity and the sphere condition per component.
    static EmbeddedGraph from_rotation(std::vector<int> ids, std::vector<std::vector<int>> rotation);

    int num_vertices() const { return static_cast<int>(ids_.size()); }
    int num_edges() const { return num_edges_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    int id(int v) const { return ids_[v]; }
    const std::vector<int>& ids() const { return ids_; }
    std::optional<int> index_of(int id) const;

    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
    int max_degree() const;
    bool adjacent(int u, int v) const { return position(u, v) >= 0; }
    // Index of v in the rotation of u, or -1.
    int position(int u, int v) const;
    // Neighbor of v that follows u clockwise.
    int successor(int v, int u) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }
    // Face containing the dart u->v.
    int face_of_dart(int u, int v) const;

    // Edges as (u, v) with u < v, in increasing order.
    std::vector<std::pair<int, int>> edges() const;

    int num_components() const { return num_components_; }
    int component(int v) const { return component_[v]; }
    bool connected() const { return num_components_ <= 1; }
    // Induced embedding on one component, keeping the input order of vertices.
    EmbeddedGraph component_graph(int c) const;

    // Breadth-first distances from a set of sources; -1 when unreachable.
    std::vector<int> distances_from(const std::vector<int>& sources) const;

    bool operator==(const EmbeddedGraph& other) const {
        return ids_ == other.ids_ && rotation_ == other.rotation_;
    }

private:
    void build();

    std::vector<int> ids_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<std::pair<int, int>>> sorted_nbrs_;
    std::vector<int> dart_offset_;
    std::vector<int> dart_face_;
    std::vector<Face> faces_;
    std::vector<int> component_;
    int num_components_ = 0;
    int num_edges_ = 0;
};

EmbeddedGraph parse_rotation(const std::string& text);
EmbeddedGraph read_graph_file(const std::string& path);
std::string serialize_rotation(const EmbeddedGraph& g);
// Reverses every rotation, giving the mirror embedding.
EmbeddedGraph mirror(const EmbeddedGraph& g);

std::vector<Face> trace_faces(const EmbeddedGraph& g);

enum class Base { Weak, SemiWeak, Other };
enum class Special { None, E2, E3, E4, S2, S3, S4 };

struct NeighborClass {
    Base base = Base::Other;
    Special special = Special::None;
    bool operator==(const NeighborClass&) const = default;
};

const char* base_name(Base b);
const char* special_name(Special s);

// Third vertices of the triangular faces on edge (u, v).
std::vector<int> triangle_thirds(const EmbeddedGraph& g, int u, int v);
bool is_triangle_face(const EmbeddedGraph& g, int a, int b, int c);

NeighborClass neighbor_classification(const EmbeddedGraph& g, int u, int v);

struct GeneratorOptions {
    int n = 50;
    int max_degree = 8;
    std::uint64_t seed = 1;
    int flips_per_vertex = 4;
    // Fraction of edges removed after triangulating, keeping connectivity.
    double delete_fraction = 0.0;
};

EmbeddedGraph generate_planar(const GeneratorOptions& options);
EmbeddedGraph generate_planar(std::uint64_t seed, int n, int max_degree);

} // namespace ecol
