#pragma once

#include "ecol/colorset.hpp"
#include "ecol/embed.hpp"
#include "ecol/gadget.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecol {

// Abstract graph whose edges are the objects being colored.
struct EdgeGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_labels;

    int num_edges() const { return static_cast<int>(edges.size()); }
    // For each edge, the edges sharing an endpoint with it.
    std::vector<std::vector<int>> incidence() const;

    static EdgeGraph from_pairs(int num_vertices, std::vector<std::pair<int, int>> edges);
    static EdgeGraph cycle(int length);
    static EdgeGraph star(int leaves);
    static EdgeGraph path(int edges);
};

EdgeGraph edge_graph_of(const EmbeddedGraph& g);

// One color set per edge of an EdgeGraph.
using ListAssignment = std::vector<ColorSet>;

// Lines "u v : c1 c2 ..." with vertex names and colors as written.
std::string format_lists(const EdgeGraph& eg, const ListAssignment& lists);
ListAssignment parse_lists(const EdgeGraph& eg, const std::string& text);

struct SolveOptions {
    // Remove edges whose list outnumbers their uncolored incident edges before searching.
    bool deletion = true;
};

// Exact list edge coloring. `fixed` holds a color per edge or -1 for edges to be
// colored; an empty vector means all edges are free.
std::optional<std::vector<int>> color_edges(const EdgeGraph& eg, const ListAssignment& lists,
                                            const std::vector<int>& fixed = {}, SolveOptions options = {});

bool is_proper(const EdgeGraph& eg, const std::vector<int>& coloring);

enum class Status { Pass, Fail, Budget };
const char* status_name(Status s);

struct Verdict {
    Status status = Status::Pass;
    std::optional<ListAssignment> witness;
    std::uint64_t instances = 0;
    std::uint64_t rejected = 0;
    std::vector<std::string> notes;
};

// Canonical form of a list assignment up to renaming colors: the multiset of
// color incidence masks (bit e set when the color lies in the list of edge e),
// sorted in decreasing order.
std::vector<std::uint64_t> canonical_form(const ListAssignment& lists);
ListAssignment lists_from_form(const std::vector<std::uint64_t>& form, int num_edges);

// Visits one assignment per renaming class with |L(e)| = sizes[e], in
// decreasing order of canonical form. The visitor returns false to stop.
void enumerate_canonical(const std::vector<int>& sizes, const std::function<bool(const ListAssignment&)>& visit);

struct ExhaustiveOptions {
    int max_edges = 8;
    int max_total = 20;
    // Restricts the quantifier to assignments satisfying a precondition.
    std::function<bool(const ListAssignment&)> accept;
    // Also quotient by edge automorphisms preserving the sizes; ignored when
    // `accept` is set.
    bool symmetry = true;
};

// Permutations of the edges preserving incidence and list sizes, identity
// first, at most `limit` of them.
std::vector<std::vector<int>> edge_automorphisms(const EdgeGraph& eg, const std::vector<int>& sizes,
                                                 std::size_t limit = 5040);

Verdict choosable_exhaustive(const EdgeGraph& eg, const std::vector<int>& sizes, const ExhaustiveOptions& options = {});

Verdict verify_even_cycle(int max_len);
// Four-cycle b, c, d, e with a pendant edge a meeting b and e.
EdgeGraph lemma_l2322_graph();
Verdict verify_l2322();
Verdict verify_star3();

struct SizeProfile {
    std::vector<std::string> labels;
    std::vector<int> sizes;
    int size_of(const std::string& label) const;
};

// Residual list sizes with 9 colors for the uncolored edges, or for the
// uncolored plus recolorable edges when `with_recolorable` is set.
SizeProfile residual_sizes(const Gadget& gadget, bool with_recolorable = false);

struct RecolorInstance {
    EdgeGraph graph;
    std::vector<int> current;
    ListAssignment allowed;
    std::vector<bool> target;
    // Allows current colors outside the allowed lists for edges that keep them.
    bool relaxed = false;
};

struct RecolorResult {
    bool success = false;
    std::vector<int> coloring;
    // "cycle" or "cascade".
    std::string move;
    std::vector<int> chain;
};

// Arc u -> v of the recoloring digraph when current[u] is allowed at v.
std::vector<std::vector<int>> recoloring_digraph(const RecolorInstance& inst);
// Completeness precondition of the procedure: recolorable edges pairwise incident.
bool pairwise_incident(const RecolorInstance& inst);
RecolorResult recolor_rotate_or_cascade(const RecolorInstance& inst);
std::optional<std::vector<int>> brute_force_recolor(const RecolorInstance& inst);

} // namespace ecol
