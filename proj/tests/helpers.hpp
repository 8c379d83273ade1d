#pragma once

#include "ecol/configs.hpp"
#include "ecol/embed.hpp"
#include "ecol/random.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace testing_support {

inline ecol::EmbeddedGraph load(const std::string& name) {
    return ecol::read_graph_file(std::string(ECOL_DATA_DIR) + "/" + name + ".txt");
}

inline std::vector<std::string> solids() { return {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}; }

// Connected planar graphs with degree at most 8, mixing triangulations and
// graphs with deleted edges; n ranges over [4, max_n].
inline std::vector<ecol::EmbeddedGraph> generated(int count, std::uint64_t seed, int max_n = 200) {
    std::vector<ecol::EmbeddedGraph> out;
    ecol::Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        ecol::GeneratorOptions o;
        o.seed = seed * 1000 + static_cast<std::uint64_t>(i);
        o.n = rng.range(4, max_n);
        o.max_degree = 8;
        const int kind = i % 4;
        o.delete_fraction = kind == 0 ? 0.0 : kind == 1 ? 0.1 : kind == 2 ? 0.3 : 0.6;
        out.push_back(ecol::generate_planar(o));
    }
    return out;
}

// Every face as a sorted vertex list, used as an independent triangle oracle.
inline bool has_triangle_face(const ecol::EmbeddedGraph& g, int a, int b, int c) {
    for (const auto& f : ecol::trace_faces(g)) {
        if (f.degree() != 3) continue;
        std::vector<int> w = f.walk, want = {a, b, c};
        std::sort(w.begin(), w.end());
        std::sort(want.begin(), want.end());
        if (w == want) return true;
    }
    return false;
}

// Brute-force matcher: all role tuples drawn from candidate sets, filtered
// by the clause-by-clause re-check and canonicalized.
inline std::vector<std::vector<int>> brute_force_bindings(const ecol::EmbeddedGraph& g, ecol::ConfigId id,
                                                          bool all_tuples) {
    const int roles = static_cast<int>(ecol::config_roles(id).size());
    const int n = g.num_vertices();
    std::vector<std::vector<int>> out;
    std::vector<int> b(roles);
    auto candidates = [&](int r) {
        std::vector<int> c;
        if (all_tuples || r == 0) {
            for (int v = 0; v < n; ++v) c.push_back(v);
            return c;
        }
        int anchor = 0;
        if (id == ecol::ConfigId::C2 && r == 2) anchor = 1;
        if (id == ecol::ConfigId::C8 && r == 4) anchor = 3;
        return g.rotation(b[anchor]);
    };
    std::function<void(int)> rec = [&](int r) {
        if (r == roles) {
            ecol::ConfigMatch m;
            m.config = id;
            m.binding = b;
            if (ecol::verify_match(g, m)) out.push_back(ecol::canonical_binding(id, b));
            return;
        }
        for (int v : candidates(r)) {
            if (std::find(b.begin(), b.begin() + r, v) != b.begin() + r) continue;
            b[r] = v;
            rec(r + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<std::vector<int>> matcher_bindings(const ecol::EmbeddedGraph& g, ecol::ConfigId id) {
    std::vector<std::vector<int>> out;
    for (const auto& m : ecol::match_config(g, id)) out.push_back(m.binding);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace testing_support
