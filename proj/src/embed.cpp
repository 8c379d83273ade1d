#include "ecol/embed.hpp"

#include "ecol/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace ecol {

// ── Construction ────────────────────────────────────────────────

EmbeddedGraph EmbeddedGraph::from_rotation(std::vector<int> ids, std::vector<std::vector<int>> rotation) {
    if (ids.size() != rotation.size())
        throw Error(ErrorKind::Malformed, "vertex count does not match rotation count");
    const int n = static_cast<int>(ids.size());
    for (int v = 0; v < n; ++v) {
        for (int w : rotation[v]) {
            if (w < 0 || w >= n) throw Error(ErrorKind::Malformed, "neighbor index out of range");
            if (w == v) throw Error(ErrorKind::Malformed, "self-loop at vertex " + std::to_string(ids[v]));
        }
    }
    EmbeddedGraph g;
    g.ids_ = std::move(ids);
    g.rotation_ = std::move(rotation);
    g.build();
    return g;
}

void EmbeddedGraph::build() {
    const int n = num_vertices();
    sorted_nbrs_.assign(n, {});
    dart_offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        auto& s = sorted_nbrs_[v];
        for (int i = 0; i < degree(v); ++i) s.emplace_back(rotation_[v][i], i);
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i].first == s[i - 1].first)
                throw Error(ErrorKind::Malformed, "duplicate neighbor " + std::to_string(ids_[s[i].first]) +
                                                      " at vertex " + std::to_string(ids_[v]));
        }
        dart_offset_[v + 1] = dart_offset_[v] + degree(v);
    }
    for (int v = 0; v < n; ++v) {
        for (int w : rotation_[v]) {
            if (position(w, v) < 0)
                throw Error(ErrorKind::Malformed, "asymmetric adjacency between " + std::to_string(ids_[v]) +
                                                      " and " + std::to_string(ids_[w]));
        }
    }
    num_edges_ = dart_offset_[n] / 2;

    dart_face_.assign(dart_offset_[n], -1);
    faces_.clear();
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < degree(u); ++i) {
            if (dart_face_[dart_offset_[u] + i] >= 0) continue;
            const int f = static_cast<int>(faces_.size());
            Face face;
            int a = u, b = rotation_[u][i];
            while (dart_face_[dart_offset_[a] + position(a, b)] < 0) {
                dart_face_[dart_offset_[a] + position(a, b)] = f;
                face.walk.push_back(a);
                const int c = successor(b, a);
                a = b;
                b = c;
            }
            faces_.push_back(std::move(face));
        }
    }

    component_.assign(n, -1);
    num_components_ = 0;
    for (int s = 0; s < n; ++s) {
        if (component_[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        component_[s] = num_components_;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : rotation_[v]) {
                if (component_[w] < 0) {
                    component_[w] = num_components_;
                    q.push(w);
                }
            }
        }
        ++num_components_;
    }

    std::vector<bool> has_edge(num_components_, false);
    std::vector<long> vcount(num_components_, 0), dsum(num_components_, 0), fcount(num_components_, 0);
    for (int v = 0; v < n; ++v) {
        vcount[component_[v]] += 1;
        dsum[component_[v]] += degree(v);
        if (degree(v) > 0) has_edge[component_[v]] = true;
    }
    for (const Face& f : faces_) fcount[component_[f.walk.front()]] += 1;
    for (int c = 0; c < num_components_; ++c) {
        if (!has_edge[c]) continue;
        const long chi = vcount[c] - dsum[c] / 2 + fcount[c];
        if (chi != 2)
            throw Error(ErrorKind::NotSphere, "rotation system is not a sphere embedding (V-E+F = " +
                                                  std::to_string(chi) + " on a component)");
    }
}

std::optional<int> EmbeddedGraph::index_of(int id) const {
    for (int v = 0; v < num_vertices(); ++v) {
        if (ids_[v] == id) return v;
    }
    return std::nullopt;
}

int EmbeddedGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

int EmbeddedGraph::position(int u, int v) const {
    const auto& s = sorted_nbrs_[u];
    auto it = std::lower_bound(s.begin(), s.end(), std::make_pair(v, -1));
    if (it == s.end() || it->first != v) return -1;
    return it->second;
}

int EmbeddedGraph::successor(int v, int u) const {
    const int i = position(v, u);
    return rotation_[v][(i + 1) % degree(v)];
}

int EmbeddedGraph::face_of_dart(int u, int v) const {
    const int i = position(u, v);
    if (i < 0) throw Error(ErrorKind::NotAnEdge, "not an edge: " + std::to_string(ids_[u]) + " " + std::to_string(ids_[v]));
    return dart_face_[dart_offset_[u] + i];
}

std::vector<std::pair<int, int>> EmbeddedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_vertices(); ++u) {
        for (const auto& [w, i] : sorted_nbrs_[u]) {
            if (u < w) out.emplace_back(u, w);
        }
    }
    return out;
}

EmbeddedGraph EmbeddedGraph::component_graph(int c) const {
    std::vector<int> map(num_vertices(), -1);
    std::vector<int> ids;
    for (int v = 0; v < num_vertices(); ++v) {
        if (component_[v] == c) {
            map[v] = static_cast<int>(ids.size());
            ids.push_back(ids_[v]);
        }
    }
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < num_vertices(); ++v) {
        if (component_[v] != c) continue;
        std::vector<int> r;
        for (int w : rotation_[v]) r.push_back(map[w]);
        rot.push_back(std::move(r));
    }
    return from_rotation(std::move(ids), std::move(rot));
}

std::vector<int> EmbeddedGraph::distances_from(const std::vector<int>& sources) const {
    std::vector<int> dist(num_vertices(), -1);
    std::queue<int> q;
    for (int s : sources) {
        if (dist[s] < 0) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : rotation_[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<Face> trace_faces(const EmbeddedGraph& g) { return g.faces(); }

// ── Text format ─────────────────────────────────────────────────

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_id(const std::string& token, int line) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::Parse, "invalid vertex id '" + token + "'", line);
    long value = 0;
    for (char ch : token) {
        value = value * 10 + (ch - '0');
        if (value > 1000000000L) throw Error(ErrorKind::Parse, "vertex id too large '" + token + "'", line);
    }
    if (value <= 0) throw Error(ErrorKind::Parse, "vertex ids must be positive", line);
    return static_cast<int>(value);
}

} // namespace

EmbeddedGraph parse_rotation(const std::string& text) {
    std::vector<int> ids;
    std::vector<int> lines;
    std::vector<std::vector<int>> raw;
    std::map<int, int> index;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected '<id>: <neighbors>'", lineno);
        const int id = parse_id(trim(line.substr(0, colon)), lineno);
        if (index.count(id)) throw Error(ErrorKind::Parse, "vertex " + std::to_string(id) + " listed twice", lineno);
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> nbrs;
        std::string token;
        while (rest >> token) {
            const int w = parse_id(token, lineno);
            if (w == id) throw Error(ErrorKind::Parse, "self-loop at vertex " + std::to_string(id), lineno);
            if (std::find(nbrs.begin(), nbrs.end(), w) != nbrs.end())
                throw Error(ErrorKind::Parse, "duplicate neighbor " + std::to_string(w) + " of vertex " + std::to_string(id), lineno);
            nbrs.push_back(w);
        }
        index[id] = static_cast<int>(ids.size());
        ids.push_back(id);
        lines.push_back(lineno);
        raw.push_back(std::move(nbrs));
    }

    std::vector<std::vector<int>> rotation(ids.size());
    for (std::size_t v = 0; v < ids.size(); ++v) {
        for (int w : raw[v]) {
            auto it = index.find(w);
            if (it == index.end()) throw Error(ErrorKind::Parse, "unknown vertex id " + std::to_string(w), lines[v]);
            rotation[v].push_back(it->second);
        }
    }
    for (std::size_t v = 0; v < ids.size(); ++v) {
        for (int w : rotation[v]) {
            const auto& back = rotation[w];
            if (std::find(back.begin(), back.end(), static_cast<int>(v)) == back.end())
                throw Error(ErrorKind::Parse, "asymmetric adjacency: " + std::to_string(ids[v]) + " lists " +
                                                  std::to_string(ids[w]) + " but not conversely", lines[v]);
        }
    }
    return EmbeddedGraph::from_rotation(std::move(ids), std::move(rotation));
}

EmbeddedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_rotation(buf.str());
}

std::string serialize_rotation(const EmbeddedGraph& g) {
    std::string out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        out += std::to_string(g.id(v)) + ":";
        for (int w : g.rotation(v)) out += " " + std::to_string(g.id(w));
        out += "\n";
    }
    return out;
}

EmbeddedGraph mirror(const EmbeddedGraph& g) {
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < g.num_vertices(); ++v) {
        rot.emplace_back(g.rotation(v).rbegin(), g.rotation(v).rend());
    }
    return EmbeddedGraph::from_rotation(g.ids(), std::move(rot));
}

// ── Neighbor classification ─────────────────────────────────────

const char* base_name(Base b) {
    switch (b) {
    case Base::Weak: return "weak";
    case Base::SemiWeak: return "semi-weak";
    case Base::Other: return "other";
    }
    return "other";
}

const char* special_name(Special s) {
    switch (s) {
    case Special::None: return "none";
    case Special::E2: return "E2";
    case Special::E3: return "E3";
    case Special::E4: return "E4";
    case Special::S2: return "S2";
    case Special::S3: return "S3";
    case Special::S4: return "S4";
    }
    return "none";
}

std::vector<int> triangle_thirds(const EmbeddedGraph& g, int u, int v) {
    std::vector<int> out;
    for (int f : {g.face_of_dart(u, v), g.face_of_dart(v, u)}) {
        const Face& face = g.face(f);
        if (face.degree() != 3) continue;
        for (int x : face.walk) {
            if (x != u && x != v) out.push_back(x);
        }
    }
    return out;
}

bool is_triangle_face(const EmbeddedGraph& g, int a, int b, int c) {
    if (!g.adjacent(a, b)) return false;
    auto thirds = triangle_thirds(g, a, b);
    return std::find(thirds.begin(), thirds.end(), c) != thirds.end();
}

namespace {

Special classify_e(const EmbeddedGraph& g, int u, int v, const std::vector<int>& thirds) {
    auto d = [&](int x) { return g.degree(x); };
    for (int w1 : thirds) {
        if (d(w1) != 6) continue;
        for (int w2 : triangle_thirds(g, v, w1)) {
            if (w2 == u) continue;
            if (d(w2) == 6) return Special::E2;
            if (d(w2) == 7) {
                for (int w3 : thirds) {
                    if (w3 != w1 && w3 != w2 && d(w3) == 6) return Special::E2;
                }
            }
        }
    }
    for (int w : thirds) {
        if (d(w) <= 7) return Special::E3;
    }
    return Special::E4;
}

Special classify_s(const EmbeddedGraph& g, int u, int v, const std::vector<int>& thirds) {
    auto d = [&](int x) { return g.degree(x); };
    const int t1 = thirds[0], t2 = thirds[1];
    if (d(t1) == 6 && d(t2) == 6) return Special::S2;

    std::vector<int> others;
    for (int w : g.rotation(v)) {
        if (w != u && w != t1 && w != t2) others.push_back(w);
    }
    if (others.size() == 2) {
        for (int flip = 0; flip < 2; ++flip) {
            const int w1 = flip ? t2 : t1, w4 = flip ? t1 : t2;
            for (int swap = 0; swap < 2; ++swap) {
                const int w2 = swap ? others[1] : others[0], w3 = swap ? others[0] : others[1];
                const bool fan = is_triangle_face(g, v, w1, w2) && is_triangle_face(g, v, w2, w3) &&
                                 is_triangle_face(g, v, w3, w4);
                if (fan && d(w1) == 7 && d(w4) == 7 && d(w2) == 6 && d(w3) == 6) return Special::S3;
                if (d(w4) == 6 && d(w2) == 6 && (d(w1) == 7 || d(w3) == 7)) return Special::S3;
            }
        }
    }

    for (int w : thirds) {
        if (d(w) <= 7) return Special::S4;
    }
    bool has6 = false, has7 = false;
    for (int w : g.rotation(v)) {
        if (w == u) continue;
        has6 = has6 || d(w) == 6;
        has7 = has7 || d(w) == 7;
    }
    if (has6 && has7) return Special::S4;
    return Special::None;
}

} // namespace

NeighborClass neighbor_classification(const EmbeddedGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || !g.adjacent(u, v))
        throw Error(ErrorKind::NotAnEdge, "classification requires an edge");
    const int d1 = g.face(g.face_of_dart(u, v)).degree();
    const int d2 = g.face(g.face_of_dart(v, u)).degree();
    NeighborClass nc;
    if (d1 == 3 && d2 == 3) {
        nc.base = Base::Weak;
    } else if ((d1 == 3 && d2 == 4) || (d1 == 4 && d2 == 3)) {
        nc.base = Base::SemiWeak;
    }
    if (nc.base != Base::Weak || g.degree(v) != 5) return nc;
    const auto thirds = triangle_thirds(g, u, v);
    if (g.degree(u) == 8) nc.special = classify_e(g, u, v, thirds);
    if (g.degree(u) == 7) nc.special = classify_s(g, u, v, thirds);
    return nc;
}

// ── Random generation ───────────────────────────────────────────

} // namespace ecol
