#include "ecol/configs.hpp"

#include <algorithm>
#include <set>

namespace ecol {

std::string config_name(ConfigId id) { return "C" + std::to_string(static_cast<int>(id)); }

std::optional<ConfigId> parse_config_id(const std::string& name) {
    for (ConfigId id : kAllConfigs) {
        if (config_name(id) == name) return id;
    }
    return std::nullopt;
}

const std::vector<std::string>& config_roles(ConfigId id) {
    static const std::map<ConfigId, std::vector<std::string>> roles = {
        {ConfigId::C1, {"u", "v"}},
        {ConfigId::C2, {"u", "v", "w", "x"}},
        {ConfigId::C3, {"u", "v1", "v2", "v3"}},
        {ConfigId::C4, {"u", "v1", "v2", "v3", "v4"}},
        {ConfigId::C5, {"u", "v1", "v2", "v3", "v4"}},
        {ConfigId::C6, {"u", "v1", "v2", "v3", "v4", "v5"}},
        {ConfigId::C7, {"u", "v1", "v2", "v3", "v4"}},
        {ConfigId::C8, {"u", "v", "w", "x", "y"}},
        {ConfigId::C9, {"u", "v1", "v2", "v3"}},
        {ConfigId::C10, {"u", "v1", "v2", "v3"}},
        {ConfigId::C11, {"u", "v", "w", "x"}},
    };
    return roles.at(id);
}

const std::vector<std::pair<int, int>>& config_symmetries(ConfigId id) {
    static const std::map<ConfigId, std::vector<std::pair<int, int>>> sym = {
        {ConfigId::C1, {{0, 1}}},
        {ConfigId::C2, {{0, 2}, {1, 3}}},
        {ConfigId::C3, {{1, 2}}},
        {ConfigId::C4, {{3, 4}}},
        {ConfigId::C5, {{2, 3}}},
        {ConfigId::C6, {{3, 4}}},
        {ConfigId::C7, {{3, 4}}},
        {ConfigId::C8, {}},
        {ConfigId::C9, {{1, 2}}},
        {ConfigId::C10, {}},
        {ConfigId::C11, {{1, 3}}},
    };
    return sym.at(id);
}

std::vector<int> canonical_binding(ConfigId id, std::vector<int> binding) {
    for (const auto& [i, j] : config_symmetries(id)) {
        if (binding[i] > binding[j]) std::swap(binding[i], binding[j]);
    }
    return binding;
}

namespace {

// Roles whose edge to u carries a face condition.
std::vector<int> classified_roles(ConfigId id) {
    switch (id) {
    case ConfigId::C3: return {1, 2};
    case ConfigId::C4: return {1, 2};
    case ConfigId::C5: return {1, 2, 3, 4};
    case ConfigId::C6: return {1};
    case ConfigId::C7: return {1, 2, 3, 4};
    case ConfigId::C9: return {1, 2, 3};
    case ConfigId::C10: return {2};
    default: return {};
    }
}

std::vector<int> witness_faces(const EmbeddedGraph& g, ConfigId id, const std::vector<int>& b) {
    std::vector<int> out;
    for (int r : classified_roles(id)) {
        out.push_back(g.face_of_dart(b[0], b[r]));
        out.push_back(g.face_of_dart(b[r], b[0]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Neighborhood {
    std::vector<int> nbrs;
    std::vector<NeighborClass> cls;
};

Neighborhood neighborhood(const EmbeddedGraph& g, int u) {
    Neighborhood h;
    h.nbrs = g.rotation(u);
    for (int v : h.nbrs) h.cls.push_back(neighbor_classification(g, u, v));
    return h;
}

bool distinct(std::initializer_list<int> xs) {
    std::vector<int> v(xs);
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

class Matcher {
public:
    Matcher(const EmbeddedGraph& g, ConfigId id) : g_(g), id_(id) {}

    std::vector<ConfigMatch> run() {
        const int n = g_.num_vertices();
        for (int u = 0; u < n; ++u) {
            switch (id_) {
            case ConfigId::C1: c1(u); break;
            case ConfigId::C2: c2(u); break;
            case ConfigId::C3: if (d(u) == 8) c3(u); break;
            case ConfigId::C4: if (d(u) == 8) c4(u); break;
            case ConfigId::C5: if (d(u) == 8) c5(u); break;
            case ConfigId::C6: if (d(u) == 8) c6(u); break;
            case ConfigId::C7: if (d(u) == 8) c7(u); break;
            case ConfigId::C8: if (d(u) == 7) c8(u); break;
            case ConfigId::C9: if (d(u) == 7) c9(u); break;
            case ConfigId::C10: if (d(u) == 7) c10(u); break;
            case ConfigId::C11: if (d(u) == 5) c11(u); break;
            }
        }
        auto key = [&](const ConfigMatch& m) {
            std::vector<int> ids;
            for (int v : m.binding) ids.push_back(g_.id(v));
            std::vector<int> sorted = ids;
            std::sort(sorted.begin(), sorted.end());
            return std::make_pair(sorted, ids);
        };
        std::sort(out_.begin(), out_.end(), [&](const ConfigMatch& a, const ConfigMatch& b) { return key(a) < key(b); });
        return std::move(out_);
    }

private:
    int d(int v) const { return g_.degree(v); }

    void emit(std::vector<int> b) {
        ConfigMatch m;
        m.config = id_;
        m.witness_faces = witness_faces(g_, id_, b);
        m.binding = std::move(b);
        out_.push_back(std::move(m));
    }

    // Neighbors of u selected by a predicate on (vertex, class).
    template <class Pred>
    std::vector<int> pick(const Neighborhood& h, Pred pred) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < h.nbrs.size(); ++i) {
            if (pred(h.nbrs[i], h.cls[i])) out.push_back(h.nbrs[i]);
        }
        return out;
    }

    static bool weak(const NeighborClass& c) { return c.base == Base::Weak; }

    void c1(int u) {
        for (int v : g_.rotation(u)) {
            if (u < v && d(u) + d(v) <= 10) emit({u, v});
        }
    }

    void c2(int u) {
        if (d(u) != 3) return;
        const auto& nb = g_.rotation(u);
        for (int v : nb) {
            for (int x : nb) {
                if (v >= x) continue;
                for (int w : g_.rotation(v)) {
                    if (w <= u || d(w) != 3 || w == x || !g_.adjacent(w, x)) continue;
                    emit({u, v, w, x});
                }
            }
        }
    }

    void c3(int u) {
        const auto h = neighborhood(g_, u);
        auto v12 = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) == 3; });
        auto v3s = pick(h, [&](int v, const NeighborClass&) { return d(v) <= 5; });
        for (int v1 : v12)
            for (int v2 : v12) {
                if (v1 >= v2) continue;
                for (int v3 : v3s)
                    if (distinct({v1, v2, v3})) emit({u, v1, v2, v3});
            }
    }

    void c4(int u) {
        const auto h = neighborhood(g_, u);
        auto v1s = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) == 3; });
        auto v2s = pick(h, [&](int v, const NeighborClass& c) { return c.base == Base::SemiWeak && d(v) == 3; });
        auto lows = pick(h, [&](int v, const NeighborClass&) { return d(v) <= 5; });
        for (int v1 : v1s)
            for (int v2 : v2s)
                for (int v3 : lows)
                    for (int v4 : lows)
                        if (v3 < v4 && distinct({v1, v2, v3, v4})) emit({u, v1, v2, v3, v4});
    }

    void c5(int u) {
        const auto h = neighborhood(g_, u);
        auto v1s = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) == 3; });
        auto v23 = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) == 4; });
        auto v4s = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) <= 5; });
        for (int v1 : v1s)
            for (int v2 : v23)
                for (int v3 : v23)
                    for (int v4 : v4s)
                        if (v2 < v3 && distinct({v1, v2, v3, v4})) emit({u, v1, v2, v3, v4});
    }

    void c6(int u) {
        const auto h = neighborhood(g_, u);
        auto v1s = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) == 3; });
        auto v2s = pick(h, [&](int v, const NeighborClass&) { return d(v) == 4; });
        auto lows = pick(h, [&](int v, const NeighborClass&) { return d(v) <= 5; });
        auto v5s = pick(h, [&](int v, const NeighborClass&) { return d(v) <= 7; });
        for (int v1 : v1s)
            for (int v2 : v2s)
                for (int v3 : lows)
                    for (int v4 : lows) {
                        if (v3 >= v4 || !distinct({v1, v2, v3, v4})) continue;
                        for (int v5 : v5s)
                            if (distinct({v1, v2, v3, v4, v5})) emit({u, v1, v2, v3, v4, v5});
                    }
    }

    void c7(int u) {
        const auto h = neighborhood(g_, u);
        auto v1s = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) == 3; });
        auto v2s = pick(h, [&](int, const NeighborClass& c) { return c.special == Special::E2; });
        auto lows = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) <= 5; });
        for (int v1 : v1s)
            for (int v2 : v2s)
                for (int v3 : lows)
                    for (int v4 : lows)
                        if (v3 < v4 && distinct({v1, v2, v3, v4})) emit({u, v1, v2, v3, v4});
    }

    void c8(int u) {
        const auto& nb = g_.rotation(u);
        for (int w : nb) {
            if (d(w) != 6) continue;
            for (int v : nb) {
                if (d(v) != 5 || !g_.adjacent(v, w)) continue;
                for (int x : nb) {
                    if (x == v || d(x) != 5 || !g_.adjacent(x, w)) continue;
                    for (int y : g_.rotation(x)) {
                        if (d(y) == 6 && distinct({u, v, w, x, y})) emit({u, v, w, x, y});
                    }
                }
            }
        }
    }

    void c9(int u) {
        const auto h = neighborhood(g_, u);
        auto v12 = pick(h, [&](int v, const NeighborClass& c) { return weak(c) && d(v) == 4; });
        auto v3s = pick(h, [&](int v, const NeighborClass& c) {
            const bool s = c.special == Special::S2 || c.special == Special::S3 || c.special == Special::S4;
            return weak(c) && (s || d(v) == 4);
        });
        for (int v1 : v12)
            for (int v2 : v12)
                for (int v3 : v3s)
                    if (v1 < v2 && distinct({v1, v2, v3})) emit({u, v1, v2, v3});
    }

    void c10(int u) {
        const auto h = neighborhood(g_, u);
        auto v1s = pick(h, [&](int v, const NeighborClass&) { return d(v) == 4; });
        auto v2s = pick(h, [&](int, const NeighborClass& c) { return c.special == Special::S3; });
        auto v3s = pick(h, [&](int v, const NeighborClass&) { return d(v) <= 5; });
        for (int v1 : v1s)
            for (int v2 : v2s)
                for (int v3 : v3s)
                    if (distinct({v1, v2, v3})) emit({u, v1, v2, v3});
    }

    void c11(int u) {
        const auto& nb = g_.rotation(u);
        for (int w : nb) {
            if (d(w) != 6) continue;
            for (int v : nb) {
                if (v == w || d(v) != 6 || !g_.adjacent(v, w)) continue;
                for (int x : nb) {
                    if (x <= v || x == w || d(x) != 6 || !g_.adjacent(x, w)) continue;
                    emit({u, v, w, x});
                }
            }
        }
    }

    const EmbeddedGraph& g_;
    ConfigId id_;
    std::vector<ConfigMatch> out_;
};

} // namespace

std::vector<ConfigMatch> match_config(const EmbeddedGraph& g, ConfigId id) { return Matcher(g, id).run(); }

std::map<ConfigId, std::vector<ConfigMatch>> match_all(const EmbeddedGraph& g) {
    std::map<ConfigId, std::vector<ConfigMatch>> out;
    for (ConfigId id : kAllConfigs) out[id] = match_config(g, id);
    return out;
}

// ── Independent re-check ────────────────────────────────────────

bool verify_match(const EmbeddedGraph& g, const ConfigMatch& m) {
    const auto& roles = config_roles(m.config);
    const auto& b = m.binding;
    if (b.size() != roles.size()) return false;
    for (int v : b) {
        if (v < 0 || v >= g.num_vertices()) return false;
    }
    std::set<int> uniq(b.begin(), b.end());
    if (uniq.size() != b.size()) return false;

    auto d = [&](int i) { return g.degree(b[i]); };
    auto adj = [&](int i, int j) { return g.adjacent(b[i], b[j]); };
    auto cls = [&](int i) { return neighbor_classification(g, b[0], b[i]); };
    auto weak = [&](int i) { return adj(0, i) && cls(i).base == Base::Weak; };
    auto nbr_of_u = [&](int from, int to) {
        for (int i = from; i <= to; ++i) {
            if (!adj(0, i)) return false;
        }
        return true;
    };

    switch (m.config) {
    case ConfigId::C1:
        return adj(0, 1) && d(0) + d(1) <= 10;
    case ConfigId::C2:
        return adj(0, 1) && adj(1, 2) && adj(2, 3) && adj(3, 0) && d(0) == 3 && d(2) == 3;
    case ConfigId::C3:
        return d(0) == 8 && nbr_of_u(1, 3) && weak(1) && weak(2) && d(1) == 3 && d(2) == 3 && d(3) <= 5;
    case ConfigId::C4:
        return d(0) == 8 && nbr_of_u(1, 4) && weak(1) && d(1) == 3 && cls(2).base == Base::SemiWeak && d(2) == 3 &&
               d(3) <= 5 && d(4) <= 5;
    case ConfigId::C5:
        return d(0) == 8 && nbr_of_u(1, 4) && weak(1) && weak(2) && weak(3) && weak(4) && d(1) == 3 && d(2) == 4 &&
               d(3) == 4 && d(4) <= 5;
    case ConfigId::C6:
        return d(0) == 8 && nbr_of_u(1, 5) && weak(1) && d(1) == 3 && d(2) == 4 && d(3) <= 5 && d(4) <= 5 &&
               d(5) <= 7;
    case ConfigId::C7:
        return d(0) == 8 && nbr_of_u(1, 4) && weak(1) && d(1) == 3 && weak(2) && d(2) == 5 &&
               cls(2).special == Special::E2 && weak(3) && weak(4) && d(3) <= 5 && d(4) <= 5;
    case ConfigId::C8:
        return d(0) == 7 && nbr_of_u(1, 3) && adj(2, 1) && adj(2, 3) && d(2) == 6 && d(1) == 5 && d(3) == 5 &&
               d(4) == 6 && adj(4, 3);
    case ConfigId::C9: {
        if (!(d(0) == 7 && nbr_of_u(1, 3) && weak(1) && weak(2) && weak(3) && d(1) == 4 && d(2) == 4)) return false;
        const Special s = cls(3).special;
        return s == Special::S2 || s == Special::S3 || s == Special::S4 || d(3) == 4;
    }
    case ConfigId::C10:
        return d(0) == 7 && nbr_of_u(1, 3) && d(1) == 4 && cls(2).special == Special::S3 && d(3) <= 5;
    case ConfigId::C11:
        return d(0) == 5 && nbr_of_u(1, 3) && adj(2, 1) && adj(2, 3) && d(1) == 6 && d(2) == 6 && d(3) == 6;
    }
    return false;
}

} // namespace ecol
