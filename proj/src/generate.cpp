#include "ecol/embed.hpp"

#include "ecol/error.hpp"
#include "ecol/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

namespace ecol {

namespace {

using Rotation = std::vector<std::vector<int>>;

int index_in(const std::vector<int>& r, int x) {
    return static_cast<int>(std::find(r.begin(), r.end(), x) - r.begin());
}

int succ(const Rotation& rot, int v, int u) {
    const auto& r = rot[v];
    return r[(index_in(r, u) + 1) % r.size()];
}

void insert_after(std::vector<int>& r, int anchor, int x) {
    r.insert(r.begin() + index_in(r, anchor) + 1, x);
}

void erase_value(std::vector<int>& r, int x) { r.erase(r.begin() + index_in(r, x)); }

bool has(const std::vector<int>& r, int x) { return std::find(r.begin(), r.end(), x) != r.end(); }

// Triangular faces as (a, b, c) with darts a->b->c->a.
std::vector<std::array<int, 3>> triangles(const Rotation& rot) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < static_cast<int>(rot.size()); ++a) {
        for (int b : rot[a]) {
            const int c = succ(rot, b, a);
            if (succ(rot, c, b) != a) continue;
            if (a < b && a < c) out.push_back({a, b, c});
        }
    }
    return out;
}

bool try_flip(Rotation& rot, int a, int b, int cap) {
    const int c = succ(rot, b, a);
    const int d = succ(rot, a, b);
    if (succ(rot, c, b) != a || succ(rot, d, a) != b) return false;
    if (c == d || has(rot[c], d)) return false;
    if (rot[a].size() <= 3 || rot[b].size() <= 3) return false;
    if (static_cast<int>(rot[c].size()) >= cap || static_cast<int>(rot[d].size()) >= cap) return false;
    erase_value(rot[a], b);
    erase_value(rot[b], a);
    insert_after(rot[c], b, d);
    insert_after(rot[d], a, c);
    return true;
}

void random_flips(Rotation& rot, Rng& rng, int count, int cap) {
    const int n = static_cast<int>(rot.size());
    for (int i = 0; i < count; ++i) {
        const int a = static_cast<int>(rng.below(n));
        const int b = rot[a][rng.below(rot[a].size())];
        try_flip(rot, a, b, cap);
    }
}

bool connected_without(const Rotation& rot, int a, int b) {
    std::vector<char> seen(rot.size(), 0);
    std::queue<int> q;
    q.push(a);
    seen[a] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : rot[v]) {
            if ((v == a && w == b) || (v == b && w == a)) continue;
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return seen[b];
}

} // namespace

EmbeddedGraph generate_planar(const GeneratorOptions& opt) {
    if (opt.n < 4) throw Error(ErrorKind::Generator, "generator needs n >= 4");
    if (opt.max_degree < 5) throw Error(ErrorKind::Generator, "generator needs max degree >= 5");
    Rng rng(opt.seed);
    const int cap = opt.max_degree;
    Rotation rot = {{1, 2}, {2, 0}, {0, 1}};

    for (int x = 3; x < opt.n; ++x) {
        std::vector<std::array<int, 3>> open;
        for (int round = 0; round < 200 && open.empty(); ++round) {
            for (const auto& t : triangles(rot)) {
                if (static_cast<int>(std::max({rot[t[0]].size(), rot[t[1]].size(), rot[t[2]].size()})) < cap)
                    open.push_back(t);
            }
            if (open.empty()) random_flips(rot, rng, 4 * x, cap);
        }
        if (open.empty())
            throw Error(ErrorKind::Generator, "cannot place vertex " + std::to_string(x + 1) + " under degree cap " +
                                                  std::to_string(cap));
        const auto [a, b, c] = open[rng.below(open.size())];
        insert_after(rot[b], a, x);
        insert_after(rot[c], b, x);
        insert_after(rot[a], c, x);
        rot.push_back({b, a, c});
        random_flips(rot, rng, opt.flips_per_vertex, cap);
    }

    if (opt.delete_fraction > 0.0) {
        int edges = 0;
        for (const auto& r : rot) edges += static_cast<int>(r.size());
        edges /= 2;
        const int target = static_cast<int>(std::lround(opt.delete_fraction * edges));
        int removed = 0;
        for (int attempt = 0; attempt < 20 * target + 20 && removed < target; ++attempt) {
            const int a = static_cast<int>(rng.below(rot.size()));
            if (rot[a].empty()) continue;
            const int b = rot[a][rng.below(rot[a].size())];
            if (!connected_without(rot, a, b)) continue;
            erase_value(rot[a], b);
            erase_value(rot[b], a);
            ++removed;
        }
    }

    std::vector<int> ids(opt.n);
    for (int i = 0; i < opt.n; ++i) ids[i] = i + 1;
    return EmbeddedGraph::from_rotation(std::move(ids), std::move(rot));
}

EmbeddedGraph generate_planar(std::uint64_t seed, int n, int max_degree) {
    GeneratorOptions opt;
    opt.seed = seed;
    opt.n = n;
    opt.max_degree = max_degree;
    return generate_planar(opt);
}

} // namespace ecol
