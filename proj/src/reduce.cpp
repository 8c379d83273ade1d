#include "ecol/reduce.hpp"

#include "ecol/error.hpp"
#include "ecol/random.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace ecol {

namespace {

constexpr int kDefaultDegree = 8;

struct EdgeSpec {
    std::string label;
    std::string u;
    std::string v;
};

// Vertices not listed in `degrees` take the default degree.
Gadget make(ConfigId id, const std::string& variant, const std::vector<std::pair<std::string, int>>& degrees,
            const std::vector<EdgeSpec>& edges, const std::vector<std::string>& uncolored,
            const std::vector<std::string>& recolorable = {}, const std::vector<std::string>& targets = {}) {
    Gadget g;
    g.config = config_name(id);
    g.variant = variant;
    for (const auto& [name, d] : degrees) g.vertices.push_back({name, d});
    auto vertex = [&](const std::string& name) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            if (g.vertices[i].name == name) return static_cast<int>(i);
        }
        g.vertices.push_back({name, kDefaultDegree});
        return static_cast<int>(g.vertices.size()) - 1;
    };
    for (const auto& e : edges) {
        const int u = vertex(e.u), v = vertex(e.v);
        g.edges.push_back({e.label, u, v});
    }
    for (const auto& l : uncolored) g.uncolored.push_back(g.edge_index(l));
    for (const auto& l : recolorable) g.recolorable.push_back(g.edge_index(l));
    for (const auto& l : targets) g.targets.push_back(g.edge_index(l));
    validate_gadget(g);
    return g;
}

std::vector<std::string> letters(char from, char to) {
    std::vector<std::string> out;
    for (char c = from; c <= to; ++c) out.emplace_back(1, c);
    return out;
}

Gadget c1(const std::string& variant, int du) {
    return make(ConfigId::C1, variant, {{"u", du}, {"v", 10 - du}}, {{"uv", "u", "v"}}, {"uv"});
}

Gadget c2() {
    return make(ConfigId::C2, "default", {{"u", 3}, {"v", 8}, {"w", 3}, {"x", 8}},
                {{"uv", "u", "v"}, {"vw", "v", "w"}, {"wx", "w", "x"}, {"xu", "x", "u"}}, {"uv", "vw", "wx", "xu"});
}

Gadget c3() {
    return make(ConfigId::C3, "default", {{"u", 8}, {"v1", 3}, {"v2", 3}, {"v3", 5}},
                {{"c1", "u", "v1"},
                 {"e1", "u", "w1"},
                 {"f1", "u", "x1"},
                 {"a1", "v1", "w1"},
                 {"b1", "x1", "v1"},
                 {"c2", "u", "v2"},
                 {"e2", "u", "w2"},
                 {"f2", "u", "x2"},
                 {"a2", "v2", "w2"},
                 {"b2", "x2", "v2"},
                 {"g", "u", "v3"},
                 {"", "u", "v4"}},
                {"a1", "b1", "c1", "a2", "b2", "c2"}, {"e1", "f1", "e2", "f2", "g"}, {"e1", "f1", "e2", "f2"});
}

Gadget c4() {
    return make(ConfigId::C4, "default", {{"u", 8}, {"v1", 3}, {"v2", 3}, {"v3", 5}, {"v4", 5}},
                {{"c1", "u", "v1"},
                 {"e1", "u", "w1"},
                 {"f1", "u", "x1"},
                 {"a1", "v1", "w1"},
                 {"b1", "x1", "v1"},
                 {"c2", "u", "v2"},
                 {"a2", "v2", "w2"},
                 {"e2", "u", "w2"},
                 {"b2", "v2", "x2"},
                 {"g1", "u", "v3"},
                 {"g2", "u", "v4"},
                 {"", "u", "y"}},
                {"a1", "b1", "c1", "a2", "b2", "c2"}, {"e1", "f1", "e2", "g1", "g2"}, {"e1", "f1", "e2"});
}

Gadget c5_consecutive() {
    return make(ConfigId::C5, "consecutive", {{"u", 8}, {"v1", 3}, {"v2", 4}, {"v3", 4}, {"v4", 5}},
                {{"a", "u", "v1"},  {"b", "u", "w1"},  {"c", "u", "v2"},  {"d", "u", "w2"},  {"e", "u", "v3"},
                 {"f", "u", "w3"},  {"g", "u", "v4"},  {"h", "u", "w4"},  {"i", "w4", "v1"}, {"j", "v1", "w1"},
                 {"k", "w1", "v2"}, {"l", "x2", "v2"}, {"m", "v2", "w2"}, {"n", "w2", "v3"}, {"o", "x3", "v3"},
                 {"p", "v3", "w3"}, {"q", "w3", "v4"}, {"r", "v4", "w4"}},
                letters('a', 'r'));
}

Gadget c5_apart() {
    return make(ConfigId::C5, "non-consecutive", {{"u", 8}, {"v1", 3}, {"v2", 4}, {"v3", 4}, {"v4", 5}},
                {{"a", "u", "v1"},  {"b", "u", "w1"},  {"c", "u", "v2"},  {"d", "u", "w2"},  {"e", "u", "v4"},
                 {"f", "u", "w3"},  {"g", "u", "v3"},  {"h", "u", "w4"},  {"i", "w4", "v1"}, {"j", "v1", "w1"},
                 {"k", "w1", "v2"}, {"l", "x2", "v2"}, {"m", "v2", "w2"}, {"n", "w2", "v4"}, {"o", "v4", "w3"},
                 {"p", "w3", "v3"}, {"q", "v3", "x3"}, {"r", "v3", "w4"}},
                letters('a', 'r'));
}

Gadget c6() {
    return make(ConfigId::C6, "default", {{"u", 8}, {"v1", 3}, {"v2", 4}, {"v3", 5}, {"v4", 5}, {"v5", 7}},
                {{"c", "u", "v1"},
                 {"f", "u", "w1"},
                 {"g1", "u", "v2"},
                 {"g2", "u", "v3"},
                 {"g3", "u", "v4"},
                 {"e", "u", "w4"},
                 {"g4", "u", "v5"},
                 {"a", "w4", "v1"},
                 {"b", "v1", "w1"},
                 {"", "u", "w"}},
                {"a", "b", "c"}, {"e", "f", "g1", "g2", "g3", "g4"}, {"e", "f"});
}

Gadget c7_consecutive() {
    return make(ConfigId::C7, "consecutive",
                {{"u", 8}, {"v1", 3}, {"v2", 5}, {"v3", 5}, {"v4", 5}, {"x2", 6}, {"y", 6}},
                {{"a", "u", "v1"},  {"b", "u", "x1"},  {"c", "u", "v2"},  {"d", "u", "x2"},  {"e", "u", "v3"},
                 {"f", "u", "x3"},  {"g", "u", "v4"},  {"h", "u", "x4"},  {"i", "x4", "v1"}, {"j", "v1", "x1"},
                 {"k", "x1", "v2"}, {"l", "v2", "x2"}, {"m", "x2", "v3"}, {"n", "v3", "x3"}, {"o", "x3", "v4"},
                 {"p", "v4", "x4"}, {"q", "v2", "z"},  {"r", "v2", "y"},  {"s", "y", "x2"}},
                letters('a', 's'));
}

Gadget c7_apart(const std::string& variant, int dx2, int dy) {
    return make(ConfigId::C7, variant,
                {{"u", 8}, {"v1", 3}, {"v2", 5}, {"v3", 5}, {"v4", 5}, {"x2", dx2}, {"x3", 6}, {"y", dy}},
                {{"a", "u", "v1"},  {"b", "u", "x1"},  {"c", "u", "v3"},  {"d", "u", "x2"},  {"e", "u", "v2"},
                 {"f", "u", "x3"},  {"g", "u", "v4"},  {"h", "u", "x4"},  {"i", "x4", "v1"}, {"j", "v1", "x1"},
                 {"k", "x1", "v3"}, {"l", "v3", "x2"}, {"m", "x2", "v2"}, {"n", "v2", "x3"}, {"o", "x3", "v4"},
                 {"p", "v4", "x4"}, {"q", "v2", "z"},  {"r", "v2", "y"},  {"s", "y", "x3"}},
                letters('a', 's'));
}

Gadget c8() {
    return make(ConfigId::C8, "default", {{"u", 7}, {"v", 5}, {"w", 6}, {"x", 5}, {"y", 6}},
                {{"a", "x", "y"}, {"b", "w", "x"}, {"c", "v", "w"}, {"d", "u", "v"}, {"e", "x", "u"}, {"f", "u", "w"}},
                letters('a', 'f'));
}

std::vector<EdgeSpec> c9_shared_edges() {
    return {{"a", "u", "y1"},  {"b", "u", "v1"},  {"c", "u", "x"},   {"d", "u", "v2"},  {"e", "u", "y2"},
            {"f", "u", "v3"},  {"g", "u", "z"},   {"h", "y1", "v1"}, {"i", "v1", "w1"}, {"j", "v1", "x"},
            {"k", "x", "v2"},  {"l", "v2", "w2"}, {"m", "v2", "y2"}};
}

Gadget c9_z_low() {
    auto edges = c9_shared_edges();
    edges.push_back({"n", "y2", "v3"});
    edges.push_back({"o", "v3", "z"});
    return make(ConfigId::C9, "z-low", {{"u", 7}, {"v1", 4}, {"v2", 4}, {"v3", 5}, {"z", 7}}, edges,
                letters('a', 'o'));
}

Gadget c9_y2_low() {
    auto edges = c9_shared_edges();
    edges.push_back({"", "y2", "v3"});
    edges.push_back({"", "v3", "z"});
    return make(ConfigId::C9, "y2-low", {{"u", 7}, {"v1", 4}, {"v2", 4}, {"v3", 5}, {"y2", 7}}, edges,
                letters('a', 'm'));
}

Gadget c9_both_high() {
    auto edges = c9_shared_edges();
    edges.push_back({"n", "y2", "v3"});
    edges.push_back({"o", "v3", "z"});
    edges.push_back({"p", "v3", "s"});
    edges.push_back({"q", "v3", "t"});
    return make(ConfigId::C9, "z-y2-high", {{"u", 7}, {"v1", 4}, {"v2", 4}, {"v3", 5}, {"t", 6}}, edges,
                letters('a', 'q'));
}

std::vector<EdgeSpec> c9_apart_edges() {
    return {{"a", "u", "y1"},  {"b", "u", "v1"},  {"c", "u", "y2"},  {"d", "u", "v3"},  {"e", "u", "y3"},
            {"f", "u", "v2"},  {"g", "u", "y4"},  {"h", "y1", "v1"}, {"i", "v1", "w1"}, {"j", "v1", "y2"},
            {"k", "y2", "v3"}, {"l", "v3", "y3"}, {"m", "y3", "v2"}, {"n", "v2", "w2"}, {"o", "v2", "y4"}};
}

Gadget c9_apart_low() {
    return make(ConfigId::C9, "apart-y2-low", {{"u", 7}, {"v1", 4}, {"v2", 4}, {"v3", 5}, {"y2", 7}},
                c9_apart_edges(), letters('a', 'o'));
}

Gadget c9_apart_high() {
    auto edges = c9_apart_edges();
    edges.push_back({"p", "v3", "s"});
    edges.push_back({"q", "v3", "t"});
    return make(ConfigId::C9, "apart-high", {{"u", 7}, {"v1", 4}, {"v2", 4}, {"v3", 5}, {"s", 6}, {"t", 7}}, edges,
                letters('a', 'q'));
}

Gadget c10_common() {
    return make(ConfigId::C10, "common-6",
                {{"u", 7}, {"v1", 4}, {"v2", 5}, {"v3", 5}, {"y", 6}, {"w2", 6}, {"w3", 7}, {"w4", 8}},
                {{"a", "u", "v2"},
                 {"e", "y", "u"},
                 {"d", "v2", "y"},
                 {"b1", "u", "v3"},
                 {"b2", "u", "v1"},
                 {"c1", "v2", "w4"},
                 {"c2", "v2", "w3"},
                 {"c3", "v2", "w2"}},
                {"a", "b1", "b2", "c1", "c2", "c3", "d", "e"});
}

Gadget c10_apart() {
    return make(ConfigId::C10, "no-common-6",
                {{"u", 7}, {"v1", 4}, {"v2", 5}, {"y1", 7}, {"y2", 7}, {"z1", 6}, {"z2", 6}},
                {{"a", "v2", "u"},
                 {"b", "v2", "y1"},
                 {"c", "v2", "z1"},
                 {"d", "v2", "z2"},
                 {"e", "v2", "y2"},
                 {"f", "y2", "u"},
                 {"g", "u", "y1"},
                 {"h", "y1", "z1"},
                 {"i", "z1", "z2"},
                 {"j", "z2", "y2"},
                 {"k", "u", "v1"}},
                letters('a', 'k'));
}

Gadget c11() {
    return make(ConfigId::C11, "default", {{"u", 5}, {"v", 6}, {"w", 6}, {"x", 6}},
                {{"a", "u", "v"}, {"b", "u", "w"}, {"c", "x", "u"}, {"d", "v", "w"}, {"e", "w", "x"}},
                letters('a', 'e'));
}

ListAssignment restrict(const ListAssignment& lists, std::size_t from) {
    return ListAssignment(lists.begin() + static_cast<std::ptrdiff_t>(from), lists.end());
}

// Lists for the uncolored edges are followed by those for the recolorable
// ones; the premise holds when the recolorable edges alone are colorable.
std::function<bool(const ListAssignment&)> premise(const Gadget& g) {
    if (g.recolorable.empty()) return {};
    const EdgeGraph r = g.edge_graph(g.recolorable);
    const std::size_t offset = g.uncolored.size();
    return [r, offset](const ListAssignment& lists) { return color_edges(r, restrict(lists, offset)).has_value(); };
}

ListAssignment canonical_witness(const ListAssignment& lists) {
    return lists_from_form(canonical_form(lists), static_cast<int>(lists.size()));
}

// Palette drawn between the largest list and the sum of the sizes, then
// independent uniform lists over it; colors start at 1.
ListAssignment draw_lists(const std::vector<int>& sizes, Rng& rng) {
    const int top = *std::max_element(sizes.begin(), sizes.end());
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    const int palette = rng.range(top, total);
    ListAssignment lists;
    for (int s : sizes) {
        ColorSet l;
        for (int c : rng.subset(palette, s)) l.insert(c + 1);
        lists.push_back(l);
    }
    return lists;
}

constexpr int kMaxRedraws = 1000;

Verdict sampled(const EdgeGraph& eg, const std::vector<int>& sizes, const SampleOptions& options,
                const std::function<bool(const ListAssignment&)>& accept) {
    if (sizes.empty()) return {};
    const std::uint64_t n = options.samples;
    std::vector<std::uint32_t> rejected(n, 0);
    std::atomic<std::uint64_t> first_fail{n};
    std::vector<std::optional<ListAssignment>> found(n);
    std::atomic<bool> exhausted{false};

    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi && i < first_fail.load(); ++i) {
            Rng rng(options.seed, i);
            ListAssignment lists = draw_lists(sizes, rng);
            if (accept) {
                int tries = 0;
                while (!accept(lists)) {
                    if (++tries > kMaxRedraws) {
                        exhausted = true;
                        return;
                    }
                    ++rejected[i];
                    lists = draw_lists(sizes, rng);
                }
            }
            if (!color_edges(eg, lists)) {
                found[i] = lists;
                std::uint64_t cur = first_fail.load();
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t * chunk, std::min(n, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }
    if (exhausted) throw Error(ErrorKind::Budget, "premise rejected every redraw of a sample");

    Verdict v;
    const std::uint64_t fail = first_fail.load();
    const std::uint64_t last = fail < n ? fail + 1 : n;
    v.instances = last;
    for (std::uint64_t i = 0; i < last; ++i) v.rejected += rejected[i];
    if (fail < n) {
        v.status = Status::Fail;
        v.witness = canonical_witness(*found[fail]);
        v.notes.push_back("first failing sample " + std::to_string(fail));
    }
    return v;
}

std::vector<int> star_bounds_targets_check(const std::vector<int>& bounds, const std::vector<bool>& targets) {
    if (bounds.size() != targets.size() || bounds.empty())
        throw Error(ErrorKind::Malformed, "one bound and target flag per edge required");
    return bounds;
}

} // namespace

std::vector<std::string> gadget_variants(ConfigId id) {
    switch (id) {
    case ConfigId::C1: return {"5-5", "6-4", "7-3", "8-2"};
    case ConfigId::C5: return {"consecutive", "non-consecutive"};
    case ConfigId::C7: return {"consecutive", "x2-degree-6", "x2-degree-8"};
    case ConfigId::C9: return {"z-low", "y2-low", "z-y2-high", "apart-y2-low", "apart-high"};
    case ConfigId::C10: return {"common-6", "no-common-6"};
    default: return {"default"};
    }
}

Gadget build_gadget(ConfigId id, const std::string& variant) {
    const auto variants = gadget_variants(id);
    const std::string tag = variant.empty() ? variants.front() : variant;
    if (std::find(variants.begin(), variants.end(), tag) == variants.end())
        throw Error(ErrorKind::UnknownVariant, "unknown variant " + tag + " of " + config_name(id));
    switch (id) {
    case ConfigId::C1: return c1(tag, tag[0] - '0');
    case ConfigId::C2: return c2();
    case ConfigId::C3: return c3();
    case ConfigId::C4: return c4();
    case ConfigId::C5: return tag == "consecutive" ? c5_consecutive() : c5_apart();
    case ConfigId::C6: return c6();
    case ConfigId::C7:
        if (tag == "consecutive") return c7_consecutive();
        return tag == "x2-degree-6" ? c7_apart(tag, 6, 7) : c7_apart(tag, 8, 6);
    case ConfigId::C8: return c8();
    case ConfigId::C9:
        if (tag == "z-low") return c9_z_low();
        if (tag == "y2-low") return c9_y2_low();
        if (tag == "z-y2-high") return c9_both_high();
        if (tag == "apart-y2-low") return c9_apart_low();
        return c9_apart_high();
    case ConfigId::C10: return tag == "common-6" ? c10_common() : c10_apart();
    case ConfigId::C11: return c11();
    }
    throw Error(ErrorKind::UnknownVariant, "unknown configuration");
}

void validate_gadget(const Gadget& g) {
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<int> drawn(nv, 0);
    std::set<std::pair<int, int>> seen;
    std::set<std::string> labels;
    for (const auto& e : g.edges) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv)
            throw Error(ErrorKind::Malformed, "bad edge in gadget " + g.config);
        if (!seen.insert(std::minmax(e.u, e.v)).second)
            throw Error(ErrorKind::Malformed, "parallel edge in gadget " + g.config);
        if (!e.label.empty() && !labels.insert(e.label).second)
            throw Error(ErrorKind::Malformed, "duplicate label " + e.label + " in gadget " + g.config);
        ++drawn[e.u];
        ++drawn[e.v];
    }
    for (int v = 0; v < nv; ++v) {
        if (drawn[v] > g.vertices[v].degree)
            throw Error(ErrorKind::Malformed, "vertex " + g.vertices[v].name + " of " + g.config +
                                                  " has more drawn edges than its degree");
    }
    std::set<int> used;
    for (int e : g.working_edges()) {
        if (g.edges[e].label.empty()) throw Error(ErrorKind::Malformed, "unlabeled edge in the working set");
        if (!used.insert(e).second) throw Error(ErrorKind::Malformed, "edge listed twice in the working set");
    }
    for (int e : g.targets) {
        if (std::find(g.recolorable.begin(), g.recolorable.end(), e) == g.recolorable.end())
            throw Error(ErrorKind::Malformed, "target edge is not recolorable");
    }
}

EdgeGraph working_graph(const Gadget& g) { return g.edge_graph(g.working_edges()); }

Verdict check_reducible_exhaustive(const Gadget& g, const ExhaustiveOptions& options) {
    ExhaustiveOptions opt = options;
    if (!opt.accept) opt.accept = premise(g);
    try {
        return choosable_exhaustive(working_graph(g), residual_sizes(g, true).sizes, opt);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Budget) throw;
        Verdict v;
        v.status = Status::Budget;
        v.notes.push_back(e.what());
        return v;
    }
}

Verdict check_reducible_sampled(const Gadget& g, const SampleOptions& options) {
    return sampled(working_graph(g), residual_sizes(g, true).sizes, options, premise(g));
}

Verdict check_profile_sampled(const EdgeGraph& eg, const std::vector<int>& sizes, const SampleOptions& options) {
    if (static_cast<int>(sizes.size()) != eg.num_edges()) throw Error(ErrorKind::Malformed, "one size per edge required");
    return sampled(eg, sizes, options, {});
}

std::vector<RecolorClaim> recolor_claims() {
    std::vector<RecolorClaim> out;
    for (ConfigId id : {ConfigId::C3, ConfigId::C4, ConfigId::C6}) {
        const Gadget g = build_gadget(id);
        const SizeProfile p = residual_sizes(g, true);
        RecolorClaim c;
        c.name = g.config;
        for (int e : g.recolorable) {
            c.labels.push_back(g.edges[e].label);
            c.bounds.push_back(p.size_of(g.edges[e].label));
            c.targets.push_back(std::find(g.targets.begin(), g.targets.end(), e) != g.targets.end());
        }
        out.push_back(std::move(c));
    }
    return out;
}

RecolorInstance random_recolor_instance(const std::vector<int>& bounds, const std::vector<bool>& targets,
                                        std::uint64_t seed, std::uint64_t index) {
    star_bounds_targets_check(bounds, targets);
    const int n = static_cast<int>(bounds.size());
    for (int b : bounds) {
        if (b < 1) throw Error(ErrorKind::Malformed, "list bounds must be positive");
    }
    Rng rng(seed, index);
    const int lo = std::max(n, *std::max_element(bounds.begin(), bounds.end()));
    const int hi = std::max(lo, std::accumulate(bounds.begin(), bounds.end(), 0));
    const int palette = rng.range(lo, hi);

    std::vector<int> colors(palette);
    std::iota(colors.begin(), colors.end(), 1);
    for (int i = 0; i < n; ++i) std::swap(colors[i], colors[i + static_cast<int>(rng.below(palette - i))]);

    RecolorInstance inst;
    inst.graph = EdgeGraph::star(n);
    inst.target = targets;
    for (int e = 0; e < n; ++e) {
        const int cur = colors[e];
        inst.current.push_back(cur);
        std::vector<int> others;
        for (int c = 1; c <= palette; ++c) {
            if (c != cur) others.push_back(c);
        }
        ColorSet l;
        l.insert(cur);
        for (int k : rng.subset(static_cast<int>(others.size()), bounds[e] - 1)) l.insert(others[k]);
        inst.allowed.push_back(l);
    }
    return inst;
}

namespace {

RecolorCheck run_recolor(const std::string& name, const std::vector<int>& bounds, const std::vector<bool>& targets,
                         bool weakened, std::uint64_t samples, std::uint64_t seed) {
    RecolorCheck out;
    out.claim = name;
    out.bounds = bounds;
    out.weakened = weakened;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const RecolorInstance inst = random_recolor_instance(bounds, targets, seed, i);
        const RecolorResult r = recolor_rotate_or_cascade(inst);
        const bool oracle = brute_force_recolor(inst).has_value();
        ++out.instances;
        if (r.success != oracle) ++out.disagreements;
        if (!r.success) {
            ++out.failures;
            if (!out.failure) out.failure = inst;
        }
    }
    return out;
}

} // namespace

std::vector<RecolorCheck> check_recoloring_claims(std::uint64_t samples, std::uint64_t seed) {
    std::vector<RecolorCheck> out;
    for (const auto& c : recolor_claims()) out.push_back(run_recolor(c.name, c.bounds, c.targets, false, samples, seed));
    for (const auto& c : recolor_claims()) {
        std::vector<int> minus_one = c.bounds, ones = c.bounds;
        for (std::size_t e = 0; e < c.bounds.size(); ++e) {
            if (c.targets[e]) continue;
            minus_one[e] = std::max(1, c.bounds[e] - 1);
            ones[e] = 1;
        }
        out.push_back(run_recolor(c.name, minus_one, c.targets, true, samples, seed));
        out.push_back(run_recolor(c.name, ones, c.targets, true, samples, seed));
    }
    return out;
}

RecolorCheck check_recolor_agreement(std::uint64_t samples, std::uint64_t seed) {
    RecolorCheck out;
    out.claim = "random stars";
    for (std::uint64_t i = 0; i < samples; ++i) {
        Rng rng(seed ^ 0x5eedULL, i);
        const int n = rng.range(2, 6);
        std::vector<int> bounds;
        std::vector<bool> targets;
        for (int e = 0; e < n; ++e) {
            bounds.push_back(rng.range(1, 4));
            targets.push_back(rng.below(2) == 0);
        }
        targets[rng.below(n)] = true;
        const RecolorInstance inst = random_recolor_instance(bounds, targets, seed, i);
        const RecolorResult r = recolor_rotate_or_cascade(inst);
        const auto oracle = brute_force_recolor(inst);
        ++out.instances;
        if (!r.success) ++out.failures;
        if (r.success != oracle.has_value()) {
            ++out.disagreements;
            if (!out.failure) out.failure = inst;
        }
    }
    return out;
}

namespace {

ClaimReport report(const std::string& claim, const std::string& variant, const std::string& tier, Verdict v,
                   std::vector<std::string> labels = {}) {
    ClaimReport r{claim, variant, tier, std::move(v), {}};
    if (r.verdict.witness) r.witness_labels = std::move(labels);
    return r;
}

ClaimReport gadget_report(ConfigId id, const std::string& variant, Tier tier, const RunOptions& options) {
    const Gadget g = build_gadget(id, variant);
    const auto labels = g.labels(g.working_edges());
    if (tier == Tier::Exhaustive) return report(g.config, g.variant, "exhaustive", check_reducible_exhaustive(g), labels);
    SampleOptions so{options.samples, options.seed, options.threads};
    return report(g.config, g.variant, "sampled", check_reducible_sampled(g, so), labels);
}

} // namespace

std::vector<ClaimReport> run_all(const RunOptions& options) {
    std::vector<ClaimReport> out;
    if (options.tier != Tier::Sampled) {
        out.push_back(report("evencycle", "max-len 8", "exhaustive", verify_even_cycle(8)));
        out.push_back(report("l2322", "default", "exhaustive", verify_l2322()));
        out.push_back(report("star3", "default", "exhaustive", verify_star3()));
        for (ConfigId id : {ConfigId::C1, ConfigId::C2, ConfigId::C8, ConfigId::C11}) {
            for (const auto& v : gadget_variants(id)) out.push_back(gadget_report(id, v, Tier::Exhaustive, options));
        }
    }
    if (options.tier != Tier::Exhaustive) {
        for (ConfigId id : {ConfigId::C3, ConfigId::C4, ConfigId::C5, ConfigId::C6, ConfigId::C7, ConfigId::C9,
                            ConfigId::C10}) {
            for (const auto& v : gadget_variants(id)) out.push_back(gadget_report(id, v, Tier::Sampled, options));
        }
        for (const auto& c : check_recoloring_claims(options.recolor_samples, options.seed)) {
            if (c.weakened) continue;
            Verdict v;
            v.instances = c.instances;
            if (c.failures > 0 || c.disagreements > 0) v.status = Status::Fail;
            v.notes.push_back(std::to_string(c.failures) + " failures, " + std::to_string(c.disagreements) +
                              " disagreements with brute force");
            out.push_back(report(c.claim, "recoloring", "sampled", std::move(v)));
        }
    }
    return out;
}

bool all_pass(const std::vector<ClaimReport>& reports) {
    return std::none_of(reports.begin(), reports.end(),
                        [](const ClaimReport& r) { return r.verdict.status == Status::Fail; });
}

} // namespace ecol
