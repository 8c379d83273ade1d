#include "ecol/configs.hpp"
#include "ecol/embed.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace ecol;
using testing_support::brute_force_bindings;
using testing_support::generated;
using testing_support::load;
using testing_support::matcher_bindings;

TEST_CASE("match: icosahedron has 30 C1 matches") {
    CHECK(match_config(load("icosahedron"), ConfigId::C1).size() == 30);
}

TEST_CASE("match: octahedron has 12 C1 matches and no C2") {
    const auto g = load("octahedron");
    CHECK(match_config(g, ConfigId::C1).size() == 12);
    CHECK(match_config(g, ConfigId::C2).empty());
}

TEST_CASE("match: cube C2 matches are its 4-cycles with opposite corners as u and w") {
    const auto g = load("cube");
    // Every 4-cycle a-b-c-d gives two matches: (a,c) or (b,d) as the degree-3 pair.
    std::set<std::vector<int>> cycles;
    const int n = g.num_vertices();
    for (int a = 0; a < n; ++a)
        for (int b : g.rotation(a))
            for (int c : g.rotation(b))
                for (int d : g.rotation(c)) {
                    if (c == a || d == b || d == a || !g.adjacent(d, a)) continue;
                    std::vector<int> cyc = {a, b, c, d};
                    std::sort(cyc.begin(), cyc.end());
                    cycles.insert(cyc);
                }
    CHECK(cycles.size() == 6);
    const auto matches = match_config(g, ConfigId::C2);
    CHECK(matches.size() == 2 * cycles.size());
    for (const auto& m : matches) {
        std::vector<int> cyc = m.binding;
        std::sort(cyc.begin(), cyc.end());
        CHECK(cycles.count(cyc) == 1);
        CHECK(!g.adjacent(m.binding[0], m.binding[2]));
    }
}

TEST_CASE("match: single edge matches C1, empty graph matches nothing") {
    const auto k2 = parse_rotation("1: 2\n2: 1\n");
    const auto all = match_all(k2);
    CHECK(all.at(ConfigId::C1).size() == 1);
    const auto empty = parse_rotation("1:\n2:\n");
    for (const auto& [id, list] : match_all(empty)) CHECK(list.empty());
}

TEST_CASE("match: every match re-verifies and is canonical") {
    for (const auto& g : generated(40, 53, 200)) {
        for (const auto& [id, list] : match_all(g)) {
            for (const auto& m : list) {
                CHECK(verify_match(g, m));
                CHECK(canonical_binding(id, m.binding) == m.binding);
                std::set<int> uniq(m.binding.begin(), m.binding.end());
                CHECK(uniq.size() == m.binding.size());
            }
        }
    }
}

TEST_CASE("verify: C1 binding with degree sum 11 is rejected") {
    for (const auto& g : generated(30, 59, 120)) {
        for (const auto& [u, v] : g.edges()) {
            if (g.degree(u) + g.degree(v) != 11) continue;
            ConfigMatch m{ConfigId::C1, {u, v}, {}};
            CHECK_FALSE(verify_match(g, m));
            return;
        }
    }
    FAIL("no edge with degree sum 11 found");
}

TEST_CASE("verify: C8 binding with y equal to w is rejected") {
    for (std::uint64_t seed = 1; seed < 300; ++seed) {
        const auto g = generate_planar(seed, 120, 8);
        const auto ms = match_config(g, ConfigId::C8);
        if (ms.empty()) continue;
        ConfigMatch m = ms.front();
        CHECK(verify_match(g, m));
        REQUIRE(g.adjacent(m.binding[2], m.binding[3]));
        m.binding[4] = m.binding[2];
        CHECK_FALSE(verify_match(g, m));
        return;
    }
    FAIL("no C8 occurrence found");
}

TEST_CASE("verify: broken bindings are rejected") {
    const auto g = load("icosahedron");
    CHECK_FALSE(verify_match(g, ConfigMatch{ConfigId::C1, {0}, {}}));
    CHECK_FALSE(verify_match(g, ConfigMatch{ConfigId::C1, {0, 0}, {}}));
    CHECK_FALSE(verify_match(g, ConfigMatch{ConfigId::C1, {0, 99}, {}}));
}

TEST_CASE("match: agrees with brute force over all tuples on small hosts") {
    std::vector<EmbeddedGraph> hosts;
    for (const auto& name : {"tetrahedron", "octahedron", "cube"}) hosts.push_back(load(name));
    // Wheels with 3 to 7 spokes.
    for (int k = 3; k <= 7; ++k) {
        std::string text = "1:";
        for (int i = 0; i < k; ++i) text += " " + std::to_string(i + 2);
        text += "\n";
        for (int i = 0; i < k; ++i) {
            const int self = i + 2, next = (i + 1) % k + 2, prev = (i + k - 1) % k + 2;
            text += std::to_string(self) + ": 1 " + std::to_string(prev) + " " + std::to_string(next) + "\n";
        }
        hosts.push_back(parse_rotation(text));
    }
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GeneratorOptions o;
        o.seed = seed;
        o.n = 4 + static_cast<int>(seed % 5);
        o.max_degree = 7;
        o.delete_fraction = (seed % 3) * 0.25;
        hosts.push_back(generate_planar(o));
    }
    for (const auto& g : hosts) {
        REQUIRE(g.num_vertices() <= 8);
        for (ConfigId id : kAllConfigs) {
            CAPTURE(config_name(id));
            CHECK(matcher_bindings(g, id) == brute_force_bindings(g, id, true));
        }
    }
}

TEST_CASE("match: agrees with neighborhood brute force on medium hosts") {
    std::set<ConfigId> nonempty;
    for (const auto& g : generated(40, 61, 90)) {
        for (ConfigId id : kAllConfigs) {
            CAPTURE(config_name(id));
            const auto got = matcher_bindings(g, id);
            CHECK(got == brute_force_bindings(g, id, false));
            if (!got.empty()) nonempty.insert(id);
        }
    }
    MESSAGE("configurations seen: " << nonempty.size());
}

TEST_CASE("match: repeated matching is identical") {
    for (const auto& g : generated(10, 67, 150)) {
        const auto a = match_all(g);
        const auto b = match_all(g);
        CHECK(a == b);
    }
}

TEST_CASE("match: mirror embedding preserves every match") {
    for (const auto& g : generated(20, 71, 150)) {
        const auto m = mirror(g);
        for (ConfigId id : kAllConfigs) CHECK(matcher_bindings(g, id) == matcher_bindings(m, id));
    }
}

TEST_CASE("match: generated hosts always contain a configuration") {
    for (const auto& g : generated(100, 73, 200)) {
        std::size_t total = 0;
        for (const auto& [id, list] : match_all(g)) total += list.size();
        CHECK(total > 0);
    }
}

TEST_CASE("config ids parse and print") {
    for (ConfigId id : kAllConfigs) CHECK(parse_config_id(config_name(id)) == id);
    CHECK_FALSE(parse_config_id("C12").has_value());
    CHECK_FALSE(parse_config_id("c1").has_value());
}
