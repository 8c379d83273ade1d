#include "ecol/embed.hpp"
#include "ecol/error.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace ecol;
using testing_support::generated;
using testing_support::has_triangle_face;
using testing_support::load;

namespace {

int face_degree_sum(const EmbeddedGraph& g) {
    int s = 0;
    for (const auto& f : g.faces()) s += f.degree();
    return s;
}

int euler(const EmbeddedGraph& g) { return g.num_vertices() - g.num_edges() + g.num_faces(); }

ErrorKind parse_error(const std::string& text, int* line = nullptr) {
    try {
        parse_rotation(text);
    } catch (const Error& e) {
        if (line) *line = e.line();
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

// Face degrees on either side of edge (u, v), from the traced face list.
std::pair<int, int> side_degrees(const EmbeddedGraph& g, int u, int v) {
    std::vector<int> found;
    for (const auto& f : trace_faces(g)) {
        const int k = f.degree();
        for (int i = 0; i < k; ++i) {
            const int a = f.walk[i], b = f.walk[(i + 1) % k];
            if ((a == u && b == v) || (a == v && b == u)) found.push_back(k);
        }
    }
    REQUIRE(found.size() == 2);
    return {found[0], found[1]};
}

} // namespace

TEST_CASE("parse: triangle has 3 vertices and 3 edges") {
    const auto g = parse_rotation("1: 2 3\n2: 3 1\n3: 1 2\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.num_faces() == 2);
}

TEST_CASE("parse: asymmetric adjacency is reported with its line") {
    int line = 0;
    CHECK(parse_error("1: 2\n2:\n", &line) == ErrorKind::Parse);
    CHECK(line > 0);
}

TEST_CASE("parse: malformed inputs") {
    int line = 0;
    CHECK(parse_error("1: 1\n", &line) == ErrorKind::Parse);
    CHECK(line == 1);
    CHECK(parse_error("1: 2 2\n2: 1\n", &line) == ErrorKind::Parse);
    CHECK(line == 1);
    CHECK(parse_error("1: 2\n2: 1 3\n", &line) == ErrorKind::Parse);
    CHECK(line == 2);
    CHECK(parse_error("1 2 3\n") == ErrorKind::Parse);
    CHECK(parse_error("0: \n") == ErrorKind::Parse);
    CHECK(parse_error("1: 2\n2: 1\n1: 2\n", &line) == ErrorKind::Parse);
    CHECK(line == 3);
    CHECK(parse_error("1: x\n") == ErrorKind::Parse);
}

TEST_CASE("parse: comments and blank lines are ignored") {
    const auto g = parse_rotation("# header\n\n1: 2 3 # trailing\n2: 3 1\n\n3: 1 2\n");
    CHECK(g.num_edges() == 3);
}

TEST_CASE("parse: rotation that is not a sphere embedding is rejected") {
    // K4 with one rotation reversed has genus 1.
    CHECK(parse_error("1: 2 3 4\n2: 1 3 4\n3: 1 2 4\n4: 1 2 3\n") == ErrorKind::NotSphere);
}

TEST_CASE("faces: tetrahedron has 4 triangles") {
    const auto g = load("tetrahedron");
    CHECK(g.num_edges() == 6);
    CHECK(g.num_faces() == 4);
    for (const auto& f : g.faces()) CHECK(f.degree() == 3);
}

TEST_CASE("faces: 4-cycle bounds two quadrilaterals") {
    const auto g = parse_rotation("1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\n");
    REQUIRE(g.num_faces() == 2);
    CHECK(g.face(0).degree() == 4);
    CHECK(g.face(1).degree() == 4);
}

TEST_CASE("faces: octahedron satisfies Euler with 8 triangles") {
    const auto g = load("octahedron");
    CHECK(g.num_faces() == 8);
    for (const auto& f : g.faces()) CHECK(f.degree() == 3);
    CHECK(euler(g) == 2);
}

TEST_CASE("faces: degenerate inputs") {
    SUBCASE("single edge: one face of degree 2") {
        const auto g = parse_rotation("1: 2\n2: 1\n");
        REQUIRE(g.num_faces() == 1);
        CHECK(g.face(0).degree() == 2);
        CHECK(euler(g) == 2);
    }
    SUBCASE("path: bridge darts share a face, middle vertex repeats") {
        const auto g = parse_rotation("1: 2\n2: 1 3\n3: 2\n");
        REQUIRE(g.num_faces() == 1);
        CHECK(g.face(0).degree() == 4);
        std::map<int, int> seen;
        for (int v : g.face(0).walk) ++seen[g.id(v)];
        CHECK(seen[2] == 2);
    }
    SUBCASE("isolated vertex") {
        const auto g = parse_rotation("1:\n");
        CHECK(g.num_faces() == 0);
    }
}

TEST_CASE("faces: solids") {
    const std::map<std::string, std::tuple<int, int, int, int>> expected = {
        {"tetrahedron", {4, 6, 4, 3}},   {"octahedron", {6, 12, 8, 3}},    {"cube", {8, 12, 6, 4}},
        {"icosahedron", {12, 30, 20, 3}}, {"dodecahedron", {20, 30, 12, 5}},
    };
    for (const auto& [name, want] : expected) {
        CAPTURE(name);
        const auto g = load(name);
        CHECK(g.num_vertices() == std::get<0>(want));
        CHECK(g.num_edges() == std::get<1>(want));
        CHECK(g.num_faces() == std::get<2>(want));
        for (const auto& f : g.faces()) CHECK(f.degree() == std::get<3>(want));
    }
}

TEST_CASE("faces: every dart in exactly one face and degree sum twice the edges") {
    auto graphs = generated(40, 11, 120);
    for (const auto& name : testing_support::solids()) graphs.push_back(load(name));
    for (const auto& g : graphs) {
        std::map<std::pair<int, int>, int> darts;
        for (const auto& f : g.faces()) {
            for (int i = 0; i < f.degree(); ++i) ++darts[{f.walk[i], f.walk[(i + 1) % f.degree()]}];
        }
        CHECK(darts.size() == static_cast<std::size_t>(2 * g.num_edges()));
        for (const auto& [d, k] : darts) CHECK(k == 1);
        CHECK(face_degree_sum(g) == 2 * g.num_edges());
        CHECK(euler(g) == 2);
        for (int f = 0; f < g.num_faces(); ++f) {
            const auto& w = g.face(f).walk;
            for (int i = 0; i < g.face(f).degree(); ++i) CHECK(g.face_of_dart(w[i], w[(i + 1) % w.size()]) == f);
        }
    }
}

TEST_CASE("faces: disconnected input is traced per component") {
    const auto g = parse_rotation("1: 2 3\n2: 3 1\n3: 1 2\n4: 5 6\n5: 6 4\n6: 4 5\n");
    CHECK(g.num_components() == 2);
    CHECK_FALSE(g.connected());
    CHECK(g.num_faces() == 4);
    const auto c = g.component_graph(1);
    CHECK(c.num_vertices() == 3);
    CHECK(c.id(0) == 4);
}

TEST_CASE("serialize: round trip reproduces the text and the graph") {
    for (const auto& name : testing_support::solids()) {
        const auto g = load(name);
        const std::string text = serialize_rotation(g);
        const auto h = parse_rotation(text);
        CHECK(h == g);
        CHECK(serialize_rotation(h) == text);
    }
    const std::string written = "3: 1 2\n1: 2 3\n2: 3 1\n";
    CHECK(serialize_rotation(parse_rotation(written)) == written);
}

TEST_CASE("classify: icosahedron edges are weak with no special class") {
    const auto g = load("icosahedron");
    for (const auto& [u, v] : g.edges()) {
        const auto c = neighbor_classification(g, u, v);
        CHECK(c.base == Base::Weak);
        CHECK(c.special == Special::None);
    }
}

TEST_CASE("classify: cube edges are Other, not-an-edge raises") {
    const auto g = load("cube");
    for (const auto& [u, v] : g.edges()) CHECK(neighbor_classification(g, u, v).base == Base::Other);
    int a = -1, b = -1;
    for (int v = 1; v < g.num_vertices() && b < 0; ++v) {
        if (!g.adjacent(0, v)) {
            a = 0;
            b = v;
        }
    }
    REQUIRE(b >= 0);
    CHECK_THROWS_AS(neighbor_classification(g, a, b), Error);
}

TEST_CASE("classify: base class follows the two incident face degrees") {
    for (const auto& g : generated(30, 23, 100)) {
        for (const auto& [u, v] : g.edges()) {
            const auto [p, q] = side_degrees(g, u, v);
            Base want = Base::Other;
            if (p == 3 && q == 3) want = Base::Weak;
            else if ((p == 3 && q == 4) || (p == 4 && q == 3)) want = Base::SemiWeak;
            CHECK(neighbor_classification(g, u, v).base == want);
            CHECK(neighbor_classification(g, v, u).base == want);
        }
    }
}

TEST_CASE("classify: special classes only where their degrees allow") {
    for (const auto& g : generated(40, 29, 150)) {
        for (const auto& [a, b] : g.edges()) {
            for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
                const auto c = neighbor_classification(g, u, v);
                const bool e = c.special == Special::E2 || c.special == Special::E3 || c.special == Special::E4;
                const bool s = c.special == Special::S2 || c.special == Special::S3 || c.special == Special::S4;
                if (e) CHECK((c.base == Base::Weak && g.degree(u) == 8 && g.degree(v) == 5));
                if (s) CHECK((c.base == Base::Weak && g.degree(u) == 7 && g.degree(v) == 5));
                if (c.base == Base::Weak && g.degree(u) == 8 && g.degree(v) == 5) CHECK(e);
            }
        }
    }
}

namespace {

// E-class of a weak degree-5 neighbor v of a degree-8 vertex u, computed from
// the traced triangle list only.
Special e_oracle(const EmbeddedGraph& g, int u, int v) {
    std::vector<int> thirds;
    for (int w : g.rotation(v)) {
        if (w != u && g.adjacent(u, w) && has_triangle_face(g, u, v, w)) thirds.push_back(w);
    }
    std::sort(thirds.begin(), thirds.end());
    thirds.erase(std::unique(thirds.begin(), thirds.end()), thirds.end());
    for (int w1 : thirds) {
        if (g.degree(w1) != 6) continue;
        for (int w2 : g.rotation(v)) {
            if (w2 != u && w2 != w1 && g.degree(w2) == 6 && has_triangle_face(g, v, w1, w2)) return Special::E2;
        }
        for (int w2 : g.rotation(v)) {
            if (w2 == u || w2 == w1 || g.degree(w2) != 7 || !has_triangle_face(g, v, w1, w2)) continue;
            for (int w3 : thirds) {
                if (w3 != w1 && g.degree(w3) == 6) return Special::E2;
            }
        }
    }
    for (int w : thirds) {
        if (g.degree(w) <= 7) return Special::E3;
    }
    return Special::E4;
}

} // namespace

TEST_CASE("classify: E classes agree with a triangle-list oracle") {
    int checked = 0;
    std::map<Special, int> seen;
    for (const auto& g : generated(60, 31, 200)) {
        for (int u = 0; u < g.num_vertices(); ++u) {
            if (g.degree(u) != 8) continue;
            for (int v : g.rotation(u)) {
                if (g.degree(v) != 5 || neighbor_classification(g, u, v).base != Base::Weak) continue;
                const Special got = neighbor_classification(g, u, v).special;
                CHECK(got == e_oracle(g, u, v));
                ++seen[got];
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
    MESSAGE("E2 " << seen[Special::E2] << ", E3 " << seen[Special::E3] << ", E4 " << seen[Special::E4]);
}

namespace {

// S-class of a weak degree-5 neighbor v of a degree-7 vertex u, from the
// triangle list and the definitions' quantifiers over neighbor labelings.
Special s_oracle(const EmbeddedGraph& g, int u, int v) {
    std::vector<int> thirds, others;
    for (int w : g.rotation(v)) {
        if (w == u) continue;
        (has_triangle_face(g, u, v, w) ? thirds : others).push_back(w);
    }
    auto d = [&](int x) { return g.degree(x); };
    if (thirds.size() == 2 && d(thirds[0]) == 6 && d(thirds[1]) == 6) return Special::S2;
    if (thirds.size() == 2 && others.size() == 2) {
        for (int flip = 0; flip < 2; ++flip) {
            const int w1 = thirds[flip], w4 = thirds[1 - flip];
            for (int swap = 0; swap < 2; ++swap) {
                const int w2 = others[swap], w3 = others[1 - swap];
                const bool fan = has_triangle_face(g, v, w1, w2) && has_triangle_face(g, v, w2, w3) &&
                                 has_triangle_face(g, v, w3, w4) && d(w1) == 7 && d(w4) == 7 && d(w2) == 6 &&
                                 d(w3) == 6;
                const bool loose = d(w4) == 6 && d(w2) == 6 && (d(w1) == 7 || d(w3) == 7);
                if (fan || loose) return Special::S3;
            }
        }
    }
    for (int w : thirds) {
        if (d(w) <= 7) return Special::S4;
    }
    bool six = false, seven = false;
    for (int w : g.rotation(v)) {
        if (w == u) continue;
        six = six || d(w) == 6;
        seven = seven || d(w) == 7;
    }
    return six && seven ? Special::S4 : Special::None;
}

} // namespace

TEST_CASE("classify: S classes agree with a triangle-list oracle") {
    int checked = 0;
    std::map<Special, int> seen;
    for (const auto& g : generated(60, 43, 200)) {
        for (int u = 0; u < g.num_vertices(); ++u) {
            if (g.degree(u) != 7) continue;
            for (int v : g.rotation(u)) {
                if (g.degree(v) != 5 || neighbor_classification(g, u, v).base != Base::Weak) continue;
                const Special got = neighbor_classification(g, u, v).special;
                CHECK(got == s_oracle(g, u, v));
                ++seen[got];
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
    MESSAGE("S2 " << seen[Special::S2] << ", S3 " << seen[Special::S3] << ", S4 " << seen[Special::S4] << ", none "
                  << seen[Special::None]);
}

TEST_CASE("classify: E2 gadget with two degree-6 vertices, and an E3 gadget") {
    // Found in generated graphs: a pattern u(8), v(5) weak, triangles
    // (u,v,w1) and (v,w1,w2) with d(w1)=d(w2)=6 classifies E2; a third vertex
    // of degree 7 without the E2 pattern classifies E3.
    bool found_e2 = false, found_e3 = false;
    for (std::uint64_t seed = 1; seed < 400 && !(found_e2 && found_e3); ++seed) {
        const auto g = generate_planar(seed, 80, 8);
        for (int u = 0; u < g.num_vertices(); ++u) {
            if (g.degree(u) != 8) continue;
            for (int v : g.rotation(u)) {
                if (g.degree(v) != 5 || neighbor_classification(g, u, v).base != Base::Weak) continue;
                const Special s = e_oracle(g, u, v);
                if (s == Special::E2 && !found_e2) {
                    found_e2 = true;
                    CHECK(neighbor_classification(g, u, v).special == Special::E2);
                }
                if (s == Special::E3 && !found_e3) {
                    found_e3 = true;
                    CHECK(neighbor_classification(g, u, v).special == Special::E3);
                }
            }
        }
    }
    CHECK(found_e2);
    CHECK(found_e3);
}

TEST_CASE("classify: mirror embedding gives identical classes") {
    for (const auto& g : generated(25, 37, 150)) {
        const auto m = mirror(g);
        CHECK(m.num_faces() == g.num_faces());
        for (const auto& [a, b] : g.edges()) {
            CHECK(neighbor_classification(g, a, b) == neighbor_classification(m, a, b));
            CHECK(neighbor_classification(g, b, a) == neighbor_classification(m, b, a));
        }
    }
}

TEST_CASE("classify: unchanged after serialize and parse") {
    for (const auto& g : generated(10, 41, 150)) {
        const auto h = parse_rotation(serialize_rotation(g));
        for (const auto& [a, b] : g.edges()) {
            CHECK(neighbor_classification(g, a, b) == neighbor_classification(h, a, b));
            CHECK(neighbor_classification(g, b, a) == neighbor_classification(h, b, a));
        }
    }
}

TEST_CASE("generate: four vertices give the tetrahedron") {
    const auto g = generate_planar(1, 4, 8);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 6);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("generate: deterministic, capped and spherical") {
    const auto a = generate_planar(7, 50, 8);
    const auto b = generate_planar(7, 50, 8);
    CHECK(serialize_rotation(a) == serialize_rotation(b));
    CHECK(a.max_degree() <= 8);
    CHECK(euler(a) == 2);
    CHECK(a.connected());
    CHECK(serialize_rotation(generate_planar(8, 50, 8)) != serialize_rotation(a));
}

TEST_CASE("generate: deletions keep the graph connected") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratorOptions o;
        o.seed = seed;
        o.n = 60;
        o.delete_fraction = 0.5;
        const auto g = generate_planar(o);
        CHECK(g.connected());
        CHECK(g.num_edges() < 3 * 60 - 6);
        CHECK(g.max_degree() <= 8);
        CHECK(euler(g) == 2);
    }
}

TEST_CASE("generate: unsatisfiable parameters raise") {
    CHECK_THROWS_AS(generate_planar(1, 3, 8), Error);
    CHECK_THROWS_AS(generate_planar(1, 50, 2), Error);
}
