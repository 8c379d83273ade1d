#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(ECOL_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(ECOL_DATA_DIR) + "/" + name + ".txt"; }

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("ecol_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("cli: match counts icosahedron C1 edges") {
    const auto r = run("match " + data("icosahedron") + " --config C1");
    CHECK(r.code == 0);
    CHECK(r.out.find("30 matches") != std::string::npos);
    const auto j = nlohmann::json::parse(run("match " + data("icosahedron") + " --config C1 --json").out);
    CHECK(j.dump().find("C1") != std::string::npos);
}

TEST_CASE("cli: faces reports Euler counts") {
    const auto r = run("faces " + data("cube"));
    CHECK(r.code == 0);
    CHECK(r.out.find("V=8 E=12 F=6") != std::string::npos);
}

TEST_CASE("cli: discharge JSON on the tetrahedron") {
    const auto r = run("discharge " + data("tetrahedron") + " --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["initialTotal"] == "-12");
    CHECK(j["finalTotal"] == "-12");
    CHECK(j["contradictionFlag"] == false);
    CHECK(j["negatives"].size() == 4);
}

TEST_CASE("cli: disconnected input needs the per-component flag") {
    const auto path = temp_file("two.txt", "1: 2\n2: 1\n3: 4\n4: 3\n");
    CHECK(run("discharge " + path).code == 2);
    const auto r = run("discharge " + path + " --per-component --json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["initialTotal"] == "-24");
}

TEST_CASE("cli: verification subcommands") {
    CHECK(run("verify-config C11 --tier exhaustive").code == 0);
    CHECK(run("verify-config C2").code == 0);
    CHECK(run("verify-config C8 --tier sampled --samples 500").code == 0);
    CHECK(run("verify-lemma star3").code == 0);
    CHECK(run("verify-lemma l2322").code == 0);
    CHECK(run("verify-lemma evencycle --max-len 6").code == 0);
    CHECK(run("verify-recolor --samples 100").code == 0);
    const auto j = nlohmann::json::parse(run("verify-config C5 --variant non-consecutive --samples 200 --json").out);
    CHECK(j["status"] == "PASS");
    REQUIRE(j["claims"].size() == 1);
    CHECK(j["claims"][0]["tier"] == "sampled");
    CHECK(j["claims"][0]["variant"] == "non-consecutive");
    CHECK(j["claims"][0]["instances"] == 200);
}

TEST_CASE("cli: errors exit with 2") {
    CHECK(run("--bogus").code == 2);
    CHECK(run("faces /nonexistent/file.txt").code == 2);
    CHECK(run("classify " + data("cube") + " 1 8").code == 2);
    CHECK(run("verify-config C12").code == 2);
    CHECK(run("verify-config C3 --variant nope").code == 2);
    CHECK(run("verify-lemma evencycle --max-len 2").code == 2);
    CHECK(run("gen --n 2 --max-degree 8").code == 2);
    CHECK(run("faces " + temp_file("bad.txt", "1: 2\n2: 3\n")).code == 2);
}

TEST_CASE("cli: classify an edge") {
    const auto r = run("classify " + data("icosahedron") + " 1 2 --json");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).is_object());
}

TEST_CASE("cli: gen is deterministic and round-trips") {
    const auto a = run("gen --n 60 --max-degree 8 --seed 9");
    const auto b = run("gen --n 60 --max-degree 8 --seed 9");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run("gen --n 60 --max-degree 8 --seed 10").out);
    const auto path = temp_file("gen.txt", a.out);
    const auto f = run("faces " + path);
    CHECK(f.code == 0);
    CHECK(f.out.find("V=60") != std::string::npos);
    const auto out = (std::filesystem::temp_directory_path() / "ecol_cli_gen_o.txt").string();
    CHECK(run("gen --n 60 --max-degree 8 --seed 9 -o " + out).code == 0);
    std::ifstream in(out);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == a.out);
}

TEST_CASE("cli: run-all JSON is byte-identical across runs") {
    const std::string args = "run-all --tier sampled --samples 200 --recolor-samples 100 --json";
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["status"] == "PASS");
    CHECK(j["claims"].size() == 18);
}
