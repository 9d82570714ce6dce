#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef POISSON_CLI_PATH
#error "POISSON_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(POISSON_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "poisson-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST_CASE("verify a catalog entry succeeds with all flags") {
    auto r = run_cli("verify --catalog P_1^2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    for (const char* f : {"commutative", "associative", "jacobi", "leibniz", "markl_remm"})
        CHECK(j["flags"][f] == true);
}

TEST_CASE("verify a bad pair exits 2 with a witness") {
    auto path = write_file("bad.json", R"({
        "dim": 2,
        "bullet":  [{"i":1,"j":1,"k":1,"val":"1"}],
        "bracket": [{"i":1,"j":2,"k":2,"val":"1"},{"i":2,"j":1,"k":2,"val":"-1"}]
    })");
    auto r = run_cli("verify " + path.string());
    CHECK(r.exit_code == 2);
    json j = json::parse(r.out);
    CHECK(j["ok"] == false);
    CHECK(j["flags"]["leibniz"] == false);
    CHECK(j["flags"]["markl_remm"] == false);
    bool found_mr_witness = false;
    for (const auto& w : j["witnesses"]) {
        if (w["axiom"] == "markl_remm" && w["triple"] == json::array({1, 1, 2})) {
            found_mr_witness = true;
            CHECK(w["residual"] == json::array({"0", "-4"}));
        }
    }
    CHECK(found_mr_witness);
}

TEST_CASE("rigidity of the classical example via --bracket") {
    auto r = run_cli("rigidity --catalog P_12^3 --bracket sl2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["assoc_rigid_order1"] == true);
    CHECK(j["biderivation_dim"] == 0);
    CHECK(j["lie_order1_dim"] == 6);

    // the same bracket from a file
    auto path = write_file("sl2.json", R"({
        "dim": 3,
        "bracket": [
            {"i":1,"j":2,"k":2,"val":"2"},  {"i":2,"j":1,"k":2,"val":"-2"},
            {"i":1,"j":3,"k":3,"val":"-2"}, {"i":3,"j":1,"k":3,"val":"2"},
            {"i":2,"j":3,"k":1,"val":"1"},  {"i":3,"j":2,"k":1,"val":"-1"}
        ]
    })");
    auto r2 = run_cli("rigidity --catalog P_12^3 --bracket " + path.string());
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out) == j);
}

TEST_CASE("catalog-list counts 17 families") {
    auto r = run_cli("catalog-list");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 17);
    CHECK(j["entries"].size() == 17);
}

TEST_CASE("split then combine reproduces the input algebra byte for byte") {
    auto r0 = run_cli("catalog-show P_10^3 --params a=1,b=-1 --combined");
    REQUIRE(r0.exit_code == 0);
    auto algebra_path = write_file("p10.json", r0.out);

    auto rs = run_cli("split " + algebra_path.string());
    REQUIRE(rs.exit_code == 0);
    auto pair_path = write_file("p10_pair.json", rs.out);

    auto rc = run_cli("combine " + pair_path.string());
    REQUIRE(rc.exit_code == 0);
    CHECK(rc.out == r0.out);
}

TEST_CASE("byte-identical output for identical invocations") {
    auto a = run_cli("cocycles --catalog P_12^3 --bracket sl2 --kind P2 --filter skew");
    auto b = run_cli("cocycles --catalog P_12^3 --bracket sl2 --kind P2 --filter skew");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["dim"] == 6);
}

TEST_CASE("cocycles, biderivations and ph-space payloads") {
    auto r = run_cli("biderivations --catalog P_12^3 --bracket sl2");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["dim"] == 0);

    auto r2 = run_cli("ph-space --catalog P_5^3 --params a=1 --k 2");
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["dim"] == 5);
}

TEST_CASE("deform verbs") {
    auto show = run_cli("catalog-show P_5^2 --params a=1 --combined");
    REQUIRE(show.exit_code == 0);
    json base = json::parse(show.out);

    json jet;
    jet["base"] = base;
    jet["terms"] = json::array();
    auto jet_path = write_file("jet0.json", jet.dump());

    auto rv = run_cli("deform-verify " + jet_path.string());
    CHECK(rv.exit_code == 0);
    CHECK(json::parse(rv.out)["ok"] == true);

    auto re = run_cli("deform-extend " + jet_path.string());
    CHECK(re.exit_code == 0);
    json ext = json::parse(re.out);
    CHECK(ext["status"] == "solutions");
    CHECK(ext["kernel_dim"] == 3);

    // a jet whose first term is not a cocycle fails verification with exit 2
    json badjet;
    badjet["base"] = base;
    json term;
    term["arity"] = 2;
    term["dim"] = 2;
    term["entries"] = json::array({json{{"in", {1, 2}}, {"out", 1}, {"val", "1"}}});
    badjet["terms"] = json::array({term});
    auto bad_path = write_file("jet_bad.json", badjet.dump());
    auto rb = run_cli("deform-verify " + bad_path.string());
    CHECK(rb.exit_code == 2);
    CHECK(json::parse(rb.out)["ok"] == false);
}

TEST_CASE("malformed input exits 1") {
    auto path = write_file("broken.json", "{ not json");
    CHECK(run_cli("verify " + path.string()).exit_code == 1);
    CHECK(run_cli("verify --catalog No_Such_Entry").exit_code == 1);
    CHECK(run_cli("catalog-show P_5^2 --params a=7").exit_code == 1);
    CHECK(run_cli("verify").exit_code == 1);
}
