#include "doctest.h"
#include "gfh/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gfh;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
    std::filesystem::current_path(GFH_SOURCE_DIR);
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> v;
    for (std::string w; is >> w;) v.push_back(w);
    return v;
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    return s;
}

Json strip_manifest(const std::string& text) {
    Json j = Json::parse(text);
    j.erase("manifest");
    return j;
}

}  // namespace

TEST_CASE("golden corpus") {
    std::filesystem::current_path(GFH_SOURCE_DIR);
    std::ifstream cases("fixtures/goldens/cases.txt");
    REQUIRE(cases);
    int checked = 0;
    for (std::string line; std::getline(cases, line);) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        const std::string name = trim(line.substr(0, bar));
        CAPTURE(name);
        const Outcome o = run(split(line.substr(bar + 1)));
        CHECK(o.code == kExitOk);
        std::ifstream g("fixtures/goldens/" + name + ".out");
        REQUIRE(g);
        const std::string golden((std::istreambuf_iterator<char>(g)), {});
        if (name.rfind("spectrum", 0) == 0) {
            CHECK(o.out == golden);
        } else {
            CHECK(strip_manifest(o.out) == Json::parse(golden));
        }
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("determinism aside from the manifest") {
    const auto a = run({"front", "fixtures/trefoil.json"});
    const auto b = run({"front", "fixtures/trefoil.json"});
    CHECK(strip_manifest(a.out).dump() == strip_manifest(b.out).dump());
}

TEST_CASE("manifest records provenance") {
    const auto o = run({"numeric", "fixtures/cubic.json"});
    const Json m = Json::parse(o.out)["manifest"];
    CHECK(m["command"] == "numeric");
    CHECK(m["inputDigests"]["fixtures/cubic.json"].get<std::string>().size() == 64);
    CHECK(m["grid"] == "-3:3:201,-3:3:201");
    CHECK(m.contains("window"));
    CHECK(m.contains("wallTimeSeconds"));
}

TEST_CASE("exit codes") {
    CHECK(run({"numeric", "fixtures/does-not-exist.json"}).code == kExitInvalid);
    CHECK(run({"bogus"}).code == kExitInvalid);
    CHECK(run({"numeric", "fixtures/cubic.json", "--grid", "-3:3:61,-3:3:61,-3:3:61,-3:3:61", "--stabilize", "1"}).code ==
          kExitBudget);
    const auto shear = run({"seidel", "fixtures/malformed-shear.json"});
    CHECK(shear.code == kExitChoice);
    CHECK(shear.err.find("Omega > lmax + lmax^2 / 2") != std::string::npos);
    CHECK(run({"numeric", "fixtures/linear.json"}).code == kExitChoice);
    CHECK(run({"spectrum", "S2", "pi", "30"}).code == kExitInvalid);

    const auto dir = std::filesystem::temp_directory_path() / "gfh_cli_test";
    std::filesystem::create_directories(dir);
    const auto rot = (dir / "rot.json").string();
    std::ofstream(rot) << R"({"strands":2,"events":[{"type":"lcusp","level":0},{"type":"cross","level":0},{"type":"rcusp","level":0}]})";
    CHECK(run({"front", rot}).code == kExitRotation);
    std::ofstream(rot) << "{ not json";
    CHECK(run({"front", rot}).code == kExitInvalid);
}

TEST_CASE("out file and csv sweep") {
    const auto dir = std::filesystem::temp_directory_path() / "gfh_cli_test";
    std::filesystem::create_directories(dir);
    const auto out = (dir / "s.json").string();
    const auto csv = (dir / "lambda.csv").string();
    const auto o = run({"seidel", "fixtures/linear-filling.json", "--out", out, "--csv", csv});
    CHECK(o.code == kExitOk);
    std::ifstream f(out);
    CHECK(Json::parse(f)["result"]["verdict"] == "MATCH");
    std::ifstream c(csv);
    std::string header;
    std::getline(c, header);
    CHECK(header == "t,H,lambda_minus_mu,lambda_Omega,lambda_sigma");
}
