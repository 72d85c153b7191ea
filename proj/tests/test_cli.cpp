#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cayham/serialize.hpp"

using namespace cayham;

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string outFile = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(CAYHAM_CLI_PATH) + " " + args + " > " + outFile +
                      " 2> " + outFile + ".err";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(outFile);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    std::remove(outFile.c_str());
    std::remove((outFile + ".err").c_str());
    return r;
}

}  // namespace

TEST_CASE("profile table output") {
    RunResult r = run_cli("profile --m 6 --n 8 --e 5");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("m=6 n=8 e=5 I=3 N=16") != std::string::npos);
    CHECK(r.out.find("(7,2)") != std::string::npos);
}

TEST_CASE("profile json output is byte-stable") {
    RunResult a = run_cli("profile --m 6 --n 8 --e 5 --format json");
    RunResult b = run_cli("profile --m 6 --n 8 --e 5 --format json");
    CHECK(a.exitCode == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc.at("I") == 3);
    CHECK(doc.at("rows").at(1).at("u") ==
          nlohmann::json::array({0, 4, 6, 12, 14}));
}

TEST_CASE("spectrum subcommand") {
    RunResult r = run_cli("spectrum --group Z:48 --a 8 --b 5");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("47") != std::string::npos);
}

TEST_CASE("hp subcommand distinguishes path kinds") {
    CHECK(run_cli("hp --group Z:48 --a 8 --b 5 --t 0 --d 7")
              .out.find("hamiltonian path") == 0);
    CHECK(run_cli("hp --group Z:48 --a 8 --b 5 --t 0 --d 8")
              .out.find("path with extra cycles") == 0);
}

TEST_CASE("pair subcommand verifies and exports") {
    RunResult plain = run_cli("pair --group Z:48 --a 8 --b 5");
    CHECK(plain.exitCode == 0);
    CHECK(plain.out.find(", verified") != std::string::npos);

    RunResult dot = run_cli("pair --group Z:4 --a 1 --b 3 --dot");
    CHECK(dot.exitCode == 0);
    CHECK(dot.out.find("digraph pair {") != std::string::npos);
    CHECK(dot.out.find("->") != std::string::npos);
    CHECK(dot.out.find("color=red") != std::string::npos);
    CHECK(dot.out.find("color=blue") != std::string::npos);
}

TEST_CASE("pair certificate round-trips through json") {
    std::string file = "pair_cert_test.json";
    RunResult r = run_cli("pair --group Z:48 --a 8 --b 5 --json " + file);
    CHECK(r.exitCode == 0);
    std::ifstream f(file);
    REQUIRE(f.good());
    nlohmann::json doc = nlohmann::json::parse(f);
    CHECK(doc.at("schemaVersion") == "1");
    CHECK(doc.at("verified") == true);
    DigraphInstance inst;
    LoadedCertificate lc = certificate_from_json(doc, inst);
    CHECK(lc.cert.verified);  // re-verified on load, not trusted from the file
    CHECK(inst.order == 48);

    // Tampering with a stored path must be caught on load.
    nlohmann::json bad = doc;
    bad["paths"][0][0] = bad["paths"][0][1];
    DigraphInstance dummy;
    CHECK_THROWS_AS(certificate_from_json(bad, dummy), InvalidInput);
    std::remove(file.c_str());
}

TEST_CASE("multi subcommand") {
    RunResult good = run_cli("multi --lengths 2,3,5");
    CHECK(good.exitCode == 0);
    CHECK(good.out.find("laminated-parity") != std::string::npos);
    CHECK(good.out.find(", verified") != std::string::npos);

    RunResult open = run_cli("multi --lengths 3,5,7");
    CHECK(open.exitCode == 3);
}

TEST_CASE("infinite subcommand") {
    CHECK(run_cli("infinite --group Z --a 3 --b -5").exitCode == 0);
    CHECK(run_cli("infinite --group Z --a 1 --b 3").exitCode == 3);
    CHECK(run_cli("infinite --group ZxZm:4 --a 1,1 --b -1,0").exitCode == 0);
}

TEST_CASE("count and bound subcommands") {
    CHECK(run_cli("count --group Z:6 --a 3 --b 4").out == "12\n");
    RunResult b = run_cli("bound --m 300 --n 300");
    CHECK(b.exitCode == 0);
    CHECK(b.out.find("intersection size") != std::string::npos);
}

TEST_CASE("scan subcommand emits machine-readable output") {
    RunResult r = run_cli("scan --max-order 12 --json");
    CHECK(r.exitCode == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("bound") == 12);
    CHECK(doc.at("failures").empty());
    CHECK(doc.at("wallTimeMillis").is_number_integer());
}

TEST_CASE("invalid input yields exit code 1 and a json error") {
    CHECK(run_cli("profile --m 6 --n 8 --e 9").exitCode == 1);
    CHECK(run_cli("count --group Z:48 --a 2 --b 4").exitCode == 1);
    CHECK(run_cli("count --group Q:5 --a 1 --b 2").exitCode == 1);
    CHECK(run_cli("hp --group Z:48 --a 8").exitCode != 0);
}
