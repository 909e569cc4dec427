#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int exit = -1;
    std::string out;
};

Run cli(const std::string& args) {
    setenv("PRYM5_FIXTURES", PRYM5_FIXTURE_DIR, 1);
    std::string cmd = std::string("\"") + PRYM5_CLI_PATH + "\" " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(PRYM5_FIXTURE_DIR) + "/golden/" + name + ".json");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("CLI reports match the golden files") {
    struct Case {
        const char* name;
        const char* args;
    };
    for (auto [name, args] : {
             Case{"net_f11_seed42_block", "net --field 11 --seed 42 --block"},
             Case{"net_f7_seed7_random", "net --field 7 --seed 7 --random"},
             Case{"g2_x6m1_f7", "g2 all --fixture g2_x6m1_f7_3k.txt"},
             Case{"g2_x6m1_f7_quadric", "g2 bisecant --fixture g2_x6m1_f7_3k.txt --quadric 0,0,1,1"},
             Case{"pipeline_3_16_f11_seed1", "pipeline-3-16 --field 11 --seed 1"},
             Case{"p3_numerology", "p3 numerology"},
             Case{"pipeline_liaison_f11_seed1", "pipeline-liaison --field 11 --seed 1"},
         }) {
        CAPTURE(name);
        auto r = cli(std::string(args) + " --json");
        CHECK(r.exit == 0);
        CHECK(r.out == golden(name));
    }
}

TEST_CASE("CLI report contents") {
    auto net = nlohmann::json::parse(cli("net --field 11 --seed 42 --block --json").out);
    CHECK(net["schema"] == "prym5-report/1");
    CHECK(net["analysis"]["split"] == "split");
    CHECK(net["analysis"]["eigensignature"] == nlohmann::json::array({2, 3}));
    auto random = nlohmann::json::parse(cli("net --field 7 --seed 7 --random --json").out);
    CHECK(random["analysis"]["split"] == "no_split");
    auto g2 = nlohmann::json::parse(cli("g2 all --fixture g2_x6m1_f7_3k.txt --json").out);
    CHECK(g2["web_dimension"] == 4);
    CHECK(g2["quartic_nodes_F2"] == 16);
}

TEST_CASE("CLI exit codes") {
    CHECK(cli("net --fixture malformed_net.txt").exit == 2);
    CHECK(cli("g2 --fixture malformed_g2.txt").exit == 2);
    CHECK(cli("g2 --fixture no_such_file.txt").exit == 2);
    CHECK(cli("net --field 12").exit == 2);
    CHECK(cli("frobnicate").exit == 2);
    CHECK(cli("pipeline-3-16 --field 11 --seed 1 --singular").exit == 1);
    CHECK(cli("pipeline-3-16 --field 11 --seed 1 --budget-lines 100").exit == 3);
    auto inadmissible = cli("g2 bisecant --fixture g2_x6m1_f7_3k.txt --quadric 1,2,3,4 --json");
    CHECK(inadmissible.exit == 0);
    auto j = nlohmann::json::parse(inadmissible.out);
    CHECK(j["admissible"] == false);
    CHECK_FALSE(j.contains("bisecant_pairs"));
}

TEST_CASE("CLI output is deterministic") {
    auto a = cli("pipeline-3-16 --field 11 --seed 3 --json");
    auto b = cli("pipeline-3-16 --field 11 --seed 3 --json");
    CHECK(a.exit == 0);
    CHECK(a.out == b.out);
    auto text = cli("p3 liaison --field 11 --seed 2");
    CHECK(text.out.find("status = pass") != std::string::npos);
}
