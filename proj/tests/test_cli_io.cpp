#include <doctest.h>

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "vkh/corpus.hpp"
#include "vkh/errors.hpp"
#include "vkh/report.hpp"

using namespace vkh;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(VKH_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kData = VKH_DATA_DIR;

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("bracket oracle") {
    CHECK(format_laurent(bracket_oracle(parse_gauss_code("O1-U2-O3-U1-O2-U3-"))) == "-1/q^9+1/q^5+1/q^3+1/q");
    CHECK(bracket_oracle(parse_gauss_code("")) == LaurentPoly{{-1, 1}, {1, 1}});
    CHECK(bracket_oracle(parse_gauss_code("O1-U2-O3+U1-O2-U3+")) == LaurentPoly{{-1, 1}, {1, 1}});
    std::mt19937_64 rng(79);
    for (int i = 0; i < 100; ++i) {
        Diagram d = (i % 2) ? oracle::random_virtual(rng, 7) : oracle::random_colorable(rng, 7);
        REQUIRE(bracket_oracle(d) == oracle::euler_state_sum(d));
    }
}

TEST_CASE("corpus schema") {
    auto entries = parse_corpus(nlohmann::json::parse(R"({"entries": [
        {"name": "a", "gauss_code": "O1-U2-O3-U1-O2-U3-", "classical": true,
         "expected": {"sigma_pair": [2, 2], "rasmussen": -2, "kh_polynomial": "1/q^9t^3+1/q^5t^2+1/q^3+1/q"}},
        {"name": "b", "gauss_code": null, "expected": {}}]})"));
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].expected.sigma_pair == std::pair{2, 2});
    CHECK_FALSE(entries[1].gauss_code.has_value());
    CHECK(verify_entry(entries[0]).status == EntryStatus::pass);
    CHECK(verify_entry(entries[1]).status == EntryStatus::skipped);
    CHECK_THROWS_AS(parse_corpus(nlohmann::json::parse(R"({"entries": [{"gauss_code": "O1"}]})")), Error);
}

TEST_CASE("verification reports mismatches") {
    CorpusEntry e;
    e.name = "wrong";
    e.gauss_code = "O1-U2-O3-U1-O2-U3-";
    e.expected.rasmussen = 2;
    EntryResult r = verify_entry(e);
    CHECK(r.status == EntryStatus::fail);
    bool found = false;
    for (const auto& f : r.fields)
        if (f.field == "rasmussen") {
            found = true;
            CHECK_FALSE(f.ok);
            CHECK(f.actual == "-2");
        }
    CHECK(found);
}

TEST_CASE("shipped corpora load") {
    auto table = load_corpus(kData + "/alternating_virtual_knots.json");
    CHECK(table.size() == 168);
    auto examples = load_corpus(kData + "/examples.json");
    CHECK(examples.size() == 4);
}

TEST_CASE("invariant report json") {
    InvariantReport r = compute_invariants(parse_gauss_code("O1-U2-O3-U1-O2-U3-"));
    nlohmann::json j = to_json(r);
    CHECK(j["sigma_pair"] == nlohmann::json::array({2, 2}));
    CHECK(j["rasmussen"]["s"] == -2);
    CHECK(j["genus"] == 0);
    CHECK(to_json(*r.rasmussen).contains("survivors"));
    InvariantReport v = compute_invariants(parse_gauss_code("O1+O2+U1+U2+"));
    CHECK_FALSE(v.colorable);
    CHECK(v.kh.has_value());
    CHECK_FALSE(v.rasmussen.has_value());
}

TEST_CASE("command line") {
    CHECK(run("parse 'O1-U2-O3-U1-O2-U3-'").status == 0);
    CHECK(run("parse 'O1-U2-'").status == 1);
    CHECK(run("kh 'O1-U2-O3-U1-O2-U3-'").out.find("1/q^9t^3+1/q^5t^2+1/q^3+1/q") != std::string::npos);
    CHECK(run("bracket 'O1-U2-O3-U1-O2-U3-'").out.find("-1/q^9+1/q^5+1/q^3+1/q") != std::string::npos);
    Run ras = run("rasmussen --json 'O1-U2-O3-U1-O2-U3-'");
    REQUIRE(ras.status == 0);
    CHECK(nlohmann::json::parse(ras.out)["s"] == -2);
    Run mirror = run("mirror --op star 'O1-U2-O3-U1-O2-U3-'");
    CHECK(mirror.out.find("U1+O2+U3+O1+U2+O3+") != std::string::npos);
    CHECK(run("kh --builder general 'O1+O2+U1+U2+'").status == 0);
    CHECK(run("rasmussen 'O1+O2+U1+U2+'").status == 1);
    CHECK(run("verify " + kData + "/alternating_virtual_knots.json").status == 0);
    Run inv = run("invariants --json --coloring dual 'O1-U2-O3+U1-O2-U3+'");
    REQUIRE(inv.status == 0);
    CHECK(nlohmann::json::parse(inv.out)["sigma_pair"] == nlohmann::json::array({0, 2}));
    CHECK(run("nonsense").status == 1);
}

}
