#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "slipdrop/io.hpp"

using namespace slipdrop;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/slipdrop_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("gap file round trip and diagnostics") {
    TempFile f("gaps.txt");
    write_gaps_file(f.path, {1.5, 0.25, 3.0}, 0xabcd, 7);
    const auto gaps = read_gaps_file(f.path);
    CHECK(gaps == std::vector<double>{1.5, 0.25, 3.0});

    {
        std::ofstream bad(f.path);
        bad << "1.0\nnot-a-number\n";
    }
    CHECK_THROWS_WITH_AS(read_gaps_file(f.path), doctest::Contains(":2:"), InvalidInput);

    {
        std::ofstream bad(f.path);
        bad << "1.0 2.0\n";
    }
    CHECK_THROWS_AS(read_gaps_file(f.path), InvalidInput);

    CHECK_THROWS_AS(read_gaps_file("/nonexistent/nowhere.txt"), InvalidInput);
}

TEST_CASE("curve csv carries the provenance comment and header") {
    TempFile f("curve.csv");
    CoarseningCurve c;
    c.t = {0.0, 1.0, 2.0};
    c.n = {1.0, 0.5, 0.25};
    write_curve_csv(f.path, c, 0x12ef, 42);

    std::ifstream in(f.path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# config_hash=12ef seed=42");
    std::getline(in, line);
    CHECK(line == "t,n");
    std::getline(in, line);
    CHECK(line == "0,1");
}

TEST_CASE("events jsonl shape") {
    TempFile f("events.jsonl");
    EventRecord collision;
    collision.time = 1.5;
    collision.kind = EventKind::Collision;
    collision.index = 2;
    collision.partner = 3;
    collision.count_after = 4;
    write_events_jsonl(f.path, {collision}, 1, 2);

    std::ifstream in(f.path);
    std::string line;
    std::getline(in, line);
    const auto j = nlohmann::json::parse(line);
    CHECK(j["kind"] == "COLLISION");
    CHECK(j["indices"] == nlohmann::json::array({2, 3}));
    CHECK(j["count_after"] == 4);
    CHECK(j["time"] == doctest::Approx(1.5));
}

TEST_CASE("config parsing is strict about unknown keys") {
    nlohmann::json good = {{"epsilon", 0.025}, {"sigma", 1.0}, {"nu", 1.0}, {"beta", 5.0}};
    const ModelParams p = parse_params(good);
    CHECK(p.beta == 5.0);

    nlohmann::json inf_beta = good;
    inf_beta["beta"] = "inf";
    CHECK(parse_params(inf_beta).infinite_slip());

    nlohmann::json typo = good;
    typo["epsilo"] = 0.1;
    CHECK_THROWS_WITH_AS(parse_params(typo), doctest::Contains("epsilo"), InvalidInput);

    nlohmann::json missing = {{"sigma", 1.0}, {"nu", 1.0}, {"beta", 1.0}};
    CHECK_THROWS_AS(parse_params(missing), InvalidInput);
}

TEST_CASE("distribution parsing") {
    CHECK(parse_distribution({{"family", "power"}, {"alpha", 0.5}}).id() == DistId::Power);
    CHECK(parse_distribution({{"family", "gaussian"}}).id() == DistId::Gaussian);
    CHECK_THROWS_AS(parse_distribution({{"family", "cauchy"}}), InvalidInput);
    CHECK_THROWS_AS(parse_distribution({{"family", "power"}, {"alph", 0.5}}), InvalidInput);
}

TEST_CASE("hashes are stable") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == fnv1a64("a"));
    CHECK(fnv1a64("a") != fnv1a64("b"));
}
