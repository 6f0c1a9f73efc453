#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "hgmoduli/report_io.hpp"

using namespace hgm;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "cli_test_out.txt";
    std::string cmd = std::string(HGM_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    std::remove(out_path.c_str());
    return r;
}

} // namespace

TEST_CASE("betti text output matches the pinned format") {
    auto r = run_cli("compute --r 2 --k 4 --n 0 --d 1 --output betti --format text");
    CHECK(r.status == 0);
    CHECK(r.out == "b: 1 0 2 0 3 0 3 0 2 0 1\n");
}

TEST_CASE("full report for the degree 2 space") {
    auto r = run_cli("compute --r 2 --k 4 --n 0 --d 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("euler: 72") != std::string::npos);
    CHECK(r.out.find("b: 1 0 3 0 7 0 11 0 14 0 14 0 11 0 7 0 3 0 1") != std::string::npos);
    CHECK(r.out.find("class[p]: L^9 + 3 L^8 + 7 L^7 + 11 L^6 + 14 L^5 + 14 L^4 + 11 L^3 + 7 L^2 "
                     "+ 3 L + 1") != std::string::npos);
    CHECK(r.out.find("E(t,u): t^9 u^9 + 3 t^8 u^8") != std::string::npos);
}

TEST_CASE("one marked point, degree 2") {
    auto r = run_cli("compute --r 2 --k 4 --n 1 --d 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("class[p]: (L^10+4L^9+12L^8+22L^7+33L^6+36L^5+33L^4+22L^3+12L^2+4L+1) p1") !=
          std::string::npos);
    CHECK(r.out.find("E(t,u): t^10 u^10 + 4 t^9 u^9 + 12 t^8 u^8 + 22 t^7 u^7 + 33 t^6 u^6 + "
                     "36 t^5 u^5 + 33 t^4 u^4 + 22 t^3 u^3 + 12 t^2 u^2 + 4 t u + 1") !=
          std::string::npos);
}

TEST_CASE("empty space report is all zero") {
    auto r = run_cli("compute --r 2 --k 4 --n 0 --d 0 --output all");
    CHECK(r.status == 0);
    CHECK(r.out.find("empty: yes") != std::string::npos);
    CHECK(r.out.find("euler: 0") != std::string::npos);
    CHECK(r.out.find("b: 0") != std::string::npos);
}

TEST_CASE("bad arguments exit with 1") {
    CHECK(run_cli("compute --r 0 --k 4 --n 0 --d 1").status == 1);
    CHECK(run_cli("compute --r 4 --k 4 --n 0 --d 1").status == 1);
    CHECK(run_cli("compute --r 2 --k 4 --n 0").status == 1); // missing --d
    CHECK(run_cli("compute --r 2 --k 4 --n 0 --d 1 --output bogus").status == 1);
    CHECK(run_cli("quot --r 0 --k 4 --delta 1").status == 1);
}

TEST_CASE("tables") {
    auto quot = run_cli("quot --r 2 --k 4 --delta 0");
    CHECK(quot.status == 0);
    CHECK(quot.out == "1 1 2 1 1\n");

    auto mor = run_cli("mor --r 1 --k 2 --d 1");
    CHECK(mor.status == 0);
    CHECK(mor.out == "L^3 - L\n");

    auto config = run_cli("config --n 2");
    CHECK(config.status == 0);
    CHECK(config.out == "p: (L^2+L)/2 p1^2 + (L^2-L)/2 p2\nh: L h1^2 + (L^2-L) h2\n");
}

TEST_CASE("JSON and text encode the same data") {
    auto text = run_cli("compute --r 2 --k 4 --n 1 --d 1 --output all --format text");
    auto json = run_cli("compute --r 2 --k 4 --n 1 --d 1 --output all --format json");
    CHECK(text.status == 0);
    CHECK(json.status == 0);
    Json parsed = Json::parse(json.out);
    CHECK(report_to_text(parsed, "all", "p") == text.out);

    // JSON output is canonical: keys sorted, deterministic bytes
    CHECK(parsed.dump(2) + "\n" == json.out);
    auto json2 = run_cli("compute --r 2 --k 4 --n 1 --d 1 --output all --format json");
    CHECK(json2.out == json.out);
}

TEST_CASE("cache round-trip yields identical bytes and corrupt caches exit 3") {
    std::string cache = "cli_test_cache.json";
    std::remove(cache.c_str());
    std::string args = "compute --r 2 --k 4 --n 0 --d 2 --format json --cache " + cache;
    auto cold = run_cli(args);
    CHECK(cold.status == 0);
    std::ifstream cache_in(cache);
    CHECK(cache_in.good());
    auto warm = run_cli(args);
    CHECK(warm.status == 0);
    CHECK(warm.out == cold.out);

    std::ofstream(cache) << "{\"version\": \"0\", \"entries\": {}}";
    CHECK(run_cli(args).status == 3);
    CHECK(run_cli("selfcheck --cache " + cache).status == 3);
    std::remove(cache.c_str());
    std::remove((cache + ".lock").c_str());
}

TEST_CASE("internal consistency failures exit with 2") {
    // a well-formed cache whose M_BAR cell cannot be a genuine class
    std::string cache = "cli_test_poison.json";
    std::ofstream(cache) << R"({"version": "1", "entries": {"2:4:M_BAR:1:1":)"
                         << R"( [{"partition": [1], "coeff": [{"num":"1","den":"2"}]}]}})";
    CHECK(run_cli("compute --r 2 --k 4 --n 1 --d 1 --cache " + cache).status == 2);
    std::remove(cache.c_str());
    std::remove((cache + ".lock").c_str());
}

TEST_CASE("environment variable selects the cache path") {
    std::string cache = "cli_test_env_cache.json";
    std::remove(cache.c_str());
    std::string args = "quot --r 2 --k 4 --delta 1";
    std::string cmd = "HG_MODULI_CACHE=" + cache + " " + std::string(HGM_CLI_PATH) + " " + args +
                      " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    std::ifstream in(cache);
    CHECK(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("2:4:QBAR:0:1") != std::string::npos);
    std::remove(cache.c_str());
    std::remove((cache + ".lock").c_str());
}
