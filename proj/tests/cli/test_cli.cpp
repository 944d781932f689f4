#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FIXSPACE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

using Json = nlohmann::ordered_json;

void check_round_trip(const std::string& text) {
    const auto parsed = Json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
}

}  // namespace

TEST_CASE("dist emits exact rationals") {
    const auto r = run("dist --family gl --n 1 --q 3 --format json");
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["family"] == "gl");
    CHECK(j["sign"].is_null());
    REQUIRE(j["probs"].size() == 2);
    CHECK(j["probs"][0]["k"] == 0);
    CHECK(j["probs"][0]["num"] == "1");
    CHECK(j["probs"][0]["den"] == "2");
    CHECK(j["probs"][1]["num"] == "1");
    check_round_trip(r.out);

    const auto csv = run("dist --family o+ --n 1 --q 3 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out == "k,num,den\n0,1,4\n1,1,2\n2,1,4\n");
    const auto minus = run("dist --family o-even --sign - --n 1 --q 3 --format json");
    CHECK(Json::parse(minus.out)["sign"] == "-");
}

TEST_CASE("moment and stabilize") {
    const auto m = run("moment --family sp --n 1 --q 2 --j 1");
    CHECK(m.code == 0);
    CHECK(m.out == "2\n");
    const auto s = run("stabilize --family o- --q 3 --j 1 --n-max 6 --format json");
    REQUIRE(s.code == 0);
    const auto j = Json::parse(s.out);
    CHECK(j["rows"][0]["n"] == 1);
    CHECK(j["rows"][0]["equals_limit"] == false);
    CHECK(j["rows"][1]["equals_limit"] == true);
    CHECK(j["limit"]["num"] == "4");
    check_round_trip(s.out);
}

TEST_CASE("limit and enumerate") {
    const auto l = run("limit --family gl --q 2 --k 0 --tolerance 1/1000 --format json");
    REQUIRE(l.code == 0);
    const auto j = Json::parse(l.out);
    CHECK(j["interval"].contains("lower"));
    CHECK(j["interval"]["upper"].contains("den"));
    check_round_trip(l.out);
    const auto e = run("enumerate --family sp --n 1 --q 2 --format json");
    REQUIRE(e.code == 0);
    CHECK(Json::parse(e.out)["order"] == 6);
    check_round_trip(run("enumerate --family u --n 1 --q 2 --list --format json").out);
}

TEST_CASE("verify exit codes") {
    CHECK(run("verify --suite identities --seed 1").code == 0);
    const auto v = run("verify --suite series --degree 6 --format json");
    CHECK(v.code == 0);
    check_round_trip(v.out);
}

TEST_CASE("sample echoes the seed and is reproducible") {
    const auto a = run("sample --family sp --n 1 --q 3 --trials 2000 --seed 42 --workers 2 --format json");
    const auto b = run("sample --family sp --n 1 --q 3 --trials 2000 --seed 42 --workers 2 --format json");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = Json::parse(a.out);
    CHECK(j["seed"] == 42);
    std::uint64_t total = 0;
    for (const auto& c : j["counts"]) total += c["count"].get<std::uint64_t>();
    CHECK(total == 2000);
    check_round_trip(a.out);
    CHECK(run("sample --family gl --n 2 --q 2 --trials 6000 --seed 1 --uniformity").code == 0);
}

TEST_CASE("usage errors exit 2 without output") {
    for (const char* args : {"", "dist --family gl --n 1", "dist --family gl --n 1 --q 6", "dist --family o-odd --n 1 --q 4",
                             "dist --family sp --n 1 --q 3 --sign +", "dist --family o-even --n 1 --q 3",
                             "moment --family xx --n 1 --q 2", "stabilize --family u --q 2 --j 2 --n-max 3",
                             "verify --suite bogus", "sample --family sp --n 1 --q 3 --trials 0 --seed 1",
                             "sample --family sp --n 1 --q 3 --trials 10", "sample --family o+ --n 1 --q 2 --trials 10 --seed 1",
                             "enumerate --family gl --n 4 --q 2", "limit --family gl --q 2 --k 0 --tolerance 0",
                             "dist --family gl --n 1 --q 3 --format xml"}) {
        const auto r = run(args);
        CHECK_MESSAGE(r.code == 2, args);
        CHECK_MESSAGE(r.out.empty(), args);
    }
}
