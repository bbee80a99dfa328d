#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "mmv/report.hpp"

namespace {
struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const char* cli = std::getenv("MMV_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

int count(const std::string& s, const std::string& sub) {
    int n = 0;
    for (size_t p = s.find(sub); p != std::string::npos; p = s.find(sub, p + 1)) ++n;
    return n;
}
} // namespace

TEST_CASE("verify main-identity") {
    auto r = run("verify main-identity --a 2 --tol 1e-6");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
    auto bad = run("verify main-identity --a 'sqrt(-0.5)'");
    CHECK(bad.code == 1);
    CHECK(count(bad.out, "FAIL") == 1);
}

TEST_CASE("tempered") {
    auto r = run("tempered '2x + 2/x + y + 1/y + 3'");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("non-tempered", 0) == 0);
    CHECK(r.out.find("|root| = 2") != std::string::npos);
    CHECK(run("tempered 'x + 1/x + y + 1/y + 3'").out.rfind("tempered", 0) == 0);
}

TEST_CASE("mahler") {
    auto r = run("mahler 'x + 2' --method torus --tol 1e-8");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.69314718") != std::string::npos);
}

TEST_CASE("verify boyd30 and friends") {
    auto r = run("verify boyd30");
    CHECK(r.code == 0);
    CHECK(count(r.out, "PASS  boyd30/") == 3);
    CHECK(run("verify corollary13 --line 4").code == 0);
    CHECK(run("verify theorem41").code == 0);
    CHECK(run("verify mellit --alpha -8/3").code == 0);
    CHECK(run("verify modular-equation --order 13").code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("bogus").code == 2);
    CHECK(run("verify nothing").code == 2);
    CHECK(run("verify mellit --alpha 8").code == 2);
    CHECK(run("verify kp").code == 2);
}

TEST_CASE("report --all: json and csv agree, exit code follows failures") {
    auto j = run("report --all --format json");
    auto arr = nlohmann::json::parse(j.out);
    REQUIRE(arr.is_array());
    bool any_fail = false;
    for (auto& x : arr) {
        auto r = mmv::report_from_json(x);
        CHECK(mmv::to_json(r) == x);
        any_fail = any_fail || !r.pass;
    }
    CHECK(j.code == (any_fail ? 1 : 0));

    auto c = run("report --all --format csv");
    std::istringstream is(c.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == mmv::csv_header());
    size_t k = 0;
    while (std::getline(is, line)) {
        REQUIRE(k < arr.size());
        // two separate runs: everything but the wall time must agree
        auto strip = [](const std::string& t) { return t.substr(0, t.rfind(',')); };
        CHECK(strip(line) == strip(mmv::to_csv(mmv::report_from_json(arr[k]))));
        ++k;
    }
    CHECK(k == arr.size());
}
