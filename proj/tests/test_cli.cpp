#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

using nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(MWPLET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

} // namespace

TEST_CASE("height subcommand emits the table value") {
    CliResult r = run_cli("height --p sL1 --q sL1");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == "1/2");
}

TEST_CASE("group subcommand doubles a named section") {
    CliResult r = run_cli("group --op dbl --p sL2");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["x"] == "1/10*t^2 - 2");
    CHECK(j["y"] == "-3/100*sqrt(-10)*t^3 - 3/5*sqrt(-10)*t");
}

TEST_CASE("fibers subcommand on a custom curve") {
    CliResult r = run_cli("--curve \"(x)*(x^2-2*x+t^2-4)\" fibers");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.is_array());
}

TEST_CASE("bisection subcommand verifies the image") {
    CliResult r = run_cli("bisection --family 2 --param 3");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["image_is_family_image"] == true);
}

TEST_CASE("implicitize subcommand canonical output") {
    CliResult r = run_cli("implicitize --x \"1/10*t^2-2\"");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["conic"] == "T^2 - 10*X*Z - 20*Z^2");
}

TEST_CASE("young subcommand") {
    CliResult r = run_cli("young --k 7");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 8);
}

TEST_CASE("plet subcommand produces a distinct certificate") {
    CliResult r = run_cli("plet --k 3 --prime 3");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 3);
    CHECK(j["pairwise_distinct"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
    CliResult a = run_cli("arrange --k 2 --partition 1,1,0 --kind weak");
    CliResult b = run_cli("arrange --k 2 --partition 1,1,0 --kind weak");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("failures exit nonzero") {
    CliResult r = run_cli("height --p sL1 --q nosuch");
    CHECK(r.status != 0);
    CliResult r2 = run_cli("--curve \"(x-1)*(x^2-t^10)\" fibers");
    CHECK(r2.status != 0);
}
