#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "bead/cli.hpp"

using namespace bead;

namespace {
struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = run(args, o, e);
    return {c, o.str(), e.str()};
}
}  // namespace

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3, -2.5e-300, 12345.678}) CHECK(std::stod(format_double(v)) == v);
    CHECK(format_double(1.5) == "1.5");
}

TEST_CASE("kernel value") {
    Result r = call({"kernel", "--p", "1", "--q", "2", "--s", "1", "--t", "1", "--x", "0.25", "--y", "0.25"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1.5));
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    std::vector<std::string> a{"sample", "--p", "3", "--q", "4", "--count", "5", "--seed", "42"};
    Result r1 = call(a), r2 = call(a);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    a.push_back("--threads");
    a.push_back("3");
    CHECK(call(a).out == r1.out);
    a[8] = "43";
    CHECK(call(a).out != r1.out);
}

TEST_CASE("json output carries the spec and seed") {
    Result r = call({"sample", "--p", "2", "--q", "3", "--count", "1", "--seed", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["seed"] == 5);
    CHECK(j["rows"].size() == 6);
    CHECK(j["spec"]["p"] == 2);
}

TEST_CASE("enumerate and correlate") {
    Result r = call({"enumerate", "--n", "2", "--p", "2", "--q", "2", "--total"});
    CHECK(r.code == 0);
    CHECK(std::stoi(r.out) == 20);
    r = call({"correlate", "--p", "2", "--q", "3", "--point", "3:0.4", "--point", "3:0.75"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(2.646).epsilon(1e-9));
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"kernel", "--p", "3", "--q", "2", "--s", "1", "--t", "1"}).code == 2);
    CHECK(call({"kernel", "--p", "2", "--q", "3", "--s", "9", "--t", "1"}).code == 2);
    CHECK(call({"validate", "--suite", "nope"}).code == 2);
    CHECK(call({"validate", "--suite", "discrete", "--level", "quick"}).code == 0);
    CHECK(call({"bulk", "--k", "0", "--S", "1", "--probe"}).code == 2);
}
