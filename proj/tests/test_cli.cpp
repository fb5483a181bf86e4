#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <string>
#include <vector>

using ordlen::cli::RunResult;
using ordlen::cli::run;
using json = nlohmann::ordered_json;

namespace {

const char* RUNNING_IDEAL =
    "x^5*y*z, x^4*y^3*z, x^3*y^2*z^2, x^2*y^3*z^2, x^2*y^2*z^3, "
    "x^4*y*z^4, x^6*z^4, x^5*z^5";

} // namespace

TEST_CASE("cli length in text and json form") {
    RunResult r = run({"length", "--vars", "x", "--ideal", "x^3"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    CHECK(r.err.empty());

    r = run({"length", "--vars", "x,y,z", "--ideal", RUNNING_IDEAL});
    CHECK(r.code == 0);
    CHECK(r.out == "3*w^2 + 10*w + 6\n");

    r = run({"length", "--vars", "x", "--ideal", "x^3", "--json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["terms"].size() == 1);
    CHECK(doc["terms"][0]["exp"] == 0);
    CHECK(doc["terms"][0]["coef"] == 3);

    r = run({"length", "--vars", "x,y", "--ideal", "x^2, x*y, y^3",
             "--quotient-by", "x^2, x*y"});
    CHECK(r.code == 0);
    CHECK(r.out == "w\n");

    r = run({"length", "--vars", "x,y", "--ideal", "x^2",
             "--quotient-by", "x^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("cli length with extra variables") {
    RunResult r = run({"length", "--vars", "x", "--ideal", "x^2",
                       "--extra-vars", "y,z"});
    CHECK(r.code == 0);
    CHECK(r.out == "2*w^2\n");
}

TEST_CASE("cli cycle output") {
    RunResult text = run({"cycle", "--vars", "x,y,z", "--ideal", RUNNING_IDEAL});
    CHECK(text.code == 0);
    CHECK(text.out == "{(x):2, (z):1, (x,y):5, (x,z):2, (y,z):3, (x,y,z):6}\n");

    RunResult threaded = run({"cycle", "--vars", "x,y,z", "--ideal",
                              RUNNING_IDEAL, "--threads", "4"});
    CHECK(threaded.out == text.out);

    RunResult r = run({"cycle", "--vars", "x,y,z", "--ideal", RUNNING_IDEAL,
                       "--json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["cycle"].size() == 6);
    CHECK(doc["cycle"][0]["prime"] == json::array({"x"}));
    CHECK(doc["cycle"][0]["mult"] == 2);
    CHECK(doc["cycle"][5]["prime"] == json::array({"x", "y", "z"}));
    CHECK(doc["cycle"][5]["mult"] == 6);
    REQUIRE(doc["length"]["terms"].size() == 3);
    CHECK(doc["length"]["terms"][0]["exp"] == 2);
    CHECK(doc["length"]["terms"][0]["coef"] == 3);
    CHECK(doc["pretty"] == "3*w^2 + 10*w + 6");
}

TEST_CASE("cli assoc lists primes one per line") {
    RunResult r = run({"assoc", "--vars", "x,y,z", "--ideal", "x^2, x*y"});
    CHECK(r.code == 0);
    CHECK(r.out == "(x)\n(x,y)\n");

    r = run({"assoc", "--vars", "x,y,z", "--ideal", "x^2, x*y", "--json"});
    json doc = json::parse(r.out);
    CHECK(doc["primes"] == json::array({json::array({"x"}),
                                        json::array({"x", "y"})}));
}

TEST_CASE("cli dimfil prints one line per filtration step") {
    RunResult r = run({"dimfil", "--vars", "x,y", "--ideal", "x^2, x*y"});
    CHECK(r.code == 0);
    CHECK(r.out == "fl_0: 1\nfl_1: w + 1\n");

    r = run({"dimfil", "--vars", "x,y", "--ideal", "x^2, x*y", "--json"});
    json doc = json::parse(r.out);
    REQUIRE(doc["filtration"].size() == 2);
    CHECK(doc["filtration"][0]["dim"] == 0);
    CHECK(doc["filtration"][0]["numerator"] == json::array({"x"}));
    CHECK(doc["filtration"][0]["pretty"] == "1");
    CHECK(doc["filtration"][1]["pretty"] == "w + 1");
}

TEST_CASE("cli open matches the worked example") {
    RunResult r = run({"open", "--vars", "x,y,z", "--ideal", "x^2, x*y",
                       "--sub", "x*z, y"});
    CHECK(r.code == 0);
    CHECK(r.out == "open: true\n");

    r = run({"open", "--vars", "x", "--ideal", "0", "--sub", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "open: false\n");

    r = run({"open", "--vars", "x,y,z", "--ideal", "x^2, x*y",
             "--sub", "x*z, y", "--json"});
    json doc = json::parse(r.out);
    CHECK(doc["open"] == true);
    CHECK(doc["pretty"] == "w^2 + w");
    CHECK(doc["sub_pretty"] == "w^2 + w");
}

TEST_CASE("cli closure") {
    RunResult r = run({"closure", "--vars", "x,y", "--ideal", "x^2, x*y",
                       "--sub", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "closed: false\nclosure: (x)\n");

    r = run({"closure", "--vars", "x,y", "--ideal", "x^2, x*y",
             "--sub", "x"});
    CHECK(r.out == "closed: true\nclosure: (x)\n");

    r = run({"closure", "--vars", "x,y", "--ideal", "x^2, x*y",
             "--sub", "0", "--json"});
    json doc = json::parse(r.out);
    CHECK(doc["closed"] == false);
    CHECK(doc["closure"] == json::array({"x"}));
}

TEST_CASE("cli parameter") {
    RunResult r = run({"parameter", "--vars", "x,y", "--ideal", "x^2",
                       "--element", "y"});
    CHECK(r.code == 0);
    CHECK(r.out == "parameter: true\n");

    r = run({"parameter", "--vars", "x,y", "--ideal", "x^2",
             "--element", "x"});
    CHECK(r.out == "parameter: false\n");

    r = run({"parameter", "--vars", "x,y", "--ideal", "x^2",
             "--element", "y", "--json"});
    json doc = json::parse(r.out);
    CHECK(doc["parameter"] == true);
    CHECK(doc["element"] == "y");

    r = run({"parameter", "--vars", "x,y", "--ideal", "x^2",
             "--element", "x, y"});
    CHECK(r.code == 1);
    CHECK(r.err.find("single monomial") != std::string::npos);
}

TEST_CASE("cli semiadd explicit triple") {
    RunResult r = run({"semiadd", "--vars", "x,y",
                       "--quotient-by", "x^2, x*y",
                       "--sub", "x",
                       "--ideal", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "len K/J: 1\n"
          "len I/J: w + 1\n"
          "len I/K: w\n"
          "lower_bound: pass\n"
          "upper_bound: pass\n"
          "lower_weaker: pass\n"
          "sub_weaker: pass\n"
          "top_additive: pass\n"
          "all: pass\n");

    r = run({"semiadd", "--vars", "x,y", "--quotient-by", "x^2, x*y",
             "--sub", "x", "--ideal", "1", "--json"});
    json doc = json::parse(r.out);
    CHECK(doc["pretty_sub"] == "1");
    CHECK(doc["pretty_mid"] == "w + 1");
    CHECK(doc["pretty_quot"] == "w");
    CHECK(doc["checks"]["lower_bound"] == true);
    CHECK(doc["all"] == true);
}

TEST_CASE("cli semiadd random mode is deterministic") {
    RunResult a = run({"semiadd", "--seed", "1"});
    RunResult b = run({"semiadd", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("passed 25/25") != std::string::npos);

    RunResult c = run({"semiadd", "--seed", "2", "--json"});
    json doc = json::parse(c.out);
    CHECK(doc["seed"] == 2);
    CHECK(doc["total"] == 25);
    CHECK(doc["passed"] == 25);
    CHECK(doc["instances"].size() == 25);
}

TEST_CASE("cli stdpairs") {
    RunResult r = run({"stdpairs", "--vars", "x,y", "--ideal", "x^2, x*y"});
    CHECK(r.code == 0);
    CHECK(r.out == "(x, {})\n(1, {y})\n");

    r = run({"stdpairs", "--vars", "x,y", "--ideal", "x^2, x*y", "--json"});
    json doc = json::parse(r.out);
    REQUIRE(doc["pairs"].size() == 2);
    CHECK(doc["pairs"][0]["root"] == "x");
    CHECK(doc["pairs"][0]["free"] == json::array());
    CHECK(doc["pairs"][1]["root"] == "1");
    CHECK(doc["pairs"][1]["free"] == json::array({"y"}));
    CHECK(doc["count"] == 2);
}

TEST_CASE("cli oracle explicit and random") {
    RunResult r = run({"oracle", "--vars", "x,y", "--ideal", "x^2, x*y, y^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "length: 3\nk_dim: 3\ngrassmannian: 3\nagree: true\n");

    r = run({"oracle", "--vars", "x,y", "--ideal", "x^2, x*y, y^2", "--json"});
    json doc = json::parse(r.out);
    CHECK(doc["pretty"] == "3");
    CHECK(doc["k_dimension"] == 3);
    CHECK(doc["grassmannian_pretty"] == "3");
    CHECK(doc["agree"] == true);

    RunResult a = run({"oracle", "--seed", "2"});
    RunResult b = run({"oracle", "--seed", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("passed 25/25") != std::string::npos);

    r = run({"oracle", "--vars", "x", "--ideal", "0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("zero-dimensional") != std::string::npos);
}

TEST_CASE("cli poset reads its description from standard input") {
    RunResult r = run({"poset"}, "3\n0 < 1\n1 < 2\n");
    CHECK(r.code == 0);
    CHECK(r.out == "length: 2\nranks: 0 1 2\n");

    r = run({"poset", "--json"}, "3\n0 < 1\n1 < 2\n");
    json doc = json::parse(r.out);
    CHECK(doc["pretty"] == "2");
    CHECK(doc["ranks"] == json::array({0, 1, 2}));

    r = run({"poset"}, "2\n0 < 1\n1 < 0\n");
    CHECK(r.code == 1);

    r = run({"poset"}, "rubbish\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error") != std::string::npos);
}

TEST_CASE("cli exit codes and error streams") {
    RunResult r = run({"length", "--vars", "x", "--ideal", "x^^2"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(r.err.find("position") != std::string::npos);

    r = run({"length", "--vars", "x,y", "--ideal", "x",
             "--quotient-by", "y"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);

    r = run({"length", "--vars", "x", "--ideal", "x", "--bogus"});
    CHECK(r.code == 2);

    r = run({});
    CHECK(r.code == 2);

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("length") != std::string::npos);

    r = run({"cycle", "--vars", "x,y,z,w,v,x2,y2,z2,w2", "--ideal", "x"});
    CHECK(r.code == 1);
    CHECK(r.err.find("8 variables") != std::string::npos);
}

TEST_CASE("cli color is controlled by the environment") {
    setenv("ORDLEN_COLOR", "1", 1);
    RunResult r = run({"length", "--vars", "x", "--ideal", "x^3"});
    unsetenv("ORDLEN_COLOR");
    CHECK(r.out == "\x1b[1m3\x1b[0m\n");

    setenv("ORDLEN_COLOR", "0", 1);
    RunResult plain = run({"length", "--vars", "x", "--ideal", "x^3"});
    unsetenv("ORDLEN_COLOR");
    CHECK(plain.out == "3\n");
}
