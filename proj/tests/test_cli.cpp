#include "helpers.hpp"

#include <sstream>

#include <dlrev/cli.hpp>
#include <dlrev/json_io.hpp>

using namespace dlrev;
using testing::code_of;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json parsed(const std::string &text) { return Json::parse(text); }

} // namespace

TEST_CASE("series parsing")
{
    const auto s = parse_series(parse_json_text(R"({"order":3,"coeffs":["1","1/2","1/6"]})"));
    CHECK(s.order() == 3);
    CHECK(s[2] == Rational(1, 6));
    CHECK(parse_series(parse_json_text(R"({"order":5,"coeffs":["1"]})")).order() == 5);
    CHECK(parse_series(parse_json_text(R"(["0", 1, "-2/4"])"))[2] == Rational(-1, 2));
    CHECK(parse_rational(Json("2/4")) == Rational(1, 2));
    CHECK(code_of([] { parse_rational(Json("abc")); }) == ErrorCode::MalformedRational);
    CHECK(code_of([] { parse_series(parse_json_text(R"({"order":1,"coeffs":["1","2"]})")); })
          == ErrorCode::ValidationError);
    CHECK(code_of([] { parse_series(parse_json_text("[]")); }) == ErrorCode::EmptyCoefficients);
    CHECK(code_of([] { parse_json_text("[1, 2"); }) == ErrorCode::ParseError);
}

TEST_CASE("series serialization round trip")
{
    std::mt19937 rng(60);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = testing::random_series(rng, 1 + trial % 7);
        CHECK(parse_series(parse_json_text(to_json(s).dump())) == s);
    }
}

TEST_CASE("revert and qser")
{
    const auto r = cli({"revert", "--coeffs", R"(["0","1","-1"])", "--order", "6"});
    CHECK(r.code == 0);
    CHECK(parsed(r.out) == Json({"0", "1", "1", "2", "5", "14"}));

    // s = 1 + x gives q = t / (1 - t); s = 1 / (1 - x) gives the Catalan numbers.
    const auto q = cli({"qser", "--coeffs", R"(["1","1"])", "--order", "6"});
    CHECK(q.code == 0);
    CHECK(parsed(q.out) == Json({"0", "1", "1", "1", "1", "1"}));
    const auto cat = cli({"qser", "--coeffs", R"([1,1,1,1,1,1])", "--order", "6"});
    CHECK(parsed(cat.out) == Json({"0", "1", "1", "2", "5", "14"}));

    const auto csv = cli({"revert", "--coeffs", R"(["0","1","-1"])", "--order", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "0,0\n1,1\n2,1\n");
}

TEST_CASE("hankel, jfrac, enum, interp")
{
    const auto h = cli({"hankel", "--seq", R"([1,1,2,5,14])", "--n", "3"});
    CHECK(h.code == 0);
    CHECK(parsed(h.out) == Json({"1", "1", "1"}));

    const auto j = cli({"jfrac", "--coeffs", R"([1,1,2,5,14,42,132])", "--n", "2"});
    CHECK(j.code == 0);
    CHECK(parsed(j.out)["p"] == Json({"1", "2", "2"}));
    CHECK(parsed(j.out)["q"] == Json({"1", "1"}));

    const auto e = cli({"enum", "luka", "--n", "3"});
    CHECK(e.code == 0);
    CHECK(parsed(e.out) == Json::parse("[[1,1,0],[2,0,0]]"));

    const auto i = cli({"interp", "--coeffs", R"(["1","1"])", "--tau", "0", "--order", "4"});
    CHECK(i.code == 0);
    CHECK(parsed(i.out) == Json({"1", "-1", "1", "-1"}));
}

TEST_CASE("verify and errors")
{
    CHECK(cli({"verify", "--suite", "thm4", "--order", "8"}).code == 0);
    const auto bad_suite = cli({"verify", "--suite", "nope"});
    CHECK(bad_suite.code == 2);

    const auto malformed = cli({"revert", "--coeffs", R"(["abc"])"});
    CHECK(malformed.code == 2);
    CHECK(parsed(malformed.err)["error"] == "MalformedRational");

    const auto not_invertible = cli({"revert", "--coeffs", R"(["1","1"])"});
    CHECK(not_invertible.code == 2);

    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code != 0);
}
