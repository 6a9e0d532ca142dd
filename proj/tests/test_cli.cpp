#include "fixtures.hpp"

#include <quandlekit/cli.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

auto run(std::vector<std::string> args) -> Run
{
    std::ostringstream out, err;
    int code = quandlekit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

auto scratch(const std::string & name) -> std::filesystem::path
{
    auto dir = std::filesystem::temp_directory_path() / "quandlekit_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

auto slurp(const std::filesystem::path & p) -> std::string
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}

TEST_CASE("profile arguments")
{
    using quandlekit::cli::parse_profile_argument;
    CHECK(parse_profile_argument("1,2,6") == std::vector<std::uint64_t>{1, 2, 6});
    CHECK(parse_profile_argument(" 1, 6 ,42") == std::vector<std::uint64_t>{1, 6, 42});
    CHECK(parse_profile_argument("1,2,2") == std::vector<std::uint64_t>{1, 2, 2});
    CHECK_FALSE(parse_profile_argument(""));
    CHECK_FALSE(parse_profile_argument("1,,2"));
    CHECK_FALSE(parse_profile_argument("1,6,3"));
    CHECK_FALSE(parse_profile_argument("0,1"));
    CHECK_FALSE(parse_profile_argument("1,a"));
}

TEST_CASE("validate")
{
    auto ok = run({"validate", fixture_path("q94.qdl")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("order 9") != std::string::npos);

    auto bad = run({"validate", fixture_path("q94_corrupted.qdl")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("IdempotencyViolation") != std::string::npos);

    auto bad_json = run({"validate", "--json", fixture_path("q94_corrupted.qdl")});
    CHECK(bad_json.code == 1);
    auto doc = json::parse(bad_json.out);
    CHECK(doc["schema"] == "quandlekit.validation/1");
    CHECK(doc["valid"] == false);
    CHECK(doc["violation"]["kind"] == "IdempotencyViolation");
    CHECK(doc["violation"]["witness"] == json::array({1}));

    auto empty = run({"validate", fixture_path("empty.qdl")});
    CHECK(empty.code == 2);
    CHECK(empty.err.find("line 1") != std::string::npos);

    CHECK(run({"validate", fixture_path("missing.qdl")}).code == 2);
    CHECK(run({"validate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze")
{
    auto r = run({"analyze", "--json", "--verify-main-theorem", "--subquandles", fixture_path("q94.qdl")});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["schema"] == "quandlekit.analysis/1");
    CHECK(doc["order"] == 9);
    CHECK(doc["connected"] == true);
    CHECK(doc["latin"] == true);
    CHECK(doc["profile"]["text"] == "(1,2,6)");
    CHECK(doc["shq"]["params"] == json{{"ell", 2}, {"c", 3}, {"p", 3}, {"a", 1}});
    CHECK(doc["main_theorem"]["all_passed"] == true);
    CHECK(doc["subquandles"]["total"] == 13);

    SUBCASE("byte-identical and key-sorted")
    {
        auto again = run({"analyze", "--json", "--verify-main-theorem", "--subquandles", fixture_path("q94.qdl")});
        CHECK(again.out == r.out);
        CHECK(doc.dump(2) + "\n" == r.out);
    }
    SUBCASE("golden report")
    {
        auto golden = json::parse(slurp(fixture_path("q94_analysis.json")));
        golden.erase("source");
        doc.erase("source");
        CHECK(doc == golden);
    }

    auto t = json::parse(run({"analyze", "--json", fixture_path("trivial3.qdl")}).out);
    CHECK(t["connected"] == false);
    CHECK(t["shq"]["is_shq"] == false);
    CHECK(t["main_theorem"].is_null());

    CHECK(run({"analyze", fixture_path("q94_corrupted.qdl")}).code == 1);
    CHECK(run({"analyze", fixture_path("empty.qdl")}).code == 2);

    auto text = run({"analyze", "--verify-main-theorem", fixture_path("q94.qdl")});
    CHECK(text.out.find("profile: (1,2,6)") != std::string::npos);
    CHECK(text.out.find("shq: yes (l=2 c=3 p=3 a=1)") != std::string::npos);
    CHECK(text.out.find("main theorem: pass") != std::string::npos);
}

TEST_CASE("construct")
{
    auto family = run({"construct", "shq-family", "--p", "5", "--c", "3", "--out", scratch("f53.qdl").string()});
    CHECK(family.code == 0);
    CHECK(family.out.find("profile (1,4,20)") != std::string::npos);
    CHECK(family.out.find("order 25") != std::string::npos);

    auto affine = run({"construct", "affine", "--modulus", "9", "--multiplier", "2", "-o", scratch("a92.qdl").string()});
    CHECK(affine.code == 0);
    CHECK(affine.out.find("profile (1,2,6)") != std::string::npos);

    auto bad = run({"construct", "affine", "--modulus", "4", "--multiplier", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("MultiplierNotInvertible") != std::string::npos);

    auto to_stdout = run({"construct", "cyclic", "--p", "2", "--a", "2"});
    CHECK(to_stdout.code == 0);
    CHECK(to_stdout.out.find("# profile (1,3)") != std::string::npos);
    CHECK(run({"construct", "galois", "--p", "3", "--a", "2", "--multiplier", "1"}).code == 2);
    CHECK(run({"construct", "spiral"}).code == 2);

    SUBCASE("construct then analyze")
    {
        auto path = scratch("f34.qdl").string();
        REQUIRE(run({"construct", "shq-family", "--p", "3", "--c", "4", "--out", path}).code == 0);
        auto doc = json::parse(run({"analyze", "--json", path}).out);
        CHECK(doc["order"] == 27);
        CHECK(doc["profile"]["text"] == "(1,2,6,18)");
    }
}

TEST_CASE("search")
{
    auto none = run({"search", "--profile", "1,5"});
    CHECK(none.code == 0);
    CHECK(none.out.find(": 0 quandles") != std::string::npos);

    auto one = run({"search", "--profile", "1,2", "--dedup"});
    CHECK(one.out.find("1 isomorphism classes") != std::string::npos);

    auto cyclic = json::parse(run({"search", "--profile", "1,3", "--dedup", "--json"}).out);
    CHECK(cyclic["iso_class_count"] == 1);

    SUBCASE("result directory")
    {
        auto dir = scratch("search126");
        std::filesystem::remove_all(dir);
        auto r = run({"search", "--profile", "1,2,6", "--dedup", "--out", dir.string()});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("3 isomorphism classes") != std::string::npos);
        auto manifest = json::parse(slurp(dir / "manifest.json"));
        CHECK(manifest["schema"] == "quandlekit.search/1");
        CHECK(manifest["iso_class_count"] == 3);
        for (const auto & f : manifest["files"])
            CHECK(run({"validate", (dir / f.get<std::string>()).string()}).code == 0);
        CHECK_FALSE(manifest["stats"].contains("elapsed_ms"));

        auto dir4 = scratch("search126_j4");
        std::filesystem::remove_all(dir4);
        REQUIRE(run({"search", "--profile", "1,2,6", "--dedup", "--threads", "4", "--out", dir4.string()}).code == 0);
        CHECK(slurp(dir4 / "manifest.json") == slurp(dir / "manifest.json"));
        CHECK(slurp(dir4 / "result_0001.qdl") == slurp(dir / "result_0001.qdl"));
    }

    auto repeated = run({"search", "--profile", "1,2,2"});
    CHECK(repeated.code == 2);
    CHECK(repeated.err.find("RepeatedLengthsUnsupported") != std::string::npos);
    CHECK(run({"search", "--profile", "x"}).code == 2);
}

TEST_CASE("order cap from the environment")
{
    ::setenv("QUANDLEKIT_MAX_ORDER", "5", 1);
    auto capped = run({"search", "--profile", "1,5"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("SizeLimitExceeded") != std::string::npos);
    CHECK(run({"search", "--profile", "1,5", "--max-order", "6"}).code == 0);
    CHECK(run({"search", "--profile", "1,3"}).code == 0);
    CHECK(run({"analyze", "--subquandles", fixture_path("q94.qdl")}).code == 2);
    ::unsetenv("QUANDLEKIT_MAX_ORDER");
    CHECK(run({"search", "--profile", "1,5"}).code == 0);
}

TEST_CASE("admissible")
{
    auto check = [](const std::string & profile, int code, const std::string & word) {
        auto r = run({"admissible", "--profile", profile});
        INFO(profile);
        CHECK(r.code == code);
        CHECK((r.out + r.err).find(word) != std::string::npos);
    };
    check("1,5", 1, "RuledOut");
    check("1,5,10", 1, "RuledOut");
    check("1,6,12", 1, "RuledOut");
    check("1,6", 0, "NotRuledOut");
    check("1,6,42", 0, "NotRuledOut");
    check("1,2,6,18", 0, "NotRuledOut");
    check("1,2,3", 2, "NotSHQShape");
    check("1,2,2", 2, "NotSHQShape");
    check("1,2,x", 2, "cannot parse");
}
