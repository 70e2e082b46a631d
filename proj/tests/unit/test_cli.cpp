#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
namespace cli = hyperspec::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("gen writes a parsable document")
{
    const auto r = run({"gen", "hyperflower:c=3,p=2,k=1"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["vertices"].size() == 5);
    CHECK(doc["edges"].size() == 2);
    CHECK(run({"gen", "--family", "hyperflower:c=3,p=2,k=1"}).out == r.out);
}

TEST_CASE("spectrum, chromatic and verify on a family")
{
    const auto s = run({"spectrum", "--family", "complete:n=4"});
    REQUIRE(s.code == cli::kOk);
    CHECK(json::parse(s.out)["dimension"] == 4);
    const auto e = run({"spectrum", "--family", "hyperflower:c=3,p=4,k=2", "--which", "edge"});
    CHECK(json::parse(e.out)["eigenvalues"][0] == 1.0);

    const auto c = run({"chromatic", "--family", "hyperflower:c=9,p=3,k=2", "--mode", "d-proper", "--d", "3"});
    REQUIRE(c.code == cli::kOk);
    CHECK(json::parse(c.out)["number"] == 3);

    const auto v = run({"verify", "--family", "hyperflower:c=3,p=4,k=2", "--mode", "edge"});
    REQUIRE(v.code == cli::kOk);
    const auto doc = json::parse(v.out);
    CHECK(doc["bound"]["bound"] == 4.0);
    CHECK(doc["sharpness"]["pass"] == true);

    const auto csv = run({"verify", "--family", "complete:n=4", "--format", "csv"});
    CHECK(csv.out == "id,mode,lambda1,lambdaN_or_mu1,bound,chi,gap,sharp,status\n"
                     "complete:n=4,strong,0,1.33333333333,4,4,0,true,solved\n");
}

TEST_CASE("document input and --out")
{
    const auto doc = temp_file("hyperspec_cli_doc.json",
                               R"({"vertices": ["a", "b", "c"], "edges": [{"members": {"a": -1, "b": 1, "c": -1}}]})");
    const auto out_path = std::filesystem::temp_directory_path() / "hyperspec_cli_out.json";
    std::filesystem::remove(out_path);
    const auto r = run({"chromatic", doc.string(), "--out", out_path.string()});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    CHECK(json::parse(in)["number"] == 3);
    CHECK_FALSE(std::filesystem::exists(out_path.string() + ".tmp"));
}

TEST_CASE("exit codes")
{
    CHECK(run({"gen", "moon:x=1"}).code == cli::kSpecError);
    CHECK(run({"frobnicate"}).code == cli::kSpecError);
    CHECK(run({"chromatic", "--family", "complete:n=3", "--mode", "purple"}).code == cli::kSpecError);
    CHECK(run({"chromatic", "/nonexistent/doc.json"}).code == cli::kInputError);
    const auto bad = temp_file("hyperspec_cli_bad.json", "{not json");
    CHECK(run({"spectrum", bad.string()}).code == cli::kInputError);
    const auto isolated = temp_file("hyperspec_cli_isolated.json",
                                    R"({"vertices": ["a", "b", "c"], "edges": [{"members": {"a": -1, "b": 1}}]})");
    CHECK(run({"spectrum", isolated.string()}).code == cli::kInputError);
    CHECK(run({"chromatic", "--family", "hyperflower:c=3,p=2,k=1", "--mode", "d-improper:0"}).code
          == cli::kModeMismatch);
    CHECK(run({"verify", "--family", "hyperflower:c=3,p=2,k=1", "--mode", "d-proper:3"}).code == cli::kModeMismatch);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("batch output is deterministic across job counts")
{
    const std::vector<std::string> base{"batch", "--corpus", "random:c=3,n=6,m=4", "--count", "6", "--seed", "3",
                                        "--mode", "strong,edge,d-proper:2", "--oracle"};
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto three = base;
    three.insert(three.end(), {"--jobs", "3"});
    const auto a = run(one);
    const auto b = run(three);
    REQUIRE(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.out == run(one).out);
    CHECK(a.out.rfind("id,mode,lambda1,lambdaN_or_mu1,bound,chi,gap,sharp,status\n", 0) == 0);
    CHECK(a.err.find("violations=0") != std::string::npos);
}

TEST_CASE("batch marks inapplicable rows and accepts grids")
{
    const auto r = run({"batch", "--corpus", "grid:hyperflower:c=3..4,p=2..2,k=1..1", "--mode", "strong,d-improper:0"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("not-applicable") != std::string::npos);
    CHECK(r.err.find("instances=2") != std::string::npos);
}

TEST_CASE("empty corpus gives a header-only table")
{
    const auto r = run({"batch", "--corpus", "random:c=3,n=6,m=4", "--count", "0"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out == "id,mode,lambda1,lambdaN_or_mu1,bound,chi,gap,sharp,status\n");
}

TEST_CASE("batch json format")
{
    const auto r = run({"batch", "--corpus", "complete:n=4", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["exact"] == 4);
    CHECK(doc["summary"]["violations"] == 0);
}
