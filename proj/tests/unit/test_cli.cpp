#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "hexile/oracle.hpp"

using namespace hexile;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hexile");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("classify") {
    auto r = run_cli({"classify", "35"});
    CHECK(r.code == 0);
    CHECK(r.out == "35: class 5, level 5, composite via 7 x 5 (c15 m=1 n=0)\n");

    r = run_cli({"classify", "37", "--format", "jsonl"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["class"] == 1);
    CHECK(j["level"] == 6);
    CHECK(j["kind"] == "prime");
    CHECK(j["solutions"].empty());

    r = run_cli({"classify", "6", "--format", "csv"});
    CHECK(r.out == "x,class,level,kind,solutions\n6,0,1,even_composite,\n");

    r = run_cli({"classify", "0"});
    CHECK(r.code == cli::exit_code::kUsage);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("factor") {
    CHECK(run_cli({"factor", "91"}).out == "91 = 7 x 13 (c11 m=1 n=2)\n");
    CHECK(run_cli({"factor", "325"}).out == "325 = 13 x 25 (c11 m=2 n=4)\n325 = 5 x 65 (c55 m=0 n=10)\n");
    CHECK(run_cli({"factor", "49"}).out == "49 = 7 x 7 (c11 m=1 n=1)\n");
    CHECK(run_cli({"factor", "37"}).out == "37: prime\n");
    CHECK(run_cli({"factor", "0"}).code == cli::exit_code::kUsage);

    const auto csv = lines(run_cli({"factor", "325", "--format", "csv"}).out);
    REQUIRE(csv.size() == 3);
    CHECK(csv[0] == "x,verdict,kind,m,n,p,q");
    CHECK(csv[1] == "325,composite,c11,2,4,13,25");
    CHECK(csv[2] == "325,composite,c55,0,10,5,65");

    const auto j = nlohmann::json::parse(run_cli({"factor", "325", "--format", "jsonl"}).out);
    REQUIRE(j["solutions"].size() == 2);
    CHECK(j["solutions"][1]["p"] == 5);
    CHECK(j["solutions"][1]["q"] == 65);
}

TEST_CASE("table reproduces the golden transcriptions") {
    const std::string data = HEXILE_TEST_DATA_DIR;
    CHECK(run_cli({"table", "c11", "8", "8", "--format", "csv"}).out == read_file(data + "/paper_table3_c11.csv"));
    CHECK(run_cli({"table", "c15", "8", "8", "--format", "csv"}).out == read_file(data + "/paper_table6_c15.csv"));

    const auto c55 = lines(run_cli({"table", "c55", "7", "7", "--format", "csv"}).out);
    REQUIRE(c55.size() == 8);
    CHECK(c55[0] == "n\\m,0,1,2,3,4,5,6");
    CHECK(c55[1] == "0,4,9,14,19,24,29,34");
    CHECK(c55[3].rfind("2,14,31,48,", 0) == 0);

    const auto text = lines(run_cli({"table", "c11", "2", "3"}).out);
    REQUIRE(text.size() == 4);
    CHECK(text[0] == "c11");
    CHECK(text[1] == " n\\m   1   2   3");
    CHECK(text[2] == "   1   8  15  22");
    CHECK(text[3] == "   2  15  28  41");

    const auto jl = lines(run_cli({"table", "c15", "2", "2", "--format", "jsonl"}).out);
    REQUIRE(jl.size() == 4);
    CHECK(nlohmann::json::parse(jl[1])["value"] == 23); // m = 2, n = 1

    CHECK(run_cli({"table", "c13", "2", "2"}).code == cli::exit_code::kUsage);
    CHECK(run_cli({"table", "c11", "0", "2"}).code == cli::exit_code::kUsage);
    CHECK(run_cli({"table", "c11", "2", "2", "--start-m", "0"}).code == cli::exit_code::kUsage);
}

TEST_CASE("sieve formats carry the same numbers") {
    const auto text = lines(run_cli({"sieve", "100"}).out);
    CHECK(text.size() == 25);
    CHECK(run_cli({"sieve", "10"}).out == "2\n3\n5\n7\n");
    const auto csv = lines(run_cli({"sieve", "100", "--format", "csv"}).out);
    REQUIRE(csv.size() == 26);
    CHECK(csv[0] == "prime");
    const auto jl = lines(run_cli({"sieve", "100", "--format", "jsonl"}).out);
    REQUIRE(jl.size() == 25);
    for (std::size_t i = 0; i < text.size(); ++i) {
        CHECK(csv[i + 1] == text[i]);
        CHECK(std::to_string(nlohmann::json::parse(jl[i])["prime"].get<std::uint64_t>()) == text[i]);
    }
    CHECK(run_cli({"sieve", "--limit", "100", "--segment-levels", "3", "--workers", "2"}).out ==
          run_cli({"sieve", "100"}).out);
    CHECK(run_cli({"sieve"}).code == cli::exit_code::kUsage);
    CHECK(run_cli({"sieve", "100", "--segment-levels", "0"}).code == cli::exit_code::kUsage);
    CHECK(run_cli({"sieve", "100", "--workers", "0"}).code == cli::exit_code::kUsage);
    CHECK(run_cli({"sieve", "100", "--format", "xml"}).code == cli::exit_code::kUsage);
}

TEST_CASE("sieve to file") {
    const auto path = (std::filesystem::temp_directory_path() / "hexile_sieve_test.txt").string();
    CHECK(run_cli({"sieve", "30", "-o", path}).code == 0);
    CHECK(read_file(path) == "2\n3\n5\n7\n11\n13\n17\n19\n23\n29\n");
    std::filesystem::remove(path);
}

TEST_CASE("sieve reports capacity errors") {
    const auto r = run_cli({"sieve", "100000000", "--memory-budget", "1KiB"});
    CHECK(r.code == cli::exit_code::kCapacity);
    CHECK(run_cli({"count", "1000000", "--memory-budget", "100"}).code == cli::exit_code::kCapacity);
}

TEST_CASE("count") {
    auto r = run_cli({"count", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi: 25\n") != std::string::npos);
    CHECK(run_cli({"count", "5"}).out.find("pi: 3\n") != std::string::npos);

    const auto csv = lines(run_cli({"count", "1000000", "--format", "csv"}).out);
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] ==
          "x,Q,tuples_c11,tuples_c55,tuples_c15,diag_c11,diag_c55,distinct_h1,distinct_h5,overlap_h1,"
          "h1_elements,h5_elements,pi,two_q,naive_pi");
    const auto j = nlohmann::ordered_json::parse(run_cli({"count", "1000000", "--format", "jsonl"}).out);
    CHECK(j["pi"] == 78498);

    // Same numbers in both encodings.
    std::vector<std::string> values;
    std::istringstream row(csv[1]);
    for (std::string v; std::getline(row, v, ',');) values.push_back(v);
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
        CHECK(value.dump() == values.at(i++));
    }
    CHECK(run_cli({"count", "0"}).code == cli::exit_code::kUsage);
}

TEST_CASE("environment overrides") {
    ::setenv("HEXILE_FORMAT", "jsonl", 1);
    ::setenv("HEXILE_LIMIT", "10", 1);
    const auto r = run_cli({"sieve"});
    ::unsetenv("HEXILE_FORMAT");
    ::unsetenv("HEXILE_LIMIT");
    CHECK(r.out == "{\"prime\":2}\n{\"prime\":3}\n{\"prime\":5}\n{\"prime\":7}\n");
}

TEST_CASE("verify passes and catches an injected fault") {
    auto r = run_cli({"verify", "100000"});
    CHECK(r.code == cli::exit_code::kOk);
    CHECK(lines(r.out).back() == "PASS");
    CHECK(run_cli({"verify", "10"}).code == cli::exit_code::kOk);
    CHECK(run_cli({"verify", "100000", "--segment-levels", "777", "--workers", "3"}).code == cli::exit_code::kOk);

    // Level 8 of class 1 is 49: flipping it inserts a composite.
    r = run_cli({"verify", "1000", "--inject-fault-level", "8"});
    CHECK(r.code == cli::exit_code::kMismatch);
    CHECK(r.out.find("first diverging integer 49") != std::string::npos);

    // Level 10 of class 1 is 61: flipping it drops a prime.
    cli::CliConfig config;
    const auto report = cli::verify(1000, config, {10});
    CHECK_FALSE(report.sieve_ok);
    CHECK(report.first_divergence == 61);
    CHECK(report.count_ok);

    CHECK(run_cli({"verify", "1"}).code == cli::exit_code::kUsage);
    const auto j = nlohmann::json::parse(run_cli({"verify", "1000", "--format", "jsonl"}).out);
    CHECK(j["result"] == "PASS");
    CHECK(j["first_divergence"] == "none");
}

TEST_CASE("count checkpoints") {
    const auto points = cli::count_checkpoints(1000);
    CHECK(points.front() == 1);
    CHECK(points.back() == 1000);
    CHECK(std::is_sorted(points.begin(), points.end()));
    CHECK(std::find(points.begin(), points.end(), 100) != points.end());
}

TEST_CASE("bench emits one record per stage") {
    const auto r = run_cli({"bench", "10000"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 5);
    CHECK(l[0] == "name,limit,seconds,result");
    CHECK(l[1].rfind("sieve_monolithic,10000,", 0) == 0);
    CHECK(l[1].substr(l[1].rfind(',') + 1) == "1229");
    CHECK(l[3].substr(l[3].rfind(',') + 1) == "1229");
}

TEST_CASE("usage") {
    CHECK(run_cli({}).code == cli::exit_code::kUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::exit_code::kUsage);
    CHECK(run_cli({"--help"}).code == cli::exit_code::kOk);
}
