#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace kudla::cli;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    cells.push_back(cur);
    return cells;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const std::vector<std::string> kGeneric = {"--z1", "0.3+1.1i", "--z2", "0.2+0.4i", "--z3", "0.1+0.5i"};

std::vector<std::string> green_args(std::vector<std::string> tail) {
    std::vector<std::string> a = {"green"};
    a.insert(a.end(), kGeneric.begin(), kGeneric.end());
    a.insert(a.end(), tail.begin(), tail.end());
    return a;
}
}  // namespace

TEST_CASE("parse_complex") {
    CHECK(parse_complex("1+2i") == std::complex<double>(1, 2));
    CHECK(parse_complex("0.5-1.5i") == std::complex<double>(0.5, -1.5));
    CHECK(parse_complex("i") == std::complex<double>(0, 1));
    CHECK(parse_complex("-i") == std::complex<double>(0, -1));
    CHECK(parse_complex("2i") == std::complex<double>(0, 2));
    CHECK(parse_complex("-3") == std::complex<double>(-3, 0));
    CHECK(parse_complex("1e-2+1e1i") == std::complex<double>(0.01, 10));
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+2j"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
}

TEST_CASE("coeff table") {
    const Run r = run({"coeff", "--gamma", "0", "--m-from", "1", "--m-to", "3", "--format", "csv"});
    REQUIRE(r.code == kOk);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(split_csv_line(rows[0]) == std::vector<std::string>{"gamma", "m", "D0", "f", "H", "C", "deg"});
    const auto one = split_csv_line(rows[1]);
    CHECK(one[1] == "1");
    CHECK(one[4] == "-7/12");
    CHECK(one[5] == "-140");
    CHECK(one[6] == "7/144");
    CHECK(r.out.find("\r\n") != std::string::npos);

    const Run q = run({"coeff", "--gamma", "1", "--m-from", "5/4", "--m-to", "5/4", "--format", "csv"});
    REQUIRE(q.code == kOk);
    const auto qrow = split_csv_line(lines_of(q.out)[1]);
    CHECK(qrow[4] == "-2/5");
    CHECK(qrow[6] == "1/30");

    // A range with no admissible m is a header-only table; a reversed range is a usage error.
    const Run empty = run({"coeff", "--gamma", "1", "--m-from", "1", "--m-to", "1", "--format", "csv"});
    CHECK(empty.code == kOk);
    CHECK(lines_of(empty.out).size() == 1);
    const Run reversed = run({"coeff", "--gamma", "0", "--m-from", "3", "--m-to", "2"});
    CHECK(reversed.code == kUsage);
    CHECK(reversed.out.empty());
    CHECK(run({"coeff", "--gamma", "2", "--m-from", "1", "--m-to", "2"}).code == kUsage);
    CHECK(run({"bogus"}).code == kUsage);
}

TEST_CASE("csv and json carry the same numbers, deterministically") {
    const std::vector<std::string> base = {"coeff", "--gamma", "0", "--m-from", "1", "--m-to", "6", "--format"};
    auto a = base, b = base;
    a.push_back("csv");
    b.push_back("json");
    const Run csv = run(a), js = run(b);
    REQUIRE(csv.code == kOk);
    REQUIRE(js.code == kOk);
    CHECK(run(a).out == csv.out);
    CHECK(run(b).out == js.out);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "coeff");
    const auto rows = lines_of(csv.out);
    REQUIRE(doc["rows"].size() + 1 == rows.size());
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        const auto cells = split_csv_line(rows[i + 1]);
        const auto& j = doc["rows"][i];
        CHECK(j["H"].get<std::string>() == cells[4]);
        CHECK(j["deg"].get<std::string>() == cells[6]);
        CHECK(format_double(j["C"].get<double>()) == cells[5]);
    }

    const Run gc = run(green_args({"--m", "1", "--v", "1", "--radius", "10", "--format", "csv"}));
    const Run gj = run(green_args({"--m", "1", "--v", "1", "--radius", "10", "--format", "json"}));
    REQUIRE(gc.code == kOk);
    REQUIRE(gj.code == kOk);
    const auto gdoc = nlohmann::json::parse(gj.out);
    const auto head = split_csv_line(lines_of(gc.out)[0]);
    const auto vals = split_csv_line(lines_of(gc.out)[1]);
    CHECK(head[0] == "value");
    CHECK(format_double(gdoc["rows"][0]["value"].get<double>()) == vals[0]);
}

TEST_CASE("green exit codes") {
    const Run ok = run(green_args({"--m", "1", "--v", "1", "--radius", "20"}));
    CHECK(ok.code == kOk);
    CHECK(ok.out.find("tail_bound") != std::string::npos);
    CHECK(run({"green", "--z1", "i", "--z2", "2i", "--z3", "i", "--m", "1"}).code == kOutsideHalfSpace);
    CHECK(run({"green", "--z1", "i", "--z2", "0", "--z3", "i", "--m", "1"}).code == kSingularPoint);
    CHECK(run(green_args({"--m", "1", "--v", "-1"})).code == kUsage);
    CHECK(run({"green", "--z1", "1+xi", "--z2", "0", "--z3", "i", "--m", "1"}).code == kUsage);
}

TEST_CASE("verify") {
    const Run one = run({"verify", "--only", "divisor_sum"});
    CHECK(one.code == kOk);
    CHECK(one.out.rfind("PASS", 0) == 0);
    CHECK(one.out.find("diff=0 ") != std::string::npos);
    const Run js = run({"verify", "--only", "cohen_dual", "--format", "json"});
    CHECK(js.code == kOk);
    CHECK(nlohmann::json::parse(js.out)["checks"][0]["status"] == "PASS");
    CHECK(run({"verify", "--only", "i3_reduction", "--tol", "1e-15"}).code == kVerificationFailed);
    CHECK(run({"verify", "--only", "nonexistent"}).code == kUsage);
}

TEST_CASE("--output writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "kudla_cli_test.csv";
    std::filesystem::remove(path);
    const Run r = run({"--output", path.string(), "coeff", "--gamma", "0", "--m-from", "1", "--m-to", "1", "--format", "csv"});
    CHECK(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("7/144") != std::string::npos);
    std::filesystem::remove(path);
}
