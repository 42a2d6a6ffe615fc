#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pentparity/cli.hpp"
#include "pentparity/factor.hpp"
#include "pentparity/intpoly.hpp"
#include "pentparity/search.hpp"
#include "pentparity/swan.hpp"

using namespace pentparity;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pentparity_test_" + name);
}

}  // namespace

TEST_CASE("test subcommand") {
  const Result r = run({"test", "--poly", "7"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "irreducible, 1 factor\n");

  const Result p = run({"test", "--n", "11", "--s", "2"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "reducible, "));

  const Result j = run({"test", "--n", "9", "--s", "2", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["irreducible"] == false);
  CHECK(doc["factors"].get<long>() == factor_count(pent_poly(PentShape::create(9, 2))).total);
  CHECK(doc["parity"] == "odd");

  const Result sq = run({"test", "--poly", "15"});
  CHECK(contains(sq.out, "not squarefree"));
}

TEST_CASE("predict subcommand") {
  const Result r = run({"predict", "--n", "11", "--s", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "reducible (even s, n ≢ ±1 mod 8: 11 ≡ 3 mod 8)"));

  const Result odd = run({"predict", "--n", "9", "--s", "2"});
  CHECK(contains(odd.out, "no certificate"));
  CHECK(contains(odd.out, "inconclusive"));

  const Result t = run({"predict", "--n", "9", "--k", "3"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "reciprocal X^9+X^6+1"));

  const Result tj = run({"predict", "--n", "8", "--k", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(tj.out);
  CHECK(doc["parity"] == "even");
  CHECK(doc["certified_reducible"] == true);

  CHECK(contains(run({"predict", "--n", "13", "--s", "3"}).out, "no closed-form verdict"));
}

TEST_CASE("disc subcommand") {
  const Result r = run({"disc", "--n", "7", "--s", "2", "--oracle", "both"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "closed form: 1\n"));
  CHECK(contains(r.out, "resultant: 1\n"));
  CHECK(contains(r.out, "agree\n"));

  const Result res = run({"disc", "--poly", "7", "--oracle", "resultant", "--format", "json"});
  REQUIRE(res.code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["resultant"].get<int>() == discriminant_mod8(IntPoly::from_dense({1, 1, 1})));

  CHECK(run({"disc", "--n", "10", "--s", "2"}).code == cli::kExitUsage);
  CHECK(run({"disc", "--poly", "7", "--oracle", "closed"}).code == cli::kExitUsage);
}

TEST_CASE("powersums subcommand matches the library") {
  const Result r = run({"powersums", "--n", "13", "--s", "2", "--upto", "20", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const PowerSumTable t = power_sums(lift(pent_poly(PentShape::create(13, 2))), 20);
  REQUIRE(doc["S"].size() == 21);
  for (int m = 0; m <= 20; ++m) CHECK(doc["S"][m].get<std::string>() == t[m].get_str());

  const Result m = run({"powersums", "--poly", "7", "--upto", "4", "--mod", "2^2", "--format", "csv"});
  CHECK(m.out == "m,S_m\n0,2\n1,3\n2,3\n3,2\n4,3\n");
  CHECK(run({"powersums", "--poly", "7", "--mod", "3^2"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors exit 1 with a one-line diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"test", "--bogus"},
           {"test", "--poly", "7g"},
           {"test", "--poly", "70"},
           {"test", "--n", "7", "--s", "3"},
           {"test", "--n", "7"},
           {"test", "--poly", "7", "--n", "7", "--s", "2"},
           {"predict", "--n", "7", "--s", "2", "--format", "csv"},
           {"search", "--n-min", "3"},
           {"search", "--s-parity", "maybe"},
           {"stats", "--in", "/nonexistent/file.csv"},
       }) {
    CAPTURE(args.empty() ? std::string("<none>") : args[0]);
    const Result r = run(args);
    CHECK(r.code == cli::kExitUsage);
    CHECK(lines(r.err) == 1);
    CHECK(r.out.empty());
  }
}

TEST_CASE("help exits 0") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "search"));
}

TEST_CASE("search, stats and resume") {
  const auto path = temp_file("search.csv");
  std::filesystem::remove(path);
  const Result s = run({"search", "--n-min", "7", "--n-max", "120", "--out", path.string(), "--jobs", "2"});
  REQUIRE(s.code == 0);
  std::string full;
  {
    std::ifstream in(path);
    full.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  // Stdout variant carries the same rows.
  const Result so = run({"search", "--n-min", "7", "--n-max", "120"});
  std::istringstream a(full), b(so.out);
  const auto ra = read_csv(a), rb = read_csv(b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) CHECK(ra[i].outcome == rb[i].outcome);

  // Truncate mid-line and resume.
  {
    std::ofstream out(path, std::ios::trunc);
    out << full.substr(0, full.size() / 2);
  }
  const Result r = run({"search", "--n-min", "7", "--n-max", "120", "--out", path.string(), "--resume"});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  const auto resumed = read_csv(in);
  REQUIRE(resumed.size() == ra.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    CHECK(resumed[i].n == ra[i].n);
    CHECK(resumed[i].s == ra[i].s);
    CHECK(resumed[i].outcome == ra[i].outcome);
  }

  const Result st = run({"stats", "--in", path.string(), "--format", "json"});
  REQUIRE(st.code == 0);
  const auto doc = nlohmann::json::parse(st.out);
  CHECK(doc["total_checked"].get<std::uint64_t>() == ra.size());
  CHECK(doc["total_irreducible"].get<std::uint64_t>() == stats(ra).total_irreducible);
  CHECK(contains(run({"stats", "--in", path.string()}).out, "irreducible: "));

  const Result jl = run({"search", "--n-min", "7", "--n-max", "20", "--format", "json"});
  CHECK(nlohmann::json::parse(jl.out.substr(0, jl.out.find('\n')))["outcome"] == "irr");
  std::filesystem::remove(path);
}

TEST_CASE("search exits 2 on a certificate contradiction in its input") {
  // stats is a pure reader; the contradiction check lives in search, so plant a
  // violating row in a file and resume over it.
  const auto path = temp_file("violation.csv");
  {
    std::ofstream out(path, std::ios::trunc);
    out << "n,s,outcome,elapsed_us\n7,2,irr,1\n9,2,red_full,1\n11,2,irr,1\n";
  }
  const Result r = run({"search", "--n-min", "7", "--n-max", "14", "--out", path.string(), "--resume"});
  CHECK(r.code == cli::kExitInvariant);
  CHECK(contains(r.err, "(11,2)"));
  std::filesystem::remove(path);
}

TEST_CASE("verify with small bounds") {
  const Result r = run({"verify", "--n-max", "60", "--trinomial-n-max", "40", "--disc-n-max", "25",
                        "--powersum-n-max", "40", "--powersum-t-n-max", "30", "--samples", "20"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 7);
  CHECK_FALSE(contains(r.out, "[FAIL]"));
}

TEST_CASE("identical inputs give identical output") {
  const std::vector<std::string> args{"powersums", "--n", "31", "--s", "6", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> v{"verify", "--n-max", "40", "--samples", "10", "--format", "json"};
  CHECK(run(v).out == run(v).out);
}
