#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = shapeforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("structure commands") {
  auto r = call({"abstract", "--level", "pi", "--in", "...((((...)..((...))))..)"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[][]]\n");
  CHECK(r.err.empty());

  r = call({"abstract", "--level", "pi-prime", "--in", "...((((...)..((...))))..)"});
  CHECK(r.out == "_[[[_]_[_]]_]\n");

  r = call({"validate", "--in", "(..)", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "shapeforge/1");
  CHECK(j["base_pairs"] == 1);

  r = call({"analyze", "--in", "((...))..((...))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hairpins 2\n") != std::string::npos);
  CHECK(r.out.find("pi [][]\n") != std::string::npos);

  const std::string path = "test_cli_input.txt";
  {
    std::ofstream f(path);
    f << "((...))\n";
  }
  r = call({"abstract", "--level", "island", "--file", path});
  CHECK(r.out == "((_))\n");
  std::remove(path.c_str());
}

TEST_CASE("bijection commands") {
  auto r = call({"bijection", "encode2", "--path", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "()\n");
  CHECK(call({"bijection", "encode2", "--path", "UBURDD"}).out == "(()((())()()))\n");
  CHECK(call({"bijection", "decode2", "--in", "(()((())()()))"}).out == "UBURDD\n");
  CHECK(call({"bijection", "encode1", "--path", "UHD"}).code == 0);
  r = call({"bijection", "decode1", "--in", "[[]]"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("DirectlyNested") != std::string::npos);
}

TEST_CASE("table commands") {
  auto r = call({"distribution", "level0", "--n", "100", "--r0-max", "8", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 10);
  CHECK(r.out.rfind("r0,exact,asymptotic,deviation\n", 0) == 0);
  CHECK(call({"distribution", "level0", "--n", "100", "--r0-max", "8", "--format", "csv"}).out == r.out);

  r = call({"count", "motzkin", "--n", "5", "--format", "csv"});
  CHECK(r.out == "n,count\n0,1\n1,1\n2,2\n3,4\n4,9\n5,21\n");
  r = call({"count", "motzkin_series", "--order", "5", "--format", "csv"});
  CHECK(r.out == "n,count\n0,1\n1,1\n2,2\n3,4\n4,9\n5,21\n");

  r = call({"count", "catalan", "--n", "30", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][30][1] == "3814986502092304");

  r = call({"compatible", "--lambda", "4", "--nu", "20", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 22);

  r = call({"asymptotics", "singularity", "--lambda", "4", "--format", "json"});
  const auto s = nlohmann::json::parse(r.out);
  CHECK(s["zeta"].get<double>() == doctest::Approx(0.7563).epsilon(1e-4));

  r = call({"asymptotics", "motzkin_number", "--n", "400", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ratio"].get<double>() == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("verify") {
  auto r = call({"verify", "touchard", "--hi", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("touchard 1 8 - 8 pass -") != std::string::npos);

  r = call({"verify", "pi_parity", "--lambda", "4", "--hi", "10", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["passed"] == false);
  CHECK(r.err.find("VerificationFailed") != std::string::npos);
}

TEST_CASE("errors and exit codes") {
  auto r = call({});
  CHECK(r.code == 2);
  r = call({"count", "motzkin", "--bogus", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
  r = call({"distribution", "level0", "--format", "xml"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--format") != std::string::npos);
  r = call({"count", "level0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--n") != std::string::npos);

  r = call({"validate", "--in", "(())"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err == "error: AdjacentPair: pair (2,3) joins adjacent vertices\n");

  r = call({"count", "catalan", "--n", "5000"});
  CHECK(r.code == 1);
  CHECK(r.err.find("2000") != std::string::npos);
  r = call({"validate", "--file", "/nonexistent/structure.txt"});
  CHECK(r.code == 1);

  r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("distribution") != std::string::npos);
}
