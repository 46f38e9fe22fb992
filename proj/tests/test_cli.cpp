#include <sstream>

#include "doctest.h"
#include "fibtl/cli.hpp"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fibtl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool is_json(const std::string& text) { return nlohmann::json::accept(text); }

}  // namespace

TEST_CASE("bracket examples") {
  auto r = run({"bracket", "--strands", "2", "--word", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1*A^3\n");
  r = run({"bracket", "--strands", "2", "--word", "1 1 1", "--normalized"});
  CHECK(r.out == "1*A^-4 + 1*A^-12 + -1*A^-16\n");
  r = run({"bracket", "--strands", "1", "--word", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run({"bracket", "--strands", "2", "--word", "1 1 1", "--oracle"});
  CHECK(r.out == "-1*A^5 + -1*A^-3 + 1*A^-7\n");
  r = run({"bracket", "--strands", "3", "--word", "1 -2 1 -2", "--both"});
  CHECK(r.code == 0);
  CHECK(r.out == "1*A^8 + -1*A^4 + 1 + -1*A^-4 + 1*A^-8\nagree: true\n");
}

TEST_CASE("jones examples") {
  CHECK(run({"jones", "--strands", "2", "--word", "1 1 1"}).out == "1*t^1 + 1*t^3 + -1*t^4\n");
  CHECK(run({"jones", "--strands", "1", "--word", ""}).out == "1\n");
  CHECK(run({"jones", "--strands", "2", "--word", "-1 -1 -1"}).out == "1*t^-1 + 1*t^-3 + -1*t^-4\n");
  CHECK(run({"jones", "--strands", "2", "--word", "1 1", "--both"}).out ==
        "-1*t^(1/2) + -1*t^(5/2)\nagree: true\n");
}

TEST_CASE("verify examples") {
  auto r = run({"verify", "--module", "tl", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "--module", "fib", "--n", "6", "--tol", "1e-10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "--module", "fib", "--n", "4", "--delta", "2.0"});
  CHECK(r.code == 1);
  CHECK(r.out.find("U_i U_{i+-1} U_i = U_i") != std::string::npos);
  CHECK(run({"fib-verify", "--n", "3", "--delta-sign", "-"}).code == 0);
  CHECK(run({"fib-verify", "--n", "2", "--literal-right-end"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"bracket", "--word", "1"}).code == 2);
  auto r = run({"bracket", "--strands", "2", "--word", "1 2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("'2'") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"bracket", "--strands", "2", "--word", "1 x"}).code == 2);
  CHECK(run({"verify", "--module", "tl", "--n", "9"}).code == 2);
  CHECK(run({"verify", "--module", "xyz", "--n", "3"}).code == 2);
  CHECK(run({"verify", "--module", "fib", "--n", "13"}).code == 2);
  CHECK(run({"fib-verify", "--n", "3", "--delta", "0.5"}).code == 2);
  CHECK(run({"fib-verify", "--n", "3", "--delta", "2", "--delta-sign", "-"}).code == 2);
  CHECK(run({"fib-matrix", "--n", "2", "--gen", "4"}).code == 2);
  CHECK(run({"fib-matrix", "--n", "2", "--gen", "-1"}).code == 2);
  CHECK(run({"eval", "--strands", "2", "--word", "1", "--phase", "abc"}).code == 2);
  CHECK(run({"dims", "--max", "0"}).code == 2);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bracket") != std::string::npos);
}

TEST_CASE("state-sum cap through the CLI") {
  std::string word;
  for (int k = 0; k < 25; ++k) word += "1 ";
  CHECK(run({"bracket", "--strands", "2", "--word", word, "--oracle"}).code == 2);
  CHECK(run({"bracket", "--strands", "2", "--word", word}).code == 0);
}

TEST_CASE("fib-matrix and dims") {
  auto r = run({"fib-matrix", "--n", "1", "--gen", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "# basis: P *\n1.0000000000 0.7861513778\n0.7861513778 0.6180339887\n");
  r = run({"fib-matrix", "--n", "1", "--gen", "-1", "--braid"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# basis: P *\n", 0) == 0);
  r = run({"dims", "--max", "5"});
  CHECK(r.out == "# n dim\n1 2\n2 3\n3 5\n4 8\n5 13\n");
}

TEST_CASE("eval") {
  auto r = run({"eval", "--strands", "2", "--word", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "1.618033988750+0.000000000000i\n");
  CHECK(fibtl::cli::parse_phase("3pi/5") == doctest::Approx(3 * 3.141592653589793 / 5));
  CHECK(fibtl::cli::parse_phase("-pi/4") == doctest::Approx(-3.141592653589793 / 4));
  CHECK(fibtl::cli::parse_phase("2*pi") == doctest::Approx(2 * 3.141592653589793));
  CHECK(fibtl::cli::parse_phase("0.5") == 0.5);
  CHECK_THROWS(fibtl::cli::parse_phase("pi/0"));
}

TEST_CASE("JSON only with --json") {
  const std::vector<std::vector<std::string>> commands{
      {"bracket", "--strands", "2", "--word", "1 1 1", "--both"},
      {"jones", "--strands", "2", "--word", "1 1 1"},
      {"eval", "--strands", "2", "--word", "1 1 1"},
      {"verify", "--module", "tl", "--n", "3"},
      {"fib-verify", "--n", "3"},
      {"fib-matrix", "--n", "2", "--gen", "2"},
      {"dims", "--max", "10"},
  };
  for (auto cmd : commands) {
    CHECK_FALSE(is_json(run(cmd).out));
    cmd.push_back("--json");
    CHECK(is_json(run(cmd).out));
  }
  const auto j = nlohmann::json::parse(run({"bracket", "--strands", "2", "--word", "1", "--json"}).out);
  CHECK(j.at("text") == "-1*A^3");
  CHECK(j.at("polynomial") == nlohmann::json::parse(R"([[3,"-1"]])"));
  const auto v = nlohmann::json::parse(run({"verify", "--module", "tl", "--n", "3", "--json"}).out);
  CHECK(v.at("all_pass") == true);
}

TEST_CASE("identical inputs give byte-identical output") {
  const std::vector<std::vector<std::string>> commands{
      {"bracket", "--strands", "2", "--word", "1"},
      {"bracket", "--strands", "2", "--word", "1 1 1", "--normalized"},
      {"bracket", "--strands", "1", "--word", ""},
      {"bracket", "--strands", "4", "--word", "1 -2 3 1 2 -3 -1 2 1 3 -2 1 2 3 1 -2 -3", "--oracle", "--json"},
      {"jones", "--strands", "2", "--word", "1 1 1"},
      {"jones", "--strands", "2", "--word", "-1 -1 -1"},
      {"verify", "--module", "tl", "--n", "4"},
      {"verify", "--module", "fib", "--n", "6", "--tol", "1e-10"},
      {"verify", "--module", "fib", "--n", "4", "--delta", "2.0"},
      {"fib-matrix", "--n", "3", "--gen", "2", "--braid", "--json"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
