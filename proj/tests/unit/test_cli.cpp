#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schlomilch/cli.hpp"
#include "schlomilch/report.hpp"

using namespace schlomilch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "schlomilch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Parses a report array and checks every element against the schema.
nlohmann::json reports(const Run& r) {
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  for (const auto& rep : j) CHECK_NOTHROW(validate_report_json(rep));
  return j;
}

}  // namespace

TEST_CASE("documented invocations") {
  auto r = run({"verify", "--entry", "single_param", "--set", "c=2", "--json"});
  CHECK(r.code == 0);
  auto j = reports(r);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["params"]["c"] == 2.0);

  r = run({"transform", "--f", "exp(-u)", "--a", "1", "--b", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] cs") != std::string::npos);
  CHECK(r.out.find("lhs") != std::string::npos);
  CHECK(r.out.find("rhs") != std::string::npos);
  CHECK(r.out.find("diff") != std::string::npos);

  r = run({"identity", "--name", "wz1", "--max-k", "200"});
  CHECK(r.code == 0);
}

TEST_CASE("human output names the source of catalog entries") {
  auto r = run({"verify", "--entry", "gr_3_325"});
  CHECK(r.code == 0);
  CHECK(r.out.find("source:") != std::string::npos);
  CHECK(r.out.find("3.325") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with a diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--entry", "no_such_entry"},
           {"verify", "--entry", "single_param", "--set", "c"},
           {"verify", "--entry", "single_param", "--set", "c=abc"},
           {"verify", "--entry", "single_param", "--set", "c=-1"},
           {"verify", "--entry", "single_param", "--bogus"},
           {"verify-all", "--tol", "1e-2"},
           {"verify-all", "--tol", "1e-13"},
           {"transform", "--f", "exp(-u", "--a", "1", "--b", "1"},
           {"transform", "--f", "exp(-u)*k", "--a", "1", "--b", "1"},
           {"transform", "--f", "exp(-u)", "--a", "0", "--b", "1"},
           {"identity", "--name", "nope"},
           {"dist", "--family", "rrig", "--check", "moments", "--r", "7"},
           {"dist", "--family", "cauchy", "--check", "norm"},
           {"extended", "--kind", "bad", "--alpha", "1", "--f", "exp(-u)"},
           {"sample", "--family", "rrig", "--kind", "log-expm1"},
           {"nonsense"},
           {}}) {
    auto r = run(args);
    CAPTURE(args.empty() ? std::string("<none>") : args[0]);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("fault injection: failed checks exit 1") {
  auto r = run({"transform", "--f", "exp(u)", "--a", "1", "--b", "1", "--json"});
  CHECK(r.code == 1);
  auto j = reports(r);
  CHECK(j[0]["pass"] == false);
  CHECK(j[0]["lhs"].is_null());

  r = run({"extended", "--kind", "log-expm1", "--alpha", "1", "--f", "1/(1+sqrt(u))"});
  CHECK(r.code == 1);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-all") != std::string::npos);
}

TEST_CASE("every subcommand emits valid JSON") {
  std::vector<std::vector<std::string>> report_cmds = {
      {"verify", "--entry", "master_4param", "--json"},
      {"verify-all", "--json", "--tol", "1e-7"},
      {"transform", "--f", "1/(1+u)^2", "--a", "2", "--b", "0.5", "--json"},
      {"extended", "--kind", "sinh-asinh", "--alpha", "2", "--f", "exp(-u)", "--json"},
      {"identity", "--name", "sevalues", "--json"},
      {"identity", "--name", "lemma62", "--json"},
      {"identity", "--name", "hseries", "--json"},
      {"identity", "--name", "trigbessel", "--json"},
      {"identity", "--name", "derivs", "--json"},
      {"dist", "--family", "rrig", "--b", "4", "--check", "norm", "--json"},
      {"dist", "--family", "halft", "--nu", "5", "--check", "symmetry", "--json"},
      {"dist", "--family", "subbotin", "--exponent", "2", "--check", "moments", "--json"},
      {"dist", "--family", "rrig", "--check", "asymmetry", "--json"},
      {"dist", "--family", "rrig", "--kind", "log-expm1", "--alpha", "1", "--check", "moments",
       "--json"},
  };
  for (const auto& args : report_cmds) {
    auto r = run(args);
    CAPTURE(args[0]);
    CAPTURE(args[2]);
    CHECK(r.code == 0);
    auto j = reports(r);
    CHECK_FALSE(j.empty());
    for (const auto& rep : j) CHECK(to_json(report_from_json(rep)) == rep);
  }

  auto s = run({"sample", "--family", "rrig", "--b", "1", "-n", "50", "--seed", "3", "--json"});
  CHECK(s.code == 0);
  auto xs = nlohmann::json::parse(s.out);
  CHECK(xs.is_array());
  CHECK(xs.size() == 50);
  for (const auto& x : xs) CHECK(x.is_number());

  auto l = run({"list", "--json"});
  CHECK(l.code == 0);
  auto meta = nlohmann::json::parse(l.out);
  CHECK(meta.is_array());
  CHECK(meta.size() >= 28);
}

TEST_CASE("verify-all human summary and exit code") {
  auto r = run({"verify-all", "--tol", "1e-7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("printed-value-discrepancy") != std::string::npos);
  CHECK(r.out.find(" passed") != std::string::npos);
}

TEST_CASE("sampling is deterministic in the seed") {
  auto a = run({"sample", "--b", "2", "-n", "20", "--seed", "9"});
  auto b = run({"sample", "--b", "2", "-n", "20", "--seed", "9"});
  auto c = run({"sample", "--b", "2", "-n", "20", "--seed", "10"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  std::istringstream lines(a.out);
  int count = 0;
  for (std::string line; std::getline(lines, line);) {
    CHECK(std::stod(line) > 0.0);
    ++count;
  }
  CHECK(count == 20);
  // --seed also works before the subcommand.
  auto d = run({"--seed", "9", "sample", "--b", "2", "-n", "20"});
  CHECK(d.out == a.out);
}

TEST_CASE("moments that do not exist are neutral") {
  auto r = run({"dist", "--family", "halft", "--nu", "1", "--check", "moments", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[SKIP]") != std::string::npos);
}
