#include "waldkit/cli.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = waldkit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(WALDKIT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  return nlohmann::json::parse(in);
}

std::string data(const std::string& name) { return std::string(WALDKIT_DATA_DIR) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

} // namespace

TEST_CASE("json reports match the golden files") {
  const auto cycle = run({"alpha-hat", "family", "cycle", "5", "--json"});
  CHECK(cycle.code == 0);
  CHECK(nlohmann::json::parse(cycle.out) == golden("alpha_hat_cycle5.json"));

  const auto star = run({"containment", "family", "star", "2", "--m", "4", "--r", "4", "--json"});
  CHECK(star.code == 0);
  CHECK(nlohmann::json::parse(star.out) == golden("containment_star2_4_4.json"));

  const auto k22 = run({"decompose", "family", "multipartite", "2,2", "--json"});
  CHECK(nlohmann::json::parse(k22.out) == golden("decompose_multipartite_2_2.json"));

  const auto c7 = run({"chi-star", "family", "complement", "7", "--json"});
  CHECK(nlohmann::json::parse(c7.out) == golden("chi_star_complement7.json"));

  const auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(WALDKIT_DATA_DIR);
  const auto single = run({"alpha-hat", "single_x1.txt", "--json"});
  std::filesystem::current_path(cwd);
  CHECK(nlohmann::json::parse(single.out) == golden("alpha_hat_single_x1.json"));
}

TEST_CASE("the json schema is stable") {
  for (const auto& verb : {"alpha-hat", "chi-star", "decompose"}) {
    const auto r = run({verb, "family", "matroid", "5", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"alpha", "alpha_hat", "big_height", "chi_star", "chudnovsky_bound", "input",
                                           "primes", "results"});
    CHECK(j["alpha_hat"] == "5/2");
  }
}

TEST_CASE("human output") {
  const auto r = run({"alpha-hat", "family", "cycle", "5"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "alpha_hat: 5/3 (1.66667)"));
  const auto m = run({"alpha-hat", "family", "matroid", "5", "2"});
  CHECK(has_line(m.out, "alpha_hat: 5/2 (2.5)"));
  const auto star = run({"decompose", "family", "star", "2"});
  CHECK(has_line(star.out, "primes: 3 (big height 2)"));
  const auto single = run({"decompose", data("single_x1.txt")});
  CHECK(has_line(single.out, "prime: (x1)"));
}

TEST_CASE("containment verdicts") {
  CHECK(has_line(run({"containment", "family", "star", "2", "--m", "4", "--r", "4"}).out,
                 "I^(4) in I^4: NOT CONTAINED, witness x0^2*x1^2*x2^2"));
  CHECK(has_line(run({"containment", "family", "star", "2", "--m", "3", "--r", "2"}).out, "I^(3) in I^2: CONTAINED"));
  CHECK(has_line(run({"containment", "family", "star", "2", "--m", "1", "--r", "1"}).out, "I^(1) in I^1: CONTAINED"));
  CHECK(run({"containment", "family", "star", "2", "--m", "3"}).code == waldkit::kExitUsage);
}

TEST_CASE("other verbs") {
  const auto a = run({"alpha-symbolic", "family", "cycle", "5", "--m", "3", "--json"});
  CHECK(nlohmann::json::parse(a.out)["results"][0]["value"] == 5);
  const auto s = run({"resurgence-scan", "family", "star", "2", "--window", "8,7", "--json"});
  const auto scan = nlohmann::json::parse(s.out)["results"][0];
  CHECK(scan["alpha_ratio"] == "4/3");
  CHECK(scan["certified_lower_bound"] == "4/3");
  CHECK(scan["expected_resurgence"] == "4/3");
  CHECK(scan["lower_bound"] == "6/5");
  CHECK(run({"resurgence-scan", "family", "star", "2", "--window", "8"}).code == waldkit::kExitUsage);
}

TEST_CASE("verify suites") {
  const auto thm = run({"verify", "family", "cycle", "7", "--suite", "thm46"});
  CHECK(thm.code == 0);
  CHECK(has_line(thm.out, "PASS [chromatic] alpha_hat = chi*/(chi*-1): 7/4 vs 7/4, chi* = 7/3"));
  const auto chud = run({"verify", "family", "matroid", "5", "2", "--suite", "chudnovsky"});
  CHECK(chud.code == 0);
  CHECK(has_line(chud.out, "PASS [chudnovsky] alpha_hat >= (alpha+e-1)/e: 5/2 >= 5/2, tight"));
  const auto ratio = run({"verify", "family", "star", "3", "--suite", "alpha-ratio"});
  CHECK(ratio.code == 0);
  CHECK(ratio.out.find("alpha/alpha_hat = 6/5") != std::string::npos);
  const auto all = run({"verify", "family", "multipartite", "2,2", "--json"});
  CHECK(all.code == 0);
  const auto parsed = nlohmann::json::parse(all.out);
  for (const auto& c : parsed["results"]) CHECK(c["status"] != "fail");
  const auto split = run({"verify", data("path.txt"), "--suite", "binomial"});
  CHECK(split.out.find("SKIP [binomial]") != std::string::npos);
  CHECK(run({"verify", "family", "cycle", "5", "--suite", "nope"}).code == waldkit::kExitUsage);
}

TEST_CASE("family verb") {
  const auto list = run({"family", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("matroid") != std::string::npos);
  const auto emit = run({"family", "emit", "bipyramid", "4"});
  CHECK(emit.code == 0);
  CHECK(emit.out.find("vars x1 x2 x3 x4 y z") != std::string::npos);
  CHECK(run({"family", "emit", "cycle", "2"}).code == waldkit::kExitUsage);
}

TEST_CASE("exit codes") {
  const auto bad = run({"alpha-hat", data("bad.txt")});
  CHECK(bad.code == waldkit::kExitUsage);
  CHECK(bad.err.find("line 4, column 4") != std::string::npos);
  CHECK(run({"alpha-hat", data("missing.txt")}).code == waldkit::kExitUsage);
  CHECK(run({"frobnicate"}).code == waldkit::kExitUsage);
  CHECK(run({}).code == waldkit::kExitUsage);
  CHECK(run({"--help"}).code == waldkit::kExitOk);
  CHECK(run({"decompose", "family", "cycle", "5", "--cap", "2"}).code == waldkit::kExitCap);
  CHECK(run({"containment", "family", "matroid", "7", "3", "--m", "4", "--r", "3", "--cap", "100"}).code ==
        waldkit::kExitCap);

  ::setenv("WALDKIT_CAP", "3", 1);
  CHECK(run({"decompose", "family", "cycle", "5"}).code == waldkit::kExitCap);
  CHECK(run({"decompose", "family", "cycle", "5", "--cap", "10"}).code == waldkit::kExitOk);
  ::setenv("WALDKIT_CAP", "lots", 1);
  CHECK(run({"decompose", "family", "cycle", "5"}).code == waldkit::kExitUsage);
  ::unsetenv("WALDKIT_CAP");
}
