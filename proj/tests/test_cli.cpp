#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "signed_index/cli.hpp"

namespace cli = signed_index::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("signed_index_test_" + name);
}

}  // namespace

TEST_CASE("spectrum of P_4 from a Prüfer sequence") {
  auto r = run({"spectrum", "--prufer", "1,2"});
  REQUIRE(r.code == cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(std::abs(j["lambda1"].get<double>() - 2.2360679774997898) <= 1e-12);
  CHECK(r.err.empty());

  auto csv = run({"spectrum", "--prufer", "1,2", "--format", "csv"});
  CHECK(csv.out.rfind("i,lambda\n1,2.23606797749979", 0) == 0);
  auto text = run({"spectrum", "--prufer", "1,2", "--format", "text"});
  CHECK(text.out.find("lambda1") != std::string::npos);
}

TEST_CASE("spectrum and balance from an edge-list file") {
  const auto path = temp_file("edges.txt");
  {
    std::ofstream f(path);
    f << "5\n0 1\n0 2\n0 3\n0 4\n";
  }
  auto s = run({"spectrum", "--edges", path.string()});
  REQUIRE(s.code == cli::kExitOk);
  CHECK(std::abs(nlohmann::json::parse(s.out)["lambda1"].get<double>() - 4.0) <= 1e-9);

  auto b = run({"balance", "--edges", path.string()});
  REQUIRE(b.code == cli::kExitOk);
  auto j = nlohmann::json::parse(b.out);
  CHECK(j["balanced"] == true);
  CHECK(j["minus_side"] == nlohmann::json::array({1, 2, 3, 4}));
  std::filesystem::remove(path);
}

TEST_CASE("balance of a path reports a negative triangle") {
  auto b = run({"balance", "--prufer", "1,2"});
  REQUIRE(b.code == cli::kExitOk);
  auto j = nlohmann::json::parse(b.out);
  CHECK(j["balanced"] == false);
  CHECK(j["negative_triangle"].size() == 3);
  CHECK_FALSE(j.contains("minus_side"));
}

TEST_CASE("verify confirms the broom") {
  auto r = run({"verify", "--n", "7", "--k", "3"});
  REQUIRE(r.code == cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["matches_broom"] == true);
  CHECK(j["classes"].size() == 3);

  auto csv = run({"verify", "--n", "7", "--k", "3", "--format", "csv"});
  CHECK(csv.code == cli::kExitOk);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);
  auto text = run({"verify", "--n", "7", "--k", "3", "--format", "text"});
  CHECK(text.out.find("argmax matches broom: yes") != std::string::npos);
}

TEST_CASE("sweep, chain, enumerate") {
  auto s = run({"sweep", "--n-min", "6", "--n-max", "8"});
  REQUIRE(s.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(s.out)["rows"].size() == 4 + 5 + 6);

  auto c = run({"chain", "--n", "7"});
  REQUIRE(c.code == cli::kExitOk);
  auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["strictly_increasing"] == true);

  auto e = run({"enumerate", "--n", "8"});
  REQUIRE(e.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(e.out)["count"] == 23);
  auto ek = run({"enumerate", "--n", "8", "--k", "4", "--format", "csv"});
  CHECK(std::count(ek.out.begin(), ek.out.end(), '\n') == 8 + 1);
}

TEST_CASE("climb emits JSON lines and is reproducible") {
  auto a = run({"climb", "--n", "9", "--k", "4", "--seed", "7"});
  auto b = run({"climb", "--n", "9", "--k", "4", "--seed", "7"});
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("step"));
    CHECK(j.contains("lambda1"));
  }
  auto text = run({"climb", "--n", "9", "--k", "4", "--seed", "7", "--format", "text"});
  CHECK(text.out.find("final is broom") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--n", "9", "--k", "4"}, {"chain", "--n", "12", "--format", "csv"}, {"enumerate", "--n", "7"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("--out writes a file") {
  const auto path = temp_file("out.json");
  auto r = run({"verify", "--n", "6", "--k", "3", "--out", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == run({"verify", "--n", "6", "--k", "3"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("bad input exits with 1 and a diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--n", "99", "--k", "3"},
           {"verify", "--n", "8", "--k", "8"},
           {"spectrum", "--prufer", "1,x"},
           {"spectrum", "--prufer", "9,9"},
           {"spectrum"},
           {"spectrum", "--prufer", "1", "--edges", "/nonexistent"},
           {"spectrum", "--edges", "/nonexistent/edges.txt"},
           {"chain", "--n", "5"},
           {"climb", "--n", "6", "--k", "6"},
           {"verify", "--n", "6", "--k", "3", "--format", "xml"},
           {"nosuchcommand"},
           {}}) {
    auto r = run(args);
    CHECK(r.code == cli::kExitError);
    CHECK(r.err.rfind("error: ", 0) == 0);
  }
}

TEST_CASE("malformed edge list") {
  const auto path = temp_file("bad.txt");
  {
    std::ofstream f(path);
    f << "4\n0 1\n1 2\n2 0\n";
  }
  auto r = run({"balance", "--edges", path.string()});
  CHECK(r.code == cli::kExitError);
  CHECK(r.err.find("error: ") == 0);
  std::filesystem::remove(path);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("verify") != std::string::npos);
}
