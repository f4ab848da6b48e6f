#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "turan/graph.hpp"
#include "turan/graph_io.hpp"

using namespace turan;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("ex prints the value with its branch", "[cli]") {
  const auto r = run({"ex", "--n", "30", "--forest", "7,7"});
  CHECK(r.status == cli::kOk);
  CHECK(lines(r.out).at(0) == "ex(30; 7,7) = 136  [5n-14]");
  const auto j = run({"ex", "--n", "22", "--forest", "7,7", "--format", "json-lines"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["value"] == 96);
  CHECK(doc["tie"] == true);
  const auto c = run({"ex", "--n", "20", "--forest", "5,3,3"});
  CHECK(c.out.find("conjectural") != std::string::npos);
  const auto t = run({"ex", "--n", "7", "--forest", "3,4"});
  CHECK(lines(t.out).at(0) == "ex(7; 4,3) = 15  [[n,7,3]]");
}

TEST_CASE("construct emits graph6 and reports edges on the side", "[cli]") {
  const auto r = run({"construct", "--family", "2p7", "--n", "25", "--format", "graph6"});
  CHECK(r.status == cli::kOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 1);
  CHECK(read_graph6(out[0]).edge_count() == 111);
  CHECK(r.err.find("111 edges") != std::string::npos);

  const auto both = run({"construct", "--family", "2p7", "--n", "22", "--format", "json-lines"});
  const auto rows = lines(both.out);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) CHECK(nlohmann::json::parse(row)["edges"] == 96);

  const auto el = run({"construct", "--family", "path-cliques", "--n", "7", "--k", "4", "--format", "edgelist"});
  CHECK(el.status == cli::kOk);
  CHECK(el.out.find("# order 7") != std::string::npos);
  const auto dot = run({"construct", "--family", "kopylov-a", "--n", "6", "--k", "5", "--format", "dot"});
  CHECK(dot.out.find("graph g0 {") != std::string::npos);
  CHECK(run({"construct", "--family", "path-special", "--n", "9", "--k", "6"}).status ==
        cli::kDomainError);
  CHECK(run({"construct", "--family", "kopylov-b", "--n", "9"}).status == cli::kUsage);
}

TEST_CASE("check finds two 7-vertex paths in P14", "[cli]") {
  const std::string path = temp_file("turan_cli_p14.g6", write_graph6(path_graph(14)) + "\n");
  const auto r = run({"check", "--input", path, "--forest", "7,7", "--witness"});
  CHECK(r.status == cli::kOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == "contains");
  for (int i = 1; i <= 2; ++i) {
    std::istringstream in(out[i]);
    int v = 0;
    int count = 0;
    while (in >> v) ++count;
    CHECK(count == 7);
  }
  CHECK(run({"check", "--input", path, "--forest", "7,7", "--expect", "free"}).status == cli::kFinding);
  CHECK(run({"check", "--input", path, "--forest", "7,7", "--expect", "contains"}).status == cli::kOk);

  std::ostringstream el;
  write_edge_list(el, complete(13));
  const std::string k13 = temp_file("turan_cli_k13.el", el.str());
  const auto f = run({"check", "--input", k13, "--forest", "7,7", "--format", "json-lines"});
  CHECK(nlohmann::json::parse(f.out)["contains"] == false);

  const std::string bad = temp_file("turan_cli_bad.g6", "D?{x\n");
  CHECK(run({"check", "--input", bad, "--forest", "3"}).status == cli::kDomainError);
  CHECK(run({"check", "--input", "/nonexistent/x.g6", "--forest", "3"}).status == cli::kDomainError);
}

TEST_CASE("oracle subcommand", "[cli]") {
  const auto r = run({"oracle", "--n", "6", "--forest", "4"});
  CHECK(r.status == cli::kOk);
  CHECK(lines(r.out).at(0) == "ex(6; 4) = 6");
  CHECK(r.out.find("agrees") != std::string::npos);
  CHECK(run({"oracle", "--n", "10", "--forest", "4"}).status == cli::kDomainError);

  const std::string dump = (std::filesystem::temp_directory_path() / "turan_cli_dump.g6").string();
  const auto d = run({"oracle", "--n", "5", "--forest", "4", "--dump", dump, "--threads", "2"});
  CHECK(d.status == cli::kOk);
  std::ifstream in(dump);
  int count = 0;
  for (std::string l; std::getline(in, l);) {
    CHECK(read_graph6(l).edge_count() == 4);
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("verify-facts for fact 2", "[cli]") {
  const auto r = run({"verify-facts", "--fact", "2"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("21 misses") != std::string::npos);
  CHECK(r.out.find("bound 57") != std::string::npos);
  CHECK(r.out.find("== fact 2: 1 configuration(s), 21 claim checks, worst bound 57 (stated 57): PASS") !=
        std::string::npos);
  const auto j = run({"verify-facts", "--fact", "rules", "--format", "json-lines", "--witness"});
  for (const auto& row : lines(j.out)) {
    const auto doc = nlohmann::json::parse(row);
    CHECK(doc["status"] == "PASS");
    CHECK(doc["claims"][0].contains("witness"));
  }
}

TEST_CASE("table shows the crossover", "[cli]") {
  const auto r = run({"table", "--from", "21", "--to", "23"});
  const auto out = lines(r.out);
  REQUIRE(out.size() == 4);
  CHECK(out[1].find("[n,14,7]") != std::string::npos);
  CHECK(out[2].find("tie") != std::string::npos);
  CHECK(out[3].find("5n-14") != std::string::npos);
  CHECK(run({"table", "--from", "10", "--to", "20"}).status == cli::kDomainError);
  CHECK(run({"table", "--from", "30", "--to", "20"}).status == cli::kUsage);
  const auto j = run({"table", "--from", "14", "--to", "30", "--format", "json-lines"});
  for (const auto& row : lines(j.out)) CHECK(nlohmann::json::parse(row).contains("argmax"));
}

TEST_CASE("usage errors exit 64", "[cli]") {
  CHECK(run({}).status == cli::kUsage);
  CHECK(run({"ex", "--n", "30", "--forest", "7,7", "--bogus"}).status == cli::kUsage);
  CHECK(run({"ex", "--n", "30", "--forest", "7,x"}).status == cli::kUsage);
  CHECK(run({"ex", "--n", "30", "--forest", "7,7", "--format", "xml"}).status == cli::kUsage);
  CHECK(run({"frobnicate"}).status == cli::kUsage);
  CHECK(run({"ex", "--n", "10", "--forest", "7,7"}).status == cli::kDomainError);
  CHECK(run({"--help"}).status == cli::kOk);
}

TEST_CASE("output is identical across runs", "[cli]") {
  const std::vector<std::string> args{"verify-facts", "--fact", "5", "--format", "json-lines"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> table{"table", "--from", "14", "--to", "60"};
  CHECK(run(table).out == run(table).out);
}
