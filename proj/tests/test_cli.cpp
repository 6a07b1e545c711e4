#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include <json.hpp>

#include "pegsol/cli.hpp"
#include "pegsol/graph6.hpp"
#include "pegsol/graphspec.hpp"
#include "pegsol/strategies.hpp"

using namespace pegsol;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char tmpl[] = "/tmp/pegsol-test-XXXXXX";
    int fd = mkstemp(tmpl);
    REQUIRE(fd >= 0);
    path = tmpl;
    std::ofstream f(path);
    f << contents;
    close(fd);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("graph spec grammar") {
  CHECK(parse_graph_spec("path:5") == make_path(5));
  CHECK(parse_graph_spec("petersen") == make_petersen());
  CHECK(parse_graph_spec("complete_bipartite:3,2") == make_complete_bipartite(3, 2));
  CHECK(parse_graph_spec("g6:D?{") == parse_graph6("D?{"));
  CHECK(parse_graph_spec("join(empty:3,empty:2)") == make_complete_bipartite(3, 2));
  CHECK(parse_graph_spec("cartesian(path:3,complete:3)") ==
        cartesian(make_path(3), make_complete(3)).first);
  CHECK(parse_graph_spec("cartesian(join(complete:1,complete:1),path:2)") ==
        cartesian(make_complete(2), make_path(2)).first);
  CHECK(parse_graph_spec(" path:3 ") == make_path(3));

  CHECK_THROWS_AS(parse_graph_spec("path:3 extra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("join(path:3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("nosuch:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("path:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec(""), std::invalid_argument);
}

TEST_CASE("fools subcommand") {
  CliRun r = run_cli({"fools", "path:3"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["f_value"] == 2);

  // identical invocations produce identical bytes
  CliRun r2 = run_cli({"fools", "path:3"});
  CHECK(r.out == r2.out);
}

TEST_CASE("profile subcommand on C_12") {
  CliRun r = run_cli({"profile", "cycle:12"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["freely_solvable"] == true);
  CHECK(doc["freely_nbhd_solvable"] == false);
}

TEST_CASE("solve subcommand") {
  CliRun r = run_cli({"solve", "complete:3", "--holes", "0"});
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["solvable"] == true);
  CHECK(doc["jumps"].size() == 1);

  CliRun r2 = run_cli({"solve", "complete:2", "--holes", "0"});
  nlohmann::json doc2 = nlohmann::json::parse(r2.out);
  CHECK(doc2["solvable"] == true);  // a lone peg is already reduced
  CHECK(doc2["jumps"].empty());

  CliRun r3 = run_cli({"solve", "star:3", "--holes", "1"});
  nlohmann::json doc3 = nlohmann::json::parse(r3.out);
  CHECK(doc3["solvable"] == false);
}

TEST_CASE("enumerate subcommand") {
  CliRun r = run_cli({"enumerate", "--n", "4"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(parse_graph6(line).vertex_count() == 4);
    ++count;
  }
  CHECK(count == 6);
}

TEST_CASE("strategy and check subcommands round-trip certificates") {
  CliRun r = run_cli({"strategy", "join", "--g", "path:3", "--h", "path:2"});
  CHECK(r.code == 0);
  StrategyCertificate cert = certificate_from_json(r.out);
  CHECK(validate_certificate(cert));

  TempFile f(r.out);
  CliRun chk = run_cli({"check", "--in", f.path});
  CHECK(chk.code == 0);
  CHECK(nlohmann::json::parse(chk.out)["valid"] == true);

  // tampering flips the verdict and the exit code
  nlohmann::json doc = nlohmann::json::parse(r.out);
  doc["claimed_terminal_size"] = doc["claimed_terminal_size"].get<int>() + 1;
  TempFile g(doc.dump());
  CliRun bad = run_cli({"check", "--in", g.path});
  CHECK(bad.code == 2);
  CHECK(nlohmann::json::parse(bad.out)["valid"] == false);
}

TEST_CASE("strategy kinds emit valid certificates") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"strategy", "cartesian-kk", "--g", "path:3", "--k", "3"},
           {"strategy", "hampath", "--g", "cartesian(path:2,path:3)"},
           {"strategy", "product", "--g", "path:2", "--h", "cycle:4"}}) {
    CliRun r = run_cli(args);
    CHECK(r.code == 0);
    CHECK(validate_certificate(certificate_from_json(r.out)));
  }

  CliRun kk = run_cli({"strategy", "kk", "--k", "5", "--hole", "0", "--target", "3"});
  CHECK(kk.code == 0);
  CHECK(nlohmann::json::parse(kk.out)["jumps"].size() == 3);

  CliRun p2k3 = run_cli({"strategy", "p2k3", "--pegs", "0,3", "--clear", "0"});
  CHECK(p2k3.code == 0);
  nlohmann::json doc = nlohmann::json::parse(p2k3.out);
  CHECK(doc.contains("pending"));
}

TEST_CASE("census subcommand with files") {
  TempFile in("A_\nD?{\n");
  CliRun r = run_cli({"census", "--in", in.path, "--jobs", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "#schema=1");
  std::getline(lines, line);
  CHECK(nlohmann::json::parse(line)["graph6"] == "A_");
  CHECK(r.err.find("graphs=2") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes and shape") {
  CliRun bogus = run_cli({"verify", "--suite", "bogus"});
  CHECK(bogus.code == 1);

  CliRun missing = run_cli({"verify", "--suite", "nbhd-ratio"});
  CHECK(missing.code == 1);

  TempFile f(write_graph6(make_cycle(6)) + "\n" + write_graph6(make_cycle(5)) + "\n");
  CliRun ratio = run_cli({"verify", "--suite", "nbhd-ratio", "--in", f.path});
  CHECK(ratio.code == 0);
  nlohmann::json doc = nlohmann::json::parse(ratio.out);
  CHECK(doc[0]["connected"] == 2);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"fools"}).code == 1);           // missing graph argument
  CHECK(run_cli({"fools", "nosuch:1"}).code == 2);  // engine-level failure
}
