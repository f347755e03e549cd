#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = quivernc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QUIVERNC_DATA_DIR) + "/" + name + ".quiver"; }

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

using quivernc::cli::exit_cap_or_type;
using quivernc::cli::exit_pass;
using quivernc::cli::exit_usage;

TEST_CASE("enumerate torsion classes") {
  const auto r = run({"enumerate", "--what=torsion", data("A3")});
  CHECK(r.code == exit_pass);
  CHECK(lines(r.out) == 14);
  const auto j = run({"enumerate", "--what=torsion", "--format=json", data("A3")});
  CHECK(nlohmann::json::parse(j.out).size() == 14);
  for (const char* what : {"support-tilting", "wide", "clusters", "nc", "sortables"})
    CHECK(nlohmann::json::parse(run({"enumerate", std::string("--what=") + what, "--format=json", data("D4")}).out)
              .size() == 50);
  CHECK(lines(run({"enumerate", "--what=exceptional", data("A3")}).out) == 16);
}

TEST_CASE("tables") {
  CHECK(lines(run({"table", data("A1")}).out) == 1 + 2);
  CHECK(lines(run({"table", data("A2")}).out) == 1 + 5);
  const auto r = run({"table", data("A3")});
  CHECK(r.code == exit_pass);
  CHECK(lines(r.out) == 1 + 14);
  CHECK(r.out.rfind("cluster_tilting\tsupport_tilting\ttorsion_class", 0) == 0);
  CHECK(r.out.find("{010,011,110}\t{010,011,110}\t{010,011,110}\t{4,5,6}\t{011,110}\ts2 s3 s1 s2\ts2 s3 s1") !=
        std::string::npos);
  const auto j = nlohmann::json::parse(run({"table", "--format=json", data("A3")}).out);
  CHECK(j.size() == 14);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", data("A3")},
           {"enumerate", "--what=nc", "--format=json", data("A4")},
           {"ar", "--format=dot", data("D4")},
           {"roots", data("A3")},
       })
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("roots and AR quiver") {
  const auto r = run({"roots", data("A3")});
  CHECK(r.code == exit_pass);
  CHECK(lines(r.out) == 1 + 6);
  const auto ar = run({"ar", data("A3")});
  CHECK(lines(ar.out) == 1 + 6);
  CHECK(ar.out.find("111\t011") != std::string::npos);
  CHECK(run({"ar", "--format=dot", data("A2")}).out.rfind("digraph", 0) == 0);
}

TEST_CASE("inline quivers") {
  const auto r = run({"enumerate", "--what=torsion", "vertices 2\narrow 2 1"});
  CHECK(r.code == exit_pass);
  CHECK(lines(r.out) == 5);
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", "--suite=all", data("A2")}).code == exit_pass);
  for (const char* suite : {"bijections", "lattice", "stability", "exceptional", "reading"})
    CHECK_MESSAGE(run({"verify", std::string("--suite=") + suite, data("A3")}).code == exit_pass, suite);
  const auto j = run({"verify", "--suite=lattice", "--format=json", data("A3")});
  CHECK(j.code == exit_pass);
  CHECK_FALSE(nlohmann::json::parse(j.out).is_null());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate", data("A2")}).code == exit_usage);
  CHECK(run({"enumerate", "--what=nothing", data("A2")}).code == exit_usage);
  CHECK(run({"enumerate", "--what=torsion", "--format=dot", data("A2")}).code == exit_usage);
  CHECK(run({"enumerate", "--what=torsion", "vertices 2\narrow 1 2\narrow 2 1"}).code == exit_usage);
  CHECK(run({"enumerate", "--what=torsion", "/nonexistent/file.quiver"}).code == exit_usage);
  CHECK(run({"map", "--from=torsion", "--to=nc", "--object=[[1,0],[0,1]]", data("A2")}).code == exit_usage);
  CHECK(run({"map", "--from=torsion", "--to=nc", "--object=not json", data("A2")}).code == exit_usage);
  CHECK(run({"enumerate", "--what=torsion", data("affine_A2")}).code == exit_cap_or_type);
  CHECK(run({"table", "vertices 5\narrow 1 2\narrow 2 3\narrow 3 4\narrow 4 5"}).code == exit_cap_or_type);
  CHECK(run({"enumerate", "--what=exceptional", data("A4")}).code == exit_cap_or_type);
}

TEST_CASE("map examples") {
  const auto r = run({"map", "--from=torsion", "--to=nc", "--object=[[0,1,0],[0,1,1]]", data("A3")});
  CHECK(r.code == exit_pass);
  CHECK(r.out == "s[011]\n");
  const auto back = run({"map", "--from=nc", "--to=torsion", "--object=[2,3,2]", data("A3")});
  CHECK(back.out == "{010,011}\n");
  const auto cl = run({"map", "--from=support-tilting", "--to=clusters", "--object=[[0,1]]", data("A2")});
  CHECK(cl.out == "{01,P1[1]}\n");
}

TEST_CASE("map round trips along the chain") {
  const std::vector<std::string> chain{"clusters", "support-tilting", "torsion", "wide", "nc", "sortables"};
  for (const char* name : {"A2", "A3"})
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      for (auto [from, to] : {std::pair{chain[k], chain[k + 1]}, std::pair{chain[k + 1], chain[k]}}) {
        const auto all = run({"map", "--from=" + from, "--to=" + to, "--format=json", data(name)});
        REQUIRE(all.code == exit_pass);
        for (const auto& row : nlohmann::json::parse(all.out)) {
          const auto there = run({"map", "--from=" + to, "--to=" + from, "--format=json",
                                  "--object=" + row.at("to").dump(), data(name)});
          REQUIRE(there.code == exit_pass);
          CHECK_MESSAGE(nlohmann::json::parse(there.out) == row.at("from"), from << "->" << to << " " << row.dump());
        }
      }
    }
}
