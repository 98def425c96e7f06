#include "facthom/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace facthom;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("hochschild subcommand") {
  Outcome o = invoke({"hochschild", "--preset", "squarezero", "--dim", "1", "--deg", "0", "--maxdeg", "4", "--field",
                      "Q", "--json"});
  CHECK(o.code == 0);
  auto lines = json_lines(o.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["status"] == "ok");
  CHECK(lines[0]["metadata"]["field"] == "Q");
  CHECK(lines[0]["metadata"]["safe_degree"] == 4);
  BettiTable t = BettiTable::from_json(lines[0]);
  CHECK(t == hochschild_homology(preset(Field::rationals(), {PresetKind::squarezero, 1, 0}), 4));
  // every reported degree is within the safe bound unless the table is weight-exact
  for (const auto& [k, n] : t.entries())
    if (!lines[0]["metadata"]["weight_exact"].get<bool>()) CHECK(k.degree <= 4);

  Outcome text = invoke({"hochschild", "--maxdeg", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("weight  degree     dim") != std::string::npos);
  CHECK(text.out.find("\033[") == std::string::npos);
}

TEST_CASE("check subcommands and exit codes") {
  CHECK(invoke({"check", "excision", "--preset", "squarezero", "--dim", "1", "--deg", "0", "--maxdeg", "4"}).code == 0);
  CHECK(invoke({"check", "free", "--dim", "1", "--deg", "1", "--maxweight", "3"}).code == 0);
  CHECK(invoke({"check", "sym", "--dim", "1", "--deg", "0", "--maxweight", "3", "--maxdeg", "3"}).code == 0);
  CHECK(invoke({"check", "pkd", "--dim", "1", "--deg", "0", "--maxweight", "3"}).code == 0);
  CHECK(invoke({"check", "layers", "--preset", "squarezero", "--dim", "1", "--maxweight", "3"}).code == 0);

  // the literal layer comparison fails for k[x]; only the check variant reports it in the exit code
  Outcome l = invoke({"check", "layers", "--preset", "tensor", "--dim", "1", "--maxweight", "2", "--json"});
  CHECK(l.code == 1);
  CHECK(json_lines(l.out)[0]["status"] == "check-failed");
  Outcome plain = invoke({"layers", "--preset", "tensor", "--dim", "1", "--maxweight", "2", "--json"});
  CHECK(plain.code == 0);
  CHECK(json_lines(plain.out)[0]["report"]["pass"] == false);

  CHECK(invoke({"hochschild", "--bogus"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"hochschild", "--field", "Fp:6"}).code == 2);
  CHECK(invoke({"hochschild", "--preset", "tensor", "--dim", "1"}).code == 2);  // needs a weight bound
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("facthom subcommand") {
  Outcome o = invoke({"facthom", "--preset", "exterior", "--dim", "1", "--deg", "1", "--manifold", "interval",
                      "--maxdeg", "2", "--json"});
  CHECK(o.code == 0);
  CHECK(BettiTable::from_json(json_lines(o.out)[0]) == BettiTable{{{0, 0}, 1}, {{1, 1}, 1}});
  Outcome two = invoke({"facthom", "--preset", "squarezero", "--dim", "0", "--manifold", "circle,circle", "--json"});
  CHECK(BettiTable::from_json(json_lines(two.out)[0]) == BettiTable{{{0, 0}, 1}});
  CHECK(invoke({"facthom", "--manifold", "sphere"}).code == 2);
}

TEST_CASE("koszul subcommand") {
  Outcome o = invoke({"koszul", "--preset", "squarezero", "--dim", "1", "--maxweight", "3", "--json"});
  CHECK(o.code == 0);
  CHECK(BettiTable::from_json(json_lines(o.out)[0]) ==
        BettiTable{{{0, 0}, 1}, {{-1, 1}, 1}, {{-2, 2}, 1}, {{-3, 3}, 1}});
}

TEST_CASE("running programs") {
  std::string empty = write_temp("facthom_empty.fh", "");
  Outcome e = invoke({"run", empty});
  CHECK(e.code == 0);
  CHECK(e.out.empty());

  std::string prog = write_temp("facthom_prog.fh",
                                "field Q\nalgebra A = preset squarezero(1,0)\nalgebra B = preset exterior(2,1)\n"
                                "manifold M = circle A\nmanifold N = circle B\nmanifold U = disjoint(M, N)\n"
                                "compute facthom M maxdeg 3\ncompute facthom N maxdeg 2\n"
                                "compute facthom U maxdeg 2\ncheck excision A maxdeg 3\n");
  Outcome serial = invoke({"run", prog, "--json"});
  Outcome parallel = invoke({"run", prog, "--json", "--jobs", "4"});
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);
  auto lines = json_lines(serial.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["request"] == "compute facthom M maxdeg 3");
  CHECK(lines[3]["request"] == "check excision A maxdeg 3");
  CHECK(lines[3]["report"]["pass"] == true);

  std::string bad = write_temp("facthom_bad.fh", "field Q\nmanifold M = circle A\n");
  Outcome b = invoke({"run", bad});
  CHECK(b.code == 3);
  CHECK(b.err.find(":2:21: unknown identifier") != std::string::npos);
  Outcome bj = invoke({"run", bad, "--json"});
  CHECK(bj.code == 3);
  CHECK(json_lines(bj.out)[0]["error"]["span"]["column"] == 21);

  CHECK(invoke({"run", "/nonexistent/file.fh"}).code == 2);
}
