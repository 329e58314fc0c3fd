#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "bihyper/document.hpp"
#include "cli.hpp"
#include "json.hpp"

using namespace bihyper;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "bihyper-cli-test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("formula") {
  auto r = run({"formula", "--set", "4,2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "8\n");
  CHECK(run({"formula", "--set", "3,2"}).out == "5\n");
  CHECK(run({"formula", "--set", "2,4"}).code == cli::kUsage);
  CHECK(run({"formula"}).code == cli::kUsage);
  CHECK(run({"nonsense"}).code == cli::kUsage);
}

TEST_CASE("construct, spectrum, verify") {
  const fs::path hg = scratch() / "h42.hg";
  auto c = run({"construct", "--set", "4,2", "--out", hg.string()});
  REQUIRE(c.code == cli::kOk);
  CHECK(parse_document(read_file(hg.string())).to_labeled() == construct(FeasibleSpec({4, 2})));

  auto stdout_doc = run({"construct", "--set", "4,2"});
  CHECK(stdout_doc.out == serialize(construct(FeasibleSpec({4, 2}))));

  auto s = run({"spectrum", hg.string(), "--json"});
  REQUIRE(s.code == cli::kOk);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["spectrum"] == nlohmann::json::array({0, 1, 0, 1}));
  CHECK(j["feasible"] == nlohmann::json::array({2, 4}));
  CHECK(j["strict_colorings"] == 2);

  auto listed = run({"spectrum", hg.string(), "--list"});
  CHECK(listed.out.find("feasible set {2,4}") != std::string::npos);
  CHECK(listed.out.find("[4]") != std::string::npos);

  CHECK(run({"verify", hg.string(), "--set", "4,2"}).code == cli::kOk);
  CHECK(run({"verify", hg.string(), "--set", "4,3"}).code == cli::kRefuted);
  CHECK(run({"spectrum", (scratch() / "missing.hg").string()}).code == cli::kUsage);

  auto warn = run({"construct", "--set", "4,2", "--variant", "II"});
  CHECK(warn.code == cli::kOk);
  CHECK(warn.err.find("warning") != std::string::npos);
}

TEST_CASE("construct --reduction feeds isocheck") {
  const std::string prefix = (scratch() / "r532").string();
  REQUIRE(run({"construct", "--set", "5,3,2", "--reduction", prefix}).code == cli::kOk);
  auto iso = run({"isocheck", prefix + ".sub.hg", prefix + ".tail.hg", "--map", prefix + ".map"});
  CHECK(iso.code == cli::kOk);
  CHECK(iso.out == "isomorphism under map: yes\n");

  // A transposition that is not an automorphism must be rejected.
  const auto sub = parse_document(read_file(prefix + ".sub.hg")).hypergraph;
  const auto tail = parse_document(read_file(prefix + ".tail.hg")).hypergraph;
  const auto good = parse_map(read_file(prefix + ".map"));
  std::optional<VertexBijection> broken;
  for (Vertex j = 1; j < 6 && !broken; ++j) {
    std::vector<Vertex> f(good.forward().begin(), good.forward().end());
    std::swap(f[0], f[j]);
    if (!check_isomorphism_under_map(sub, tail, VertexBijection(f))) broken = VertexBijection(f);
  }
  REQUIRE(broken.has_value());
  write_file(prefix + ".bad.map", serialize_map(*broken));
  auto bad = run({"isocheck", prefix + ".sub.hg", prefix + ".tail.hg", "--map", prefix + ".bad.map"});
  CHECK(bad.out == "isomorphism under map: no\n");
  CHECK(bad.code == cli::kRefuted);

  CHECK(run({"construct", "--set", "4,2", "--reduction", prefix}).code == cli::kUsage);
}

TEST_CASE("min-search exit codes") {
  auto certified = run({"min-search", "--set", "3,2", "--max-vertices", "4", "--iso"});
  CHECK(certified.code == cli::kOk);
  CHECK(certified.out.find("verdict certified-none") != std::string::npos);

  auto aborted = run({"min-search", "--set", "4,2", "--resume", "7:0", "--max-vertices", "7"});
  CHECK(aborted.code == cli::kBudget);
  CHECK(aborted.out.find("resume with --resume 7:0") != std::string::npos);

  auto budget = run({"min-search", "--set", "3,2", "--max-vertices", "5", "--budget", "10"});
  CHECK(budget.code == cli::kBudget);
  CHECK(budget.out.find("--resume 4:8") != std::string::npos);

  CHECK(run({"min-search", "--set", "3,2", "--resume", "x"}).code == cli::kUsage);
}
