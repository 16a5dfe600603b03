#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <slopenorm/cli.hpp>
#include <slopenorm/families.hpp>
#include <slopenorm/manifold_io.hpp>

using namespace slopenorm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

struct TempDir {
  std::filesystem::path path = std::filesystem::temp_directory_path() / "slopenorm_cli_test";
  TempDir() { std::filesystem::create_directories(path); }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("eval and verify on the figure-eight document") {
  TempDir dir;
  const std::string fig8 = dir.file("fig8.json");
  REQUIRE(run({"family", "fig8", "--out", fig8}).code == 0);

  CHECK(run({"eval", "norm", "-m", fig8, "-r", "1/0"}).out == "4\n");
  CHECK(run({"eval", "norm", "-m", fig8, "-r", "-4/1"}).out == "16\n");
  CHECK(run({"eval", "norm", "-m", fig8, "--slope=-4/1"}).out == "16\n");
  CHECK(run({"eval", "length", "-m", fig8, "-r", "4/1"}).out.rfind("28 ", 0) == 0);
  CHECK(run({"eval", "distance", "-r", "4/1", "-r", "-4/1"}).out == "8\n");

  const Run thm3 = run({"verify", "thm3", "-m", fig8, "-r", "4/1"});
  CHECK(thm3.code == 0);
  CHECK(thm3.out == "holds: 8 > 4\n");

  const Run sweep = run({"verify", "thm1", "-m", fig8, "--range", "30"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.rfind("holds: ", 0) == 0);

  const Run all = run({"verify", "all", "-m", fig8});
  CHECK(all.code == 0);
  CHECK(count(all.out, "\n") >= 10);

  const Run json = run({"verify", "cor-ubdiam", "-m", fig8, "--format", "json"});
  CHECK(json.out.find("\"status\": \"equality\"") != std::string::npos);

  CHECK(run({"report", "-m", fig8}).code == 0);
}

TEST_CASE("failing checks give exit 1") {
  TempDir dir;
  ManifoldData m = fig8_dataset();
  m.surfaces[0].boundary_components = 2;  // Agol bound: 28 * 4 > 36
  const std::string path = dir.file("bad.json");
  save(m, path);
  CHECK(run({"verify", "all", "-m", path}).code == 1);
}

TEST_CASE("usage and data errors give exit 2 with one line") {
  TempDir dir;
  const Run unknown = run({"eval", "norm", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(count(unknown.err, "\n") == 1);

  const Run missing = run({"eval", "norm", "-m", dir.file("absent.json"), "-r", "1/0"});
  CHECK(missing.code == 2);
  CHECK(count(missing.err, "\n") == 1);

  const std::string bad = dir.file("weights.json");
  std::ofstream(bad) << R"({"name": "x", "boundary_slopes": ["4/1", "-4/1"],
      "culler_shalen": {"terms": [{"slope": "4/1", "weight": 3}, {"slope": "-4/1", "weight": 2}]}})";
  const Run invalid = run({"verify", "all", "-m", bad});
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("weight must be positive even") != std::string::npos);
  CHECK(count(invalid.err, "\n") == 1);

  CHECK(run({"family", "pretzel", "--n", "8"}).code == 2);
  CHECK(run({"family", "twobridge", "--crossings", "3"}).code == 2);
  CHECK(run({"eval", "norm", "-r", "2/4"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("family documents load back") {
  TempDir dir;
  const std::string path = dir.file("p.json");
  REQUIRE(run({"family", "pretzel", "--n", "11", "--out", path}).code == 0);
  CHECK(load(path) == pretzel_dataset(11));
  CHECK(run({"verify", "prop4", "-m", path}).code == 0);
  CHECK(run({"family", "twobridge", "--crossings", "7"}).out.find("\"surfaces\"") != std::string::npos);
}

TEST_CASE("plot writes one polygon and one ellipse") {
  TempDir dir;
  const std::string fig8 = dir.file("fig8.json");
  const std::string svg_path = dir.file("ball.svg");
  REQUIRE(run({"family", "fig8", "--out", fig8}).code == 0);
  REQUIRE(run({"plot", "unit-ball", "-m", fig8, "--out", svg_path, "--level", "36"}).code == 0);
  std::ifstream in(svg_path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<polygon") == 1);
  CHECK(count(svg, "<ellipse") == 1);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(run({"plot", "unit-ball", "-m", fig8, "--out", svg_path}).code == 0);
}

TEST_CASE("output is deterministic") {
  TempDir dir;
  const std::string fig8 = dir.file("fig8.json");
  REQUIRE(run({"family", "fig8", "--out", fig8}).code == 0);
  CHECK(run({"report", "-m", fig8}).out == run({"report", "-m", fig8}).out);
  CHECK(run({"family", "fig8"}).out == run({"family", "fig8"}).out);
}
