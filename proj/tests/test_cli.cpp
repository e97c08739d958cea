#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fairtile/cli.hpp"
#include "fairtile/patch.hpp"
#include "fairtile/tiling_io.hpp"

using namespace fairtile;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "fairtile_cli_tests";
  fs::create_directories(dir);
  return dir;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tiling documents round-trip bit-exactly") {
  const Tiling t = generate_patch(1, 5e-3, 0.7, 3);
  const std::string text = serialize_tiling(t);
  const Tiling back = parse_tiling(text);

  REQUIRE(back.pentagons.size() == t.pentagons.size());
  CHECK(back.area_target == t.area_target);
  CHECK(back.perimeter_target == t.perimeter_target);
  CHECK(back.generation.rings == t.generation.rings);
  CHECK(back.generation.epsilon0 == t.generation.epsilon0);
  CHECK(back.generation.rho == t.generation.rho);
  CHECK(back.generation.seed == t.generation.seed);
  CHECK(back.generation.delta_sep == t.generation.delta_sep);
  CHECK(back.generation.tol_residual == t.generation.tol_residual);
  for (std::size_t i = 0; i < t.pentagons.size(); ++i) {
    CHECK(back.pentagons[i].id == t.pentagons[i].id);
    CHECK(back.pentagons[i].cluster_index == t.pentagons[i].cluster_index);
    CHECK(back.pentagons[i].hexagon_index == t.pentagons[i].hexagon_index);
    CHECK(back.pentagons[i].pentagon_index == t.pentagons[i].pentagon_index);
    CHECK(back.pentagons[i].marked_side == t.pentagons[i].marked_side);
    for (int v = 0; v < 5; ++v) {
      CHECK(back.pentagons[i].polygon[v].x == t.pentagons[i].polygon[v].x);
      CHECK(back.pentagons[i].polygon[v].y == t.pentagons[i].polygon[v].y);
    }
  }
  // Re-serialization reproduces the bytes.
  CHECK(serialize_tiling(back) == text);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_tiling("{ not json"), TilingFormatError);
  CHECK_THROWS_AS(parse_tiling("{\"format_version\": 2}"), TilingFormatError);
  // Structurally valid JSON with a non-convex pentagon.
  const std::string bad = R"({
    "format_version": 1,
    "targets": {"area": "0.8", "perimeter": "3.7"},
    "generation": {"rings": 0, "epsilon0": 0.001, "rho": 0.7, "seed": 0,
                   "delta_sep": 1e-09, "tol_residual": 1e-12},
    "pentagons": [{"id": 0, "cluster": 0, "hexagon": 0, "index": 0, "marked_side": 2,
                   "vertices": [[0,0],[2,0],[1,0.1],[2,2],[0,2]]}]
  })";
  CHECK_THROWS_AS(parse_tiling(bad), TilingValidationError);
}

TEST_CASE("svg rendering") {
  const Tiling t = generate_patch(0, 1e-3, 0.7, 0);
  const std::string svg = render_svg(t);
  CHECK(count_occurrences(svg, "<polygon") == 21);
  CHECK(svg.find("viewBox=") != std::string::npos);
  CHECK(render_svg(t) == svg);

  Tiling empty;
  empty.pentagons.clear();
  const std::string blank = render_svg(empty);
  CHECK(count_occurrences(blank, "<polygon") == 0);
  CHECK(blank.find("<svg") != std::string::npos);
}

TEST_CASE("generate writes deterministic files") {
  const fs::path dir = temp_dir();
  const std::string json_a = (dir / "a.json").string();
  const std::string json_b = (dir / "b.json").string();
  const std::string svg_a = (dir / "a.svg").string();
  const std::string svg_b = (dir / "b.svg").string();

  const CliResult first = run_cli({"generate", "--rings", "1", "--seed", "7", "--out", json_a,
                                   "--svg", svg_a});
  REQUIRE(first.exit_code == 0);
  const CliResult second = run_cli({"generate", "--rings", "1", "--seed", "7", "--out", json_b,
                                    "--svg", svg_b});
  REQUIRE(second.exit_code == 0);
  CHECK(read_file(json_a) == read_file(json_b));
  CHECK(read_file(svg_a) == read_file(svg_b));

  const Tiling loaded = parse_tiling(read_file(json_a));
  CHECK(loaded.pentagons.size() == 147);
}

TEST_CASE("generate argument errors exit with code 2") {
  CHECK(run_cli({"generate", "--rings", "-1", "--out", "/tmp/never.json"}).exit_code == 2);
  CHECK(run_cli({"generate"}).exit_code == 2);  // --out is required
  CHECK(run_cli({"bogus"}).exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  const CliResult top = run_cli({"--help"});
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("generate") != std::string::npos);
  CHECK(run_cli({"generate", "--help"}).exit_code == 0);
}

TEST_CASE("verify exit codes") {
  const fs::path dir = temp_dir();
  const std::string good_path = (dir / "good.json").string();
  const std::string ref_path = (dir / "ref.json").string();
  const std::string corrupt_path = (dir / "corrupt.json").string();

  REQUIRE(run_cli({"generate", "--rings", "0", "--out", good_path}).exit_code == 0);
  write_file(ref_path, serialize_tiling(reference_patch(0)));
  write_file(corrupt_path, "{ this is not json");

  const CliResult pass = run_cli({"verify", "--in", good_path});
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("\"pass\": true") != std::string::npos);

  const CliResult fail = run_cli({"verify", "--in", ref_path});
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("\"pass\": false") != std::string::npos);

  CHECK(run_cli({"verify", "--in", corrupt_path}).exit_code == 2);
  CHECK(run_cli({"verify", "--in", (dir / "missing.json").string()}).exit_code == 2);

  const CliResult with_ref =
      run_cli({"verify", "--in", good_path, "--reference", ref_path});
  CHECK(with_ref.exit_code == 0);
  CHECK(with_ref.out.find("\"max_closeness\"") != std::string::npos);

  // Layouts must match for the closeness check.
  const std::string ref1_path = (dir / "ref1.json").string();
  write_file(ref1_path, serialize_tiling(reference_patch(1)));
  CHECK(run_cli({"verify", "--in", good_path, "--reference", ref1_path}).exit_code == 2);

  // Out-of-range provenance fields are rejected as invalid documents.
  std::string tampered = read_file(good_path);
  const std::string needle = "\"marked_side\": 2";
  tampered.replace(tampered.find(needle), needle.size(), "\"marked_side\": 7");
  const std::string tampered_path = (dir / "tampered.json").string();
  write_file(tampered_path, tampered);
  CHECK(run_cli({"verify", "--in", tampered_path}).exit_code == 1);
}

TEST_CASE("split subcommand") {
  const CliResult regular = run_cli({"split", "--regular"});
  CHECK(regular.exit_code == 0);
  CHECK(regular.out.find("pentagon 3") != std::string::npos);
  CHECK(regular.out.find("residual inf-norm") != std::string::npos);

  const std::string svg_path = (temp_dir() / "split.svg").string();
  CHECK(run_cli({"split", "--regular", "--svg", svg_path}).exit_code == 0);
  CHECK(count_occurrences(read_file(svg_path), "<polygon") == 3);

  // A hexagon scaled by 1.2 is outside the admission radius.
  const CliResult far = run_cli(
      {"split", "--hexagon", "1.2,0,0.6,1.039,-0.6,1.039,-1.2,0,-0.6,-1.039,0.6,-1.039"});
  CHECK(far.exit_code == 1);

  const CliResult short_list = run_cli({"split", "--hexagon", "1,0,0.5,0.86,-0.5,0.86,-1,0,-0.5,-0.86,0.5"});
  CHECK(short_list.exit_code == 2);

  CHECK(run_cli({"split"}).exit_code == 2);
  CHECK(run_cli({"split", "--regular", "--hexagon", "1,2,3"}).exit_code == 2);
}

TEST_CASE("jacobian subcommand") {
  const CliResult result = run_cli({"jacobian"});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("closed form") != std::string::npos);
  CHECK(result.out.find("analytic determinant") != std::string::npos);
}

}  // TEST_SUITE
