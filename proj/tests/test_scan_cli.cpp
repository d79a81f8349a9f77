#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "carpet/cli.hpp"
#include "carpet/errors.hpp"
#include "carpet/scan.hpp"

using namespace carpet;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

int run_cli(std::initializer_list<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(std::vector<std::string>(args), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("beta scan produces the expected CSV rows") {
  ScanManifest manifest;
  manifest.computation = ScanComputation::Beta;
  manifest.e = {0, 1};
  manifest.a = {3, 3};
  manifest.b = {4, 8};
  manifest.format = ScanFormat::Csv;

  const auto lines = split_lines(run_scan(manifest, 2));
  REQUIRE(lines.size() == 11);  // header + 10 points
  CHECK(lines[0] == "e,a,b,r,g,M,beta,exact,anchors");
  CHECK(lines[2].rfind("0,3,5,", 0) == 0);
  CHECK(lines[2].find(",0,true,") != std::string::npos);  // beta = 0 at (0,3,5)
}

TEST_CASE("empty effective range yields a header-only file") {
  ScanManifest manifest;
  manifest.computation = ScanComputation::Beta;
  manifest.e = {1, 1};
  manifest.a = {3, 3};
  manifest.b = {1, 3};  // very ampleness needs b >= 4
  manifest.format = ScanFormat::Csv;
  const auto lines = split_lines(run_scan(manifest, 4));
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "e,a,b,r,g,M,beta,exact,anchors");
}

TEST_CASE("scan output is byte-identical across worker counts") {
  ScanManifest manifest;
  manifest.computation = ScanComputation::Alpha;
  manifest.e = {0, 2};
  manifest.a = {1, 5};
  manifest.b = {1, 18};
  manifest.format = ScanFormat::Csv;
  CHECK(run_scan(manifest, 1) == run_scan(manifest, 8));
}

TEST_CASE("JSON scan rows round-trip through the documented schema") {
  ScanManifest manifest;
  manifest.computation = ScanComputation::Cohomology;
  manifest.e = {0, 1};
  manifest.a = {1, 3};
  manifest.b = {1, 6};
  manifest.format = ScanFormat::Json;

  const std::string text = run_scan(manifest, 2);
  const nlohmann::json doc = nlohmann::json::parse(text);
  REQUIRE(doc.is_array());
  REQUIRE_FALSE(doc.empty());
  for (const nlohmann::json& row : doc) {
    REQUIRE(row.contains("surface"));
    REQUIRE(row.contains("divisor"));
    REQUIRE(row.at("h").is_array());
    REQUIRE(row.at("h").size() == 3);
    CHECK(row.at("exact").is_boolean());
    CHECK(row.at("anchors").is_array());
  }
  // Re-serialization is stable.
  std::string again = "[\n";
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (i) again += ",\n";
    again += doc[i].dump();
  }
  again += "\n]\n";
  CHECK(again == text);
}

TEST_CASE("alpha scan marks rule gaps instead of failing") {
  ScanManifest manifest;
  manifest.computation = ScanComputation::Alpha;
  manifest.e = {0, 0};
  manifest.a = {1, 2};
  manifest.b = {1, 2};
  manifest.format = ScanFormat::Csv;
  const auto lines = split_lines(run_scan(manifest, 1));
  REQUIRE(lines.size() == 5);
  CHECK(lines[1].find("unsupported") != std::string::npos);  // a = 1
  CHECK(lines[3].find("no-rule") != std::string::npos);      // (2, 1, 0)
  CHECK(lines[4].find("ok") != std::string::npos);           // (2, 2, 0)
}

TEST_CASE("write_scan_file is atomic and leaves no temp file") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "carpet_scan_test";
  fs::create_directories(dir);
  const fs::path target = dir / "out.csv";

  ScanManifest manifest;
  manifest.computation = ScanComputation::Beta;
  manifest.e = {0, 0};
  manifest.a = {3, 3};
  manifest.b = {5, 9};
  manifest.format = ScanFormat::Csv;
  manifest.out_path = target.string();
  write_scan_file(manifest, 2);

  CHECK(fs::exists(target));
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
  std::ifstream stream(target);
  std::string header;
  std::getline(stream, header);
  CHECK(header == "e,a,b,r,g,M,beta,exact,anchors");
  fs::remove_all(dir);
}

TEST_CASE("manifest JSON parsing") {
  const ScanManifest m = parse_manifest_json(
      R"({"compute":"alpha","e":[0,2],"a":[1,6],"b":[1,25],"format":"csv","out":"x.csv"})");
  CHECK(m.computation == ScanComputation::Alpha);
  CHECK(m.e.lo == 0);
  CHECK(m.e.hi == 2);
  CHECK(m.b.hi == 25);
  CHECK(m.out_path == "x.csv");

  CHECK_THROWS_AS(parse_manifest_json("{"), InvalidQuery);
  CHECK_THROWS_AS(parse_manifest_json(R"({"compute":"zeta"})"), InvalidQuery);
  CHECK_THROWS_AS(parse_manifest_json(R"({"compute":"beta","e":"x"})"), InvalidQuery);
}

TEST_CASE("cli: coh") {
  std::string out;
  CHECK(run_cli({"coh", "--e", "0", "--a", "2", "--b", "2"}, &out) == 0);
  CHECK(out == "h = (9, 0, 0)\n");

  CHECK(run_cli({"coh", "--e", "0", "--tangent", "-H", "--a", "3", "--b", "5"}, &out) == 0);
  CHECK(out == "h = (0, 0, 4) exact\n");

  CHECK(run_cli({"coh", "--e", "0", "--a", "0", "--b", "0"}, &out) == 0);
  CHECK(out == "h = (1, 0, 0)\n");

  // (4, 2, 0) tangent twist leaves a rank unresolved: --exact demands 3.
  CHECK(run_cli({"coh", "--e", "0", "--tangent", "-H", "--a", "4", "--b", "2", "--exact"},
                &out) == 3);
  CHECK(out.find("interval") != std::string::npos);

  CHECK(run_cli({"coh", "--e", "0", "--a", "2", "--b", "2", "--format", "json"}, &out) == 0);
  const nlohmann::json doc = nlohmann::json::parse(out);
  CHECK(doc.at("h") == nlohmann::json::array({9, 0, 0}));
  CHECK(doc.at("surface").at("e") == 0);
}

TEST_CASE("cli: alpha, beta, gamma, normal-bound") {
  std::string out, err;
  CHECK(run_cli({"alpha", "--e", "0", "--a", "2", "--b", "6"}, &out) == 0);
  CHECK(out.find("alpha <= 0") != std::string::npos);
  CHECK(out.find("(r,g)=(2,7)") != std::string::npos);
  CHECK(out.find("NOT extendable") != std::string::npos);
  // the verdict line carries its anchors
  CHECK(split_lines(out)[0].find("[") != std::string::npos);
  CHECK(split_lines(out)[0].find("gamma") != std::string::npos);

  CHECK(run_cli({"alpha", "--e", "0", "--a", "1", "--b", "5"}, &out, &err) == 3);
  CHECK(err.find("indeterminate") != std::string::npos);

  CHECK(run_cli({"beta", "--e", "0", "--a", "3", "--b", "3"}, &out) == 0);
  CHECK(out.find("beta = 4") != std::string::npos);

  CHECK(run_cli({"gamma", "--e", "1", "--b", "4"}, &out) == 0);
  CHECK(out.find("gamma = 6") != std::string::npos);

  CHECK(run_cli({"gamma", "--e", "1", "--b", "3"}, &out, &err) == 3);

  CHECK(run_cli({"normal-bound", "--e", "0", "--a", "2", "--b", "2", "--k", "2"}, &out) == 0);
  CHECK(out.find("h0(N(-2H)) <= 1") != std::string::npos);

  CHECK(run_cli({"alpha", "--e", "1", "--a", "2", "--b", "2"}, &out, &err) == 2);
  CHECK(run_cli({"alpha", "--e", "0", "--a", "2"}, &out, &err) == 2);  // missing --b
}

TEST_CASE("cli: classify") {
  std::string out;
  CHECK(run_cli({"classify", "fano", "--r", "3", "--g", "3"}, &out) == 0);
  CHECK(out.find("EMPTY") != std::string::npos);
  CHECK(out.find("not an integer") != std::string::npos);

  CHECK(run_cli({"classify", "mukai", "--n", "5", "--r", "2", "--g", "5"}, &out) == 0);
  CHECK(out.find("nonempty irreducible") != std::string::npos);
  CHECK(out.find("dim T at triple cone = 405") != std::string::npos);

  CHECK(run_cli({"classify", "fano", "--r", "2", "--g", "6"}, &out) == 0);
  CHECK(out.find("dim T at cone = 525") != std::string::npos);
  CHECK(out.find("unique Fano") != std::string::npos);

  CHECK(run_cli({"classify", "fano", "--r", "1", "--g", "5"}, &out, nullptr) == 2);
}

TEST_CASE("cli: scan to stdout and to a file") {
  std::string out;
  CHECK(run_cli({"scan", "--compute", "beta", "--e", "0..1", "--a", "3", "--b", "4..8",
                 "--format", "csv"},
                &out) == 0);
  CHECK(split_lines(out).size() == 11);

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "carpet_cli_scan";
  fs::create_directories(dir);
  const std::string target = (dir / "rows.csv").string();
  CHECK(run_cli({"scan", "--compute", "beta", "--e", "0", "--a", "3", "--b", "5..9", "--out",
                 target},
                &out) == 0);
  CHECK(fs::exists(target));
  fs::remove_all(dir);

  CHECK(run_cli({"scan", "--compute", "beta", "--e", "0", "--a", "3", "--b", "9..5"}, &out,
                nullptr) == 2);
}

TEST_CASE("worker override via environment") {
  setenv("CARPET_EXT_THREADS", "3", 1);
  CHECK(default_workers() == 3);
  setenv("CARPET_EXT_THREADS", "junk", 1);
  CHECK(default_workers() >= 1);
  unsetenv("CARPET_EXT_THREADS");
  CHECK(default_workers() >= 1);
}
