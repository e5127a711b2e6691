#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "greenbiset/cache.hpp"
#include "greenbiset/cli.hpp"
#include "greenbiset/config.hpp"
#include "greenbiset/error.hpp"
#include "greenbiset/report.hpp"

using namespace gb;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "greenbiset");
  args.push_back("--no-cache");
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("gb-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

// Runs the real binary; returns stdout and the exit status.
std::pair<std::string, int> shell(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int st = pclose(p);
  return {out, WEXITSTATUS(st)};
}

}  // namespace

TEST_CASE("config files") {
  const Config c = parse_config("# comment\nbound = 100\n catalog = C2, S3 ,C3\nformat=json\nseed = 7 # trailing\n\ncache_dir = /x\n");
  CHECK(c.bound == 100);
  CHECK(c.catalog == std::vector<std::string>{"C2", "S3", "C3"});
  CHECK(c.format == OutputFormat::Json);
  CHECK(c.seed == 7);
  CHECK(c.cache_dir == fs::path("/x"));
  CHECK(c.intermediate_bound == 4096);
  CHECK(parse_config("").catalog_or_default().size() == 23);
  CHECK_THROWS_AS(parse_config("bound = 0"), InvalidArgument);
  CHECK_THROWS_AS(parse_config("bound = -3"), InvalidArgument);
  CHECK_THROWS_AS(parse_config("colour = red"), InvalidArgument);
  CHECK_THROWS_AS(parse_config("format = yaml"), InvalidArgument);
  CHECK_THROWS_AS(parse_config("just words"), InvalidArgument);
  CHECK_THROWS_AS(load_config("/nonexistent/gb.conf"), InvalidArgument);
}

TEST_CASE("cache entries: hit, corruption, version and digest") {
  const fs::path d = fresh_dir("cache");
  cache::set_directory(d);
  cache::reset_stats();
  int builds = 0;
  auto build = [&] {
    ++builds;
    return nlohmann::json{{"x", 1}};
  };
  CHECK(cache::get_or_build("k", "C2", build)["x"] == 1);
  CHECK(cache::get_or_build("k", "C2", build)["x"] == 1);
  CHECK(builds == 1);
  CHECK(cache::stats().hits == 1);
  const fs::path f = cache::entry_path(d, "k", "C2");
  REQUIRE(fs::exists(f));

  // truncated file
  std::ofstream(f, std::ios::trunc) << "{\"version\":";
  CHECK(cache::get_or_build("k", "C2", build)["x"] == 1);
  CHECK(builds == 2);
  CHECK(cache::stats().rebuilds == 1);

  // valid JSON, edited payload
  nlohmann::json j;
  std::ifstream(f) >> j;
  j["payload"]["x"] = 2;
  std::ofstream(f, std::ios::trunc) << j.dump();
  CHECK(cache::get_or_build("k", "C2", build)["x"] == 1);
  CHECK(builds == 3);

  // another version
  std::ifstream(f) >> j;
  j["version"] = cache::kVersion + 1;
  std::ofstream(f, std::ios::trunc) << j.dump();
  CHECK(cache::get_or_build("k", "C2", build)["x"] == 1);
  CHECK(builds == 4);
  CHECK(cache::stats().rebuilds == 3);

  // no temp files left behind
  for (const auto& e : fs::directory_iterator(d)) CHECK(e.path().extension() == ".json");
  cache::set_directory(std::nullopt);
  fs::remove_all(d);
}

TEST_CASE("unwritable cache directory falls back to memory") {
  const fs::path d = fresh_dir("ro");
  const fs::path file = d / "plain-file";
  std::ofstream(file) << "x";
  cache::set_directory(file / "sub");  // a path below a regular file
  cache::reset_stats();
  CHECK(cache::get_or_build("k", "C3", [] { return nlohmann::json(5); }) == 5);
  CHECK(cache::stats().write_failures == 1);
  cache::set_directory(std::nullopt);
  fs::remove_all(d);
}

TEST_CASE("report rendering") {
  CheckReport r;
  r.check = "demo";
  r.spec = "burnside(Q)";
  r.scope = {"C2"};
  r.verdict = Verdict::Fail;
  Matrix m(2, 2, Field::rationals());
  m(0, 0) = Scalar(Rational(3, 2));
  m(1, 1) = Scalar(1);
  m.set_row_labels({"a", "bb"});
  m.set_col_labels({"a", "bb"});
  r.witnesses["gram"] = to_json(m);
  r.witnesses["rank"] = 2;
  r.caveats = {kCatalogCaveat};
  const std::string t = render_text(r);
  CHECK(t.find("demo burnside(Q): FAIL") == 0);
  CHECK(t.find("3/2") != std::string::npos);
  CHECK(t.find("note: catalog-bounded certificate") != std::string::npos);
  const auto j = nlohmann::json::parse(render_reports({r}, OutputFormat::Json));
  CHECK(j["verdict"] == "fail");
  CHECK(j["witnesses"]["gram"]["entries"][0][0] == "3/2");
  CHECK(nlohmann::json::parse(render_reports({r, r}, OutputFormat::Json)).size() == 2);
  CHECK(render_matrix(m) == "      a  bb\na   3/2   0\nbb    0   1\n");
}

TEST_CASE("command exit codes") {
  auto e3 = cli({"example3", "2"});
  CHECK(e3.rc == kExitPass);
  CHECK(e3.out.find("dim A(C2) = 5") != std::string::npos);
  CHECK(e3.out.find("dim A(C2xC2) = 29") != std::string::npos);
  CHECK(e3.out.find("FAIL") != std::string::npos);
  CHECK(e3.out.find("difference 4") != std::string::npos);

  auto d = cli({"dims", "const(2)", "C7", "--format", "json"});
  CHECK(d.rc == kExitPass);
  CHECK(nlohmann::json::parse(d.out)["dim"] == 1);

  auto g = cli({"gram", "burnside(Q)", "C2xC2", "--format=json"});
  CHECK(g.rc == kExitPass);
  const auto gj = nlohmann::json::parse(g.out);
  CHECK(gj["rank"] == 4);
  CHECK(gj["gram"]["entries"][0] == nlohmann::json{"4", "2", "2", "2", "1"});

  CHECK(cli({"check", "strict", "repC(Q)", "--pairs", "C2:C3,S3:S3"}).rc == kExitPass);
  CHECK(cli({"check", "strict", "cut(shift(burnside(Q), C2xC2), eTop)", "--pairs", "C2:C2"}).rc == kExitFail);
  CHECK(cli({"check", "green-field", "burnside(Q)", "--catalog", "C1,C2,C2xC2"}).rc == kExitFail);
  CHECK(cli({"check", "green-field", "const(2)", "--catalog", "C3,C5"}).rc == kExitPass);
  CHECK(cli({"check", "semisimple", "repC(Q)", "C2"}).rc == kExitPass);
  CHECK(cli({"check", "anisotropic", "repQ(Q)", "S3"}).rc == kExitPass);
  CHECK(cli({"check", "field-at-one", "shift(burnside(Q), C2)"}).rc == kExitFail);
  CHECK(cli({"check", "tensor", "repC(Q)", "C2", "C1", "C2"}).rc == kExitPass);
  CHECK(cli({"check", "essential", "repC(Q)", "C2"}).out.find(": 0 ") != std::string::npos);
  CHECK(cli({"props", "burnside(Q)", "--instances", "5"}).rc == kExitPass);

  auto a = cli({"act", "burnside(Q)", "Res[C2<S3]", "0,0,0,1"});
  CHECK(a.rc == kExitPass);
  CHECK(a.out.find("[G]  1") != std::string::npos);

  // usage
  CHECK(cli({}).rc == kExitUsage);
  CHECK(cli({"dims"}).rc == kExitUsage);
  CHECK(cli({"dims", "nonsense(Q)", "C2"}).rc == kExitUsage);
  CHECK(cli({"dims", "const(2)", "C2"}).rc == kExitUsage);
  CHECK(cli({"check", "anisotropic", "const(2)", "C3"}).rc == kExitUsage);
  CHECK(cli({"gram", "burnside(Q)", "C2", "--format", "xml"}).rc == kExitUsage);
  CHECK(cli({"example3", "4"}).rc == kExitUsage);
  CHECK(cli({"--help"}).rc == kExitPass);
  // bounds
  auto b = cli({"dims", "burnside(Q)", "S4", "--bound", "10"});
  CHECK(b.rc == kExitBound);
  CHECK(b.err.find("bound") != std::string::npos);
  CHECK(cli({"dims", "burnside(Q)", "S4"}).rc == kExitPass);
}

#ifdef GREENBISET_CLI
TEST_CASE("output is identical across runs and cache states") {
  const fs::path d = fresh_dir("cli");
  const std::string env = "GREENBISET_CACHE_DIR=" + d.string() + " ";
  const std::string bin = GREENBISET_CLI;
  for (const std::string args : {"dims 'burnside(Q)' S4 D8", "gram 'repC(Q)' Q8 --format json", "example3 2",
                                 "check strict 'repQ(Q)' --pairs D8:C3 --format json"}) {
    CAPTURE(args);
    const auto miss = shell(env + bin + " " + args);
    const auto hit = shell(env + bin + " " + args);
    const auto none = shell(bin + " " + args + " --no-cache");
    CHECK(miss.second == 0);
    CHECK(miss == hit);
    CHECK(miss == none);
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(d)) files += e.path().extension() == ".json";
  CHECK(files > 0);
  // corrupt every entry: still the same output
  for (const auto& e : fs::directory_iterator(d)) std::ofstream(e.path(), std::ios::trunc) << "garbage";
  CHECK(shell(env + bin + " dims 'burnside(Q)' S4 D8").first == shell(bin + " dims 'burnside(Q)' S4 D8 --no-cache").first);
  // config file and seed
  std::ofstream(d / "gb.conf") << "format = json\ninstances = 5\nseed = 3\n";
  const auto p1 = shell(env + bin + " props 'repC(Q)' --config " + (d / "gb.conf").string());
  CHECK(p1.second == 0);
  CHECK(nlohmann::json::parse(p1.first)["seed"] == 3);
  CHECK(p1 == shell(env + bin + " props 'repC(Q)' --config " + (d / "gb.conf").string()));
  fs::remove_all(d);
}
#endif
