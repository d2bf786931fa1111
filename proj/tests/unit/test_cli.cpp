#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "logdmod/cli.hpp"
#include "logdmod/errors.hpp"
#include "logdmod/parser.hpp"

using namespace logdmod;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kXY{"x", "y"};

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("logdmod-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return path / name;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + LOGDMOD_CLI + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

CatalogEntry entry(const std::string& name, const std::string& f, bool qh) {
  CatalogEntry e;
  e.name = name;
  e.vars = kXY;
  e.f = f;
  e.expect_qh = qh;
  e.expect_lct = qh ? "holds" : "fails";
  return e;
}

CurveReport surface_report() {
  CatalogFile file = load_catalog(LOGDMOD_CATALOG);
  for (const CatalogEntry& e : file.entries)
    if (e.name == "surface-h") return analyze_divisor(parse_polynomial(e.f, e.vars), e.vars, e.name, options_for({}, e));
  throw std::runtime_error("surface entry missing from the catalog");
}

}  // namespace

TEST_CASE("config validation") {
  CHECK(parse_output_format("structured") == OutputFormat::Structured);
  CHECK_THROWS_AS(parse_output_format("yaml"), InputError);
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.k_max = 0;
  CHECK_THROWS_AS(c.validate(), InputError);
  c.k_max = 3;
  c.degree_bound = -1;
  CHECK_THROWS_AS(c.validate(), InputError);
}

TEST_CASE("catalog records") {
  CatalogEntry e = parse_catalog_entry(R"({"name":"cusp","vars":"x,y","f":"x^2 - y^3","expect_qh":true,"expect_lct":true})");
  CHECK(e.vars == kXY);
  CHECK(e.expect_lct == std::optional<std::string>("holds"));
  CatalogEntry l = parse_catalog_entry(R"({"name":"a","vars":["x","y"],"f":"x*y","expect_lct":"fails"})");
  CHECK(l.expect_lct == std::optional<std::string>("fails"));
  CHECK_FALSE(l.expect_qh);
  CHECK_THROWS_AS(parse_catalog_entry(R"({"name":"a","vars":"x,y"})"), InputError);
  CHECK_THROWS_AS(parse_catalog_entry(R"({"name":"a","vars":"x,x","f":"x"})"), InputError);
  CHECK_THROWS_AS(parse_catalog_entry(R"({"name":"a","vars":"x,y","f":"x","expect_qh":"yes"})"), InputError);
  CHECK_THROWS_AS(parse_catalog_entry("[1, 2]"), InputError);
  CHECK_THROWS_AS(parse_catalog_entry("{not json"), InputError);
}

TEST_CASE("catalog files") {
  TempDir dir;
  fs::path empty = dir.write("empty.jsonl", "# nothing here\n\n");
  CatalogSummary s = run_catalog(empty, {});
  CHECK(s.outcomes.empty());
  CHECK(s.exit_code() == kExitOk);

  fs::path one_bad = dir.write("bad.jsonl",
                               "{\"name\":\"node\",\"vars\":\"x,y\",\"f\":\"x*y\",\"expect_qh\":true}\n"
                               "{\"name\":\"broken\",\"vars\":\"x,y\"\n");
  CatalogSummary b = run_catalog(one_bad, {});
  CHECK(b.skipped == 1);
  CHECK(b.warnings.size() == 1);
  CHECK(b.outcomes.size() == 1);
  CHECK(b.exit_code() == kExitInputError);
  CHECK(summary_table(b).find("1 skipped") != std::string::npos);

  CHECK_THROWS_AS(load_catalog(dir.path / "missing.jsonl"), InputError);
}

TEST_CASE("the shipped catalog meets every expectation") {
  RunConfig c;
  c.jobs = 4;
  CatalogSummary s = run_catalog(LOGDMOD_CATALOG, c);
  CHECK(s.skipped == 0);
  CHECK(s.outcomes.size() >= 10);
  for (const EntryOutcome& o : s.outcomes) {
    CAPTURE(o.name);
    CHECK(o.status == EntryStatus::Ok);
  }
  CHECK(s.exit_code() == kExitOk);
}

TEST_CASE("expectation mismatches and invalid entries") {
  CurveReport cusp = run_single(parse_polynomial("x^2 - y^3", kXY), kXY, {}, "cusp");
  CHECK(check_expectations(entry("cusp", "x^2 - y^3", true), cusp).empty());
  CHECK(check_expectations(entry("cusp", "x^2 - y^3", false), cusp).size() == 2);

  CatalogSummary s = run_entries({entry("cusp", "x^2 - y^3", false)}, {});
  CHECK(s.outcomes[0].status == EntryStatus::Mismatch);
  CHECK(s.exit_code() == kExitMismatch);

  CatalogSummary bad = run_entries({entry("square", "x^2*y", true)}, {});
  CHECK(bad.outcomes[0].status == EntryStatus::Skipped);
  CHECK(bad.exit_code() == kExitInputError);

  CatalogSummary split = run_entries({entry("nodal-cubic", "y^2 - x^3 - x^2", true)}, {});
  CHECK(split.outcomes[0].status == EntryStatus::Inconsistent);
  CHECK(split.exit_code() == kExitInconsistent);
}

TEST_CASE("single runs") {
  CurveReport cusp = run_single(parse_polynomial("x^2 - y^3", kXY), kXY, {});
  CHECK(cusp.qh.quasi_homogeneous);
  CHECK(cusp.duality.holds);
  CHECK(cusp.lct.status == "holds");
  CHECK(cusp.qh.witness_cofactor == "6");

  CurveReport w = run_single(parse_polynomial("x^4 + y^5 + x*y^4", kXY), kXY, {});
  CHECK_FALSE(w.qh.quasi_homogeneous);
  CHECK(w.lct.status == "fails");
  CHECK(w.probe.first_unsolvable > 0);

  const std::vector<std::string> xyz{"x", "y", "z"};
  CurveReport h = run_single(parse_polynomial("x*y*(x+y)*(x*z+y)", xyz), xyz, {});
  CHECK(h.saito.found);
  CHECK(h.duality.holds);
  CHECK_FALSE(h.grf.regular);
  CHECK(h.lct.status == "holds-modulo-annihilator");

  CHECK_THROWS_AS(run_single(parse_polynomial("x", {"x"}), {"x"}, {}), InputError);
}

TEST_CASE("text reports") {
  std::string text = report_emit(surface_report(), OutputFormat::Text);
  for (const char* line : {"δ1(h) = 4 h", "δ2(h) = x h", "δ3(h) = (2 x - 3 y) h", "[δ1, δ2] = δ2", "[δ2, δ3] = -x δ2",
                           "s3 = x dx + y dy - 2", "LCT: holds-modulo-annihilator"})
    CHECK_MESSAGE(text.find(line) != std::string::npos, line);

  std::string cusp = report_emit(run_single(parse_polynomial("x^2 - y^3", kXY), kXY, {}), OutputFormat::Text);
  CHECK(cusp.find("cofactor a = 6") != std::string::npos);
}

TEST_CASE("structured reports round-trip") {
  for (const CurveReport& r : {surface_report(), run_single(parse_polynomial("x^4 + y^5 + x*y^4", kXY), kXY, {})}) {
    std::string s = report_emit(r, OutputFormat::Structured);
    CHECK(report_parse(s) == r);
    CHECK(report_emit(report_parse(s), OutputFormat::Structured) == s);
    CHECK(s.find("\"schema_version\": 1") != std::string::npos);
  }
  CHECK_THROWS_AS(report_parse("{\"schema_version\": 2, \"report\": {}}"), InputError);
  CHECK_THROWS_AS(report_parse("not json"), InputError);
}

TEST_CASE("cache keys") {
  RunConfig c;
  CatalogEntry a = entry("a", "x*y", true), b = entry("a", "y*x", true);
  CHECK(cache_key(a, c) == cache_key(b, c));
  RunConfig other = c;
  other.k_max = 5;
  CHECK(cache_key(a, c) != cache_key(a, other));
  CatalogEntry renamed = a;
  renamed.name = "b";
  CHECK(cache_key(a, c) != cache_key(renamed, c));
}

TEST_CASE("cached and fresh reports are byte-identical") {
  TempDir dir;
  RunConfig c;
  c.cache_dir = dir.path / "cache";
  c.report_dir = dir.path / "fresh";
  c.format = OutputFormat::Structured;
  c.jobs = 3;
  std::vector<CatalogEntry> entries{entry("node", "x*y", true), entry("cusp", "x^2 - y^3", true),
                                    entry("w-type", "x^4 + y^5 + x*y^4", false)};
  CatalogSummary first = run_entries(entries, c);
  for (const EntryOutcome& o : first.outcomes) CHECK_FALSE(o.cached);
  c.report_dir = dir.path / "cached";
  CatalogSummary second = run_entries(entries, c);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(second.outcomes[i].cached);
    CHECK(*second.outcomes[i].report == *first.outcomes[i].report);
    std::string name = entries[i].name + ".json";
    CHECK(slurp(dir.path / "fresh" / name) == slurp(dir.path / "cached" / name));
  }
  for (const auto& f : fs::directory_iterator(c.cache_dir)) CHECK(f.path().extension() == ".json");

  // text reports too
  c.format = OutputFormat::Text;
  c.report_dir = dir.path / "text1";
  run_entries(entries, c);
  c.report_dir = dir.path / "text2";
  RunConfig nocache = c;
  nocache.cache_dir.clear();
  run_entries(entries, nocache);
  CHECK(slurp(dir.path / "text1" / "cusp.txt") == slurp(dir.path / "text2" / "cusp.txt"));
}

TEST_CASE("exit codes of the command-line tool") {
  TempDir dir;
  CHECK(run_cli("run --f \"x^2 - y^3\"") == kExitOk);
  CHECK(run_cli("run --f \"x^2 - y^3\" --format structured --order lex --kmax 4") == kExitOk);
  CHECK(run_cli("run --f \"x**2\"") == kExitInputError);
  CHECK(run_cli("run --f \"x^2*y\"") == kExitInputError);
  CHECK(run_cli("run --f \"x*y + 1\"") == kExitInputError);
  CHECK(run_cli("run --f \"x*y\" --kmax 0") == kExitInputError);
  CHECK(run_cli("run --f \"x*y\" --basis \"dx\"") == kExitInputError);
  CHECK(run_cli("run --f \"y^2 - x^3 - x^2\"") == kExitInconsistent);
  CHECK(run_cli("frobnicate") == kExitInputError);
  CHECK(run_cli("verify-paper") == kExitOk);

  fs::path wrong = dir.write("wrong.jsonl", "{\"name\":\"cusp\",\"vars\":\"x,y\",\"f\":\"x^2 - y^3\",\"expect_qh\":false}\n");
  CHECK(run_cli("catalog --path \"" + wrong.string() + "\"") == kExitMismatch);
  fs::path empty = dir.write("empty.jsonl", "");
  CHECK(run_cli("catalog --path \"" + empty.string() + "\"") == kExitOk);
  CHECK(run_cli("catalog --path \"" + (dir.path / "none.jsonl").string() + "\"") == kExitInputError);
  CHECK(run_cli(std::string("catalog --jobs 2 --path \"") + LOGDMOD_CATALOG + "\" --cache \"" +
                (dir.path / "c").string() + "\"") == kExitOk);
}

TEST_CASE("golden suite") {
  std::ostringstream out;
  CHECK(verify_golden(out, {}) == kExitOk);
  CHECK(out.str().find("FAIL") == std::string::npos);
  CHECK(out.str().find("PASS h: second syzygies generated by s") != std::string::npos);
}
