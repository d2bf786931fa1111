#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logdmod/pipeline.hpp"

namespace logdmod {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconsistent = 3;

inline constexpr int kReportSchemaVersion = 1;

enum class OutputFormat { Text, Structured };

OutputFormat parse_output_format(const std::string& s);

struct RunConfig {
  OrderKind order = OrderKind::GrevLex;
  int k_max = 10;
  int degree_bound = 2;
  OutputFormat format = OutputFormat::Text;
  std::filesystem::path cache_dir;   // empty: no caching
  std::filesystem::path report_dir;  // empty: reports are not written
  unsigned jobs = 1;

  // Throws InputError when K_max < 1 or the degree bound is negative.
  void validate() const;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> vars;
  std::string f;
  std::optional<bool> expect_qh;
  std::optional<std::string> expect_lct;  // "holds", "fails", "holds-modulo-annihilator", ...
  std::string symbol = "f";
  std::vector<std::string> basis;
  std::vector<std::string> notes;
};

// One JSON object per line: name, vars ("x,y" or a list), f, and optional
// expect_qh (bool), expect_lct (bool or status string), symbol, basis, notes.
// Throws InputError on malformed records.
CatalogEntry parse_catalog_entry(const std::string& line);

struct CatalogFile {
  std::vector<CatalogEntry> entries;
  std::vector<std::string> warnings;
  int skipped = 0;
};

// Blank lines and lines starting with '#' are ignored. Malformed records are
// skipped with a warning. Throws InputError when the file cannot be read.
CatalogFile load_catalog(const std::filesystem::path& path);

// Polynomial when the source has no partials, operator otherwise.
std::variant<Poly, WeylOp> parse_expression(const std::string& src, const std::vector<std::string>& vars);

AnalysisOptions options_for(const RunConfig& config, const CatalogEntry& entry);

CurveReport run_single(const Poly& f, const std::vector<std::string>& vars, const RunConfig& config,
                       const std::string& name = "input");

std::string report_emit(const CurveReport& report, OutputFormat format);
// Inverse of the structured emitter. Throws InputError on schema problems.
CurveReport report_parse(const std::string& structured);

// Stable key over the canonical divisor, the entry metadata, the config and
// the engine version.
std::string cache_key(const CatalogEntry& entry, const RunConfig& config);

enum class EntryStatus { Ok, Mismatch, Skipped, Inconsistent };

struct EntryOutcome {
  std::string name;
  EntryStatus status = EntryStatus::Ok;
  std::optional<CurveReport> report;
  bool cached = false;
  std::vector<std::string> messages;
};

struct CatalogSummary {
  std::vector<EntryOutcome> outcomes;
  std::vector<std::string> warnings;
  int skipped = 0;

  // 3 on any inconsistency, else 1 on any mismatch, else 2 when records were
  // skipped, else 0.
  int exit_code() const;
};

// Verdicts compared with the entry's expectations; empty when all match.
std::vector<std::string> check_expectations(const CatalogEntry& entry, const CurveReport& report);

CatalogSummary run_entries(const std::vector<CatalogEntry>& entries, const RunConfig& config);
CatalogSummary run_catalog(const std::filesystem::path& path, const RunConfig& config);
std::string summary_table(const CatalogSummary& summary);

// Built-in golden suite: the reference surface plus a curve set. Writes one
// line per check and returns an exit code under the usual contract.
int verify_golden(std::ostream& out, const RunConfig& config);

}  // namespace logdmod
