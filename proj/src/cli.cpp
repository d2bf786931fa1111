#include "logdmod/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "logdmod/errors.hpp"
#include "logdmod/parser.hpp"

namespace logdmod {

namespace fs = std::filesystem;

OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "structured") return OutputFormat::Structured;
  throw InputError("unknown output format '" + s + "' (expected text or structured)");
}

void RunConfig::validate() const {
  if (k_max < 1) throw InputError("K_max must be at least 1");
  if (degree_bound < 0) throw InputError("degree bound must be non-negative");
}

CatalogEntry parse_catalog_entry(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("catalog record must be an object");
  auto string_field = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw InputError(std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
  };
  auto string_list = [&](const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw InputError(std::string("field '") + key + "' must be a list of strings");
    for (const auto& v : j[key]) {
      if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a list of strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };

  CatalogEntry e;
  e.name = string_field("name");
  if (!j.contains("vars")) throw InputError("missing field 'vars'");
  if (j["vars"].is_string()) {
    try {
      e.vars = parse_variable_list(j["vars"].get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw InputError(err.what());
    }
  } else {
    e.vars = string_list("vars");
    std::string joined;
    for (const auto& v : e.vars) joined += (joined.empty() ? "" : ",") + v;
    try {
      e.vars = parse_variable_list(joined);
    } catch (const std::invalid_argument& err) {
      throw InputError(err.what());
    }
  }
  e.f = string_field("f");
  if (j.contains("expect_qh")) {
    if (!j["expect_qh"].is_boolean()) throw InputError("expect_qh must be a boolean");
    e.expect_qh = j["expect_qh"].get<bool>();
  }
  if (j.contains("expect_lct")) {
    const auto& v = j["expect_lct"];
    if (v.is_boolean())
      e.expect_lct = v.get<bool>() ? "holds" : "fails";
    else if (v.is_string())
      e.expect_lct = to_string(parse_lct_status(v.get<std::string>()));
    else
      throw InputError("expect_lct must be a boolean or a status string");
  }
  if (j.contains("symbol")) e.symbol = string_field("symbol");
  e.basis = string_list("basis");
  e.notes = string_list("notes");
  return e;
}

CatalogFile load_catalog(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read catalog " + path.string());
  CatalogFile out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      CatalogEntry e = parse_catalog_entry(line);
      Poly f = parse_polynomial(e.f, e.vars);
      if (f.is_zero()) throw InputError("divisor is zero");
      for (const std::string& b : e.basis) parse_operator(b, e.vars);
      out.entries.push_back(std::move(e));
    } catch (const std::exception& err) {
      out.warnings.push_back("line " + std::to_string(number) + ": skipped: " + err.what());
      ++out.skipped;
    }
  }
  return out;
}

std::variant<Poly, WeylOp> parse_expression(const std::string& src, const std::vector<std::string>& vars) {
  WeylOp op = parse_operator(src, vars);
  if (op.order() <= 0) return Poly(static_cast<int>(vars.size()), op.terms());
  return op;
}

AnalysisOptions options_for(const RunConfig& config, const CatalogEntry& entry) {
  AnalysisOptions o;
  o.order = config.order;
  o.k_max = config.k_max;
  o.degree_bound = config.degree_bound;
  o.basis_hint = entry.basis;
  o.symbol = entry.symbol;
  o.notes = entry.notes;
  return o;
}

CurveReport run_single(const Poly& f, const std::vector<std::string>& vars, const RunConfig& config,
                       const std::string& name) {
  config.validate();
  return analyze_divisor(f, vars, name, options_for(config, CatalogEntry{}));
}

std::string cache_key(const CatalogEntry& entry, const RunConfig& config) {
  std::ostringstream canon;
  canon << engine_version() << '\n' << entry.name << '\n';
  for (const std::string& v : entry.vars) canon << v << ',';
  canon << '\n' << to_string(parse_polynomial(entry.f, entry.vars), entry.vars, PrintStyle::Parseable) << '\n';
  for (const std::string& b : entry.basis)
    canon << to_string(parse_operator(b, entry.vars), entry.vars, PrintStyle::Parseable) << ';';
  canon << '\n' << entry.symbol << '\n';
  for (const std::string& n : entry.notes) canon << n << ';';
  canon << '\n'
        << TermOrder(config.order, 2).name() << ' ' << config.k_max << ' ' << config.degree_bound;
  // 64-bit FNV-1a.
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

namespace {

void write_atomically(const fs::path& target, const std::string& content) {
  fs::create_directories(target.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  fs::path tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out.empty() ? "entry" : out;
}

EntryOutcome run_entry(const CatalogEntry& entry, const RunConfig& config) {
  EntryOutcome o;
  o.name = entry.name;
  try {
    const std::string key = cache_key(entry, config);
    const fs::path cached = config.cache_dir.empty() ? fs::path() : config.cache_dir / (key + ".json");
    if (!cached.empty()) {
      if (auto text = read_file(cached)) {
        try {
          o.report = report_parse(*text);
          o.cached = true;
        } catch (const InputError&) {
          o.messages.push_back("ignored unreadable cache file " + cached.string());
        }
      }
    }
    if (!o.report) {
      Poly f = parse_polynomial(entry.f, entry.vars);
      o.report = analyze_divisor(f, entry.vars, entry.name, options_for(config, entry));
      if (!cached.empty()) write_atomically(cached, report_emit(*o.report, OutputFormat::Structured));
    }
    if (!config.report_dir.empty()) {
      const char* ext = config.format == OutputFormat::Text ? ".txt" : ".json";
      write_atomically(config.report_dir / (file_stem(entry.name) + ext), report_emit(*o.report, config.format));
    }
    std::vector<std::string> mismatches = check_expectations(entry, *o.report);
    if (!mismatches.empty()) {
      o.status = EntryStatus::Mismatch;
      o.messages.insert(o.messages.end(), mismatches.begin(), mismatches.end());
    }
  } catch (const InconsistencyError& e) {
    o.status = EntryStatus::Inconsistent;
    o.messages.push_back(std::string("internal inconsistency: ") + e.what());
  } catch (const ParseError& e) {
    o.status = EntryStatus::Skipped;
    o.messages.push_back(std::string("skipped: ") + e.what());
  } catch (const std::invalid_argument& e) {
    o.status = EntryStatus::Skipped;
    o.messages.push_back(std::string("skipped: ") + e.what());
  } catch (const std::exception& e) {
    o.status = EntryStatus::Inconsistent;
    o.messages.push_back(std::string("internal error: ") + e.what());
  }
  return o;
}

}  // namespace

std::vector<std::string> check_expectations(const CatalogEntry& entry, const CurveReport& report) {
  std::vector<std::string> out;
  if (entry.expect_qh && *entry.expect_qh != report.qh.quasi_homogeneous)
    out.push_back(std::string("expected QH = ") + (*entry.expect_qh ? "true" : "false") + ", got " +
                  (report.qh.quasi_homogeneous ? "true" : "false"));
  if (entry.expect_lct && *entry.expect_lct != report.lct.status)
    out.push_back("expected LCT " + *entry.expect_lct + ", got " + report.lct.status);
  return out;
}

int CatalogSummary::exit_code() const {
  bool mismatch = false;
  for (const EntryOutcome& o : outcomes) {
    if (o.status == EntryStatus::Inconsistent) return kExitInconsistent;
    if (o.status == EntryStatus::Mismatch) mismatch = true;
  }
  if (mismatch) return kExitMismatch;
  return skipped > 0 ? kExitInputError : kExitOk;
}

CatalogSummary run_entries(const std::vector<CatalogEntry>& entries, const RunConfig& config) {
  config.validate();
  CatalogSummary summary;
  summary.outcomes.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) summary.outcomes[i] = run_entry(entries[i], config);
  };
  const std::size_t workers = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(1, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const EntryOutcome& o : summary.outcomes) {
    if (o.status != EntryStatus::Skipped) continue;
    ++summary.skipped;
    for (const std::string& m : o.messages) summary.warnings.push_back(o.name + ": " + m);
  }
  return summary;
}

CatalogSummary run_catalog(const fs::path& path, const RunConfig& config) {
  CatalogFile file = load_catalog(path);
  CatalogSummary summary = run_entries(file.entries, config);
  summary.skipped += file.skipped;
  summary.warnings.insert(summary.warnings.begin(), file.warnings.begin(), file.warnings.end());
  return summary;
}

std::string summary_table(const CatalogSummary& summary) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "name" << std::setw(5) << "QH" << std::setw(26) << "LCT" << std::setw(10)
      << "duality" << std::setw(12) << "Ext2 cert" << std::setw(8) << "cached"
      << "status\n";
  for (const EntryOutcome& o : summary.outcomes) {
    if (o.status == EntryStatus::Skipped) continue;
    out << std::left << std::setw(22) << o.name;
    if (o.report) {
      const CurveReport& r = *o.report;
      std::string cert = !r.probe.ran ? "-" : r.probe.first_unsolvable > 0 ? "K=" + std::to_string(r.probe.first_unsolvable)
                                                                             : "none";
      out << std::setw(5) << (r.qh.quasi_homogeneous ? "yes" : "no") << std::setw(26) << r.lct.status << std::setw(10)
          << (r.saito.found ? (r.duality.holds ? "holds" : "fails") : "-") << std::setw(12) << cert << std::setw(8)
          << (o.cached ? "yes" : "no");
    } else {
      out << std::setw(5) << "-" << std::setw(26) << "-" << std::setw(10) << "-" << std::setw(12) << "-"
          << std::setw(8) << "-";
    }
    switch (o.status) {
      case EntryStatus::Ok: out << "ok"; break;
      case EntryStatus::Mismatch: out << "MISMATCH"; break;
      case EntryStatus::Inconsistent: out << "INCONSISTENT"; break;
      case EntryStatus::Skipped: break;
    }
    out << "\n";
    if (o.status != EntryStatus::Ok)
      for (const std::string& m : o.messages) out << "    " << m << "\n";
  }
  std::size_t ran = 0;
  for (const EntryOutcome& o : summary.outcomes) ran += o.status != EntryStatus::Skipped;
  out << ran << " processed, " << summary.skipped << " skipped\n";
  return out.str();
}

}  // namespace logdmod
