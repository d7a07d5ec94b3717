// Run configuration, JSON/human reports, the corpus runner and the synthetic
// multi-procedure program generator.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "wrapterm/driver/driver.hpp"
#include "wrapterm/frontend/ast.hpp"

namespace wrapterm::cli {

struct RunConfig {
  driver::Options analysis;
  frontend::ParseOptions parse;
};

std::string mode_name(const driver::Options& o);

nlohmann::json report_json(const std::string& file, const driver::Options& o, const driver::Verdict& v);
std::string report_text(const std::string& file, const driver::Options& o, const driver::Verdict& v);

/// Parses and analyzes one file. Throws frontend::FrontendError or
/// std::runtime_error (unreadable file).
driver::Verdict run_file(const RunConfig& cfg, const std::string& path);

struct CorpusRow {
  std::string file;
  std::string status;  // driver status, or "ERROR"
  std::string precondition;
  std::uint64_t solver_calls = 0;
  double wall_ms = 0;
  std::string error;
};

/// Every *.mc file of `dir` (sorted by name), analyzed by `jobs` workers.
std::vector<CorpusRow> run_corpus(const RunConfig& cfg, const std::string& dir, unsigned jobs = 1);
std::string corpus_csv(const std::vector<CorpusRow>& rows);
nlohmann::json corpus_json(const std::vector<CorpusRow>& rows);

struct GenParams {
  unsigned procedures = 4;   // callers, each with one counting loop
  unsigned utilities = 1;    // shared callees
  unsigned calls_per_proc = 3;
  std::uint64_t seed = 1;
};

/// A program whose `main` calls every caller; each caller calls the shared
/// utilities `calls_per_proc` times in total under similar contexts.
std::string generate_program(const GenParams& p);

}  // namespace wrapterm::cli
