#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpctaxo/eval.hpp"
#include "cpctaxo/ingest.hpp"
#include "cpctaxo/rules.hpp"
#include "cpctaxo/taxonomy.hpp"

namespace cpctaxo::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kContentError = 1;
inline constexpr int kUsageError = 2;  // also missing input files
inline constexpr int kWriteError = 3;

struct CliConfig {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  int max_rank = kDefaultMaxRank;
  RuleConfig rules;
  double ratio = 0.8;
  std::uint64_t seed = 42;
  std::vector<int> ks = {1, 3, 10};
  Direction direction = Direction::Hypernym;
  bool stratify = false;
};

// Empty when the config satisfies its invariants, otherwise the reason.
std::string validate(const CliConfig& config);

// Everything produced for one section file.
struct SectionBuild {
  std::filesystem::path source;
  std::size_t record_count = 0;
  Taxonomy taxonomy;
  std::vector<Diagnostic> diagnostics;
};

// Parse, depth-restrict and run the rules over one title-list file's text.
SectionBuild build_section(std::string_view file_text, int max_rank, const RuleConfig& rules);

// Taxonomy files named by paths; directories contribute every
// taxonomy_<X>.tsv inside them.
std::vector<std::filesystem::path> taxonomy_files(const std::vector<std::string>& inputs);

std::filesystem::path taxonomy_path(const std::filesystem::path& dir, char section);

int cmd_build(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_pairs(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_split(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const CliConfig& config, const std::string& prediction_file, std::ostream& out,
             std::ostream& err);
int cmd_query(const CliConfig& config, const std::string& term, Direction direction,
              std::ostream& out, std::ostream& err);

// Full command line entry point (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpctaxo::cli
