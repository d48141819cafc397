#include "cpctaxo/cli.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cpctaxo/error.hpp"
#include "fs_util.hpp"

namespace fs = std::filesystem;

namespace cpctaxo::cli {

namespace {

struct RuleFlag {
  const char* name;
  bool RuleConfig::*field;
};

constexpr RuleFlag kRuleFlags[] = {
    {"strip-code-refs", &RuleConfig::strip_code_refs},
    {"remove-braces", &RuleConfig::remove_braces},
    {"prune-code-nodes", &RuleConfig::prune_code_nodes},
    {"split-semicolon", &RuleConfig::split_semicolon},
    {"split-examples", &RuleConfig::split_examples},
    {"resolve-such", &RuleConfig::resolve_such},
    {"resolve-adverbs", &RuleConfig::resolve_adverbs},
    {"attach-lowercase", &RuleConfig::attach_lowercase},
    {"collapse-details", &RuleConfig::collapse_details},
    {"extract-synonyms", &RuleConfig::extract_synonyms},
};

bool check_inputs(const CliConfig& config, std::ostream& err) {
  if (config.inputs.empty()) {
    err << "error: no --input given\n";
    return false;
  }
  for (const auto& in : config.inputs) {
    if (!fs::exists(in)) {
      err << "error: input not found: " << in << "\n";
      return false;
    }
  }
  return true;
}

std::vector<SectionBuild> build_all(const CliConfig& config) {
  std::vector<std::future<SectionBuild>> jobs;
  for (const auto& in : config.inputs) {
    jobs.push_back(std::async(std::launch::async, [&config, in] {
      SectionBuild b = build_section(read_file(in), config.max_rank, config.rules);
      b.source = in;
      return b;
    }));
  }
  std::vector<SectionBuild> builds;
  std::string failures;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      builds.push_back(jobs[i].get());
    } catch (const Error& e) {
      failures += config.inputs[i] + ": " + e.what() + "\n";
    }
  }
  if (!failures.empty()) throw Error(failures.substr(0, failures.size() - 1));
  std::map<char, std::string> seen;
  for (const auto& b : builds) {
    auto [it, fresh] = seen.emplace(b.taxonomy.section(), b.source.string());
    if (!fresh)
      throw Error("section " + std::string(1, b.taxonomy.section()) + " given twice (" + it->second +
                  ", " + b.source.string() + ")");
  }
  return builds;
}

std::vector<Taxonomy> load_all(const CliConfig& config) {
  std::vector<Taxonomy> out;
  for (const auto& path : taxonomy_files(config.inputs)) out.push_back(load_taxonomy(path));
  return out;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kWriteError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kContentError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace

std::string validate(const CliConfig& config) {
  if (config.max_rank < 0) return "--max-rank must be >= 0";
  if (!(config.ratio > 0.0 && config.ratio < 1.0)) return "--ratio must lie in (0, 1)";
  if (config.ks.empty()) return "--k needs at least one value";
  for (std::size_t i = 0; i < config.ks.size(); ++i) {
    if (config.ks[i] < 1) return "--k values must be >= 1";
    if (i > 0 && config.ks[i] <= config.ks[i - 1]) return "--k values must be strictly ascending";
  }
  return {};
}

SectionBuild build_section(std::string_view file_text, int max_rank, const RuleConfig& rules) {
  auto section = detect_section(file_text);
  if (!section) throw MissingSectionHeader("cannot determine the section: no section record");
  auto records = parse_title_file(file_text, *section);
  TitleTree tree = restrict_depth(build_title_tree(records), max_rank);
  PipelineResult result = run_pipeline(std::move(tree), rules);
  return SectionBuild{{}, records.size(),
                      Taxonomy(*section, std::move(result.tree), std::move(result.synonyms)),
                      std::move(result.diagnostics)};
}

std::vector<fs::path> taxonomy_files(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(in)) {
        std::string name = entry.path().filename().string();
        if (name.size() == 14 && name.rfind("taxonomy_", 0) == 0 && name.substr(10) == ".tsv" &&
            entry.is_regular_file())
          found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(in);
    }
  }
  return files;
}

fs::path taxonomy_path(const fs::path& dir, char section) {
  return dir / ("taxonomy_" + std::string(1, section) + ".tsv");
}

int cmd_build(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_inputs(config, err)) return kUsageError;
  return guarded(err, [&] {
    std::vector<SectionBuild> builds;
    try {
      builds = build_all(config);
    } catch (const IoFailure& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    }
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec || !fs::is_directory(config.out_dir)) {
      err << "error: cannot create output directory " << config.out_dir << "\n";
      return kWriteError;
    }
    std::sort(builds.begin(), builds.end(),
              [](const auto& a, const auto& b) { return a.taxonomy.section() < b.taxonomy.section(); });

    std::vector<SectionStats> all_stats;
    std::string stats_lines;
    for (const auto& b : builds) {
      const char s = b.taxonomy.section();
      const fs::path dir = config.out_dir;
      save_taxonomy(b.taxonomy, taxonomy_path(dir, s));

      std::ostringstream synonyms;
      write_synonyms_tsv(b.taxonomy.synonyms(), synonyms);
      write_file_atomically(dir / ("synonyms_" + std::string(1, s) + ".tsv"), synonyms.str());

      std::string diag;
      for (const auto& d : b.diagnostics) diag += d.to_line() + "\n";
      write_file_atomically(dir / ("diagnostics_" + std::string(1, s) + ".tsv"), diag);

      all_stats.push_back(compute_stats(b.taxonomy, b.record_count));
      stats_lines += stats_json(all_stats.back()) + "\n";
      err << b.source.string() << ": section " << s << ", " << b.record_count << " titles, "
          << all_stats.back().pair_count << " pairs, " << b.diagnostics.size() << " warnings\n";
    }
    stats_lines += stats_json_total(all_stats) + "\n";
    write_file_atomically(fs::path(config.out_dir) / "stats.jsonl", stats_lines);
    (void)out;
    return kOk;
  });
}

int cmd_stats(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_inputs(config, err)) return kUsageError;
  return guarded(err, [&] {
    auto builds = build_all(config);
    std::sort(builds.begin(), builds.end(),
              [](const auto& a, const auto& b) { return a.taxonomy.section() < b.taxonomy.section(); });
    std::vector<SectionStats> rows;
    for (const auto& b : builds) rows.push_back(compute_stats(b.taxonomy, b.record_count));
    out << "section\ttitles\tpairs\tnodes\tsynonyms\n";
    SectionStats total;
    for (const auto& r : rows) {
      out << r.section << '\t' << r.title_count << '\t' << r.pair_count << '\t' << r.node_count
          << '\t' << r.synonym_count << '\n';
      total.title_count += r.title_count;
      total.pair_count += r.pair_count;
      total.node_count += r.node_count;
      total.synonym_count += r.synonym_count;
    }
    out << "TOTAL\t" << total.title_count << '\t' << total.pair_count << '\t' << total.node_count
        << '\t' << total.synonym_count << '\n';
    return kOk;
  });
}

int cmd_pairs(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_inputs(config, err)) return kUsageError;
  return guarded(err, [&] {
    for (const auto& t : load_all(config)) write_pairs_tsv(extract_pairs(t), out);
    return kOk;
  });
}

int cmd_split(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (!check_inputs(config, err)) return kUsageError;
  return guarded(err, [&] {
    std::vector<TermHypernymPair> pairs;
    for (const auto& t : load_all(config)) {
      auto p = extract_pairs(t);
      pairs.insert(pairs.end(), p.begin(), p.end());
    }
    auto split = make_dataset(pairs, config.direction, config.ratio, config.seed, config.stratify);
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    const std::string prefix = to_string(config.direction);
    std::ostringstream train, test;
    write_dataset_tsv(split.train, train);
    write_dataset_tsv(split.test, test);
    write_file_atomically(fs::path(config.out_dir) / (prefix + "_train.tsv"), train.str());
    write_file_atomically(fs::path(config.out_dir) / (prefix + "_test.tsv"), test.str());
    err << "split " << pairs.size() << " pairs: " << split.train.size() << " train, "
        << split.test.size() << " test\n";
    (void)out;
    return kOk;
  });
}

int cmd_eval(const CliConfig& config, const std::string& prediction_file, std::ostream& out,
             std::ostream& err) {
  if (!fs::exists(prediction_file)) {
    err << "error: prediction file not found: " << prediction_file << "\n";
    return kUsageError;
  }
  return guarded(err, [&] {
    out << evaluate(fs::path(prediction_file), config.ks).to_text();
    return kOk;
  });
}

int cmd_query(const CliConfig& config, const std::string& term, Direction direction,
              std::ostream& out, std::ostream& err) {
  if (!check_inputs(config, err)) return kUsageError;
  return guarded(err, [&] {
    std::vector<std::string> seen;
    for (const auto& t : load_all(config)) {
      auto labels = direction == Direction::Hypernym ? query_hypernyms(t, term) : query_hyponyms(t, term);
      for (auto& l : labels) {
        if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
        out << l << '\n';
        seen.push_back(std::move(l));
      }
    }
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  std::string direction = "hypernym";
  std::map<std::string, bool> disabled;

  CLI::App app{"Build CPC term taxonomies and score hypernym/hyponym predictions", "cpctaxo"};
  app.set_config("--config", "", "flat key=value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--input", config.inputs, "title-list files (build, stats) or taxonomy files/dirs")
      ->allow_extra_args(false);
  app.add_option("--out", config.out_dir, "output directory");
  app.add_option("--max-rank", config.max_rank, "deepest subgroup rank kept")->capture_default_str();
  app.add_option("--ratio", config.ratio, "train fraction for split")->capture_default_str();
  app.add_option("--seed", config.seed, "shuffle seed for split")->capture_default_str();
  app.add_option("--k", config.ks, "Hits@k cut-offs, ascending")->delimiter(',')->capture_default_str();
  app.add_option("--direction", direction, "hypernym or hyponym")
      ->check(CLI::IsMember({"hypernym", "hyponym"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_flag("--stratify", config.stratify, "split each section separately");
  app.add_option("--code-pattern", config.rules.code_pattern, "regular expression for cited CPC codes");
  for (const auto& f : kRuleFlags)
    app.add_flag("--no-" + std::string(f.name), disabled[f.name], "disable the " + std::string(f.name) + " rule");

  std::string prediction_file;
  std::string term;
  auto* build = app.add_subcommand("build", "write per-section taxonomy, synonym and diagnostic files");
  auto* stats = app.add_subcommand("stats", "print per-section title and pair counts");
  auto* pairs = app.add_subcommand("pairs", "print term-hypernym pairs of saved taxonomies");
  auto* split = app.add_subcommand("split", "write train/test files for seq2seq training");
  auto* eval = app.add_subcommand("eval", "score a ranked prediction file");
  eval->add_option("predictions", prediction_file, "prediction TSV")->required();
  auto* query = app.add_subcommand("query", "list hypernyms or hyponyms of a term");
  query->add_option("term", term, "term to look up")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  for (const auto& f : kRuleFlags)
    if (disabled[f.name]) config.rules.*(f.field) = false;
  config.direction = parse_direction(direction);
  if (auto problem = validate(config); !problem.empty()) {
    err << "error: " << problem << "\n";
    return kUsageError;
  }
  try {
    CodePattern check(config.rules.code_pattern);
  } catch (const std::regex_error&) {
    err << "error: --code-pattern is not a valid regular expression\n";
    return kUsageError;
  }

  if (*build) return cmd_build(config, out, err);
  if (*stats) return cmd_stats(config, out, err);
  if (*pairs) return cmd_pairs(config, out, err);
  if (*split) return cmd_split(config, out, err);
  if (*eval) return cmd_eval(config, prediction_file, out, err);
  return cmd_query(config, term, config.direction, out, err);
}

}  // namespace cpctaxo::cli
