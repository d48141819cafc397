#pragma once

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "cpctaxo/cpc_code.hpp"
#include "cpctaxo/title_tree.hpp"

namespace cpctaxo {

// Regular expression for CPC codes cited inside titles, including ranges
// such as "A01B1/00-A01B3/00".
const std::string& default_code_pattern();

// Compiled code_pattern used by the detection rules.
class CodePattern {
 public:
  CodePattern() : CodePattern(default_code_pattern()) {}
  explicit CodePattern(const std::string& pattern);

  const std::string& pattern() const { return pattern_; }
  bool found_in(std::string_view s) const;
  bool matches_whole(std::string_view s) const;

 private:
  std::string pattern_;
  std::regex re_;
};

struct RuleConfig {
  bool strip_code_refs = true;
  bool remove_braces = true;
  bool prune_code_nodes = true;
  bool split_semicolon = true;
  bool split_examples = true;
  bool resolve_such = true;
  bool resolve_adverbs = true;
  bool attach_lowercase = true;
  bool collapse_details = true;
  bool extract_synonyms = true;
  std::string code_pattern = default_code_pattern();
};

struct SynonymEntry {
  std::string canonical;
  std::vector<std::string> synonyms;
  CpcCode source_code;

  bool operator==(const SynonymEntry&) const = default;
};

struct Diagnostic {
  std::string code;
  std::string rule;
  std::string message;

  // "WARN\tcode\trule\tmessage"
  std::string to_line() const;
};

// Warnings produced by the label-level rules; the tree passes attach codes.
using Warnings = std::vector<std::string>;

// --- label rules -----------------------------------------------------------

// Deletes every parenthesized span that cites a CPC code. Unbalanced
// parentheses leave the label as is and add a warning.
std::string strip_code_references(std::string_view label, const CodePattern& codes,
                                  Warnings* warnings = nullptr);

std::string remove_braces(std::string_view label);

struct SynonymExtraction {
  std::string label;
  std::vector<SynonymEntry> entries;
};

// Harvests "phrase [ABBR]" and "phrase, i.e. gloss" synonyms and removes the
// bracket and gloss from the label.
SynonymExtraction extract_synonyms(std::string_view label, const CpcCode& code);

// Replaces "such <noun>" with the head phrase of left_context. The "such as"
// marker is left alone.
std::string resolve_such(std::string_view label, std::string_view left_context,
                         Warnings* warnings = nullptr);

// Replaces thereof/therewith/therefor with of/with/for followed by the
// referent.
std::string resolve_adverbs(std::string_view label, std::string_view referent,
                            Warnings* warnings = nullptr);

// Detail or purely referential titles ("Details", "Details of ...",
// "Subject matter not provided for ...").
bool is_detail_label(std::string_view label);

// --- tree passes -----------------------------------------------------------

TitleTree prune_code_containing_nodes(TitleTree tree, const CodePattern& codes);
TitleTree split_semicolon(TitleTree tree);
TitleTree split_examples(TitleTree tree);
TitleTree attach_lowercase(TitleTree tree);
TitleTree collapse_details(TitleTree tree);

// Tree-level drivers for the label rules. Each appends per-node warnings.
TitleTree strip_code_references(TitleTree tree, const CodePattern& codes,
                                std::vector<Diagnostic>* diagnostics = nullptr);
TitleTree remove_braces(TitleTree tree);
TitleTree extract_synonyms(TitleTree tree, std::vector<SynonymEntry>& out);
TitleTree resolve_adverbs(TitleTree tree, std::vector<Diagnostic>* diagnostics = nullptr);
TitleTree resolve_such(TitleTree tree, std::vector<Diagnostic>* diagnostics = nullptr);

// Lower-cases the all-caps section, class and subclass headings.
TitleTree stabilize_heading_case(TitleTree tree);

// Removes empty labels and labels equal to their parent's, re-attaching the
// children like collapse_details.
TitleTree collapse_redundant(TitleTree tree);

struct PipelineResult {
  TitleTree tree;
  std::vector<SynonymEntry> synonyms;
  std::vector<Diagnostic> diagnostics;
};

PipelineResult run_pipeline(TitleTree tree, const RuleConfig& config = {});

}  // namespace cpctaxo
