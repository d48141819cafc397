#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cpctaxo/rules.hpp"
#include "cpctaxo/title_tree.hpp"

namespace cpctaxo {

struct TermHypernymPair {
  std::string hyponym;
  std::string hypernym;
  char section = 'A';
  std::string source_code;

  bool operator==(const TermHypernymPair&) const = default;
};

struct SectionStats {
  char section = 'A';
  std::size_t title_count = 0;
  std::size_t pair_count = 0;
  std::size_t node_count = 0;
  std::size_t synonym_count = 0;
};

// A finished, read-only taxonomy for one CPC section.
class Taxonomy {
 public:
  Taxonomy(char section, TitleTree tree, std::vector<SynonymEntry> synonyms);

  char section() const { return section_; }
  const TitleTree& tree() const { return tree_; }
  const std::vector<SynonymEntry>& synonyms() const { return synonyms_; }
  std::size_t node_count() const { return tree_.size(); }

  // Nodes whose case-folded label equals the case-folded term.
  const std::vector<NodeId>& lookup(std::string_view term) const;

  // Same section, labels, edges, codes and synonyms.
  bool operator==(const Taxonomy& other) const;

 private:
  char section_;
  TitleTree tree_;
  std::vector<SynonymEntry> synonyms_;
  std::unordered_map<std::string, std::vector<NodeId>> index_;
};

// One pair per parent-child edge below the section root, in pre-order.
std::vector<TermHypernymPair> extract_pairs(const Taxonomy& taxonomy);

SectionStats compute_stats(const Taxonomy& taxonomy, std::size_t input_record_count);

// Parent labels of every node matching term. The section root is not a term
// and is never returned.
std::vector<std::string> query_hypernyms(const Taxonomy& taxonomy, std::string_view term);
std::vector<std::string> query_hyponyms(const Taxonomy& taxonomy, std::string_view term);

// Versioned TSV persistence. Throws IoFailure or FormatVersionMismatch.
void save_taxonomy(const Taxonomy& taxonomy, std::ostream& out);
void save_taxonomy(const Taxonomy& taxonomy, const std::filesystem::path& destination);
Taxonomy load_taxonomy(std::istream& in);
Taxonomy load_taxonomy(const std::filesystem::path& source);

// "hyponym\thypernym\tsection\tsource_code" rows.
void write_pairs_tsv(const std::vector<TermHypernymPair>& pairs, std::ostream& out);
// "canonical\tsynonym\tsource_code" rows, one per synonym.
void write_synonyms_tsv(const std::vector<SynonymEntry>& synonyms, std::ostream& out);
// One JSON object with the four counters.
std::string stats_json(const SectionStats& stats);
std::string stats_json_total(const std::vector<SectionStats>& stats);

}  // namespace cpctaxo
