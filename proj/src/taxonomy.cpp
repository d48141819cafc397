#include "cpctaxo/taxonomy.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

#include "cpctaxo/text.hpp"

namespace cpctaxo {

namespace {

const std::vector<NodeId>& no_nodes() {
  static const std::vector<NodeId> empty;
  return empty;
}

void push_unique(std::vector<std::string>& out, const std::string& label) {
  if (std::find(out.begin(), out.end(), label) == out.end()) out.push_back(label);
}

}  // namespace

Taxonomy::Taxonomy(char section, TitleTree tree, std::vector<SynonymEntry> synonyms)
    : section_(section), tree_(tree.compacted()), synonyms_(std::move(synonyms)) {
  for (NodeId id : tree_.preorder()) index_[text::casefold(tree_.node(id).label)].push_back(id);
}

const std::vector<NodeId>& Taxonomy::lookup(std::string_view term) const {
  auto it = index_.find(text::casefold(text::trim(term)));
  return it == index_.end() ? no_nodes() : it->second;
}

bool Taxonomy::operator==(const Taxonomy& other) const {
  return section_ == other.section_ && synonyms_ == other.synonyms_ &&
         tree_.rows() == other.tree_.rows();
}

std::vector<TermHypernymPair> extract_pairs(const Taxonomy& taxonomy) {
  std::vector<TermHypernymPair> pairs;
  const auto& tree = taxonomy.tree();
  if (tree.empty()) return pairs;
  const NodeId root = tree.root();
  for (NodeId id : tree.preorder()) {
    const auto& n = tree.node(id);
    if (!n.parent || *n.parent == root) continue;
    pairs.push_back({n.label, tree.node(*n.parent).label, taxonomy.section(), n.code.to_string()});
  }
  return pairs;
}

SectionStats compute_stats(const Taxonomy& taxonomy, std::size_t input_record_count) {
  SectionStats stats;
  stats.section = taxonomy.section();
  stats.title_count = input_record_count;
  stats.pair_count = extract_pairs(taxonomy).size();
  stats.node_count = taxonomy.node_count();
  for (const auto& e : taxonomy.synonyms()) stats.synonym_count += e.synonyms.size();
  return stats;
}

std::vector<std::string> query_hypernyms(const Taxonomy& taxonomy, std::string_view term) {
  std::vector<std::string> out;
  const auto& tree = taxonomy.tree();
  if (tree.empty()) return out;
  const NodeId root = tree.root();
  for (NodeId id : taxonomy.lookup(term)) {
    const auto& n = tree.node(id);
    if (n.parent && *n.parent != root) push_unique(out, tree.node(*n.parent).label);
  }
  return out;
}

std::vector<std::string> query_hyponyms(const Taxonomy& taxonomy, std::string_view term) {
  std::vector<std::string> out;
  const auto& tree = taxonomy.tree();
  if (tree.empty()) return out;
  const NodeId root = tree.root();
  for (NodeId id : taxonomy.lookup(term)) {
    if (id == root) continue;
    for (NodeId child : tree.node(id).children) push_unique(out, tree.node(child).label);
  }
  return out;
}

void write_pairs_tsv(const std::vector<TermHypernymPair>& pairs, std::ostream& out) {
  for (const auto& p : pairs)
    out << p.hyponym << '\t' << p.hypernym << '\t' << p.section << '\t' << p.source_code << '\n';
}

void write_synonyms_tsv(const std::vector<SynonymEntry>& synonyms, std::ostream& out) {
  for (const auto& e : synonyms)
    for (const auto& s : e.synonyms)
      out << e.canonical << '\t' << s << '\t' << e.source_code.to_string() << '\n';
}

std::string stats_json(const SectionStats& stats) {
  nlohmann::ordered_json j;
  j["section"] = std::string(1, stats.section);
  j["title_count"] = stats.title_count;
  j["pair_count"] = stats.pair_count;
  j["node_count"] = stats.node_count;
  j["synonym_count"] = stats.synonym_count;
  return j.dump();
}

std::string stats_json_total(const std::vector<SectionStats>& stats) {
  nlohmann::ordered_json j;
  std::size_t titles = 0, pairs = 0, nodes = 0, synonyms = 0;
  for (const auto& s : stats) {
    titles += s.title_count;
    pairs += s.pair_count;
    nodes += s.node_count;
    synonyms += s.synonym_count;
  }
  j["section"] = "TOTAL";
  j["title_count"] = titles;
  j["pair_count"] = pairs;
  j["node_count"] = nodes;
  j["synonym_count"] = synonyms;
  return j.dump();
}

}  // namespace cpctaxo
