#include "cpctaxo/ingest.hpp"

#include <array>
#include <charconv>

#include "cpctaxo/error.hpp"
#include "cpctaxo/text.hpp"

namespace cpctaxo {

namespace {

// Fields separated by runs of tabs.
std::vector<std::string_view> tab_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == '\t') ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != '\t') ++i;
    fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    fn(line_no, line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

std::optional<char> detect_section(std::string_view text) {
  std::optional<char> found;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (found || text::trim(line).empty()) return;
    auto fields = tab_fields(line);
    std::string_view code = text::trim(fields.front());
    if (!code.empty() && is_section_letter(code.front())) found = code.front();
    else found = '\0';
  });
  if (found && *found == '\0') return std::nullopt;
  return found;
}

std::vector<TitleRecord> parse_title_file(std::string_view text, char section) {
  std::vector<TitleRecord> records;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (text::trim(line).empty()) return;
    auto fields = tab_fields(line);
    if (fields.size() < 2 || fields.size() > 3)
      throw MalformedLine(line_no, "expected 2 or 3 tab-separated fields, got " +
                                       std::to_string(fields.size()));
    std::string_view code_text = text::trim(fields[0]);
    auto code = CpcCode::try_parse(code_text);
    if (!code) throw MalformedLine(line_no, "unparseable code '" + std::string(code_text) + "'");
    if (code->section() != section) throw SectionMismatch(line_no, section, code->section());

    TitleRecord rec;
    rec.code = *code;
    bool ranked = code->level() == CpcLevel::Group || code->level() == CpcLevel::Subgroup;
    if (fields.size() == 3) {
      if (!ranked)
        throw MalformedLine(line_no, "rank given for " + std::string(to_string(code->level())) +
                                         " code " + std::string(code_text));
      std::string_view rank_text = text::trim(fields[1]);
      int rank = -1;
      auto [ptr, ec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), rank);
      if (ec != std::errc() || ptr != rank_text.data() + rank_text.size() || rank < 0)
        throw MalformedLine(line_no, "non-integer rank '" + std::string(rank_text) + "'");
      if (rank > kMaxRank)
        throw MalformedLine(line_no, "rank " + std::to_string(rank) + " exceeds " +
                                         std::to_string(kMaxRank));
      bool main_group = code->level() == CpcLevel::Group;
      if (main_group != (rank == 0))
        throw MalformedLine(line_no, "rank " + std::to_string(rank) + " inconsistent with " +
                                         std::string(to_string(code->level())) + " code " +
                                         std::string(code_text));
      rec.rank = rank;
    } else if (ranked) {
      throw MalformedLine(line_no, "missing rank for " + std::string(code_text));
    }
    rec.raw_title = std::string(text::trim(fields.back()));
    records.push_back(std::move(rec));
  });
  return records;
}

std::string format_title_file(const std::vector<TitleRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.code.to_string();
    out += '\t';
    if (r.rank) out += std::to_string(*r.rank);
    out += '\t';
    out += r.raw_title;
    out += '\n';
  }
  return out;
}

TitleTree build_title_tree(const std::vector<TitleRecord>& records) {
  if (records.empty()) throw MissingSectionHeader("no records");
  if (records.front().code.level() != CpcLevel::Section)
    throw MissingSectionHeader("first record " + records.front().code.to_string() +
                               " is not a section header");

  TitleTree tree;
  const auto& head = records.front();
  NodeId root = tree.add_root(NodeSpec::from_title(head.code, head.rank, head.raw_title));

  std::optional<NodeId> current_class;
  std::optional<NodeId> current_subclass;
  // Most recent node at each rank inside the current main group.
  std::array<std::optional<NodeId>, kMaxRank + 1> last_at_rank{};
  auto clear_ranks = [&](int from) {
    for (int r = from; r <= kMaxRank; ++r) last_at_rank[r].reset();
  };

  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    NodeSpec spec = NodeSpec::from_title(rec.code, rec.rank, rec.raw_title);
    switch (rec.code.level()) {
      case CpcLevel::Section:
        throw MissingSectionHeader("second section header " + rec.code.to_string());
      case CpcLevel::Class:
        current_class = tree.add_child(root, std::move(spec));
        current_subclass.reset();
        clear_ranks(0);
        break;
      case CpcLevel::Subclass:
        if (!current_class) throw OrphanRecord(rec.code.to_string());
        current_subclass = tree.add_child(*current_class, std::move(spec));
        clear_ranks(0);
        break;
      case CpcLevel::Group:
        if (!current_subclass) throw OrphanRecord(rec.code.to_string());
        clear_ranks(0);
        last_at_rank[0] = tree.add_child(*current_subclass, std::move(spec));
        break;
      case CpcLevel::Subgroup: {
        int r = rec.rank.value_or(0);
        if (r < 1 || r > kMaxRank || !last_at_rank[r - 1]) throw OrphanRecord(rec.code.to_string());
        last_at_rank[r] = tree.add_child(*last_at_rank[r - 1], std::move(spec));
        break;
      }
    }
  }
  return tree;
}

TitleTree restrict_depth(TitleTree tree, int max_rank) {
  if (tree.empty()) return tree;
  std::vector<NodeId> doomed;
  for (NodeId id : tree.preorder()) {
    const auto& n = tree.node(id);
    if (n.rank && *n.rank > max_rank) doomed.push_back(id);
  }
  for (NodeId id : doomed)
    if (tree.contains(id)) tree.remove_subtree(id);
  return tree;
}

}  // namespace cpctaxo
