#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpctaxo/cpc_code.hpp"
#include "cpctaxo/title_tree.hpp"

namespace cpctaxo {

inline constexpr int kMaxRank = 12;
inline constexpr int kDefaultMaxRank = 2;

// One line of a CPC title-list file.
struct TitleRecord {
  CpcCode code;
  std::optional<int> rank;  // group and subgroup lines only
  std::string raw_title;

  bool operator==(const TitleRecord&) const = default;
};

// Parses one per-section title-list file ("CODE[\tRANK]\tTITLE" per line).
// Throws MalformedLine or SectionMismatch.
std::vector<TitleRecord> parse_title_file(std::string_view text, char section);

// Section letter of the first record in text, if any.
std::optional<char> detect_section(std::string_view text);

// Inverse of parse_title_file, using the official "CODE\t\tTITLE" layout for
// rankless lines.
std::string format_title_file(const std::vector<TitleRecord>& records);

// Throws MissingSectionHeader or OrphanRecord.
TitleTree build_title_tree(const std::vector<TitleRecord>& records);

// Drops every node ranked deeper than max_rank, with its descendants.
TitleTree restrict_depth(TitleTree tree, int max_rank = kDefaultMaxRank);

}  // namespace cpctaxo
