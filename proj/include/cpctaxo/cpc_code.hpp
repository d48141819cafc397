#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace cpctaxo {

enum class CpcLevel { Section, Class, Subclass, Group, Subgroup };

const char* to_string(CpcLevel level);

// A Cooperative Patent Classification symbol such as "G06N3/02".
//
// Digits are kept as written so that to_string() reproduces the input
// exactly; numeric accessors are provided for the group parts.
class CpcCode {
 public:
  CpcCode() = default;

  // Throws InvalidCode.
  static CpcCode parse(std::string_view raw);
  static std::optional<CpcCode> try_parse(std::string_view raw);

  char section() const { return section_; }
  const std::optional<std::string>& class_num() const { return class_num_; }
  std::optional<char> subclass() const { return subclass_; }
  const std::optional<std::string>& group_digits() const { return group_; }
  const std::optional<std::string>& subgroup_digits() const { return subgroup_; }
  std::optional<int> group() const;
  std::optional<int> subgroup() const;

  CpcLevel level() const;

  // Rebuilt from the parsed fields, not cached.
  std::string to_string() const;

  bool operator==(const CpcCode&) const = default;

 private:
  char section_ = 'A';
  std::optional<std::string> class_num_;
  std::optional<char> subclass_;
  std::optional<std::string> group_;
  std::optional<std::string> subgroup_;
};

bool is_section_letter(char c);

}  // namespace cpctaxo
