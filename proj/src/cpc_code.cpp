#include "cpctaxo/cpc_code.hpp"

#include <algorithm>
#include <cctype>

#include "cpctaxo/error.hpp"

namespace cpctaxo {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_digit);
}

}  // namespace

const char* to_string(CpcLevel level) {
  switch (level) {
    case CpcLevel::Section: return "section";
    case CpcLevel::Class: return "class";
    case CpcLevel::Subclass: return "subclass";
    case CpcLevel::Group: return "group";
    case CpcLevel::Subgroup: return "subgroup";
  }
  return "?";
}

bool is_section_letter(char c) {
  return (c >= 'A' && c <= 'H') || c == 'Y';
}

std::optional<CpcCode> CpcCode::try_parse(std::string_view raw) {
  // [A-HY] ([0-9]{2} ([A-Z] ([0-9]{1,4} / [0-9]{2,6})?)?)?
  if (raw.empty() || !is_section_letter(raw[0])) return std::nullopt;
  CpcCode code;
  code.section_ = raw[0];
  std::string_view rest = raw.substr(1);
  if (rest.empty()) return code;

  if (rest.size() < 2 || !is_digit(rest[0]) || !is_digit(rest[1]))
    return std::nullopt;
  code.class_num_ = std::string(rest.substr(0, 2));
  rest.remove_prefix(2);
  if (rest.empty()) return code;

  if (!is_upper(rest[0])) return std::nullopt;
  code.subclass_ = rest[0];
  rest.remove_prefix(1);
  if (rest.empty()) return code;

  auto slash = rest.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  std::string_view group = rest.substr(0, slash);
  std::string_view subgroup = rest.substr(slash + 1);
  if (group.empty() || group.size() > 4 || !all_digits(group)) return std::nullopt;
  if (subgroup.size() < 2 || subgroup.size() > 6 || !all_digits(subgroup))
    return std::nullopt;
  code.group_ = std::string(group);
  code.subgroup_ = std::string(subgroup);
  return code;
}

CpcCode CpcCode::parse(std::string_view raw) {
  auto code = try_parse(raw);
  if (!code) throw InvalidCode("invalid CPC code '" + std::string(raw) + "'");
  return *code;
}

std::optional<int> CpcCode::group() const {
  if (!group_) return std::nullopt;
  return std::stoi(*group_);
}

std::optional<int> CpcCode::subgroup() const {
  if (!subgroup_) return std::nullopt;
  return std::stoi(*subgroup_);
}

CpcLevel CpcCode::level() const {
  if (subgroup_) {
    bool main_group = std::all_of(subgroup_->begin(), subgroup_->end(),
                                  [](char c) { return c == '0'; });
    return main_group ? CpcLevel::Group : CpcLevel::Subgroup;
  }
  if (subclass_) return CpcLevel::Subclass;
  if (class_num_) return CpcLevel::Class;
  return CpcLevel::Section;
}

std::string CpcCode::to_string() const {
  std::string out(1, section_);
  if (class_num_) out += *class_num_;
  if (subclass_) out += *subclass_;
  if (group_) out += *group_ + "/" + *subgroup_;
  return out;
}

}  // namespace cpctaxo
