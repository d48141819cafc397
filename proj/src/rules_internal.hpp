#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace cpctaxo::detail {

// [begin, end) of the first "e.g." / "such as" marker in label.
std::optional<std::pair<std::size_t, std::size_t>> find_example_marker(const std::string& label);
std::size_t enclosing_paren(const std::string& s, std::size_t pos);
std::size_t closing_paren(const std::string& s, std::size_t open);
bool contains_adverb(std::string_view s);

}  // namespace cpctaxo::detail
