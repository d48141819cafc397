#include "cpctaxo/text.hpp"

#include <algorithm>

namespace cpctaxo::text {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

char lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_alpha(char c) { return is_lower(c) || is_upper(c); }
bool is_word_char(char c) {
  return is_alpha(c) || (c >= '0' && c <= '9') || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string tidy(std::string_view s) {
  std::string collapsed;
  collapsed.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !collapsed.empty()) {
      bool drop = c == ',' || c == ';' || c == ':' || c == ')' || c == ']' ||
                  c == '.' || collapsed.back() == '(' || collapsed.back() == '[';
      if (!drop) collapsed += ' ';
    }
    pending_space = false;
    collapsed += c;
  }
  return collapsed;
}

std::string tidy_edges(std::string_view s) {
  std::string t = tidy(s);
  std::string_view v = t;
  auto dangling = [](char c) { return c == ',' || c == ';' || c == ':' || is_space(c); };
  while (!v.empty() && dangling(v.front())) v.remove_prefix(1);
  while (!v.empty() && dangling(v.back())) v.remove_suffix(1);
  return std::string(v);
}

std::string casefold(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower(c);
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (lower(a[i]) != lower(b[i])) return false;
  return true;
}

bool istarts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && iequals(s.substr(0, prefix.size()), prefix);
}

char first_letter(std::string_view s) {
  for (char c : s) {
    if (is_alpha(c)) return c;
    if (is_word_char(c)) return '\0';
  }
  return '\0';
}

bool is_all_caps(std::string_view s) {
  int letters = 0;
  for (char c : s) {
    if (is_lower(c)) return false;
    if (is_upper(c)) ++letters;
  }
  return letters >= 2;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if ((c == ')' || c == ']') && depth > 0) --depth;
    else if (c == sep && depth == 0) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.emplace_back(s.substr(start));
  return parts;
}

std::size_t find_word(std::string_view s, std::string_view word, std::size_t from) {
  if (word.empty()) return std::string_view::npos;
  for (std::size_t i = from; i + word.size() <= s.size(); ++i) {
    if (!iequals(s.substr(i, word.size()), word)) continue;
    bool left_ok = i == 0 || !is_word_char(s[i - 1]);
    std::size_t end = i + word.size();
    bool right_ok = end == s.size() || !is_word_char(s[end]);
    if (left_ok && right_ok) return i;
  }
  return std::string_view::npos;
}

std::vector<int> paren_depths(std::string_view s) {
  std::vector<int> depth(s.size() + 1, 0);
  int d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth[i] = d;
    if (s[i] == '(') ++d;
    else if (s[i] == ')' && d > 0) --d;
  }
  depth[s.size()] = d;
  return depth;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string joint_form(std::string_view phrase) {
  std::string out = tidy(phrase);
  if (out.empty()) return out;
  if (is_all_caps(out)) return casefold(out);
  auto ws = words(out);
  if (!ws.empty() && is_all_caps(ws.front())) return out;
  for (char& c : out) {
    if (is_alpha(c)) {
      c = lower(c);
      break;
    }
    if (is_word_char(c)) break;
  }
  return out;
}

}  // namespace cpctaxo::text
