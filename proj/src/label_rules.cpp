#include <algorithm>
#include <array>
#include <optional>

#include "cpctaxo/rules.hpp"
#include "cpctaxo/text.hpp"
#include "rules_internal.hpp"

namespace cpctaxo {

namespace {

constexpr const char* kCodeForm = R"([A-HY][0-9]{2}(?:[A-Z](?: ?[0-9]{1,4}/[0-9]{2,6})?)?)";

void warn(Warnings* warnings, std::string message) {
  if (warnings) warnings->push_back(std::move(message));
}

// Schwartz-Hearst long-form search: shortest suffix of candidate whose
// characters cover the abbreviation in order, the first one at a word start.
std::optional<std::string> long_form_for(std::string_view abbreviation,
                                         std::string_view candidate) {
  auto lower = [](char c) { return text::casefold(std::string_view(&c, 1))[0]; };
  auto alnum = [](char c) { return text::is_alpha(c) || (c >= '0' && c <= '9'); };
  long s = static_cast<long>(abbreviation.size()) - 1;
  long l = static_cast<long>(candidate.size()) - 1;
  bool matched_any = false;
  while (s >= 0) {
    char c = lower(abbreviation[static_cast<std::size_t>(s)]);
    if (!alnum(c)) {
      --s;
      continue;
    }
    while (l >= 0 && (lower(candidate[static_cast<std::size_t>(l)]) != c ||
                      (s == 0 && l > 0 && alnum(candidate[static_cast<std::size_t>(l - 1)])))) {
      --l;
    }
    if (l < 0) return std::nullopt;
    matched_any = true;
    --l;
    --s;
  }
  if (!matched_any) return std::nullopt;
  // The first abbreviation character matched at a word start, l + 1.
  return std::string(text::trim(candidate.substr(static_cast<std::size_t>(l + 1))));
}

// Text of the clause that ends at the bracket: everything after the last
// clause delimiter, limited to the long-form word window.
std::string clause_before(std::string_view before, std::size_t max_words) {
  auto cut = before.find_last_of(",;:({");
  if (cut != std::string_view::npos) before = before.substr(cut + 1);
  auto ws = text::words(before);
  if (ws.size() > max_words) ws.erase(ws.begin(), ws.end() - static_cast<long>(max_words));
  std::string out;
  for (auto w : ws) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

void add_entry(std::vector<SynonymEntry>& entries, std::string canonical, std::string synonym,
               const CpcCode& code) {
  canonical = text::tidy_edges(canonical);
  synonym = text::tidy_edges(synonym);
  if (canonical.empty() || synonym.empty() || text::iequals(canonical, synonym)) return;
  for (auto& e : entries) {
    if (e.canonical == canonical) {
      if (std::find(e.synonyms.begin(), e.synonyms.end(), synonym) == e.synonyms.end())
        e.synonyms.push_back(std::move(synonym));
      return;
    }
  }
  entries.push_back(SynonymEntry{std::move(canonical), {std::move(synonym)}, code});
}

std::size_t matching_close(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

std::size_t enclosing_open(std::string_view s, std::size_t pos) {
  int depth = 0;
  for (std::size_t i = pos; i-- > 0;) {
    if (s[i] == ')') ++depth;
    else if (s[i] == '(') {
      if (depth == 0) return i;
      --depth;
    }
  }
  return std::string_view::npos;
}

bool has_adverb(std::string_view s) {
  for (const char* w : {"thereof", "therewith", "therefor"})
    if (text::find_word(s, w) != std::string_view::npos) return true;
  return false;
}

const std::regex& example_marker() {
  static const std::regex re(
      R"((?:,\s*|\s+)?\b(?:e\.\s?g\.|eg\.),?\s*|(?:,?\s+)?\bsuch\s+as\s+)",
      std::regex::ECMAScript | std::regex::icase);
  return re;
}

std::string stem(std::string_view word) {
  std::string w = text::casefold(word);
  auto ends = [&](std::string_view suffix) {
    return w.size() > suffix.size() + 1 && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends("ies")) return w.substr(0, w.size() - 3) + "y";
  if (ends("sses") || ends("ches") || ends("shes") || ends("xes")) return w.substr(0, w.size() - 2);
  if (ends("s") && !ends("ss")) return w.substr(0, w.size() - 1);
  return w;
}

std::string_view strip_word_punct(std::string_view w) {
  while (!w.empty() && !text::is_word_char(w.back()) && w.back() != '-') w.remove_suffix(1);
  return w;
}

}  // namespace

const std::string& default_code_pattern() {
  static const std::string pattern = std::string(R"(\b)") + kCodeForm + R"((?:\s*-\s*)" +
                                     kCodeForm + R"()?\b)";
  return pattern;
}

CodePattern::CodePattern(const std::string& pattern)
    : pattern_(pattern), re_(pattern, std::regex::ECMAScript | std::regex::optimize) {}

bool CodePattern::found_in(std::string_view s) const {
  return std::regex_search(s.begin(), s.end(), re_);
}

bool CodePattern::matches_whole(std::string_view s) const {
  return std::regex_match(s.begin(), s.end(), re_);
}

std::string Diagnostic::to_line() const {
  return "WARN\t" + code + "\t" + rule + "\t" + message;
}

std::string strip_code_references(std::string_view label, const CodePattern& codes,
                                  Warnings* warnings) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  int depth = 0;
  std::size_t open = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == '(') {
      if (depth++ == 0) open = i;
    } else if (label[i] == ')') {
      if (depth == 0) {
        warn(warnings, "unbalanced ')' in \"" + std::string(label) + "\"");
        return std::string(label);
      }
      if (--depth == 0) spans.emplace_back(open, i);
    }
  }
  if (depth != 0) {
    warn(warnings, "unbalanced '(' in \"" + std::string(label) + "\"");
    return std::string(label);
  }

  std::string out;
  std::size_t cursor = 0;
  for (auto [from, to] : spans) {
    if (!codes.found_in(label.substr(from + 1, to - from - 1))) continue;
    out.append(label.substr(cursor, from - cursor));
    out += ' ';
    cursor = to + 1;
  }
  out.append(label.substr(cursor));
  return text::tidy(out);
}

std::string remove_braces(std::string_view label) {
  std::string out;
  out.reserve(label.size());
  for (char c : label)
    if (c != '{' && c != '}') out += c;
  return text::tidy(out);
}

SynonymExtraction extract_synonyms(std::string_view label, const CpcCode& code) {
  SynonymExtraction result;
  std::string work(label);

  // [ABBR] brackets.
  std::size_t search = 0;
  for (;;) {
    auto open = work.find('[', search);
    if (open == std::string::npos) break;
    auto close = work.find(']', open + 1);
    if (close == std::string::npos) break;
    std::string abbreviation(text::trim(std::string_view(work).substr(open + 1, close - open - 1)));
    std::string_view before = text::trim(std::string_view(work).substr(0, open));
    if (!abbreviation.empty() && !before.empty()) {
      std::size_t window = std::min(abbreviation.size() + 5, abbreviation.size() * 2);
      std::string clause = clause_before(before, window);
      auto canonical = long_form_for(abbreviation, clause);
      add_entry(result.entries, canonical ? *canonical : clause, abbreviation, code);
    }
    work.erase(open, close - open + 1);
    search = open;
  }

  // ", i.e. gloss" spans.
  static const std::regex ie(R"((?:,\s*|\s+)i\.\s?e\.,?\s*)", std::regex::ECMAScript | std::regex::icase);
  std::smatch m;
  while (std::regex_search(work, m, ie)) {
    std::size_t m0 = static_cast<std::size_t>(m.position(0));
    std::size_t m1 = m0 + static_cast<std::size_t>(m.length(0));
    auto depths = text::paren_depths(work);
    std::size_t scope_begin = 0;
    std::size_t scope_end = work.size();
    if (depths[m0] > 0) {
      std::size_t o = enclosing_open(work, m0);
      std::size_t c = o == std::string::npos ? std::string::npos : matching_close(work, o);
      if (o != std::string::npos && c != std::string::npos) {
        scope_begin = o + 1;
        scope_end = c;
      }
    }
    std::size_t gloss_end = scope_end;
    for (std::size_t i = m1; i < scope_end; ++i) {
      if (work[i] == ';' && depths[i] == depths[m0]) {
        gloss_end = i;
        break;
      }
    }
    std::smatch next;
    std::string tail = work.substr(m1, gloss_end - m1);
    for (auto it = tail.cbegin(); std::regex_search(it, tail.cend(), next, ie);) {
      std::size_t at = m1 + static_cast<std::size_t>(next.position(0) + (it - tail.cbegin()));
      if (depths[at] == depths[m0]) {
        gloss_end = at;
        break;
      }
      it += next.position(0) + next.length(0);
    }
    std::size_t canon_begin = scope_begin;
    for (std::size_t i = m0; i-- > scope_begin;) {
      if (work[i] == ';' && depths[i] == depths[m0]) {
        canon_begin = i + 1;
        break;
      }
    }
    add_entry(result.entries, work.substr(canon_begin, m0 - canon_begin),
              work.substr(m1, gloss_end - m1), code);
    work.erase(m0, gloss_end - m0);
  }

  result.label = text::tidy(work);
  return result;
}

std::string resolve_such(std::string_view label, std::string_view left_context, Warnings* warnings) {
  std::string out(label);
  std::size_t from = 0;
  for (;;) {
    std::size_t at = text::find_word(out, "such", from);
    if (at == std::string::npos) break;
    std::size_t after = at + 4;
    auto rest = text::words(std::string_view(out).substr(after));
    std::size_t skip = 0;
    if (!rest.empty() && (text::iequals(rest[0], "as") || text::iequals(rest[0], "that") ||
                          text::iequals(rest[0], "than"))) {
      from = after;
      continue;
    }
    if (!rest.empty() && (text::iequals(rest[0], "a") || text::iequals(rest[0], "an"))) skip = 1;
    if (rest.size() <= skip || strip_word_punct(rest[skip]).empty()) {
      warn(warnings, "no noun after \"such\" in \"" + out + "\"");
      from = after;
      continue;
    }
    std::string_view noun = strip_word_punct(rest[skip]);

    std::string context = text::tidy_edges(left_context);
    auto segments = text::split_top_level(context, ',');
    std::string head = text::tidy_edges(segments.back());
    if (head.empty() || text::find_word(head, "such") != std::string::npos) {
      warn(warnings, "no referent for \"such\" in \"" + out + "\"");
      from = after;
      continue;
    }
    std::string phrase = text::joint_form(head);
    auto head_words = text::words(phrase);
    std::string replacement;
    if (stem(strip_word_punct(head_words.back())) == stem(noun)) {
      std::size_t last = phrase.rfind(head_words.back());
      replacement = phrase.substr(0, last) + std::string(noun);
    } else {
      replacement = phrase + " " + std::string(noun);
    }
    if (text::is_upper(out[at]) && text::is_lower(replacement[0]))
      replacement[0] = static_cast<char>(replacement[0] - 'a' + 'A');

    std::size_t noun_end = static_cast<std::size_t>(noun.data() - out.data()) + noun.size();
    out.replace(at, noun_end - at, replacement);
    from = at + replacement.size();
  }
  return out == label ? out : text::tidy(out);
}

std::string resolve_adverbs(std::string_view label, std::string_view referent, Warnings* warnings) {
  static constexpr std::array<std::pair<const char*, const char*>, 3> kAdverbs{{
      {"thereof", "of"}, {"therewith", "with"}, {"therefor", "for"}}};
  if (!has_adverb(label)) return std::string(label);

  std::string target(referent);
  std::smatch m;
  if (std::regex_search(target, m, example_marker())) target.resize(static_cast<std::size_t>(m.position(0)));
  static const std::regex ie(R"((?:,\s*|\s+)i\.\s?e\.)", std::regex::ECMAScript | std::regex::icase);
  if (std::regex_search(target, m, ie)) target.resize(static_cast<std::size_t>(m.position(0)));
  target = text::tidy_edges(target);
  if (target.empty() || has_adverb(target)) {
    warn(warnings, "no referent for adverb in \"" + std::string(label) + "\"");
    return std::string(label);
  }
  std::string phrase = text::joint_form(target);

  std::string out(label);
  std::size_t from = 0;
  for (;;) {
    std::size_t best = std::string::npos;
    std::size_t which = 0;
    for (std::size_t i = 0; i < kAdverbs.size(); ++i) {
      std::size_t at = text::find_word(out, kAdverbs[i].first, from);
      if (at < best) {
        best = at;
        which = i;
      }
    }
    if (best == std::string::npos) break;
    std::string replacement = std::string(kAdverbs[which].second) + " " + phrase;
    out.replace(best, std::char_traits<char>::length(kAdverbs[which].first), replacement);
    from = best + replacement.size();
  }
  return text::tidy(out);
}

bool is_detail_label(std::string_view label) {
  std::string_view l = text::trim(label);
  return text::iequals(l, "details") || text::istarts_with(l, "details of ") ||
         text::iequals(l, "details of") || text::istarts_with(l, "subject matter not provided for");
}

namespace detail {

// First example marker outside the scope already handled; used by the tree
// pass in tree_rules.cpp.
std::optional<std::pair<std::size_t, std::size_t>> find_example_marker(const std::string& label) {
  std::smatch m;
  if (!std::regex_search(label, m, example_marker())) return std::nullopt;
  std::size_t start = static_cast<std::size_t>(m.position(0));
  return std::make_pair(start, start + static_cast<std::size_t>(m.length(0)));
}

std::size_t enclosing_paren(const std::string& s, std::size_t pos) { return enclosing_open(s, pos); }
std::size_t closing_paren(const std::string& s, std::size_t open) { return matching_close(s, open); }
bool contains_adverb(std::string_view s) { return has_adverb(s); }

}  // namespace detail

}  // namespace cpctaxo
