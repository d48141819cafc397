#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small ASCII-oriented string helpers shared by the parsers and rules.
namespace cpctaxo::text {

std::string_view trim(std::string_view s);

// Collapses whitespace runs to one space, removes spaces before ,;:.)]
// and after ([, and trims the ends.
std::string tidy(std::string_view s);

// tidy() plus removal of dangling ",;:" at either end.
std::string tidy_edges(std::string_view s);

std::string casefold(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool istarts_with(std::string_view s, std::string_view prefix);

bool is_lower(char c);
bool is_upper(char c);
bool is_alpha(char c);
bool is_word_char(char c);

// First alphabetic character, skipping leading punctuation and spaces.
// Returns '\0' when there is none.
char first_letter(std::string_view s);

// True when the string has at least two letters and none of them is lowercase.
bool is_all_caps(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

// Splits on sep only at parenthesis/bracket depth zero.
std::vector<std::string> split_top_level(std::string_view s, char sep);

// Position of a whole-word, case-insensitive occurrence of word at or after
// from; npos when absent.
std::size_t find_word(std::string_view s, std::string_view word,
                      std::size_t from = 0);

// Parenthesis depth just before each byte; negative depths clamp to zero.
std::vector<int> paren_depths(std::string_view s);

// Whitespace separated tokens.
std::vector<std::string_view> words(std::string_view s);

// Lower-cases a phrase for use in the middle of another label: all-caps
// headings are lowered entirely, a leading acronym is kept, otherwise only
// the first letter is lowered.
std::string joint_form(std::string_view phrase);

}  // namespace cpctaxo::text
