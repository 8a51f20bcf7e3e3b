#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clts {

/// Case-folds ASCII and the Latin-1 / Latin Extended-A blocks of a UTF-8 string.
/// Other code points pass through unchanged.
std::string to_lower(std::string_view text);

/// True when the first code point is an uppercase letter.
bool starts_uppercase(std::string_view text);

/// True when `text` is non-empty and made only of punctuation/symbol code points.
bool is_punctuation(std::string_view text);

/// True for a single punctuation code point ('.', '«', '…', ...).
bool is_punctuation_codepoint(char32_t cp);

bool contains_digit(std::string_view text);

std::vector<std::string> split_whitespace(std::string_view text);

std::string_view trim(std::string_view text);

/// Decodes one code point at `pos`, advancing it. Invalid bytes decode as U+FFFD.
char32_t next_codepoint(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

/// Joins tokens with single spaces, without a space before closing punctuation
/// or after opening brackets.
std::string detokenize(const std::vector<std::string>& tokens);

}  // namespace clts
