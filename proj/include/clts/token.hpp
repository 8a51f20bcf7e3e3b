#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clts {

/// Reduced part-of-speech tagset used by the chunk patterns.
enum class Pos { ADJ, NP, NC, VERB, OTHER, PUNCT };

std::string_view pos_name(Pos pos);
std::optional<Pos> parse_pos(std::string_view name);

struct Token {
  std::string surface;
  std::string lowercased;
  Pos pos = Pos::OTHER;
  bool is_stopword = false;

  bool is_word() const { return pos != Pos::PUNCT; }
  bool is_content() const { return pos != Pos::PUNCT && !is_stopword; }
};

using TokenList = std::vector<Token>;

/// Builds a token, deriving `lowercased` and the stopword flag for `lang`.
Token make_token(std::string surface, Pos pos, std::string_view lang);

/// Number of non-punctuation tokens.
std::size_t word_count(const TokenList& tokens);

std::vector<std::string> surfaces(const TokenList& tokens);

}  // namespace clts
