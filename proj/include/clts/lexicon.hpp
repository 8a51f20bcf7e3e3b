#pragma once

#include <optional>
#include <string_view>

#include "clts/token.hpp"

namespace clts::lexicon {

/// Languages with bundled stopword lists: en, fr, pt, es.
bool has_stopwords(std::string_view lang);

bool is_stopword(std::string_view lowered, std::string_view lang);

/// Abbreviations ending in '.', e.g. "dr.", "m.", "sra.". Input is lowercased.
bool is_abbreviation(std::string_view lowered, std::string_view lang);

/// Closed-class and high-frequency lexicon entries (determiners, auxiliaries, ...).
std::optional<Pos> lookup(std::string_view lowered, std::string_view lang);

}  // namespace clts::lexicon
