#include "clts/text.hpp"

#include <cctype>

namespace clts {

char32_t next_codepoint(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + extra >= text.size()) {
    pos = text.size();
    return 0xFFFD;
  }
  for (int i = 1; i <= extra; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      pos += i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

namespace {

bool is_upper_cp(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;
  if ((cp >= 0x100 && cp <= 0x12F) || (cp >= 0x132 && cp <= 0x137) ||
      (cp >= 0x14A && cp <= 0x177))
    return cp % 2 == 0;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) return cp % 2 == 1;
  return cp == 0x178;
}

char32_t lower_cp(char32_t cp) {
  if (!is_upper_cp(cp)) return cp;
  if (cp < 0x100) return cp + 0x20;
  if (cp == 0x178) return 0xFF;
  return cp + 1;
}

}  // namespace

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = next_codepoint(text, pos);
    if (cp == 0xFFFD) {
      out.append(text.substr(start, pos - start));
    } else {
      append_utf8(out, lower_cp(cp));
    }
  }
  return out;
}

bool starts_uppercase(std::string_view text) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  return is_upper_cp(next_codepoint(text, pos));
}

bool is_punctuation_codepoint(char32_t cp) {
  if (cp < 0x80) return std::ispunct(static_cast<int>(cp)) != 0;
  if (cp >= 0xA1 && cp <= 0xBF) return true;
  if (cp == 0xD7 || cp == 0xF7) return true;
  if (cp >= 0x2010 && cp <= 0x205E) return true;
  return cp >= 0x3000 && cp <= 0x303F;
}

bool is_punctuation(std::string_view text) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!is_punctuation_codepoint(next_codepoint(text, pos))) return false;
  }
  return true;
}

bool contains_digit(std::string_view text) {
  for (const char c : text)
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
  return false;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return text.substr(b, e - b);
}

std::string detokenize(const std::vector<std::string>& tokens) {
  static constexpr std::string_view kNoSpaceBefore[] = {".", ",", ";", ":", "!", "?", ")", "]",
                                                        "}", "%", "»", "...", "'s"};
  static constexpr std::string_view kNoSpaceAfter[] = {"(", "[", "{", "«"};
  const auto in = [](std::string_view t, const auto& set) {
    for (const auto s : set)
      if (s == t) return true;
    return false;
  };
  std::string out;
  bool glue = true;
  for (const auto& t : tokens) {
    if (!glue && !in(t, kNoSpaceBefore)) out.push_back(' ');
    out += t;
    glue = in(t, kNoSpaceAfter) || (!t.empty() && t.back() == '\'' && t.size() <= 3 && t != "'");
  }
  return out;
}

}  // namespace clts
