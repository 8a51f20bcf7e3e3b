#include "clts/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "clts/lexicon.hpp"
#include "clts/text.hpp"
#include "clts/translation.hpp"

namespace clts {

namespace fs = std::filesystem;

// Token ----------------------------------------------------------------------

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::ADJ: return "ADJ";
    case Pos::NP: return "NP";
    case Pos::NC: return "NC";
    case Pos::VERB: return "VERB";
    case Pos::OTHER: return "OTHER";
    case Pos::PUNCT: return "PUNCT";
  }
  return "OTHER";
}

std::optional<Pos> parse_pos(std::string_view name) {
  for (const Pos p : {Pos::ADJ, Pos::NP, Pos::NC, Pos::VERB, Pos::OTHER, Pos::PUNCT})
    if (pos_name(p) == name) return p;
  return std::nullopt;
}

Token make_token(std::string surface, Pos pos, std::string_view lang) {
  Token t;
  t.lowercased = to_lower(surface);
  t.surface = std::move(surface);
  t.pos = pos;
  t.is_stopword = pos != Pos::PUNCT && lexicon::is_stopword(t.lowercased, lang);
  return t;
}

std::size_t word_count(const TokenList& tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.is_word(); }));
}

std::vector<std::string> surfaces(const TokenList& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::string SentenceId::str() const {
  return topic + "/" + document + "/" + std::to_string(index);
}

std::size_t Topic::sentence_count() const {
  std::size_t n = 0;
  for (const auto& d : documents) n += d.size();
  return n;
}

std::vector<BilingualSentence> Topic::sentences() const {
  std::vector<BilingualSentence> out;
  out.reserve(sentence_count());
  for (const auto& d : documents) out.insert(out.end(), d.begin(), d.end());
  return out;
}

// Tokenization ---------------------------------------------------------------

namespace {

bool is_elision_prefix(std::string_view lowered, std::string_view lang) {
  static constexpr std::string_view kFr[] = {"l",  "d",  "j",    "m",      "n",      "s",
                                             "t",  "c",  "qu",   "jusqu",  "lorsqu", "puisqu",
                                             "quoiqu"};
  if (lang != "fr") return false;
  return std::find(std::begin(kFr), std::end(kFr), lowered) != std::end(kFr);
}

// Splits a leading/trailing run of punctuation off `word`; keeps internal marks.
void split_raw_word(std::string_view word, std::string_view lang, std::vector<std::string>& out) {
  const std::string lowered = to_lower(word);
  if (lexicon::is_abbreviation(lowered, lang)) {
    out.emplace_back(word);
    return;
  }
  // Initials such as "J." stay whole.
  if (word.size() == 2 && word[1] == '.' && starts_uppercase(word)) {
    out.emplace_back(word);
    return;
  }

  std::vector<std::string> codepoints;
  for (std::size_t pos = 0; pos < word.size();) {
    const std::size_t start = pos;
    next_codepoint(word, pos);
    codepoints.emplace_back(word.substr(start, pos - start));
  }
  const auto punct = [&](std::size_t i) { return is_punctuation(codepoints[i]); };

  std::size_t b = 0;
  std::size_t e = codepoints.size();
  while (b < e && punct(b)) ++b;
  while (e > b && punct(e - 1)) --e;

  for (std::size_t i = 0; i < b; ++i) out.push_back(codepoints[i]);

  std::string core;
  for (std::size_t i = b; i < e; ++i) core += codepoints[i] == "’" ? "'" : codepoints[i];
  if (!core.empty()) {
    const auto apostrophe = core.find('\'');
    const std::string lower_core = to_lower(core);
    if (apostrophe != std::string::npos && apostrophe + 1 < core.size() &&
        is_elision_prefix(lower_core.substr(0, apostrophe), lang)) {
      out.push_back(core.substr(0, apostrophe + 1));
      out.push_back(core.substr(apostrophe + 1));
    } else if (lang == "en" && core.size() > 2 && lower_core.ends_with("'s")) {
      out.push_back(core.substr(0, core.size() - 2));
      out.push_back(core.substr(core.size() - 2));
    } else if (lang == "en" && core.size() > 3 && lower_core.ends_with("n't")) {
      out.push_back(core.substr(0, core.size() - 3));
      out.push_back(core.substr(core.size() - 3));
    } else {
      out.push_back(std::move(core));
    }
  }

  // Trailing marks; a run of dots stays one token ("...").
  for (std::size_t i = e; i < codepoints.size();) {
    if (codepoints[i] == ".") {
      std::size_t j = i;
      while (j < codepoints.size() && codepoints[j] == ".") ++j;
      out.push_back(std::string(j - i, '.'));
      i = j;
    } else {
      out.push_back(codepoints[i++]);
    }
  }
}

bool is_terminal(std::string_view t) {
  return t == "." || t == "!" || t == "?" || t == "..." || t == "…";
}

bool is_closing(std::string_view t) {
  return t == ")" || t == "\"" || t == "»" || t == "”" || t == "'" || t == "’" || t == "]";
}

bool is_opening(std::string_view t) {
  return t == "(" || t == "\"" || t == "«" || t == "“" || t == "[" || t == "'" || t == "‘";
}

TokenList tag_words(const std::vector<std::string>& words, std::string_view lang) {
  TokenList out;
  out.reserve(words.size());
  bool initial = true;
  for (const auto& w : words) {
    const Pos pos = naive_tag(w, lang, initial);
    out.push_back(make_token(w, pos, lang));
    if (pos != Pos::PUNCT || !is_opening(w)) initial = false;
  }
  return out;
}

bool ends_with_any(std::string_view w, std::initializer_list<std::string_view> suffixes,
                   std::size_t min_stem = 2) {
  for (const auto s : suffixes)
    if (w.size() >= s.size() + min_stem && w.ends_with(s)) return true;
  return false;
}

bool all_upper(std::string_view w) {
  if (w.size() < 2) return false;
  for (const char c : w)
    if (!(c >= 'A' && c <= 'Z')) return false;
  return true;
}

}  // namespace

std::vector<std::string> split_words(std::string_view text, std::string_view lang) {
  std::vector<std::string> out;
  for (const auto& raw : split_whitespace(text)) split_raw_word(raw, lang, out);
  return out;
}

Pos naive_tag(std::string_view surface, std::string_view lang, bool sentence_initial) {
  if (is_punctuation(surface)) return Pos::PUNCT;
  if (contains_digit(surface)) return Pos::OTHER;
  const std::string w = to_lower(surface);
  if (const auto hit = lexicon::lookup(w, lang)) return *hit;
  if (all_upper(surface)) return Pos::NP;
  const bool capitalized = starts_uppercase(surface);
  if (capitalized && !sentence_initial) return Pos::NP;

  std::optional<Pos> by_suffix;
  if (lang == "en") {
    if (ends_with_any(w, {"ly"}, 3)) by_suffix = Pos::OTHER;
    else if (ends_with_any(w, {"ing", "ed"}, 2)) by_suffix = Pos::VERB;
    else if (ends_with_any(w, {"ous", "ful", "ive", "able", "ible", "ical", "ic", "less", "ish",
                               "al", "ary"}, 3))
      by_suffix = Pos::ADJ;
  } else if (lang == "fr") {
    if (ends_with_any(w, {"amment", "emment"}, 2)) by_suffix = Pos::OTHER;
    else if (ends_with_any(w, {"ait", "aient", "èrent", "eront", "erait", "ir", "er"}, 3))
      by_suffix = Pos::VERB;
    else if (ends_with_any(w, {"ique", "iques", "eux", "euse", "euses", "able", "ables", "ible",
                               "ibles", "aire", "aires", "elle", "elles", "al", "ale", "ales",
                               "aux", "if", "ifs", "ive", "ives", "ien", "ienne", "é", "ée",
                               "és", "ées"}, 3))
      by_suffix = Pos::ADJ;
  } else if (lang == "pt" || lang == "es") {
    if (ends_with_any(w, {"mente"}, 3)) by_suffix = Pos::OTHER;
    else if (ends_with_any(w, {"ar", "er", "ir", "ou", "ió", "aron", "ado", "ada"}, 3))
      by_suffix = Pos::VERB;
  }
  if (by_suffix) return *by_suffix;
  return capitalized ? Pos::NP : Pos::NC;
}

std::vector<TokenList> tokenize(std::string_view text, std::string_view lang) {
  const auto words = split_words(text, lang);
  std::vector<TokenList> sentences;
  std::vector<std::string> current;
  for (std::size_t i = 0; i < words.size(); ++i) {
    current.push_back(words[i]);
    if (!is_terminal(words[i])) continue;
    while (i + 1 < words.size() && (is_terminal(words[i + 1]) || is_closing(words[i + 1])))
      current.push_back(words[++i]);
    sentences.push_back(tag_words(current, lang));
    current.clear();
  }
  if (!current.empty()) sentences.push_back(tag_words(current, lang));
  return sentences;
}

TokenList tokenize_sentence(std::string_view line, std::string_view lang) {
  const auto raw = split_whitespace(line);
  bool tagged = !raw.empty();
  for (const auto& r : raw) {
    const auto slash = r.rfind('/');
    if (slash == std::string::npos || slash == 0 || !parse_pos(std::string_view(r).substr(slash + 1))) {
      tagged = false;
      break;
    }
  }
  if (!tagged) return tag_words(split_words(line, lang), lang);

  TokenList out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    const auto slash = r.rfind('/');
    out.push_back(make_token(r.substr(0, slash), *parse_pos(std::string_view(r).substr(slash + 1)),
                             lang));
  }
  return out;
}

// Chunking -------------------------------------------------------------------

bool chunking_supported(std::string_view lang) { return lang == "en" || lang == "fr"; }

std::vector<Chunk> match_chunk_pattern(std::span<const Pos> tags, std::string_view target_lang) {
  if (!chunking_supported(target_lang))
    throw std::invalid_argument("no chunk pattern for language '" + std::string(target_lang) + "'");
  const bool trailing_adjectives = target_lang == "fr";
  const auto nominal = [](Pos p) { return p == Pos::NP || p == Pos::NC; };

  std::vector<Chunk> chunks;
  const std::size_t n = tags.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && tags[j] == Pos::ADJ) ++j;
    std::size_t k = j;
    while (k < n && nominal(tags[k])) ++k;
    if (k == j) {
      ++i;
      continue;
    }
    if (trailing_adjectives)
      while (k < n && tags[k] == Pos::ADJ) ++k;
    chunks.push_back(Chunk{i, k, {}});
    i = k;
  }
  return chunks;
}

std::vector<Chunk> mark_chunks(const TokenList& tokens, std::string_view target_lang) {
  std::vector<Pos> tags;
  tags.reserve(tokens.size());
  for (const auto& t : tokens) tags.push_back(t.pos);
  auto chunks = match_chunk_pattern(tags, target_lang);
  for (auto& c : chunks) {
    for (std::size_t i = c.begin; i < c.end; ++i) {
      if (i > c.begin) c.text += ' ';
      c.text += tokens[i].lowercased;
    }
  }
  return chunks;
}

// Loading --------------------------------------------------------------------

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

BilingualSentence make_sentence(SentenceId id, TokenList source, TokenList target,
                                std::string_view target_lang, const LoadOptions& options) {
  BilingualSentence s;
  s.id = std::move(id);
  s.source_tokens = std::move(source);
  s.target_tokens = std::move(target);
  if (options.mark_chunks) {
    if (options.chunker) {
      s.target_chunks = options.chunker(s.target_tokens, target_lang);
    } else if (chunking_supported(target_lang)) {
      s.target_chunks = mark_chunks(s.target_tokens, target_lang);
    }
  }
  s.source_vector = TermVector::from_tokens(s.source_tokens);
  s.target_vector = TermVector::from_tokens(s.target_tokens);
  return s;
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> sorted_entries(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Topic> load_topics(const fs::path& corpus_root, std::string_view source_lang,
                               std::string_view target_lang, const TranslationProvider& provider,
                               const LoadOptions& options) {
  if (!fs::is_directory(corpus_root))
    throw CorpusError("corpus root is not a directory: " + corpus_root.string());

  const std::string src_suffix = "." + std::string(source_lang) + ".txt";
  const std::string tgt_suffix = "." + std::string(target_lang) + ".txt";

  std::vector<Topic> topics;
  for (const auto& topic_dir : sorted_entries(corpus_root)) {
    if (!fs::is_directory(topic_dir)) continue;
    Topic topic;
    topic.id = topic_dir.filename().string();

    for (const auto& file : sorted_entries(topic_dir)) {
      const std::string name = file.filename().string();
      if (name.starts_with("ref")) {
        if (name.ends_with(tgt_suffix)) topic.reference_summaries.push_back(read_file(file));
        continue;
      }
      if (!name.ends_with(src_suffix) || name.size() == src_suffix.size()) continue;

      SourceDocument doc;
      doc.directory = topic_dir;
      doc.name = name.substr(0, name.size() - src_suffix.size());
      doc.sentences = read_lines(file);
      if (doc.sentences.empty()) throw CorpusError("empty document: " + file.string());
      for (std::size_t i = 0; i < doc.sentences.size(); ++i)
        if (doc.sentences[i].empty())
          throw CorpusError(file.string() + ": empty sentence at line " + std::to_string(i + 1));

      const auto translated = translate_document(doc, source_lang, target_lang, provider);

      std::vector<BilingualSentence> sentences;
      sentences.reserve(doc.sentences.size());
      for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        auto source = tokenize_sentence(doc.sentences[i], source_lang);
        auto target = tokenize_sentence(translated[i], target_lang);
        if (source.empty() || target.empty())
          throw CorpusError(file.string() + ": sentence " + std::to_string(i + 1) +
                            " has no tokens on one side");
        sentences.push_back(make_sentence(SentenceId{topic.id, doc.name, i}, std::move(source),
                                          std::move(target), target_lang, options));
      }
      topic.document_names.push_back(doc.name);
      topic.documents.push_back(std::move(sentences));
    }
    if (topic.documents.empty())
      throw CorpusError("topic " + topic.id + " has no " + std::string(source_lang) +
                        " documents");
    topics.push_back(std::move(topic));
  }
  return topics;
}

std::vector<Topic> load_topics(const fs::path& corpus_root, std::string_view source_lang,
                               std::string_view target_lang, const LoadOptions& options) {
  return load_topics(corpus_root, source_lang, target_lang, FileBackedProvider{}, options);
}

// Statistics -----------------------------------------------------------------

CorpusStats corpus_stats(const std::vector<Topic>& topics) {
  CorpusStats stats;
  std::set<std::string> source_vocab;
  std::set<std::string> target_vocab;
  for (const auto& topic : topics) {
    for (const auto& doc : topic.documents) {
      for (const auto& s : doc) {
        for (const auto& t : s.source_tokens)
          if (t.is_word()) {
            ++stats.source.words;
            source_vocab.insert(t.lowercased);
          }
        for (const auto& t : s.target_tokens)
          if (t.is_word()) {
            ++stats.target.words;
            target_vocab.insert(t.lowercased);
          }
        for (const auto& c : s.target_chunks)
          if (c.length() >= 2) {
            ++stats.target.chunks;
            stats.target.chunk_length.total += static_cast<std::int64_t>(c.length());
          }
        ++stats.source.sentences;
        ++stats.target.sentences;
      }
    }
  }
  for (SideStats* side : {&stats.source, &stats.target})
    side->sentence_length = Mean{side->words, side->sentences};
  stats.source.vocabulary = static_cast<std::int64_t>(source_vocab.size());
  stats.target.vocabulary = static_cast<std::int64_t>(target_vocab.size());
  stats.target.chunk_length.count = stats.target.chunks;
  return stats;
}

}  // namespace clts
