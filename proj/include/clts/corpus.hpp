#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clts/term_vector.hpp"
#include "clts/token.hpp"

namespace clts {

class TranslationProvider;

/// Raised for malformed corpora: missing files, misaligned documents, empty documents.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half-open token span [begin, end) inside one sentence.
struct Chunk {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;

  std::size_t length() const { return end - begin; }
  bool operator==(const Chunk&) const = default;
};

struct SentenceId {
  std::string topic;
  std::string document;
  std::size_t index = 0;

  std::string str() const;
  auto operator<=>(const SentenceId&) const = default;
};

struct BilingualSentence {
  SentenceId id;
  TokenList source_tokens;
  TokenList target_tokens;
  std::vector<Chunk> target_chunks;
  TermVector source_vector;
  TermVector target_vector;
};

struct Topic {
  std::string id;
  std::vector<std::string> document_names;
  std::vector<std::vector<BilingualSentence>> documents;
  std::vector<std::string> reference_summaries;

  std::size_t sentence_count() const;
  /// All sentences, documents concatenated in load order.
  std::vector<BilingualSentence> sentences() const;
};

// Tokenization and tagging ---------------------------------------------------

/// Splits raw text into sentences of tagged tokens. Sentences end after '.', '!', '?'
/// (plus any trailing closing quotes); known abbreviations never end a sentence.
std::vector<TokenList> tokenize(std::string_view text, std::string_view lang);

/// Tokenizes one line known to hold exactly one sentence. Lines written entirely in
/// `token/TAG` form keep their inline tags; otherwise the bundled tagger is used.
TokenList tokenize_sentence(std::string_view line, std::string_view lang);

/// Splits on whitespace and punctuation without tagging (surfaces only).
std::vector<std::string> split_words(std::string_view text, std::string_view lang);

/// Deterministic heuristic tagger: closed-class lexicon, capitalization, suffixes.
Pos naive_tag(std::string_view surface, std::string_view lang, bool sentence_initial);

// Chunking -------------------------------------------------------------------

/// Noun-group chunks by greedy left-to-right longest match.
///   en: (ADJ)* (NP|NC)+
///   fr: (ADJ)* (NP|NC)+ (ADJ)*
/// Throws std::invalid_argument for any other language.
std::vector<Chunk> mark_chunks(const TokenList& tokens, std::string_view target_lang);

/// Same matcher over a bare tag sequence; chunk text is left empty.
std::vector<Chunk> match_chunk_pattern(std::span<const Pos> tags, std::string_view target_lang);

bool chunking_supported(std::string_view lang);

/// Optional external chunker (for instance a parser that finds idioms or phrasal
/// verbs). Must return sorted, disjoint spans.
using Chunker = std::function<std::vector<Chunk>(const TokenList&, std::string_view lang)>;

// Loading --------------------------------------------------------------------

struct LoadOptions {
  bool mark_chunks = true;
  Chunker chunker;  // empty = pattern chunker
};

/// Loads corpus_root/<topic>/<doc>.<src>.txt (one sentence per line), obtains target
/// sentences from `provider`, and references from corpus_root/<topic>/ref*.<tgt>.txt.
/// Topics and documents are ordered by name.
std::vector<Topic> load_topics(const std::filesystem::path& corpus_root,
                               std::string_view source_lang, std::string_view target_lang,
                               const TranslationProvider& provider,
                               const LoadOptions& options = {});

/// Uses the file-backed provider (<doc>.<tgt>.txt next to each source file).
std::vector<Topic> load_topics(const std::filesystem::path& corpus_root,
                               std::string_view source_lang, std::string_view target_lang,
                               const LoadOptions& options = {});

/// Builds a sentence (vectors and chunks included) from two token lists.
BilingualSentence make_sentence(SentenceId id, TokenList source, TokenList target,
                                std::string_view target_lang, const LoadOptions& options = {});

/// Lines of a UTF-8 text file with trailing whitespace removed; a final empty line
/// produced by the terminating newline is dropped.
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Statistics -----------------------------------------------------------------

/// An exact mean kept as total / count.
struct Mean {
  std::int64_t total = 0;
  std::int64_t count = 0;

  double value() const { return count == 0 ? 0.0 : static_cast<double>(total) / count; }
};

struct SideStats {
  std::int64_t words = 0;
  std::int64_t vocabulary = 0;
  std::int64_t sentences = 0;
  Mean sentence_length;
  std::int64_t chunks = 0;
  Mean chunk_length;
};

struct CorpusStats {
  SideStats source;
  SideStats target;
};

/// Chunk figures count multi-word chunks on the target side only.
CorpusStats corpus_stats(const std::vector<Topic>& topics);

}  // namespace clts
