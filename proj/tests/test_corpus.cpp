#include <gtest/gtest.h>

#include <fstream>

#include "chunk_table.hpp"
#include "clts/corpus.hpp"
#include "clts/text.hpp"
#include "clts/translation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace clts;

namespace {

void write(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

std::vector<std::string> surfaces_of(const TokenList& t) { return surfaces(t); }

}  // namespace

TEST(Text, LowercasesAccentedLetters) {
  EXPECT_EQ(to_lower("ÉTÉ Œuvre Ça"), "été œuvre ça");
  EXPECT_EQ(to_lower("Chile"), "chile");
}

TEST(Text, Detokenize) {
  EXPECT_EQ(detokenize({"The", "storm", "hit", "(", "again", ")", "."}), "The storm hit (again).");
  EXPECT_EQ(detokenize({"l'", "eau", ",", "la", "terre"}), "l'eau, la terre");
}

TEST(Text, Punctuation) {
  EXPECT_TRUE(is_punctuation("."));
  EXPECT_TRUE(is_punctuation("«"));
  EXPECT_TRUE(is_punctuation("..."));
  EXPECT_FALSE(is_punctuation("a."));
  EXPECT_FALSE(is_punctuation(""));
}

TEST(Tokenize, SplitsSentencesAndKeepsAbbreviations) {
  const auto s = tokenize("Mr. Smith arrived. He left! Did he?", "en");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(surfaces_of(s[0]), (std::vector<std::string>{"Mr.", "Smith", "arrived", "."}));
  EXPECT_EQ(s[2].back().pos, Pos::PUNCT);
}

TEST(Tokenize, InlineTagsAreKept) {
  const auto t = tokenize_sentence("The/OTHER old/ADJ bridge/NC fell/VERB ./PUNCT", "en");
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[1].pos, Pos::ADJ);
  EXPECT_EQ(t[3].pos, Pos::VERB);
  EXPECT_TRUE(t[0].is_stopword);
  EXPECT_EQ(word_count(t), 4u);
}

TEST(Tokenize, PartialTagsFallBackToTagger) {
  const auto t = tokenize_sentence("The/OTHER bridge fell .", "en");
  EXPECT_EQ(t.front().surface, "The/OTHER");
}

TEST(Tokenize, NaiveTaggerBasics) {
  EXPECT_EQ(naive_tag(".", "en", false), Pos::PUNCT);
  EXPECT_EQ(naive_tag("the", "en", false), Pos::OTHER);
  EXPECT_EQ(naive_tag("Paris", "en", false), Pos::NP);
  EXPECT_EQ(naive_tag("maison", "fr", false), Pos::NC);
}

TEST(Chunks, EnglishTable) {
  for (const auto& c : chunk_table::english()) {
    const auto tags = chunk_table::parse(c.tags);
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& ch : match_chunk_pattern(tags, "en")) got.emplace_back(ch.begin, ch.end);
    EXPECT_EQ(got, c.spans) << "tags: " << c.tags;
    EXPECT_EQ(got, oracle::chunk_spans(tags, "en")) << "tags: " << c.tags;
  }
}

TEST(Chunks, FrenchTableIncludesTrailingAdjectives) {
  for (const auto& c : chunk_table::french()) {
    const auto tags = chunk_table::parse(c.tags);
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (const auto& ch : match_chunk_pattern(tags, "fr")) got.emplace_back(ch.begin, ch.end);
    EXPECT_EQ(got, c.spans) << "tags: " << c.tags;
    EXPECT_EQ(got, oracle::chunk_spans(tags, "fr")) << "tags: " << c.tags;
  }
}

TEST(Chunks, RandomSequencesMatchRegexScan) {
  std::mt19937_64 rng(7);
  const Pos all[] = {Pos::ADJ, Pos::NP, Pos::NC, Pos::VERB, Pos::OTHER, Pos::PUNCT};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Pos> tags(rng() % 12);
    for (auto& p : tags) p = all[rng() % 6];
    for (const char* lang : {"en", "fr"}) {
      std::vector<std::pair<std::size_t, std::size_t>> got;
      for (const auto& ch : match_chunk_pattern(tags, lang)) got.emplace_back(ch.begin, ch.end);
      ASSERT_EQ(got, oracle::chunk_spans(tags, lang));
    }
  }
}

TEST(Chunks, TextAndUnsupportedLanguage) {
  const auto t = fixtures::tokens("La/OTHER tempête/NC violente/ADJ a/OTHER frappé/VERB", "fr");
  const auto c = mark_chunks(t, "fr");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].text, "tempête violente");
  EXPECT_THROW(mark_chunks(t, "pt"), std::invalid_argument);
  EXPECT_FALSE(chunking_supported("es"));
}

TEST(Load, MiniCorpusShape) {
  const auto topics = load_topics(fixtures::mini_corpus(), "fr", "en");
  ASSERT_EQ(topics.size(), 2u);
  for (const auto& t : topics) {
    EXPECT_EQ(t.documents.size(), 3u);
    EXPECT_EQ(t.reference_summaries.size(), 3u);
    EXPECT_EQ(t.sentence_count(), 30u);
    for (const auto& s : t.sentences()) {
      EXPECT_FALSE(s.source_tokens.empty());
      EXPECT_FALSE(s.target_tokens.empty());
      EXPECT_EQ(s.target_vector, TermVector::from_tokens(s.target_tokens));
    }
  }
  EXPECT_EQ(topics[0].sentences()[4].id.str(), "t01/d1/4");
}

TEST(Load, ErrorsAreReported) {
  const auto root = fixtures::temp_dir("load_errors");
  EXPECT_THROW(load_topics(root / "missing", "fr", "en"), CorpusError);

  write(root / "a" / "t1" / "d1.fr.txt", "Une phrase.\nDeux phrases.\n");
  write(root / "a" / "t1" / "d1.en.txt", "One sentence.\n");
  EXPECT_THROW(load_topics(root / "a", "fr", "en"), TranslationError);

  write(root / "b" / "t1" / "d1.fr.txt", "Une phrase.\n\nTrois.\n");
  write(root / "b" / "t1" / "d1.en.txt", "One.\nTwo.\nThree.\n");
  EXPECT_THROW(load_topics(root / "b", "fr", "en"), CorpusError);

  write(root / "c" / "t1" / "d1.fr.txt", "");
  EXPECT_THROW(load_topics(root / "c", "fr", "en"), CorpusError);

  write(root / "d" / "t1" / "notes.txt", "nothing here\n");
  EXPECT_THROW(load_topics(root / "d", "fr", "en"), CorpusError);

  std::filesystem::create_directories(root / "empty");
  EXPECT_TRUE(load_topics(root / "empty", "fr", "en").empty());
}

TEST(Load, WithoutChunks) {
  LoadOptions opts;
  opts.mark_chunks = false;
  const auto topics = load_topics(fixtures::mini_corpus(), "fr", "en", opts);
  for (const auto& s : topics[0].sentences()) EXPECT_TRUE(s.target_chunks.empty());
}

TEST(Stats, HandCountedFixture) {
  const auto topics = load_topics(fixtures::stats_corpus(), "en", "fr");
  const auto s = corpus_stats(topics);
  EXPECT_EQ(s.source.words, 32);
  EXPECT_EQ(s.source.vocabulary, 17);
  EXPECT_EQ(s.source.sentences, 4);
  EXPECT_DOUBLE_EQ(s.source.sentence_length.value(), 8.0);
  EXPECT_EQ(s.target.words, 39);
  EXPECT_EQ(s.target.vocabulary, 23);
  EXPECT_DOUBLE_EQ(s.target.sentence_length.value(), 9.75);
  EXPECT_EQ(s.target.chunks, 5);
  EXPECT_DOUBLE_EQ(s.target.chunk_length.value(), 2.4);
}

TEST(Stats, SentenceLengthTimesSentencesIsWords) {
  for (const auto& [root, src, tgt] :
       {std::tuple{fixtures::mini_corpus(), "fr", "en"}, std::tuple{fixtures::stats_corpus(), "en", "fr"}}) {
    const auto s = corpus_stats(load_topics(root, src, tgt));
    for (const auto* side : {&s.source, &s.target}) {
      EXPECT_EQ(side->sentence_length.total, side->words);
      EXPECT_EQ(side->sentence_length.count, side->sentences);
    }
  }
  EXPECT_EQ(corpus_stats({}).source.sentence_length.value(), 0.0);
}
