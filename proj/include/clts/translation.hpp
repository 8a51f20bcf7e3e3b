#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clts {

/// A source document as handed to a translation provider.
struct SourceDocument {
  std::filesystem::path directory;  // topic directory
  std::string name;                 // document stem, e.g. "d1"
  std::vector<std::string> sentences;
};

/// Failure to obtain a translation. `sentence_index` is 0-based; the message uses
/// 1-based line numbers.
class TranslationError : public std::runtime_error {
 public:
  TranslationError(const std::string& what, std::size_t sentence_index)
      : std::runtime_error(what), sentence_index_(sentence_index) {}

  std::size_t sentence_index() const { return sentence_index_; }

 private:
  std::size_t sentence_index_;
};

/// Produces target-language sentences for a source document, one per input sentence,
/// in order. Implementations must be safe for concurrent calls.
class TranslationProvider {
 public:
  virtual ~TranslationProvider() = default;

  virtual std::string_view kind() const = 0;
  virtual std::vector<std::string> translate(const SourceDocument& doc, std::string_view src,
                                             std::string_view tgt) const = 0;
};

/// Returns the input unchanged.
class IdentityProvider final : public TranslationProvider {
 public:
  std::string_view kind() const override { return "identity"; }
  std::vector<std::string> translate(const SourceDocument& doc, std::string_view src,
                                     std::string_view tgt) const override;
};

/// Reads stored translations from <directory>/<name>.<tgt>.txt, one sentence per line.
class FileBackedProvider final : public TranslationProvider {
 public:
  std::string_view kind() const override { return "file"; }
  std::vector<std::string> translate(const SourceDocument& doc, std::string_view src,
                                     std::string_view tgt) const override;

  static std::filesystem::path path_for(const SourceDocument& doc, std::string_view lang);
};

/// JSON over HTTP: POSTs {"src", "tgt", "sentences"} to `url` and expects
/// {"sentences": [...]} back. Requests are serialized through one connection.
class RemoteProvider final : public TranslationProvider {
 public:
  /// `url` like "http://host:port/path". Only plain http is supported.
  explicit RemoteProvider(std::string url, int timeout_seconds = 30);

  std::string_view kind() const override { return "remote"; }
  std::vector<std::string> translate(const SourceDocument& doc, std::string_view src,
                                     std::string_view tgt) const override;

 private:
  std::string host_;
  int port_ = 80;
  std::string path_;
  int timeout_seconds_;
  mutable std::mutex mutex_;
};

/// Calls the provider and enforces 1:1 sentence alignment; never skips silently.
std::vector<std::string> translate_document(const SourceDocument& doc, std::string_view src,
                                            std::string_view tgt,
                                            const TranslationProvider& provider);

/// kind in {"file", "identity", "remote"}; remote reads configuration["url"] and
/// optionally configuration["timeout"].
std::unique_ptr<TranslationProvider> make_provider(
    std::string_view kind, const std::map<std::string, std::string>& configuration = {});

}  // namespace clts
