#include "clts/translation.hpp"

#include <httplib.h>

#include <json.hpp>

#include "clts/corpus.hpp"
#include "clts/text.hpp"

namespace clts {

std::vector<std::string> IdentityProvider::translate(const SourceDocument& doc, std::string_view,
                                                     std::string_view) const {
  return doc.sentences;
}

std::filesystem::path FileBackedProvider::path_for(const SourceDocument& doc,
                                                   std::string_view lang) {
  return doc.directory / (doc.name + "." + std::string(lang) + ".txt");
}

std::vector<std::string> FileBackedProvider::translate(const SourceDocument& doc,
                                                       std::string_view src,
                                                       std::string_view tgt) const {
  const auto path = path_for(doc, tgt);
  if (!std::filesystem::exists(path))
    throw TranslationError("missing translation file " + path.string(), 0);
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size() && i < doc.sentences.size(); ++i) {
    if (lines[i].empty())
      throw TranslationError(path.string() + ": missing stored translation at line " +
                                 std::to_string(i + 1),
                             i);
  }
  if (lines.size() != doc.sentences.size()) {
    const std::size_t first_bad = std::min(lines.size(), doc.sentences.size());
    throw TranslationError(path_for(doc, src).string() + " has " +
                               std::to_string(doc.sentences.size()) + " sentences but " +
                               path.string() + " has " + std::to_string(lines.size()) +
                               " (missing stored translation for line " +
                               std::to_string(first_bad + 1) + ")",
                           first_bad);
  }
  return lines;
}

RemoteProvider::RemoteProvider(std::string url, int timeout_seconds)
    : timeout_seconds_(timeout_seconds) {
  constexpr std::string_view kScheme = "http://";
  std::string_view rest = url;
  if (rest.substr(0, kScheme.size()) != kScheme)
    throw std::invalid_argument("remote provider url must start with http://: " + url);
  rest.remove_prefix(kScheme.size());
  const auto slash = rest.find('/');
  std::string_view authority = rest.substr(0, slash);
  path_ = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
  const auto colon = authority.rfind(':');
  if (colon != std::string_view::npos) {
    host_ = std::string(authority.substr(0, colon));
    port_ = std::stoi(std::string(authority.substr(colon + 1)));
  } else {
    host_ = std::string(authority);
  }
  if (host_.empty()) throw std::invalid_argument("remote provider url has no host: " + url);
}

std::vector<std::string> RemoteProvider::translate(const SourceDocument& doc,
                                                   std::string_view src,
                                                   std::string_view tgt) const {
  const nlohmann::json request = {
      {"src", src}, {"tgt", tgt}, {"sentences", doc.sentences}};

  std::lock_guard lock(mutex_);
  httplib::Client client(host_, port_);
  client.set_connection_timeout(timeout_seconds_);
  client.set_read_timeout(timeout_seconds_);
  auto response = client.Post(path_, request.dump(), "application/json");
  if (!response)
    throw TranslationError(doc.name + ": remote translation failed (" +
                               httplib::to_string(response.error()) + ") at sentence 1",
                           0);
  if (response->status != 200)
    throw TranslationError(doc.name + ": remote translation returned HTTP " +
                               std::to_string(response->status) + " at sentence 1",
                           0);
  std::vector<std::string> out;
  try {
    const auto body = nlohmann::json::parse(response->body);
    out = body.at("sentences").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw TranslationError(doc.name + ": malformed remote response: " + e.what(), 0);
  }
  for (std::size_t i = 0; i < out.size() && i < doc.sentences.size(); ++i)
    if (trim(out[i]).empty())
      throw TranslationError(doc.name + ": remote translation empty at sentence " +
                                 std::to_string(i + 1),
                             i);
  return out;
}

std::vector<std::string> translate_document(const SourceDocument& doc, std::string_view src,
                                            std::string_view tgt,
                                            const TranslationProvider& provider) {
  auto out = provider.translate(doc, src, tgt);
  if (out.size() != doc.sentences.size()) {
    const std::size_t first_bad = std::min(out.size(), doc.sentences.size());
    throw TranslationError(std::string(provider.kind()) + " provider returned " +
                               std::to_string(out.size()) + " sentences for " + doc.name +
                               " (expected " + std::to_string(doc.sentences.size()) +
                               "; first unaligned line " + std::to_string(first_bad + 1) + ")",
                           first_bad);
  }
  return out;
}

std::unique_ptr<TranslationProvider> make_provider(
    std::string_view kind, const std::map<std::string, std::string>& configuration) {
  if (kind == "file") return std::make_unique<FileBackedProvider>();
  if (kind == "identity") return std::make_unique<IdentityProvider>();
  if (kind == "remote") {
    const auto url = configuration.find("url");
    if (url == configuration.end() || url->second.empty())
      throw std::invalid_argument("remote provider needs a url");
    int timeout = 30;
    if (const auto t = configuration.find("timeout"); t != configuration.end())
      timeout = std::stoi(t->second);
    return std::make_unique<RemoteProvider>(url->second, timeout);
  }
  throw std::invalid_argument("unknown translation provider '" + std::string(kind) +
                              "' (valid: file, identity, remote)");
}

}  // namespace clts
