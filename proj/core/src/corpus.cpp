#include "legomena/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace legomena {

namespace {

// Returns the length of the UTF-8 sequence starting at s[i], or 0 if the
// sequence is malformed.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  std::size_t len;
  if (b0 < 0x80) return 1;
  if ((b0 & 0xE0) == 0xC0) len = 2;
  else if ((b0 & 0xF0) == 0xE0) len = 3;
  else if ((b0 & 0xF8) == 0xF0) len = 4;
  else return 0;
  if (i + len > s.size()) return 0;
  for (std::size_t j = 1; j < len; ++j) {
    if ((static_cast<unsigned char>(s[i + j]) & 0xC0) != 0x80) return 0;
  }
  return len;
}

bool is_ascii_alnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, TokenizerMode mode) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t len = utf8_sequence_length(text, i);
    if (len == 0) {
      throw IngestError("invalid UTF-8 sequence at byte offset " +
                        std::to_string(i));
    }
    const auto c = static_cast<unsigned char>(text[i]);
    bool is_token_char;
    if (mode == TokenizerMode::Default) {
      // ASCII alphanumerics and any non-ASCII codepoint count as word
      // characters; everything else (punctuation, whitespace) separates.
      is_token_char = (len > 1) || is_ascii_alnum(c);
    } else {
      is_token_char = (len > 1) || !is_ascii_space(c);
    }
    if (is_token_char) {
      if (mode == TokenizerMode::Default && len == 1) {
        current.push_back(static_cast<char>(std::tolower(c)));
      } else {
        current.append(text.substr(i, len));
      }
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    i += len;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Corpus Corpus::from_tokens(const std::vector<std::string>& tokens) {
  Corpus c;
  c.token_ids_.reserve(tokens.size());
  std::unordered_map<std::string, std::uint32_t> ids;
  ids.reserve(tokens.size() / 4 + 16);
  for (const auto& tok : tokens) {
    auto [it, inserted] =
        ids.emplace(tok, static_cast<std::uint32_t>(c.type_names_.size()));
    if (inserted) {
      c.type_names_.push_back(tok);
      c.type_counts_.push_back(0);
    }
    c.token_ids_.push_back(it->second);
    ++c.type_counts_[it->second];
  }
  return c;
}

Corpus Corpus::from_text(std::string_view text, TokenizerMode mode) {
  return from_tokens(tokenize(text, mode));
}

KVector Corpus::k_vector() const {
  std::uint64_t max_count = 0;
  for (auto c : type_counts_) max_count = std::max(max_count, c);
  KVector k(max_count + 1, 0.0);
  for (auto c : type_counts_) k[c] += 1.0;
  return k;
}

double Corpus::hapax_proportion() const {
  if (type_count() == 0) {
    throw std::domain_error("hapax proportion undefined for an empty corpus");
  }
  return static_cast<double>(hapax_count()) / static_cast<double>(type_count());
}

std::uint64_t Corpus::hapax_count() const {
  std::uint64_t n = 0;
  for (auto c : type_counts_) n += (c == 1);
  return n;
}

std::uint64_t Corpus::top_frequency() const {
  std::uint64_t f = 0;
  for (auto c : type_counts_) f = std::max(f, c);
  return f;
}

}  // namespace legomena
