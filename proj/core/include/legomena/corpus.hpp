#ifndef LEGOMENA_CORPUS_HPP_
#define LEGOMENA_CORPUS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legomena {

// k-vector: entry n counts the types occurring exactly n times.
// Observed vectors hold exact integers; predicted vectors hold reals.
using KVector = std::vector<double>;

enum class TokenizerMode { Default, Whitespace };

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default mode: lowercase, then emit maximal runs of alphanumeric
// characters (punctuation discarded, apostrophes split words).
// Whitespace mode: split on whitespace only, no case folding.
// Throws IngestError (naming the byte offset) on invalid UTF-8.
std::vector<std::string> tokenize(std::string_view text,
                                  TokenizerMode mode = TokenizerMode::Default);

// Immutable token/type statistics of one text. Token instances are kept
// as type ids so samplers can shuffle integers instead of strings.
class Corpus {
 public:
  Corpus() = default;
  static Corpus from_tokens(const std::vector<std::string>& tokens);
  static Corpus from_text(std::string_view text,
                          TokenizerMode mode = TokenizerMode::Default);

  std::uint64_t token_count() const { return token_ids_.size(); }  // M
  std::uint64_t type_count() const { return type_names_.size(); }  // N

  // Position -> type id, in original text order.
  const std::vector<std::uint32_t>& token_ids() const { return token_ids_; }
  // Type id -> surface form / whole-corpus frequency.
  const std::vector<std::string>& type_names() const { return type_names_; }
  const std::vector<std::uint64_t>& type_counts() const { return type_counts_; }

  // Dense k-vector up to the maximum observed frequency; k_0 = 0.
  KVector k_vector() const;

  // k_1 / N. Throws std::domain_error on an empty corpus.
  double hapax_proportion() const;

  std::uint64_t hapax_count() const;
  std::uint64_t top_frequency() const;  // f_1, 0 if empty

 private:
  std::vector<std::uint32_t> token_ids_;
  std::vector<std::string> type_names_;
  std::vector<std::uint64_t> type_counts_;
};

}  // namespace legomena

#endif  // LEGOMENA_CORPUS_HPP_
