#ifndef LEGOMENA_TESTS_HELPERS_HPP_
#define LEGOMENA_TESTS_HELPERS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "legomena/corpus.hpp"

namespace legomena::testing {

// A corpus whose ranked frequencies are floor(n_types / rank): a
// realization of the perfect Zipf distribution at x = 1. Token order is
// irrelevant to every consumer (samplers reshuffle), so tokens are laid
// out rank by rank.
inline Corpus zipfian_corpus(std::uint64_t n_types) {
  std::vector<std::string> tokens;
  for (std::uint64_t r = 1; r <= n_types; ++r) {
    const std::uint64_t f = n_types / r;
    if (f == 0) break;
    const std::string word = "w" + std::to_string(r);
    for (std::uint64_t i = 0; i < f; ++i) tokens.push_back(word);
  }
  return Corpus::from_tokens(tokens);
}

// k types, n copies each.
inline Corpus deck_corpus(std::uint64_t types, std::uint64_t copies) {
  std::vector<std::string> tokens;
  for (std::uint64_t t = 0; t < types; ++t) {
    const std::string word = "t" + std::to_string(t);
    for (std::uint64_t c = 0; c < copies; ++c) tokens.push_back(word);
  }
  return Corpus::from_tokens(tokens);
}

// Exhaustive oracle for the sampling transformation: every token
// instance is drawn independently with probability x. `multiplicities`
// lists the whole-corpus frequency of each type. Returns expected
// legomena counts (entry 0 = types not drawn).
inline std::vector<double> enumerate_sample_legomena(
    const std::vector<int>& multiplicities, double x) {
  int total = 0;
  int max_mult = 0;
  for (int m : multiplicities) {
    total += m;
    max_mult = std::max(max_mult, m);
  }
  std::vector<double> expected(max_mult + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (1ULL << total); ++mask) {
    double prob = 1.0;
    for (int i = 0; i < total; ++i) {
      prob *= (mask >> i & 1) ? x : (1.0 - x);
    }
    int offset = 0;
    for (int m : multiplicities) {
      int drawn = 0;
      for (int i = 0; i < m; ++i) drawn += (mask >> (offset + i)) & 1;
      expected[drawn] += prob;
      offset += m;
    }
  }
  return expected;
}

// splitmix64, for test-local deterministic randomness.
struct TestRng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace legomena::testing

#endif  // LEGOMENA_TESTS_HELPERS_HPP_
