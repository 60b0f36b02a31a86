#ifndef LEGOMENA_SAMPLING_HPP_
#define LEGOMENA_SAMPLING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "legomena/corpus.hpp"
#include "legomena/models.hpp"

namespace legomena {

struct TTRPoint {
  std::uint64_t tokens;                // sample size m
  double types_mean;
  double types_sd;                     // per-trial standard deviation
  std::vector<double> legomena_mean;   // k_1..k_J means
};

struct TTRCurve {
  std::vector<TTRPoint> points;        // sorted ascending by tokens
  std::uint32_t trials;
  std::uint64_t seed;
  std::size_t legomena_cap;
};

// 11 evenly spaced sample sizes from M/250 to M (last point exactly M).
std::vector<std::uint64_t> default_grid(std::uint64_t total_tokens,
                                        std::size_t points = 11);

// Mean over trials of distinct types and n-legomena counts in uniformly
// random m-token subsets (without replacement). Bit-reproducible for a
// fixed seed: trial t uses a stream derived from (seed, t).
TTRCurve sample_ttr_curve(const Corpus& corpus,
                          std::span<const std::uint64_t> sample_sizes,
                          std::uint32_t trials, std::uint64_t seed,
                          std::size_t legomena_cap = 5);

// Shuffled-deck draws: the TTR curve of a synthetic corpus of
// spec.types distinct types, spec.copies instances each, over every
// m = 0..k*n.
TTRCurve simulate_deck(const DeckSpec& spec, std::uint32_t trials,
                       std::uint64_t seed);

// Mean k-vector of random floor(x*M)-token samples; entry 0 is the mean
// number of types not drawn.
KVector sample_legomena(const Corpus& corpus, double x, std::uint32_t trials,
                        std::uint64_t seed);

}  // namespace legomena

#endif  // LEGOMENA_SAMPLING_HPP_
