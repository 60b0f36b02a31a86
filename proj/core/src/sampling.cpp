#include "legomena/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace legomena {

namespace {

// splitmix64; self-contained so that streams are identical across
// platforms and standard library implementations.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Lemire's unbiased bounded draw.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }
};

std::uint64_t trial_seed(std::uint64_t seed, std::uint32_t trial) {
  // One splitmix step decorrelates adjacent (seed, trial) pairs.
  Rng mix(seed ^ (0xA076'1D64'78BD'642FULL * (trial + 1)));
  return mix.next();
}

// Shuffles the first `prefix` positions (full Fisher-Yates when
// prefix == ids.size()); a prefix is all a subsample needs.
void partial_shuffle(std::vector<std::uint32_t>& ids, std::size_t prefix,
                     Rng& rng) {
  const std::size_t n = ids.size();
  for (std::size_t i = 0; i + 1 < n && i < prefix; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(ids[i], ids[j]);
  }
}

// Tracks distinct types and n-legomena counts (n <= cap) of a growing
// sample via a frequency histogram.
struct SampleTally {
  std::vector<std::uint32_t> freq;       // per type id
  std::vector<std::uint64_t> histogram;  // histogram[c], c = 0..cap, cap+1 = overflow
  std::uint64_t distinct = 0;
  std::size_t cap;

  SampleTally(std::size_t n_types, std::size_t legomena_cap)
      : freq(n_types, 0), histogram(legomena_cap + 2, 0), cap(legomena_cap) {}

  void add(std::uint32_t type_id) {
    const std::uint32_t c = freq[type_id]++;
    if (c == 0) ++distinct;
    if (c >= 1) --histogram[std::min<std::size_t>(c, cap + 1)];
    ++histogram[std::min<std::size_t>(c + 1, cap + 1)];
  }
};

struct Accumulator {
  std::vector<double> sum_types, sum_types_sq;
  std::vector<std::vector<double>> sum_legomena;

  Accumulator(std::size_t points, std::size_t cap)
      : sum_types(points, 0.0),
        sum_types_sq(points, 0.0),
        sum_legomena(points, std::vector<double>(cap, 0.0)) {}

  void record(std::size_t point, const SampleTally& tally) {
    const auto types = static_cast<double>(tally.distinct);
    sum_types[point] += types;
    sum_types_sq[point] += types * types;
    for (std::size_t n = 1; n <= tally.cap; ++n) {
      sum_legomena[point][n - 1] += static_cast<double>(tally.histogram[n]);
    }
  }
};

TTRCurve curve_over_sizes(const std::vector<std::uint32_t>& base_ids,
                          std::size_t n_types,
                          std::span<const std::uint64_t> sizes,
                          std::uint32_t trials, std::uint64_t seed,
                          std::size_t cap) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const std::uint64_t total = base_ids.size();
  for (auto m : sizes) {
    if (m > total) {
      throw std::out_of_range("sample size " + std::to_string(m) +
                              " exceeds corpus size " + std::to_string(total));
    }
  }
  std::vector<std::uint64_t> sorted_sizes(sizes.begin(), sizes.end());
  std::sort(sorted_sizes.begin(), sorted_sizes.end());

  Accumulator acc(sorted_sizes.size(), cap);
  std::vector<std::uint32_t> ids = base_ids;
  const std::size_t max_size =
      sorted_sizes.empty() ? 0 : sorted_sizes.back();
  for (std::uint32_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    partial_shuffle(ids, max_size, rng);
    SampleTally tally(n_types, cap);
    std::size_t point = 0;
    std::uint64_t drawn = 0;
    while (point < sorted_sizes.size() && sorted_sizes[point] == drawn) {
      acc.record(point, tally);
      ++point;
    }
    for (std::uint64_t i = 0; i < max_size && point < sorted_sizes.size();
         ++i) {
      tally.add(ids[i]);
      ++drawn;
      while (point < sorted_sizes.size() && sorted_sizes[point] == drawn) {
        acc.record(point, tally);
        ++point;
      }
    }
  }

  TTRCurve curve;
  curve.trials = trials;
  curve.seed = seed;
  curve.legomena_cap = cap;
  curve.points.reserve(sorted_sizes.size());
  const auto n_trials = static_cast<double>(trials);
  for (std::size_t p = 0; p < sorted_sizes.size(); ++p) {
    TTRPoint pt;
    pt.tokens = sorted_sizes[p];
    pt.types_mean = acc.sum_types[p] / n_trials;
    const double var =
        std::max(0.0, acc.sum_types_sq[p] / n_trials -
                          pt.types_mean * pt.types_mean);
    pt.types_sd = trials > 1 ? std::sqrt(var * n_trials / (n_trials - 1.0))
                             : 0.0;
    pt.legomena_mean.resize(cap);
    for (std::size_t n = 0; n < cap; ++n) {
      pt.legomena_mean[n] = acc.sum_legomena[p][n] / n_trials;
    }
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

}  // namespace

std::vector<std::uint64_t> default_grid(std::uint64_t total_tokens,
                                        std::size_t points) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  const double lo = static_cast<double>(total_tokens) / 250.0;
  const double hi = static_cast<double>(total_tokens);
  std::vector<std::uint64_t> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = static_cast<std::uint64_t>(std::llround(lo + f * (hi - lo)));
  }
  grid.back() = total_tokens;
  return grid;
}

TTRCurve sample_ttr_curve(const Corpus& corpus,
                          std::span<const std::uint64_t> sample_sizes,
                          std::uint32_t trials, std::uint64_t seed,
                          std::size_t legomena_cap) {
  return curve_over_sizes(corpus.token_ids(), corpus.type_count(),
                          sample_sizes, trials, seed, legomena_cap);
}

TTRCurve simulate_deck(const DeckSpec& spec, std::uint32_t trials,
                       std::uint64_t seed) {
  if (spec.types < 1 || spec.copies < 1) {
    throw std::invalid_argument("deck needs at least one type and one copy");
  }
  std::vector<std::uint32_t> ids;
  ids.reserve(spec.tokens());
  for (std::uint64_t t = 0; t < spec.types; ++t) {
    ids.insert(ids.end(), spec.copies, static_cast<std::uint32_t>(t));
  }
  std::vector<std::uint64_t> sizes(spec.tokens() + 1);
  std::iota(sizes.begin(), sizes.end(), 0);
  return curve_over_sizes(ids, spec.types, sizes, trials, seed,
                          std::min<std::size_t>(spec.copies, 5));
}

KVector sample_legomena(const Corpus& corpus, double x, std::uint32_t trials,
                        std::uint64_t seed) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("sampling proportion must lie in [0, 1]");
  }
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const auto total = static_cast<double>(corpus.token_count());
  const auto m = static_cast<std::uint64_t>(std::floor(x * total));

  // Legomena counts here are unbounded, so tally full per-sample
  // frequencies instead of the capped histogram.
  std::vector<double> sums;
  std::vector<std::uint32_t> ids = corpus.token_ids();
  std::vector<std::uint32_t> freq(corpus.type_count(), 0);
  for (std::uint32_t t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, t));
    partial_shuffle(ids, m, rng);
    std::fill(freq.begin(), freq.end(), 0);
    for (std::uint64_t i = 0; i < m; ++i) ++freq[ids[i]];
    std::uint32_t max_freq = 0;
    for (auto f : freq) max_freq = std::max(max_freq, f);
    if (sums.size() < static_cast<std::size_t>(max_freq) + 1) {
      sums.resize(max_freq + 1, 0.0);
    }
    std::uint64_t drawn = 0;
    for (auto f : freq) {
      if (f > 0) {
        sums[f] += 1.0;
        ++drawn;
      }
    }
    sums[0] += static_cast<double>(corpus.type_count() - drawn);
  }
  for (auto& s : sums) s /= static_cast<double>(trials);
  return sums;
}

}  // namespace legomena
