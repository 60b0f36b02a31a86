#ifndef LEGOMENA_MODELS_HPP_
#define LEGOMENA_MODELS_HPP_

#include <cstdint>
#include <span>

#include "legomena/corpus.hpp"

namespace legomena {

// A (k*n, k)-mini-corpus: k distinct types each repeating exactly n times.
struct DeckSpec {
  std::uint64_t types;   // k
  std::uint64_t copies;  // n
  std::uint64_t tokens() const { return types * copies; }
};

// Expected distinct types after drawing m of the k*n tokens without
// replacement, by the exact one-step recursion
//   E(0) = 0,  E(m+1) = E(m) + n*(k - E(m)) / (k*n - m).
double deck_types_recursive(const DeckSpec& spec, std::uint64_t m);

// Closed-form estimate of the same curve: k - k*(1 - m/(k*n))^n.
double deck_types_analytic(const DeckSpec& spec, double m);

// Expected types when sampling m of M tokens, from the whole-corpus
// k-vector:  N - sum_n k_n * (1 - m/M)^n.
double series_model(const KVector& kvec, double total_tokens, double m);

// Predicted k-vector of a random sample drawing each token instance with
// probability x:  k_n(x) = sum_{i>=n} C(i,n) k_i x^n (1-x)^(i-n).
// Entry 0 carries the expected never-drawn types. Column sums of the
// underlying transformation are 1, so the output sums to N.
KVector transform_kvector(const KVector& kvec, double x);

// k_n = N_z / (n*(n+1)) for n = 1..truncation, k_0 = 0.
KVector perfect_zipf_kvector(double n_types, std::size_t truncation);

// Ranked-frequency corollary of the perfect Zipf distribution.
std::uint64_t perfect_zipf_rank_frequency(double n_types, std::uint64_t rank);

// Optimum-sample parameters of the logarithmic model.
struct LogModelParams {
  double tokens_z;  // M_z
  double types_z;   // N_z
};

// E(m) = N_z * ln(x) * x / (x - 1) with x = m/M_z; continuous through the
// removable singularity at x = 1. Valid for any m > 0.
double log_model_types(const LogModelParams& params, double m);

// Closed-form n-legomena predictions, n in [0, 5].
// Throws std::invalid_argument for n > 5 (no closed form is provided;
// use transform_kvector on a perfect-Zipf vector instead).
double log_model_legomena(const LogModelParams& params, int n, double m);

// H(x) = k_1(x)/E(x) = 1/ln(x) + 1/(1-x); strictly decreasing on (0, inf),
// H(0+) = 1, H(1) = 1/2.
double hapax_fraction_model(double x);

// Partial sum of the perfect-Zipf series for expected types,
//   N_z - N_z * sum_{n=1..terms} (1-x)^n / (n*(n+1)),
// which converges on log_model_types as terms grows.
double zipf_series_types(double n_types, double x, std::size_t terms);

}  // namespace legomena

#endif  // LEGOMENA_MODELS_HPP_
