#ifndef LEGOMENA_FITTING_HPP_
#define LEGOMENA_FITTING_HPP_

#include <cstdint>
#include <span>
#include <string>

#include "legomena/corpus.hpp"
#include "legomena/models.hpp"
#include "legomena/sampling.hpp"

namespace legomena {

struct OptimumSample {
  double scale;     // z, corpus size relative to the optimum
  double tokens_z;  // M_z = M / z
  double types_z;   // N_z = N * (z-1) / (ln(z) * z)
  LogModelParams params() const { return {tokens_z, types_z}; }
};

struct HeapsParams {
  double coefficient;  // K
  double exponent;     // beta
  double predict(double m) const;
};

struct FitReport {
  std::string title;
  double tokens_z;
  double types_z;
  double rmse_heaps;   // fractions, RMSE as percent of observed types
  double rmse_series;
  double rmse_model;
};

// Solves H(z) = h by bisection; H strictly decreasing makes the root
// unique. Throws std::domain_error unless 0 < h < 1.
double invert_hapax_fraction(double h);

// The whole-corpus fit: z = H^-1(k_1/N), M_z = M/z, N_z chosen so the
// fitted model satisfies E(M) = N.
OptimumSample fit_optimum_sample(std::uint64_t total_tokens,
                                 std::uint64_t total_types,
                                 std::uint64_t hapaxes);
OptimumSample fit_optimum_sample(const Corpus& corpus);

// Ordinary least squares on (ln m, ln types) over all curve points with
// m > 0 and types > 0. Needs at least two usable points.
HeapsParams fit_heaps(const TTRCurve& curve);

// sqrt(mean((obs - pred)^2)) / norm.
double rmse_percent(std::span<const double> observed,
                    std::span<const double> predicted, double norm);

// Builds the empirical curve, fits all three models and scores each
// against observed types over the grid.
FitReport compare_models(const Corpus& corpus, std::string title,
                         std::span<const std::uint64_t> grid,
                         std::uint32_t trials, std::uint64_t seed);

}  // namespace legomena

#endif  // LEGOMENA_FITTING_HPP_
