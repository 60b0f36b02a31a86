#include "legomena/fitting.hpp"

#include <cmath>
#include <stdexcept>

namespace legomena {

double HeapsParams::predict(double m) const {
  return coefficient * std::pow(m, exponent);
}

double invert_hapax_fraction(double h) {
  if (!(h > 0.0 && h < 1.0)) {
    throw std::domain_error("hapax fraction must lie in (0, 1)");
  }
  double lo = 1e-6;
  double hi = 2.0;
  while (hapax_fraction_model(lo) < h) lo *= 0.5;
  while (hapax_fraction_model(hi) > h) hi *= 2.0;
  // H is strictly decreasing, so the bracket [lo, hi] pins the root.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    const double value = hapax_fraction_model(mid);
    if (std::abs(value - h) <= 1e-9 || hi - lo < 1e-12 * hi) return mid;
    if (value > h) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

OptimumSample fit_optimum_sample(std::uint64_t total_tokens,
                                 std::uint64_t total_types,
                                 std::uint64_t hapaxes) {
  if (total_types == 0) throw std::domain_error("corpus has no types");
  const double h = static_cast<double>(hapaxes) /
                   static_cast<double>(total_types);
  if (!(h > 0.0 && h < 1.0)) {
    throw std::domain_error(
        "degenerate hapax proportion " + std::to_string(h) +
        ": the optimum-sample fit needs 0 < k_1/N < 1");
  }
  OptimumSample fit;
  fit.scale = invert_hapax_fraction(h);
  fit.tokens_z = static_cast<double>(total_tokens) / fit.scale;
  // N_z scaled so the fitted model reproduces E(M) = N.
  const double z = fit.scale;
  if (std::abs(z - 1.0) < 1e-8) {
    fit.types_z = static_cast<double>(total_types);
  } else {
    fit.types_z = static_cast<double>(total_types) * (z - 1.0) /
                  (std::log(z) * z);
  }
  return fit;
}

OptimumSample fit_optimum_sample(const Corpus& corpus) {
  return fit_optimum_sample(corpus.token_count(), corpus.type_count(),
                            corpus.hapax_count());
}

HeapsParams fit_heaps(const TTRCurve& curve) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (const auto& pt : curve.points) {
    if (pt.tokens == 0 || pt.types_mean <= 0.0) continue;
    const double lx = std::log(static_cast<double>(pt.tokens));
    const double ly = std::log(pt.types_mean);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) {
    throw std::invalid_argument(
        "power-law fit needs at least 2 points with m > 0 and types > 0");
  }
  const double fn = static_cast<double>(n);
  const double slope = (fn * sxy - sx * sy) / (fn * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / fn;
  return {std::exp(intercept), slope};
}

double rmse_percent(std::span<const double> observed,
                    std::span<const double> predicted, double norm) {
  if (observed.size() != predicted.size() || observed.empty()) {
    throw std::invalid_argument("observed/predicted length mismatch");
  }
  if (!(norm > 0.0)) throw std::invalid_argument("norm must be positive");
  double sq = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double d = observed[i] - predicted[i];
    sq += d * d;
  }
  return std::sqrt(sq / static_cast<double>(observed.size())) / norm;
}

FitReport compare_models(const Corpus& corpus, std::string title,
                         std::span<const std::uint64_t> grid,
                         std::uint32_t trials, std::uint64_t seed) {
  const TTRCurve curve = sample_ttr_curve(corpus, grid, trials, seed);
  const HeapsParams heaps = fit_heaps(curve);
  const OptimumSample optimum = fit_optimum_sample(corpus);
  const KVector kvec = corpus.k_vector();
  const auto total = static_cast<double>(corpus.token_count());

  std::vector<double> observed, pred_heaps, pred_series, pred_model;
  for (const auto& pt : curve.points) {
    const auto m = static_cast<double>(pt.tokens);
    if (m <= 0.0) continue;
    observed.push_back(pt.types_mean);
    pred_heaps.push_back(heaps.predict(m));
    pred_series.push_back(series_model(kvec, total, m));
    pred_model.push_back(log_model_types(optimum.params(), m));
  }

  const auto n_types = static_cast<double>(corpus.type_count());
  FitReport report;
  report.title = std::move(title);
  report.tokens_z = optimum.tokens_z;
  report.types_z = optimum.types_z;
  report.rmse_heaps = rmse_percent(observed, pred_heaps, n_types);
  report.rmse_series = rmse_percent(observed, pred_series, n_types);
  report.rmse_model = rmse_percent(observed, pred_model, n_types);
  return report;
}

}  // namespace legomena
