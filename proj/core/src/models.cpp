#include "legomena/models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace legomena {

namespace {

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

// Taylor expansions about x = 1 for the logarithmic model family, per
// N_z. Every closed form has a removable singularity at x = 1 whose
// naive evaluation cancels catastrophically: the k_5 form divides an
// O(t^6) difference of O(100) terms by 60*t^6, which is pure noise for
// |t| < ~0.01. Ten terms at window 0.125 keep both branches below
// ~1e-10 relative error at the crossover.
constexpr double kNearOneRadius = 0.125;

constexpr double kLegomenaTaylor[6][10] = {
    {0.0, -1.0 / 2, 1.0 / 6, -1.0 / 12, 1.0 / 20, -1.0 / 30, 1.0 / 42,
     -1.0 / 56, 1.0 / 72, -1.0 / 90},  // k_0
    {1.0 / 2, 1.0 / 6, -1.0 / 12, 1.0 / 20, -1.0 / 30, 1.0 / 42, -1.0 / 56,
     1.0 / 72, -1.0 / 90, 1.0 / 110},  // k_1
    {1.0 / 6, 1.0 / 12, -1.0 / 30, 1.0 / 60, -1.0 / 105, 1.0 / 168,
     -1.0 / 252, 1.0 / 360, -1.0 / 495, 1.0 / 660},  // k_2
    {1.0 / 12, 1.0 / 20, -1.0 / 60, 1.0 / 140, -1.0 / 280, 1.0 / 504,
     -1.0 / 840, 1.0 / 1320, -1.0 / 1980, 1.0 / 2860},  // k_3
    {1.0 / 20, 1.0 / 30, -1.0 / 105, 1.0 / 280, -1.0 / 630, 1.0 / 1260,
     -1.0 / 2310, 1.0 / 3960, -1.0 / 6435, 1.0 / 10010},  // k_4
    {1.0 / 30, 1.0 / 42, -1.0 / 168, 1.0 / 504, -1.0 / 1260, 1.0 / 2772,
     -1.0 / 5544, 1.0 / 10296, -1.0 / 18018, 1.0 / 30030},  // k_5
};
constexpr double kTypesTaylor[10] = {1.0,       1.0 / 2,  -1.0 / 6, 1.0 / 12,
                                     -1.0 / 20, 1.0 / 30, -1.0 / 42, 1.0 / 56,
                                     -1.0 / 72, 1.0 / 90};
constexpr double kHapaxFractionTaylor[10] = {
    1.0 / 2,        -1.0 / 12,        1.0 / 24,       -19.0 / 720,
    3.0 / 160,      -863.0 / 60480,   275.0 / 24192,  -33953.0 / 3628800,
    8183.0 / 1036800, -3250433.0 / 479001600};

double eval_poly(const double (&c)[10], double t) {
  double acc = c[9];
  for (int i = 8; i >= 0; --i) acc = c[i] + t * acc;
  return acc;
}

// Scaled expected types, E(x)/N_z = ln(x) * x / (x - 1).
double log_curve(double x) {
  const double t = x - 1.0;
  if (std::abs(t) < kNearOneRadius) return eval_poly(kTypesTaylor, t);
  return std::log(x) * x / t;
}

// Scaled n-legomena closed forms for n = 0..5.
double legomena_curve(int n, double x) {
  const double t = x - 1.0;
  if (std::abs(t) < kNearOneRadius) return eval_poly(kLegomenaTaylor[n], t);
  const double lx = std::log(x);
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
  switch (n) {
    case 0:
      return (x - lx * x - 1.0) / t;
    case 1:
      return (x2 - lx * x - x) / (t * t);
    case 2:
      return (x3 - 2.0 * lx * x2 - x) / (2.0 * t * t * t);
    case 3:
      return (2.0 * x4 + 3.0 * x3 - 6.0 * lx * x3 - 6.0 * x2 + x) /
             (6.0 * t * t * t * t);
    case 4:
      return (3.0 * x5 + 10.0 * x4 - 12.0 * lx * x4 - 18.0 * x3 + 6.0 * x2 -
              x) /
             (12.0 * t * t * t * t * t);
    case 5:
      return (12.0 * x6 + 65.0 * x5 - 60.0 * lx * x5 - 120.0 * x4 +
              60.0 * x3 - 20.0 * x2 + 3.0 * x) /
             (60.0 * t * t * t * t * t * t);
    default:
      throw std::invalid_argument("no closed form for n-legomena order " +
                                  std::to_string(n));
  }
}

}  // namespace

double deck_types_recursive(const DeckSpec& spec, std::uint64_t m) {
  if (m > spec.tokens()) {
    throw std::invalid_argument("sample size exceeds deck size");
  }
  const double k = static_cast<double>(spec.types);
  const double n = static_cast<double>(spec.copies);
  const double total = static_cast<double>(spec.tokens());
  double expected = 0.0;
  for (std::uint64_t i = 0; i < m; ++i) {
    expected += n * (k - expected) / (total - static_cast<double>(i));
  }
  return expected;
}

double deck_types_analytic(const DeckSpec& spec, double m) {
  const double total = static_cast<double>(spec.tokens());
  if (!(m >= 0.0 && m <= total)) {
    throw std::invalid_argument("sample size outside [0, k*n]");
  }
  const double k = static_cast<double>(spec.types);
  return k - k * std::pow(1.0 - m / total, static_cast<double>(spec.copies));
}

double series_model(const KVector& kvec, double total_tokens, double m) {
  double types = 0.0, tokens = 0.0;
  for (std::size_t n = 0; n < kvec.size(); ++n) {
    types += kvec[n];
    tokens += static_cast<double>(n) * kvec[n];
  }
  if (std::abs(tokens - total_tokens) >
      1e-9 * std::max(1.0, std::abs(total_tokens))) {
    throw std::invalid_argument("k-vector token mass does not match M");
  }
  const double remain = 1.0 - m / total_tokens;
  double not_drawn = 0.0;
  for (std::size_t n = 0; n < kvec.size(); ++n) {
    if (kvec[n] != 0.0) not_drawn += kvec[n] * std::pow(remain, static_cast<double>(n));
  }
  return types - not_drawn;
}

KVector transform_kvector(const KVector& kvec, double x) {
  check_unit_interval(x, "sampling proportion");
  const std::size_t size = kvec.size();
  KVector out(std::max<std::size_t>(size, 1), 0.0);
  if (size == 0) return out;

  double total_types = 0.0;
  for (double v : kvec) total_types += v;

  if (x == 1.0) {
    out = kvec;
    return out;
  }
  if (x == 0.0) {
    out[0] = total_types;
    return out;
  }

  const double log_x = std::log(x);
  const double log_1mx = std::log1p(-x);

  // Entry 0 is the plain power series sum_i k_i (1-x)^i, evaluated the
  // same way series_model evaluates it so the two routes agree exactly.
  for (std::size_t i = 0; i < size; ++i) {
    if (kvec[i] != 0.0) {
      out[0] += kvec[i] * std::pow(1.0 - x, static_cast<double>(i));
    }
  }

  // log-factorial table for binomial terms; frequencies reach the tens
  // of thousands, so plain factorials would overflow.
  std::vector<double> log_fact(size, 0.0);
  for (std::size_t i = 1; i < size; ++i) {
    log_fact[i] = log_fact[i - 1] + std::log(static_cast<double>(i));
  }

  // Column i spreads k_i over rows n = 0..i with Binomial(i, x) weights.
  // Walk outward from the mode and stop once terms are negligible
  // relative to the peak; the truncated tail is < 1e-18 per column.
  constexpr double kLogCutoff = -42.0;  // ln(1e-18) is about -41.4
  for (std::size_t i = 1; i < size; ++i) {
    const double weight = kvec[i];
    if (weight == 0.0) continue;
    const auto fi = static_cast<double>(i);
    auto log_term = [&](std::size_t n) {
      const auto fn = static_cast<double>(n);
      return log_fact[i] - log_fact[n] - log_fact[i - n] + fn * log_x +
             (fi - fn) * log_1mx;
    };
    auto mode = static_cast<std::size_t>((fi + 1.0) * x);
    mode = std::min(mode, i);
    const double log_peak = log_term(mode);
    for (std::size_t n = mode; n >= 1; --n) {
      const double lt = log_term(n);
      if (lt - log_peak < kLogCutoff) break;
      out[n] += weight * std::exp(lt);
    }
    for (std::size_t n = mode + 1; n <= i; ++n) {
      const double lt = log_term(n);
      if (lt - log_peak < kLogCutoff) break;
      out[n] += weight * std::exp(lt);
    }
  }
  return out;
}

KVector perfect_zipf_kvector(double n_types, std::size_t truncation) {
  if (truncation < 1) {
    throw std::invalid_argument("truncation must be at least 1");
  }
  KVector k(truncation + 1, 0.0);
  for (std::size_t n = 1; n <= truncation; ++n) {
    k[n] = n_types / (static_cast<double>(n) * static_cast<double>(n + 1));
  }
  return k;
}

std::uint64_t perfect_zipf_rank_frequency(double n_types, std::uint64_t rank) {
  if (rank == 0) throw std::invalid_argument("rank starts at 1");
  return static_cast<std::uint64_t>(n_types / static_cast<double>(rank));
}

double log_model_types(const LogModelParams& params, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("token count must be positive");
  return params.types_z * log_curve(m / params.tokens_z);
}

double log_model_legomena(const LogModelParams& params, int n, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("token count must be positive");
  if (n < 0 || n > 5) {
    throw std::invalid_argument(
        "n-legomena closed forms cover n = 0..5 only; use transform_kvector "
        "on a perfect-Zipf vector for higher orders");
  }
  return params.types_z * legomena_curve(n, m / params.tokens_z);
}

double hapax_fraction_model(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  const double t = x - 1.0;
  if (std::abs(t) < kNearOneRadius) return eval_poly(kHapaxFractionTaylor, t);
  return 1.0 / std::log(x) + 1.0 / (1.0 - x);
}

double zipf_series_types(double n_types, double x, std::size_t terms) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw std::invalid_argument("x must lie in (0, 1]");
  }
  if (terms < 1) throw std::invalid_argument("need at least one term");
  const double remain = 1.0 - x;
  double tail = 0.0;
  double power = 1.0;
  for (std::size_t n = 1; n <= terms; ++n) {
    power *= remain;
    tail += power / (static_cast<double>(n) * static_cast<double>(n + 1));
  }
  return n_types - n_types * tail;
}

}  // namespace legomena
