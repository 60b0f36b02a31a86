// Command-line front end for corpus statistics, vocabulary-growth curves,
// optimum-sample fitting and model comparison.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "legomena/corpus.hpp"
#include "legomena/fitting.hpp"
#include "legomena/io.hpp"
#include "legomena/models.hpp"
#include "legomena/sampling.hpp"

namespace {

using namespace legomena;

struct CommonOpts {
  std::string tokenizer = "default";
  std::size_t points = 11;
  std::uint32_t trials = 10;
  std::uint64_t seed = 0;
  std::size_t legomena_cap = 5;
  std::string format = "csv";
  std::string out_path;
};

std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("LEGOMENA_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 42;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool curve_command) {
  cmd->add_option("--tokenizer", opts.tokenizer, "Tokenizer mode")
      ->check(CLI::IsMember({"default", "whitespace"}));
  if (curve_command) {
    cmd->add_option("--points", opts.points, "Sample-grid size")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000}));
    cmd->add_option("--trials", opts.trials, "Random trials per sample size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed,
                    "RNG seed (default: LEGOMENA_SEED env var, else 42)");
  }
  cmd->add_option("--legomena", opts.legomena_cap,
                  "Highest n-legomena order reported")
      ->check(CLI::Range(std::size_t{1}, std::size_t{5}));
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
}

TokenizerMode parse_mode(const std::string& name) {
  return name == "whitespace" ? TokenizerMode::Whitespace
                              : TokenizerMode::Default;
}

// Writes to --out or stdout; returns nonzero exit code on I/O failure.
int emit(const CommonOpts& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << opts.out_path << "\n";
    return 2;
  }
  out << payload;
  return out.good() ? 0 : 2;
}

Corpus load_corpus(const std::string& path, const CommonOpts& opts) {
  return Corpus::from_text(read_text_file(path), parse_mode(opts.tokenizer));
}

int cmd_stats(const std::string& path, const CommonOpts& opts,
              const std::string& dump_json, const std::string& dump_freq) {
  const Corpus corpus = load_corpus(path, opts);
  const KVector k = corpus.k_vector();
  std::vector<std::uint64_t> k_head(opts.legomena_cap, 0);
  for (std::size_t n = 1; n <= opts.legomena_cap && n < k.size(); ++n) {
    k_head[n - 1] = static_cast<std::uint64_t>(k[n]);
  }
  const double h = corpus.type_count() > 0 ? corpus.hapax_proportion() : 0.0;

  std::ostringstream body;
  if (opts.format == "json") {
    nlohmann::json j;
    j["M"] = corpus.token_count();
    j["N"] = corpus.type_count();
    j["k_head"] = k_head;
    j["hapax_proportion"] = h;
    j["top_frequency"] = corpus.top_frequency();
    body << j.dump(2) << "\n";
  } else {
    body << "M,N";
    for (std::size_t n = 1; n <= opts.legomena_cap; ++n) body << ",k" << n;
    body << ",hapax_proportion,top_frequency\n";
    body << corpus.token_count() << "," << corpus.type_count();
    for (auto v : k_head) body << "," << v;
    body << "," << format_double(h) << "," << corpus.top_frequency() << "\n";
  }

  if (!dump_json.empty()) {
    std::ofstream out(dump_json, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << dump_json << "\n";
      return 2;
    }
    write_corpus_json(out, corpus);
  }
  if (!dump_freq.empty()) {
    std::ofstream out(dump_freq, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << dump_freq << "\n";
      return 2;
    }
    write_frequency_csv(out, corpus);
  }
  return emit(opts, body.str());
}

int cmd_ttr(const std::string& path, const CommonOpts& opts) {
  const Corpus corpus = load_corpus(path, opts);
  const auto grid = default_grid(corpus.token_count(), opts.points);
  const TTRCurve curve =
      sample_ttr_curve(corpus, grid, opts.trials, opts.seed, opts.legomena_cap);
  const OptimumSample fit = fit_optimum_sample(corpus);

  std::ostringstream body;
  if (opts.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pt : curve.points) {
      const auto m = static_cast<double>(pt.tokens);
      rows.push_back({{"m", pt.tokens},
                      {"types_obs", pt.types_mean},
                      {"hapax_obs", pt.legomena_mean[0]},
                      {"types_pred", log_model_types(fit.params(), m)},
                      {"hapax_pred", log_model_legomena(fit.params(), 1, m)}});
    }
    body << rows.dump(2) << "\n";
  } else {
    body << "m,types_obs,hapax_obs,types_pred,hapax_pred\n";
    for (const auto& pt : curve.points) {
      const auto m = static_cast<double>(pt.tokens);
      body << pt.tokens << "," << format_double(pt.types_mean) << ","
           << format_double(pt.legomena_mean[0]) << ","
           << format_double(log_model_types(fit.params(), m)) << ","
           << format_double(log_model_legomena(fit.params(), 1, m)) << "\n";
    }
  }
  return emit(opts, body.str());
}

int cmd_fit(const std::string& path, const CommonOpts& opts) {
  const Corpus corpus = load_corpus(path, opts);
  const OptimumSample fit = fit_optimum_sample(corpus);
  std::ostringstream body;
  if (opts.format == "json") {
    nlohmann::json j = {{"z", fit.scale},
                        {"Mz", fit.tokens_z},
                        {"Nz", fit.types_z}};
    body << j.dump(2) << "\n";
  } else {
    body << "z,Mz,Nz\n"
         << format_double(fit.scale) << "," << format_double(fit.tokens_z)
         << "," << format_double(fit.types_z) << "\n";
  }
  return emit(opts, body.str());
}

int cmd_predict(double tokens_z, double types_z,
                const std::vector<double>& sizes, const CommonOpts& opts) {
  const LogModelParams params{tokens_z, types_z};
  std::ostringstream body;
  if (opts.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (double m : sizes) {
      nlohmann::json row = {{"m", m},
                            {"types_pred", log_model_types(params, m)}};
      for (std::size_t n = 1; n <= opts.legomena_cap; ++n) {
        row["k" + std::to_string(n) + "_pred"] =
            log_model_legomena(params, static_cast<int>(n), m);
      }
      rows.push_back(row);
    }
    body << rows.dump(2) << "\n";
  } else {
    body << "m,types_pred";
    for (std::size_t n = 1; n <= opts.legomena_cap; ++n) {
      body << ",k" << n << "_pred";
    }
    body << "\n";
    for (double m : sizes) {
      body << format_double(m) << ","
           << format_double(log_model_types(params, m));
      for (std::size_t n = 1; n <= opts.legomena_cap; ++n) {
        body << ","
             << format_double(
                    log_model_legomena(params, static_cast<int>(n), m));
      }
      body << "\n";
    }
  }
  return emit(opts, body.str());
}

int cmd_compare(const std::vector<std::string>& paths,
                const CommonOpts& opts) {
  std::vector<FitReport> reports;
  bool any_failed = false;
  for (const auto& path : paths) {
    try {
      const Corpus corpus = load_corpus(path, opts);
      const auto grid = default_grid(corpus.token_count(), opts.points);
      reports.push_back(
          compare_models(corpus, path, grid, opts.trials, opts.seed));
    } catch (const std::exception& e) {
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      any_failed = true;
    }
  }
  std::ostringstream body;
  if (opts.format == "json") {
    write_fit_report_json(body, reports);
  } else {
    write_fit_report_csv_header(body);
    for (const auto& r : reports) write_fit_report_csv_row(body, r);
  }
  const int rc = emit(opts, body.str());
  if (rc != 0) return rc;
  return any_failed ? 1 : 0;
}

int cmd_deck(std::uint64_t types, std::uint64_t copies,
             const CommonOpts& opts) {
  const DeckSpec spec{types, copies};
  const TTRCurve curve = simulate_deck(spec, opts.trials, opts.seed);
  std::ostringstream body;
  body << "m,types_empirical,types_recursive,types_analytic\n";
  for (const auto& pt : curve.points) {
    body << pt.tokens << "," << format_double(pt.types_mean) << ","
         << format_double(deck_types_recursive(spec, pt.tokens)) << ","
         << format_double(
                deck_types_analytic(spec, static_cast<double>(pt.tokens)))
         << "\n";
  }
  return emit(opts, body.str());
}

int cmd_zipf(double types_z, std::uint64_t ranks, const CommonOpts& opts) {
  std::ostringstream body;
  body << "n,k_n\n";
  const KVector k = perfect_zipf_kvector(types_z, opts.legomena_cap);
  for (std::size_t n = 1; n < k.size(); ++n) {
    body << n << "," << format_double(k[n]) << "\n";
  }
  body << "\nr,f_r\n";
  for (std::uint64_t r = 1; r <= ranks; ++r) {
    body << r << "," << perfect_zipf_rank_frequency(types_z, r) << "\n";
  }
  return emit(opts, body.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type/token and n-legomena statistics, growth-curve "
               "prediction and model comparison for text corpora"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.seed = seed_from_env();

  std::string input;
  std::vector<std::string> inputs;
  std::string dump_json, dump_freq;
  double tokens_z = 0.0, types_z = 0.0;
  std::vector<double> predict_sizes;
  std::uint64_t deck_types = 4, deck_copies = 13, zipf_ranks = 10;

  auto* stats = app.add_subcommand(
      "stats", "Whole-corpus statistics: M, N, legomena head, hapax share");
  stats->add_option("input", input, "UTF-8 text file")->required();
  stats->add_option("--dump-json", dump_json,
                    "Also write the corpus snapshot {M, N, k} as JSON");
  stats->add_option("--dump-freq", dump_freq,
                    "Also write the type,count frequency table as CSV");
  add_common(stats, opts, false);

  auto* ttr = app.add_subcommand(
      "ttr", "Observed vs predicted type/hapax growth over a sample grid");
  ttr->add_option("input", input, "UTF-8 text file")->required();
  add_common(ttr, opts, true);

  auto* fit = app.add_subcommand(
      "fit", "Fit optimum-sample parameters (z, Mz, Nz) from corpus counts");
  fit->add_option("input", input, "UTF-8 text file")->required();
  add_common(fit, opts, false);

  auto* predict = app.add_subcommand(
      "predict", "Evaluate the logarithmic model at given sample sizes");
  predict->add_option("--mz", tokens_z, "Optimum token count Mz")->required();
  predict->add_option("--nz", types_z, "Optimum type count Nz")->required();
  predict->add_option("-m,--size", predict_sizes, "Sample sizes in tokens")
      ->required();
  add_common(predict, opts, false);

  auto* compare = app.add_subcommand(
      "compare", "RMSE comparison of Heaps / series / log model per book");
  compare->add_option("inputs", inputs, "UTF-8 text files")->required();
  add_common(compare, opts, true);

  auto* deck = app.add_subcommand(
      "deck", "Simulated vs analytic growth curve of a k-types deck");
  deck->add_option("-k,--types", deck_types, "Distinct types in the deck");
  deck->add_option("-n,--copies", deck_copies, "Copies per type");
  add_common(deck, opts, true);

  auto* zipf = app.add_subcommand(
      "zipf", "Perfect-Zipf diagnostics: legomena counts, ranked frequencies");
  zipf->add_option("--nz", types_z, "Optimum type count Nz")->required();
  zipf->add_option("--ranks", zipf_ranks, "Ranked frequencies to list");
  add_common(zipf, opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (stats->parsed()) return cmd_stats(input, opts, dump_json, dump_freq);
    if (ttr->parsed()) return cmd_ttr(input, opts);
    if (fit->parsed()) return cmd_fit(input, opts);
    if (predict->parsed()) {
      return cmd_predict(tokens_z, types_z, predict_sizes, opts);
    }
    if (compare->parsed()) return cmd_compare(inputs, opts);
    if (deck->parsed()) return cmd_deck(deck_types, deck_copies, opts);
    if (zipf->parsed()) return cmd_zipf(types_z, zipf_ranks, opts);
  } catch (const IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
