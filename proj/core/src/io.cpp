#include "legomena/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace legomena {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IngestError("read failure: " + path);
  return buf.str();
}

std::string format_double(double value) {
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

void write_corpus_json(std::ostream& out, const Corpus& corpus) {
  nlohmann::json j;
  j["M"] = corpus.token_count();
  j["N"] = corpus.type_count();
  std::vector<std::uint64_t> k;
  for (double v : corpus.k_vector()) {
    k.push_back(static_cast<std::uint64_t>(v));
  }
  j["k"] = k;
  out << j.dump(2) << "\n";
}

void write_frequency_csv(std::ostream& out, const Corpus& corpus) {
  std::vector<std::size_t> order(corpus.type_names().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& names = corpus.type_names();
  const auto& counts = corpus.type_counts();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    return names[a] < names[b];
  });
  out << "type,count\n";
  for (auto i : order) {
    out << names[i] << "," << counts[i] << "\n";
  }
}

void write_ttr_csv(std::ostream& out, const TTRCurve& curve) {
  out << "m,types_mean,types_sd";
  for (std::size_t n = 1; n <= curve.legomena_cap; ++n) {
    out << ",k" << n << "_mean";
  }
  out << "\n";
  for (const auto& pt : curve.points) {
    out << pt.tokens << "," << format_double(pt.types_mean) << ","
        << format_double(pt.types_sd);
    for (double v : pt.legomena_mean) out << "," << format_double(v);
    out << "\n";
  }
}

void write_fit_report_csv_header(std::ostream& out) {
  out << "title,Mz,Nz,heaps_pct,series_pct,model_pct\n";
}

void write_fit_report_csv_row(std::ostream& out, const FitReport& report) {
  std::string title = report.title;
  if (title.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : title) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    title = quoted;
  }
  out << title << "," << format_double(report.tokens_z) << ","
      << format_double(report.types_z) << ","
      << format_double(report.rmse_heaps * 100.0) << ","
      << format_double(report.rmse_series * 100.0) << ","
      << format_double(report.rmse_model * 100.0) << "\n";
}

void write_fit_report_json(std::ostream& out,
                           std::span<const FitReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"title", r.title},
                   {"Mz", r.tokens_z},
                   {"Nz", r.types_z},
                   {"heaps_pct", r.rmse_heaps * 100.0},
                   {"series_pct", r.rmse_series * 100.0},
                   {"model_pct", r.rmse_model * 100.0}});
  }
  out << arr.dump(2) << "\n";
}

}  // namespace legomena
