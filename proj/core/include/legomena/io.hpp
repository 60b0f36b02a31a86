#ifndef LEGOMENA_IO_HPP_
#define LEGOMENA_IO_HPP_

#include <ostream>
#include <span>
#include <string>

#include "legomena/corpus.hpp"
#include "legomena/fitting.hpp"
#include "legomena/sampling.hpp"

namespace legomena {

// Reads a whole UTF-8 text file. Throws IngestError on I/O failure.
std::string read_text_file(const std::string& path);

// {"M": ..., "N": ..., "k": [k_0..k_max]}
void write_corpus_json(std::ostream& out, const Corpus& corpus);

// "type,count" rows, descending by count, ties lexicographic.
void write_frequency_csv(std::ostream& out, const Corpus& corpus);

// Header "m,types_mean,types_sd,k1_mean,...,kJ_mean".
void write_ttr_csv(std::ostream& out, const TTRCurve& curve);

void write_fit_report_csv_header(std::ostream& out);
void write_fit_report_csv_row(std::ostream& out, const FitReport& report);
void write_fit_report_json(std::ostream& out,
                           std::span<const FitReport> reports);

// Stable numeric formatting used by every CSV/JSON writer: shortest
// round-trip representation, so identical values serialize identically.
std::string format_double(double value);

}  // namespace legomena

#endif  // LEGOMENA_IO_HPP_
