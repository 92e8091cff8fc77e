#ifndef PUSHPULL_OUTPUT_HPP
#define PUSHPULL_OUTPUT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pushpull/sim.hpp"

namespace pushpull {

using Cell = std::variant<std::int64_t, double, std::string>;

enum class OutputFormat { csv, jsonLines };

// Self-describing result table. `command` is a canonical command line
// with every payload-affecting parameter resolved, so re-running it
// reproduces the rows bit for bit; `meta` carries annotations such as
// oracle deviations or boundary warnings.
struct OutputRecord {
  std::string schema;
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void addRow(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

// Doubles are rendered with "%.17g": enough digits to round-trip, and a
// stable rendering for byte-comparison of runs.
std::string formatDouble(double v);

void writeCsv(const OutputRecord& rec, std::ostream& os);
void writeJsonLines(const OutputRecord& rec, std::ostream& os);
void write(const OutputRecord& rec, OutputFormat format, std::ostream& os);

// Flattens a simulation report into (section, key, index, value) rows.
// Sample multisets are emitted as histograms; includeSamples adds the
// raw per-replication tau/nu rows on top.
void appendSimReportRows(OutputRecord& rec, const SimReport& report, bool includeSamples);

OutputFormat parseOutputFormat(const std::string& name);

}  // namespace pushpull

#endif
