#include "pushpull/output.hpp"

#include <charconv>
#include <map>
#include <ostream>

#include <json.hpp>

#include "pushpull/errors.hpp"

namespace pushpull {

namespace {

std::string csvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cellToCsv(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return formatDouble(*d);
  return csvEscape(std::get<std::string>(cell));
}

nlohmann::json cellToJson(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  return std::get<std::string>(cell);
}

}  // namespace

std::string formatDouble(double v) {
  // Shortest decimal form that parses back to the same bits.
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void writeCsv(const OutputRecord& rec, std::ostream& os) {
  os << "# schema: " << rec.schema << "\n";
  os << "# command: " << rec.command << "\n";
  for (const auto& [key, value] : rec.meta) {
    os << "# " << key << ": " << value << "\n";
  }
  for (std::size_t i = 0; i < rec.columns.size(); ++i) {
    os << (i ? "," : "") << csvEscape(rec.columns[i]);
  }
  os << "\n";
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << cellToCsv(row[i]);
    }
    os << "\n";
  }
}

void writeJsonLines(const OutputRecord& rec, std::ostream& os) {
  nlohmann::json head;
  head["schema"] = rec.schema;
  head["command"] = rec.command;
  for (const auto& [key, value] : rec.meta) head[key] = value;
  os << head.dump() << "\n";
  for (const auto& row : rec.rows) {
    nlohmann::json line;
    for (std::size_t i = 0; i < row.size() && i < rec.columns.size(); ++i) {
      line[rec.columns[i]] = cellToJson(row[i]);
    }
    os << line.dump() << "\n";
  }
}

void write(const OutputRecord& rec, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::csv) {
    writeCsv(rec, os);
  } else {
    writeJsonLines(rec, os);
  }
}

OutputFormat parseOutputFormat(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json-lines") return OutputFormat::jsonLines;
  throw DomainError("unknown output format '" + name + "' (expected csv or json-lines)");
}

void appendSimReportRows(OutputRecord& rec, const SimReport& report, bool includeSamples) {
  rec.columns = {"section", "key", "index", "value"};
  auto row = [&rec](const std::string& section, const std::string& key, Cell index, Cell value) {
    rec.addRow({section, key, std::move(index), std::move(value)});
  };

  row("run", "n", std::int64_t{0}, report.net.n);
  row("run", "k", std::int64_t{0}, report.net.k);
  row("run", "c", std::int64_t{0}, report.net.c);
  row("run", "algorithm", std::int64_t{0}, std::string(algorithmName(report.algorithm)));
  row("run", "replications", std::int64_t{0}, report.replications);
  row("run", "seed", std::int64_t{0}, static_cast<std::int64_t>(report.seed));
  row("run", "max_rounds", std::int64_t{0}, report.maxRounds);
  row("run", "rng", std::int64_t{0}, report.rng);
  row("run", "code_version", std::int64_t{0}, report.codeVersion);

  for (std::int64_t v = report.yEmpirical.minValue(); v <= report.yEmpirical.maxValue(); ++v) {
    row("y_pmf", "probability", v, report.yEmpirical.at(v));
  }
  row("y_stats", "mean", std::int64_t{0}, report.yMean);
  row("y_stats", "variance", std::int64_t{0}, report.yVariance);

  for (std::size_t m = 0; m < report.meanInformedByRound.size(); ++m) {
    row("round", "mean_informed", static_cast<std::int64_t>(m), report.meanInformedByRound[m]);
    row("round", "observations", static_cast<std::int64_t>(m), report.roundObservations[m]);
  }

  for (const LevelReport& lvl : report.levels) {
    const std::string key = formatDouble(lvl.lambda);
    row("level", key, std::int64_t{0}, std::string("target=") + std::to_string(lvl.target));
    if (lvl.tauTracked) {
      std::map<std::int64_t, std::int64_t> tauHist;
      for (std::int64_t tau : lvl.tauSamples) ++tauHist[tau];
      for (const auto& [tau, count] : tauHist) row("tau_hist", key, tau, count);
      row("tau_censored", key, std::int64_t{0}, lvl.tauCensored);
    }
    std::map<std::int64_t, std::int64_t> nuHist;
    for (std::int64_t nu : lvl.nuSamples) ++nuHist[nu];
    for (const auto& [nu, count] : nuHist) row("nu_hist", key, nu, count);
    row("nu_censored", key, std::int64_t{0}, lvl.nuCensored);
    if (includeSamples) {
      for (std::size_t s = 0; s < lvl.tauSamples.size(); ++s) {
        row("tau_samples", key, static_cast<std::int64_t>(s), lvl.tauSamples[s]);
      }
      for (std::size_t s = 0; s < lvl.nuSamples.size(); ++s) {
        row("nu_samples", key, static_cast<std::int64_t>(s), lvl.nuSamples[s]);
      }
    }
  }
}

}  // namespace pushpull
