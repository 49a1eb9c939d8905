// Output records and serialization used by the command-line tool.
//
// Counts are always carried as decimal strings. Probabilities are derived
// values; CSV prints them with 15 significant digits.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parking/exact.hpp"
#include "parking/simulation.hpp"

namespace parking::report {

enum class Format { csv, json };

Format parse_format(const std::string& s);
std::string to_string(Format f);

struct OutputRecord {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::string count;
  double probability = 0.0;
  std::optional<double> approx;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

/// Fully resolved invocation, echoed with every run.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> parameters;
  Format format = Format::csv;
  std::string out = "-";
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultEnumerationCap;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// "%.15g".
std::string format_real(double v);

/// Minimal RFC-4180 writer: quotes a field when `quoted` is set or when it
/// contains a comma, quote or line break.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);
  CsvWriter& field(const std::string& v, bool quoted = false);
  CsvWriter& field(std::int64_t v);
  CsvWriter& real(double v);
  CsvWriter& end_row();
  std::string str() const { return out_; }

private:
  std::string out_;
  bool row_open_ = false;
};

/// cp(n, n, k) rows for n = 1..n_max, space-separated, one line per n.
std::string render_table(std::int64_t n_max);

std::vector<OutputRecord> distribution_records(const DefectDistribution& d);
std::string records_csv(const std::vector<OutputRecord>& records);
std::string records_json(const std::vector<OutputRecord>& records, const RunConfig& config);
std::vector<OutputRecord> records_from_json(const std::string& text);

struct Fig1Row {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  double exact_probability = 0.0;
  std::optional<double> approx;  // absent outside m < n + k
};

/// cp(n,m,k)/n^m beside pmf_approx for k = 0..m, for each m.
std::vector<Fig1Row> fig1_rows(std::int64_t n, const std::vector<std::int64_t>& m_list);
std::string fig1_csv(const std::vector<Fig1Row>& rows);

struct Fig2Row {
  std::int64_t n = 0;
  double lambda = 0.0;
  std::int64_t m = 0;
  double exact_full_probability = 0.0;
  double limit = 0.0;
};

/// 0.50, 0.55, ..., 4.00.
std::vector<double> default_lambda_grid();

/// floor(lambda * n), robust to the representation error of decimal lambdas.
std::int64_t scaled_drivers(double lambda, std::int64_t n);

/// cp(n, m, m-n)/n^m, exactly 0 for m < n.
double full_lot_probability(std::int64_t n, std::int64_t m);

std::vector<Fig2Row> fig2_rows(const std::vector<std::int64_t>& n_list,
                               const std::vector<double>& lambdas);
std::string fig2_csv(const std::vector<Fig2Row>& rows);

struct SimulationRow {
  std::int64_t k = 0;
  std::uint64_t hits = 0;
  double frequency = 0.0;
  std::optional<double> exact_probability;
};

/// Exact probabilities are attached when m <= exact_limit and n >= 1.
std::vector<SimulationRow> simulation_rows(const EmpiricalDistribution& e,
                                           std::int64_t exact_limit = 1000);

}  // namespace parking::report
