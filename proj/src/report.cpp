#include "parking/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "parking/asymptotics.hpp"

namespace parking::report {

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv or json)");
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

void to_json(nlohmann::json& j, const OutputRecord& r) {
  j = nlohmann::json{{"n", r.n}, {"m", r.m}, {"k", r.k}, {"count", r.count},
                     {"probability", r.probability}};
  if (r.approx) j["approx"] = *r.approx;
}

void from_json(const nlohmann::json& j, OutputRecord& r) {
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("k").get_to(r.k);
  j.at("count").get_to(r.count);
  j.at("probability").get_to(r.probability);
  r.approx.reset();
  if (j.contains("approx")) r.approx = j.at("approx").get<double>();
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"command", c.command}, {"parameters", c.parameters},
                     {"format", to_string(c.format)}, {"out", c.out},
                     {"seed", c.seed}, {"cap", c.cap}};
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  j.at("command").get_to(c.command);
  j.at("parameters").get_to(c.parameters);
  c.format = parse_format(j.at("format").get<std::string>());
  j.at("out").get_to(c.out);
  j.at("seed").get_to(c.seed);
  j.at("cap").get_to(c.cap);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) {
  for (const auto& h : header) field(h);
  end_row();
}

CsvWriter& CsvWriter::field(const std::string& v, bool quoted) {
  if (row_open_) out_ += ',';
  row_open_ = true;
  if (!quoted) quoted = v.find_first_of(",\"\r\n") != std::string::npos;
  if (!quoted) {
    out_ += v;
    return *this;
  }
  out_ += '"';
  for (char c : v) {
    if (c == '"') out_ += '"';
    out_ += c;
  }
  out_ += '"';
  return *this;
}

CsvWriter& CsvWriter::field(std::int64_t v) { return field(std::to_string(v)); }
CsvWriter& CsvWriter::real(double v) { return field(format_real(v)); }

CsvWriter& CsvWriter::end_row() {
  out_ += '\n';
  row_open_ = false;
  return *this;
}

std::string render_table(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("table: n_max must be >= 1");
  std::string out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto d = defect_distribution(n, n);
    for (std::int64_t k = 0; k < n; ++k) {
      if (k > 0) out += ' ';
      out += d.counts[static_cast<std::size_t>(k)].to_string();
    }
    out += '\n';
  }
  return out;
}

std::vector<OutputRecord> distribution_records(const DefectDistribution& d) {
  const auto probs = d.probabilities();
  std::vector<OutputRecord> out;
  out.reserve(d.counts.size());
  for (std::size_t k = 0; k < d.counts.size(); ++k) {
    OutputRecord r{d.n, d.m, static_cast<std::int64_t>(k), d.counts[k].to_string(), probs[k], {}};
    if (d.n >= 1 && d.m < d.n + r.k) r.approx = pmf_approx(d.n, d.m, r.k);
    out.push_back(std::move(r));
  }
  return out;
}

std::string records_csv(const std::vector<OutputRecord>& records) {
  CsvWriter w({"n", "m", "k", "count", "probability", "approx"});
  for (const auto& r : records) {
    w.field(r.n).field(r.m).field(r.k).field(r.count, true).real(r.probability);
    if (r.approx) {
      w.real(*r.approx);
    } else {
      w.field("NA");
    }
    w.end_row();
  }
  return w.str();
}

std::string records_json(const std::vector<OutputRecord>& records, const RunConfig& config) {
  nlohmann::json j{{"config", config}, {"records", records}};
  return j.dump(2) + "\n";
}

std::vector<OutputRecord> records_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return j.at("records").get<std::vector<OutputRecord>>();
}

std::vector<Fig1Row> fig1_rows(std::int64_t n, const std::vector<std::int64_t>& m_list) {
  std::vector<Fig1Row> rows;
  for (std::int64_t m : m_list) {
    const auto d = defect_distribution(n, m);
    const auto probs = d.probabilities();
    for (std::int64_t k = 0; k <= m; ++k) {
      Fig1Row row{n, m, k, probs[static_cast<std::size_t>(k)], {}};
      if (m < n + k) row.approx = pmf_approx(n, m, k);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string fig1_csv(const std::vector<Fig1Row>& rows) {
  CsvWriter w({"n", "m", "k", "exact_probability", "approx"});
  for (const auto& r : rows) {
    w.field(r.n).field(r.m).field(r.k).real(r.exact_probability);
    if (r.approx) {
      w.real(*r.approx);
    } else {
      w.field("NA");
    }
    w.end_row();
  }
  return w.str();
}

std::vector<double> default_lambda_grid() {
  std::vector<double> grid;
  for (int hundredths = 50; hundredths <= 400; hundredths += 5) grid.push_back(hundredths / 100.0);
  return grid;
}

std::int64_t scaled_drivers(double lambda, std::int64_t n) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
  const double scaled = lambda * static_cast<double>(n);
  return static_cast<std::int64_t>(std::floor(scaled * (1.0 + 1e-12)));
}

double full_lot_probability(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 0) throw std::invalid_argument("full_lot_probability: need n >= 1, m >= 0");
  if (m < n) return 0.0;
  const auto count = defect_count_explicit({n, m, m - n});
  return ratio_to_double(count, ipow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)));
}

std::vector<Fig2Row> fig2_rows(const std::vector<std::int64_t>& n_list,
                               const std::vector<double>& lambdas) {
  std::vector<Fig2Row> rows;
  for (std::int64_t n : n_list) {
    for (double lambda : lambdas) {
      const std::int64_t m = scaled_drivers(lambda, n);
      rows.push_back({n, lambda, m, full_lot_probability(n, m), full_lot_limit(lambda)});
    }
  }
  return rows;
}

std::string fig2_csv(const std::vector<Fig2Row>& rows) {
  CsvWriter w({"n", "lambda", "m", "exact_full_probability", "limit"});
  for (const auto& r : rows) {
    w.field(r.n).real(r.lambda).field(r.m).real(r.exact_full_probability).real(r.limit).end_row();
  }
  return w.str();
}

std::vector<SimulationRow> simulation_rows(const EmpiricalDistribution& e, std::int64_t exact_limit) {
  std::vector<double> exact;
  if (e.m <= exact_limit) exact = defect_distribution(e.n, e.m).probabilities();
  std::vector<SimulationRow> rows;
  for (std::int64_t k = 0; k <= e.m; ++k) {
    SimulationRow r{k, e.histogram[static_cast<std::size_t>(k)], e.frequency(k), {}};
    if (!exact.empty()) r.exact_probability = exact[static_cast<std::size_t>(k)];
    rows.push_back(r);
  }
  return rows;
}

}  // namespace parking::report
