// parking: command-line front end for defective parking enumeration.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap refusal.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parking/report.hpp"
#include "parking/simulation.hpp"
#include "parking/verify.hpp"

namespace {

using parking::report::Format;
using parking::report::RunConfig;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::vector<std::int64_t> n_list;
  std::vector<std::int64_t> m_list;
  std::vector<double> lambdas;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::uint64_t cap = parking::kDefaultEnumerationCap;
  std::string format = "csv";
  std::string out = "-";
  std::string level = "quick";
  std::string method = "explicit";
};

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    if constexpr (std::is_same_v<T, double>) {
      s += parking::report::format_real(v[i]);
    } else {
      s += std::to_string(v[i]);
    }
  }
  return s;
}

void emit(const RunConfig& cfg, const std::string& body) {
  if (cfg.format != Format::json) {
    std::cerr << "# config: " << nlohmann::json(cfg).dump() << '\n';
  }
  if (cfg.out == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
  f << body;
}

std::string wrap_json(const RunConfig& cfg, nlohmann::json records) {
  return nlohmann::json{{"config", cfg}, {"records", std::move(records)}}.dump(2) + "\n";
}

RunConfig base_config(const std::string& command, const Options& o) {
  RunConfig c;
  c.command = command;
  c.format = parking::report::parse_format(o.format);
  c.out = o.out;
  c.seed = o.seed;
  c.cap = o.cap;
  return c;
}

int cmd_table(const Options& o) {
  const std::int64_t n_max = o.n < 0 ? 10 : o.n;
  RunConfig cfg = base_config("table", o);
  cfg.parameters = {{"n", std::to_string(n_max)}};
  if (cfg.format == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t n = 1; n <= n_max; ++n) {
      for (const auto& r : parking::report::distribution_records(parking::defect_distribution(n, n))) {
        if (r.k < n) rows.push_back(r);
      }
    }
    emit(cfg, wrap_json(cfg, rows));
  } else {
    emit(cfg, parking::report::render_table(n_max));
  }
  return 0;
}

int cmd_dist(const Options& o) {
  if (o.n < 0 || o.m < 0) throw CLI::ValidationError("dist", "--n and --m are required");
  RunConfig cfg = base_config("dist", o);
  cfg.parameters = {{"n", std::to_string(o.n)}, {"m", std::to_string(o.m)}, {"method", o.method}};
  parking::DefectDistribution d;
  if (o.method == "explicit") {
    d = parking::defect_distribution(o.n, o.m);
  } else if (o.method == "recurrence") {
    d = parking::defect_distribution(o.n, o.m);  // validates arguments
    for (std::int64_t k = 0; k <= o.m; ++k) {
      d.counts[static_cast<std::size_t>(k)] = parking::defect_count_recurrence({o.n, o.m, k});
    }
  } else {
    d = parking::enumerate_exhaustive(o.n, o.m, o.cap);
  }
  const auto records = parking::report::distribution_records(d);
  emit(cfg, cfg.format == Format::json ? parking::report::records_json(records, cfg)
                                       : parking::report::records_csv(records));
  return 0;
}

int cmd_fig1(const Options& o) {
  const std::int64_t n = o.n < 0 ? 100 : o.n;
  const std::vector<std::int64_t> ms = o.m_list.empty() ? std::vector<std::int64_t>{90, 100, 110} : o.m_list;
  RunConfig cfg = base_config("plotdata-fig1", o);
  cfg.parameters = {{"n", std::to_string(n)}, {"m", join(ms)}};
  const auto rows = parking::report::fig1_rows(n, ms);
  if (cfg.format == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row{{"n", r.n}, {"m", r.m}, {"k", r.k}, {"exact_probability", r.exact_probability}};
      row["approx"] = r.approx ? nlohmann::json(*r.approx) : nlohmann::json("NA");
      j.push_back(row);
    }
    emit(cfg, wrap_json(cfg, j));
  } else {
    emit(cfg, parking::report::fig1_csv(rows));
  }
  return 0;
}

int cmd_fig2(const Options& o) {
  const std::vector<std::int64_t> ns = o.n_list.empty() ? std::vector<std::int64_t>{10, 20} : o.n_list;
  const std::vector<double> grid = o.lambdas.empty() ? parking::report::default_lambda_grid() : o.lambdas;
  RunConfig cfg = base_config("plotdata-fig2", o);
  cfg.parameters = {{"n", join(ns)}, {"lambda", join(grid)}};
  const auto rows = parking::report::fig2_rows(ns, grid);
  if (cfg.format == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n}, {"lambda", r.lambda}, {"m", r.m},
                   {"exact_full_probability", r.exact_full_probability}, {"limit", r.limit}});
    }
    emit(cfg, wrap_json(cfg, j));
  } else {
    emit(cfg, parking::report::fig2_csv(rows));
  }
  return 0;
}

int cmd_simulate(const Options& o) {
  if (o.n < 0 || o.m < 0) throw CLI::ValidationError("simulate", "--n and --m are required");
  RunConfig cfg = base_config("simulate", o);
  cfg.parameters = {{"n", std::to_string(o.n)}, {"m", std::to_string(o.m)}, {"trials", std::to_string(o.trials)}};
  const auto sample = parking::sample_empirical(o.n, o.m, o.trials, parking::Seed{o.seed});
  const auto rows = parking::report::simulation_rows(sample);
  if (cfg.format == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row{{"k", r.k}, {"hits", r.hits}, {"frequency", r.frequency}};
      if (r.exact_probability) row["exact_probability"] = *r.exact_probability;
      j.push_back(row);
    }
    emit(cfg, wrap_json(cfg, j));
  } else {
    parking::report::CsvWriter w({"k", "hits", "frequency", "exact_probability"});
    for (const auto& r : rows) {
      w.field(r.k).field(std::to_string(r.hits)).real(r.frequency);
      if (r.exact_probability) {
        w.real(*r.exact_probability);
      } else {
        w.field("NA");
      }
      w.end_row();
    }
    emit(cfg, w.str());
  }
  return 0;
}

int cmd_coupon(const Options& o) {
  if (o.n < 1) throw CLI::ValidationError("coupon", "--n must be >= 1");
  RunConfig cfg = base_config("coupon", o);
  cfg.parameters = {{"n", std::to_string(o.n)}, {"trials", std::to_string(o.trials)}};
  parking::report::CsvWriter w({"trial", "cars"});
  nlohmann::json j = nlohmann::json::array();
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto cars = parking::cars_until_full(o.n, parking::derive_seed(parking::Seed{o.seed}, t));
    w.field(static_cast<std::int64_t>(t)).field(cars).end_row();
    j.push_back({{"trial", t}, {"cars", cars}});
  }
  emit(cfg, cfg.format == Format::json ? wrap_json(cfg, j) : w.str());
  return 0;
}

int cmd_verify(const Options& o) {
  const auto level = parking::verify::parse_level(o.level);
  RunConfig cfg = base_config("verify", o);
  cfg.parameters = {{"level", o.level}};
  const auto results = parking::verify::run(level);
  if (cfg.format == Format::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
      j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    emit(cfg, wrap_json(cfg, j));
  } else {
    emit(cfg, parking::verify::render(results));
  }
  return parking::verify::all_passed(results) ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic enumeration of defective parking functions"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Output path, '-' for stdout");
  };

  auto* table = app.add_subcommand("table", "cp(n,n,k) for n = 1..N");
  table->add_option("--n", o.n, "Largest n (default 10)")->check(CLI::PositiveNumber);
  add_common(table);

  auto* dist = app.add_subcommand("dist", "Defect distribution for fixed n, m");
  dist->add_option("--n", o.n, "Spaces")->required()->check(CLI::NonNegativeNumber);
  dist->add_option("--m", o.m, "Drivers")->required()->check(CLI::NonNegativeNumber);
  dist->add_option("--method", o.method, "explicit | recurrence | exhaustive")
      ->check(CLI::IsMember({"explicit", "recurrence", "exhaustive"}));
  dist->add_option("--cap", o.cap, "Enumeration cap on n^m for --method exhaustive");
  add_common(dist);

  auto* fig1 = app.add_subcommand("plotdata-fig1", "Exact pmf against its approximation");
  fig1->add_option("--n", o.n, "Spaces (default 100)")->check(CLI::PositiveNumber);
  fig1->add_option("--m", o.m_list, "Driver counts (default 90 100 110)")->delimiter(',');
  add_common(fig1);

  auto* fig2 = app.add_subcommand("plotdata-fig2", "Full-lot probability against its limit");
  fig2->add_option("--n", o.n_list, "Lot sizes (default 10 20)")->delimiter(',');
  fig2->add_option("--lambda", o.lambdas, "m/n ratios (default 0.50..4.00 step 0.05)")->delimiter(',');
  add_common(fig2);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo defect histogram");
  sim->add_option("--n", o.n, "Spaces")->required()->check(CLI::PositiveNumber);
  sim->add_option("--m", o.m, "Drivers")->required()->check(CLI::NonNegativeNumber);
  sim->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
  sim->add_option("--seed", o.seed, "64-bit seed");
  add_common(sim);

  auto* coupon = app.add_subcommand("coupon", "Cars sent until the lot is full");
  coupon->add_option("--n", o.n, "Spaces")->required()->check(CLI::PositiveNumber);
  coupon->add_option("--trials", o.trials, "Independent runs")->check(CLI::PositiveNumber);
  coupon->add_option("--seed", o.seed, "64-bit seed; run t uses a derived sub-seed");
  add_common(coupon);

  auto* verify = app.add_subcommand("verify", "Run the cross-method invariant suite");
  verify->add_option("--level", o.level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(o);
    if (dist->parsed()) return cmd_dist(o);
    if (fig1->parsed()) return cmd_fig1(o);
    if (fig2->parsed()) return cmd_fig2(o);
    if (sim->parsed()) return cmd_simulate(o);
    if (coupon->parsed()) return cmd_coupon(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const parking::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
