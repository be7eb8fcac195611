// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <unistd.h>

#include "json.hpp"
#include "relaycov/config_io.hpp"
#include "relaycov/errors.hpp"
#include "relaycov/units.hpp"

namespace relaycov {
namespace {

// Deterministic number formatting for CSV/JSON output.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool is_integral(double v) { return std::isfinite(v) && v == std::floor(v); }

struct PointSetup {
  NetworkParams params;
  double tau;  // linear
};

PointSetup setup_point(const SweepSpec& spec, double value) {
  PointSetup point{spec.base, db_to_linear(spec.tau_db)};
  switch (spec.variable) {
    case SweepVariable::TauDb:
      point.tau = db_to_linear(value);
      break;
    case SweepVariable::BsPowerDbm:
      point.params = validate(spec.base.with_bs_power(db_to_linear(value)));
      break;
    case SweepVariable::BsDensity:
      point.params = validate(spec.base.with_los_bs_density(value));
      break;
    case SweepVariable::UeAntennas:
      point.params = validate(spec.base.with_ue_antennas(static_cast<int>(value)));
      break;
    case SweepVariable::BsAntennas:
      point.params = validate(spec.base.with_bs_antennas(static_cast<int>(value)));
      break;
  }
  return point;
}

CoverageResult evaluate_cell(const SweepSpec& spec, const PointSetup& point, Method method) {
  switch (method) {
    case Method::AnalyticalCorrelated:
    case Method::AnalyticalUncorrelated: {
      const CorrelationMode mode = method == Method::AnalyticalCorrelated
                                       ? CorrelationMode::Correlated
                                       : CorrelationMode::Uncorrelated;
      const double p = spec.link
                           ? coverage_link(point.params, *spec.link, point.tau, spec.quad, mode)
                           : coverage_total(point.params, point.tau, spec.quad, mode);
      return CoverageResult{p, method, std::nullopt, 0};
    }
    case Method::SimShared:
    case Method::SimIndependentPerAntenna: {
      SimConfig sim = spec.sim;
      sim.correlation_mode = method == Method::SimShared
                                 ? AntennaCorrelation::Shared
                                 : AntennaCorrelation::IndependentPerAntenna;
      return spec.link ? estimate_link_coverage(point.params, point.tau, sim, *spec.link)
                       : estimate_coverage(point.params, point.tau, sim);
    }
  }
  throw std::logic_error("unknown method");
}

nlohmann::json result_json(const CoverageResult& r) {
  nlohmann::json j;
  j["method"] = std::string(method_name(r.method));
  j["probability"] = r.probability;
  if (r.ci) {
    j["ci_low"] = r.ci->low;
    j["ci_high"] = r.ci->high;
    j["trials"] = r.trials;
  }
  return j;
}

}  // namespace

std::string_view sweep_variable_name(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::TauDb: return "tau_db";
    case SweepVariable::BsPowerDbm: return "bs_power_dbm";
    case SweepVariable::BsDensity: return "bs_density";
    case SweepVariable::UeAntennas: return "ue_antennas";
    case SweepVariable::BsAntennas: return "bs_antennas";
  }
  return "?";
}

std::optional<SweepVariable> sweep_variable_from_name(std::string_view name) {
  for (SweepVariable v : {SweepVariable::TauDb, SweepVariable::BsPowerDbm,
                          SweepVariable::BsDensity, SweepVariable::UeAntennas,
                          SweepVariable::BsAntennas}) {
    if (sweep_variable_name(v) == name) return v;
  }
  return std::nullopt;
}

void SweepSpec::validate() const {
  if (values.empty()) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "values",
                          "sweep needs a nonempty value list");
  }
  if (methods.empty()) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "methods",
                          "sweep needs at least one method");
  }
  if (workers < 1) {
    throw ValidationError(ValidationError::Kind::NonPositive, "workers",
                          "workers must be at least 1");
  }
  if (variable == SweepVariable::UeAntennas || variable == SweepVariable::BsAntennas) {
    for (double v : values) {
      if (!is_integral(v) || v < 1.0) {
        throw ValidationError(ValidationError::Kind::NonIntegerShape,
                              std::string(sweep_variable_name(variable)),
                              "antenna sweep values must be positive integers, got " + fmt(v));
      }
    }
  }
  relaycov::validate(base);
  quad.validate();
  sim.validate();
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<ResultRow> rows(spec.values.size());

  auto eval_row = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const double value = spec.values[i];
    ResultRow row;
    row.value = value;
    try {
      const PointSetup point = setup_point(spec, value);
      row.results.reserve(spec.methods.size());
      for (Method method : spec.methods) {
        row.results.push_back(evaluate_cell(spec, point, method));
      }
    } catch (const NumericalInstability& e) {
      throw NumericalInstability(std::string(e.what()) + " [sweep point " +
                                 std::string(sweep_variable_name(spec.variable)) + "=" +
                                 fmt(value) + "]");
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    rows[i] = std::move(row);
  };

  const int n_workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(spec.workers),
                                             spec.values.size()));
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < spec.values.size(); ++i) eval_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= spec.values.size()) return;
        try {
          eval_row(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) threads.emplace_back(worker);
    for (std::thread& th : threads) th.join();
    if (error) std::rethrow_exception(error);
  }
  return rows;
}

std::string sweep_csv(const SweepSpec& spec, std::span<const ResultRow> rows) {
  std::string out;
  out += sweep_variable_name(spec.variable);
  for (Method m : spec.methods) {
    const std::string name(method_name(m));
    out += "," + name;
    if (method_is_simulation(m)) {
      out += "," + name + "_ci_low," + name + "_ci_high";
    }
  }
  out += "\n";
  for (const ResultRow& row : rows) {
    out += fmt(row.value);
    for (std::size_t c = 0; c < row.results.size(); ++c) {
      const CoverageResult& r = row.results[c];
      out += "," + fmt(r.probability);
      if (method_is_simulation(spec.methods[c])) {
        out += "," + fmt(r.ci ? r.ci->low : r.probability);
        out += "," + fmt(r.ci ? r.ci->high : r.probability);
      }
    }
    out += "\n";
  }
  return out;
}

std::string sweep_json_text(const SweepSpec& spec, std::span<const ResultRow> rows) {
  nlohmann::json j;
  j["variable"] = std::string(sweep_variable_name(spec.variable));
  j["rows"] = nlohmann::json::array();
  for (const ResultRow& row : rows) {
    nlohmann::json jr;
    jr["value"] = row.value;
    jr["results"] = nlohmann::json::array();
    for (const CoverageResult& r : row.results) jr["results"].push_back(result_json(r));
    j["rows"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::string sweep_sidecar_text(const SweepSpec& spec, std::span<const ResultRow> rows) {
  nlohmann::json j;
  j["command"] = "sweep";
  j["variable"] = std::string(sweep_variable_name(spec.variable));
  j["values"] = spec.values;
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : spec.methods) methods.push_back(std::string(method_name(m)));
  j["methods"] = std::move(methods);
  j["tau_db"] = spec.tau_db;
  j["link"] = spec.link ? std::string(link_name(*spec.link)) : "total";
  j["seed"] = spec.sim.seed;
  j["trials"] = spec.sim.trials;
  j["confidence_level"] = spec.sim.confidence_level;
  j["workers"] = spec.workers;
  j["sim_workers"] = spec.sim.workers;
  j["quadrature"] = {{"outer_nodes", spec.quad.outer_nodes},
                     {"inner_nodes", spec.quad.inner_nodes},
                     {"abs_tol", spec.quad.abs_tol}};
  j["params"] = nlohmann::json::parse(params_json_text(spec.base));
  nlohmann::json runtimes = nlohmann::json::array();
  for (const ResultRow& row : rows) runtimes.push_back(row.runtime_ms);
  j["row_runtime_ms"] = std::move(runtimes);
  return j.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp =
      dir / (path.filename().string() + ".tmp-" + std::to_string(::getpid()));
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      out.flush();
      if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

std::vector<NminRow> run_nmin(const NetworkParams& params, double tau_db,
                              std::span<const double> xis, CorrelationMode mode,
                              const QuadratureConfig& quad, int cap) {
  const double tau = db_to_linear(tau_db);
  std::vector<NminRow> rows;
  rows.reserve(xis.size());
  for (double xi : xis) {
    rows.push_back({xi, min_antennas(params, tau, xi, mode, quad, cap)});
  }
  return rows;
}

std::string nmin_csv(std::span<const NminRow> rows, CorrelationMode mode) {
  std::string out = "xi,mode,n_min\n";
  const char* mode_name = mode == CorrelationMode::Correlated ? "correlated" : "uncorrelated";
  for (const NminRow& row : rows) {
    out += fmt(row.xi);
    out += ",";
    out += mode_name;
    out += ",";
    out += row.n_min ? std::to_string(*row.n_min) : std::string("not_achievable");
    out += "\n";
  }
  return out;
}

std::vector<DensityRow> run_optimal_density(const NetworkParams& params, double tau_db,
                                            std::span<const int> bs_antenna_counts,
                                            std::span<const double> density_grid,
                                            const QuadratureConfig& quad) {
  const double tau = db_to_linear(tau_db);
  std::vector<DensityRow> rows;
  rows.reserve(bs_antenna_counts.size());
  for (int nb : bs_antenna_counts) {
    const NetworkParams p = validate(params.with_bs_antennas(nb));
    const DensityOptimum opt = optimal_bs_density(p, tau, density_grid, quad);
    rows.push_back({nb, opt.density, opt.coverage});
  }
  return rows;
}

std::string optimal_density_csv(std::span<const DensityRow> rows) {
  std::string out = "bs_antennas,optimal_density,coverage\n";
  for (const DensityRow& row : rows) {
    out += std::to_string(row.bs_antennas) + "," + fmt(row.optimal_density) + "," +
           fmt(row.coverage) + "\n";
  }
  return out;
}

std::vector<double> log_density_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 1) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "density_grid",
                          "need 0 < lo < hi and at least one point");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(lo);
    return grid;
  }
  const double step = std::log(hi / lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    grid.push_back(lo * std::exp(step * static_cast<double>(i)));
  }
  return grid;
}

}  // namespace relaycov
