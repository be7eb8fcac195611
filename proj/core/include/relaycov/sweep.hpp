// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relaycov/analysis.hpp"
#include "relaycov/params.hpp"
#include "relaycov/quadrature.hpp"
#include "relaycov/result.hpp"
#include "relaycov/simulate.hpp"

namespace relaycov {

enum class SweepVariable { TauDb, BsPowerDbm, BsDensity, UeAntennas, BsAntennas };

std::string_view sweep_variable_name(SweepVariable variable);
std::optional<SweepVariable> sweep_variable_from_name(std::string_view name);

/// One sweep: vary one quantity over `values`, evaluate the selected methods
/// at each point. Antenna-count sweeps require integral values.
struct SweepSpec {
  SweepVariable variable = SweepVariable::TauDb;
  std::vector<double> values;
  std::vector<Method> methods;
  NetworkParams base;                  // resolved parameter set
  double tau_db = 10.0;                // threshold when it is not the variable
  std::optional<LinkKind> link;        // restrict to one link; nullopt = total
  QuadratureConfig quad;
  SimConfig sim;
  int workers = 1;                     // concurrent sweep points

  void validate() const;
};

struct ResultRow {
  double value = 0.0;
  std::vector<CoverageResult> results;  // parallel to SweepSpec::methods
  double runtime_ms = 0.0;              // reported in the JSON sidecar only
};

/// Evaluates every (value, method) cell. Rows come back in `values` order
/// regardless of how points were scheduled. NumericalInstability from an
/// evaluation is rethrown with the offending sweep point named.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

/// CSV with one row per sweep value: the variable column, then a probability
/// column per method plus ci_low/ci_high columns for simulation methods.
/// Byte-identical across reruns of the same spec and seed (no timing data).
std::string sweep_csv(const SweepSpec& spec, std::span<const ResultRow> rows);

/// The same table as JSON (for --format json).
std::string sweep_json_text(const SweepSpec& spec, std::span<const ResultRow> rows);

/// Reproducibility sidecar: resolved parameters, seed, trials, methods,
/// quadrature settings, and per-row runtimes.
std::string sweep_sidecar_text(const SweepSpec& spec, std::span<const ResultRow> rows);

/// Writes content via a temp file in the target directory plus an atomic
/// rename; an interrupted run leaves no partial output.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// ---- minimum-antenna search table ----

struct NminRow {
  double xi;                  // coverage target in (0, 1)
  std::optional<int> n_min;   // nullopt: not achievable within the cap
};

std::vector<NminRow> run_nmin(const NetworkParams& params, double tau_db,
                              std::span<const double> xis, CorrelationMode mode,
                              const QuadratureConfig& quad, int cap = kMaxUeAntennas);

std::string nmin_csv(std::span<const NminRow> rows, CorrelationMode mode);

// ---- optimal-density search table ----

struct DensityRow {
  int bs_antennas;
  double optimal_density;
  double coverage;
};

std::vector<DensityRow> run_optimal_density(const NetworkParams& params, double tau_db,
                                            std::span<const int> bs_antenna_counts,
                                            std::span<const double> density_grid,
                                            const QuadratureConfig& quad);

std::string optimal_density_csv(std::span<const DensityRow> rows);

/// Logarithmically spaced density grid, `points` values from lo to hi.
std::vector<double> log_density_grid(double lo, double hi, int points);

}  // namespace relaycov
