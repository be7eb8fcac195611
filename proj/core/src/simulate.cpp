// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "relaycov/errors.hpp"
#include "relaycov/fading.hpp"
#include "relaycov/stats.hpp"

namespace relaycov {
namespace {

double sample_gain(const GainDistribution& pmf, SplitMix64& rng) {
  const double u = uniform01(rng);
  double cum = 0.0;
  const auto entries = pmf.entries();
  for (const GainEntry& e : entries) {
    cum += e.probability;
    if (u < cum) return e.gain;
  }
  return entries.back().gain;
}

double sample_desired_fading(const LinkSpec& link, DesiredFading law, SplitMix64& rng) {
  return law == DesiredFading::Gamma
             ? sample_gamma_fading(link.fading_shape, rng)
             : sample_bound_fading(link.fading_shape, link.fading_alpha, rng);
}

// Draw order per link is fixed: association counts and radii, interferer
// radii, interferer gains, desired fading per antenna, interferer fading
// antenna-major. Counts and geometry are shared across antennas; only fading
// is redrawn per antenna.
void sample_link(const LinkSpec& link, int antennas, DesiredFading law, SplitMix64& rng,
                 LinkRealization& out) {
  out.assoc_distance.reset();
  out.interferers.clear();
  out.desired_fading.clear();
  out.interferer_fading.clear();

  const double disk_area = std::numbers::pi * link.ball_radius * link.ball_radius;
  const std::uint64_t count = sample_poisson(link.assoc_density * disk_area, rng);
  if (count == 0) return;

  if (link.exclusion == InterfererExclusion::BeyondAssociated) {
    // One process: nearest point is the associated node, the rest interfere.
    double nearest = link.ball_radius;
    std::size_t nearest_idx = 0;
    out.interferers.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
      const double d = sample_disk_radius(link.ball_radius, rng);
      if (d < nearest || k == 0) {
        nearest = d;
        nearest_idx = static_cast<std::size_t>(k);
      }
      out.interferers.push_back({d, 1.0});
    }
    out.assoc_distance = nearest;
    out.interferers.erase(out.interferers.begin() + static_cast<std::ptrdiff_t>(nearest_idx));
  } else {
    // Association process and interferer process are distinct; interferers
    // may sit anywhere in the disk, including closer than the associated node.
    double nearest = link.ball_radius;
    for (std::uint64_t k = 0; k < count; ++k) {
      nearest = std::min(nearest, sample_disk_radius(link.ball_radius, rng));
    }
    out.assoc_distance = nearest;
    const std::uint64_t n_intf = sample_poisson(link.interferer_density * disk_area, rng);
    out.interferers.reserve(n_intf);
    for (std::uint64_t k = 0; k < n_intf; ++k) {
      out.interferers.push_back({sample_disk_radius(link.ball_radius, rng), 1.0});
    }
  }

  for (LinkRealization::Interferer& intf : out.interferers) {
    intf.gain = sample_gain(link.interference_gains, rng);
  }

  out.desired_fading.reserve(static_cast<std::size_t>(antennas));
  for (int n = 0; n < antennas; ++n) {
    out.desired_fading.push_back(sample_desired_fading(link, law, rng));
  }
  out.interferer_fading.reserve(static_cast<std::size_t>(antennas) * out.interferers.size());
  for (int n = 0; n < antennas; ++n) {
    for (std::size_t k = 0; k < out.interferers.size(); ++k) {
      out.interferer_fading.push_back(sample_gamma_fading(link.fading_shape, rng));
    }
  }
}

double link_sinr(const LinkSpec& link, const LinkRealization& real, int antenna) {
  if (real.empty()) {
    throw EmptyProcess(std::string(link_name(link.kind)) +
                       " link has no associated node in this realization");
  }
  if (antenna < 0 ||
      static_cast<std::size_t>(antenna) >= real.desired_fading.size()) {
    throw std::out_of_range("antenna index out of range");
  }
  const double eta = link.pathloss_exp;
  const double desired = link.tx_power * link.desired_gain *
                         std::pow(*real.assoc_distance, -eta) *
                         real.desired_fading[static_cast<std::size_t>(antenna)];
  const std::size_t n_intf = real.interferers.size();
  double interference = 0.0;
  for (std::size_t k = 0; k < n_intf; ++k) {
    const LinkRealization::Interferer& intf = real.interferers[k];
    interference += link.tx_power * intf.gain * std::pow(intf.distance, -eta) *
                    real.interferer_fading[static_cast<std::size_t>(antenna) * n_intf + k];
  }
  return desired / (interference + link.noise_power);
}

// Max SINR over antennas with the per-interferer received powers hoisted out
// of the antenna loop; -1 flags an empty process (fails any positive
// threshold).
double link_max_sinr(const LinkSpec& link, const LinkRealization& real, int antennas,
                     std::vector<double>& coef_scratch) {
  if (real.empty()) return -1.0;
  const double eta = link.pathloss_exp;
  const double desired_coef =
      link.tx_power * link.desired_gain * std::pow(*real.assoc_distance, -eta);
  const std::size_t n_intf = real.interferers.size();
  coef_scratch.clear();
  coef_scratch.reserve(n_intf);
  for (const LinkRealization::Interferer& intf : real.interferers) {
    coef_scratch.push_back(link.tx_power * intf.gain * std::pow(intf.distance, -eta));
  }
  double best = -1.0;
  for (int n = 0; n < antennas; ++n) {
    double interference = 0.0;
    for (std::size_t k = 0; k < n_intf; ++k) {
      interference +=
          coef_scratch[k] * real.interferer_fading[static_cast<std::size_t>(n) * n_intf + k];
    }
    const double sinr =
        desired_coef * real.desired_fading[static_cast<std::size_t>(n)] /
        (interference + link.noise_power);
    best = std::max(best, sinr);
  }
  return best;
}

// Per-worker evaluation state: link descriptions plus reusable buffers.
class TrialEngine {
 public:
  TrialEngine(const NetworkParams& params, AntennaCorrelation mode, DesiredFading law)
      : antennas_(params.ue_antennas),
        mode_(mode),
        law_(law),
        direct_(make_link_spec(params, LinkKind::Direct)),
        br_(make_link_spec(params, LinkKind::BR)),
        rd_(make_link_spec(params, LinkKind::RD)),
        rd_single_(make_link_spec(params.with_ue_antennas(1), LinkKind::RD)) {}

  struct MaxSinrs {
    double direct;
    double br;
    double rd;
  };

  MaxSinrs run(SplitMix64& rng) {
    MaxSinrs out{};
    if (mode_ == AntennaCorrelation::Shared) {
      sample_link(direct_, antennas_, law_, rng, scratch_);
      out.direct = link_max_sinr(direct_, scratch_, antennas_, coef_);
      sample_link(br_, 1, law_, rng, scratch_);
      out.br = link_max_sinr(br_, scratch_, 1, coef_);
      sample_link(rd_, antennas_, law_, rng, scratch_);
      out.rd = link_max_sinr(rd_, scratch_, antennas_, coef_);
    } else {
      // The correlation-ignoring counterfactual: each antenna sees a fresh,
      // independent draw; the relay->destination copies use the
      // single-antenna-UE parameterization that the hatted closed forms
      // exponentiate.
      out.direct = -1.0;
      for (int n = 0; n < antennas_; ++n) {
        sample_link(direct_, 1, law_, rng, scratch_);
        out.direct = std::max(out.direct, link_max_sinr(direct_, scratch_, 1, coef_));
      }
      sample_link(br_, 1, law_, rng, scratch_);
      out.br = link_max_sinr(br_, scratch_, 1, coef_);
      out.rd = -1.0;
      for (int n = 0; n < antennas_; ++n) {
        sample_link(rd_single_, 1, law_, rng, scratch_);
        out.rd = std::max(out.rd, link_max_sinr(rd_single_, scratch_, 1, coef_));
      }
    }
    return out;
  }

 private:
  int antennas_;
  AntennaCorrelation mode_;
  DesiredFading law_;
  LinkSpec direct_;
  LinkSpec br_;
  LinkSpec rd_;
  LinkSpec rd_single_;
  LinkRealization scratch_;
  std::vector<double> coef_;
};

CoverageResult tally_to_result(const CoverageTallies& tallies,
                               const std::vector<std::uint64_t>& successes, std::size_t tau_idx,
                               const SimConfig& sim) {
  CoverageResult result;
  result.method = sim.correlation_mode == AntennaCorrelation::Shared
                      ? Method::SimShared
                      : Method::SimIndependentPerAntenna;
  result.trials = tallies.trials;
  result.probability =
      static_cast<double>(successes[tau_idx]) / static_cast<double>(tallies.trials);
  result.ci =
      binomial_confidence_interval(successes[tau_idx], tallies.trials, sim.confidence_level);
  return result;
}

}  // namespace

void SimConfig::validate() const {
  if (trials < 1) {
    throw ValidationError(ValidationError::Kind::NonPositive, "trials",
                          "trials must be at least 1");
  }
  if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw ValidationError(ValidationError::Kind::ProbabilityOutOfRange, "confidence_level",
                          "confidence level must lie in (0, 1)");
  }
  if (workers < 1) {
    throw ValidationError(ValidationError::Kind::NonPositive, "workers",
                          "workers must be at least 1");
  }
}

NetworkRealization sample_realization(const NetworkParams& params, SplitMix64& rng) {
  NetworkRealization real;
  real.antennas = params.ue_antennas;
  sample_link(make_link_spec(params, LinkKind::Direct), params.ue_antennas,
              DesiredFading::Gamma, rng, real.direct);
  sample_link(make_link_spec(params, LinkKind::BR), 1, DesiredFading::Gamma, rng, real.br);
  sample_link(make_link_spec(params, LinkKind::RD), params.ue_antennas, DesiredFading::Gamma,
              rng, real.rd);
  return real;
}

double sinr_direct(const NetworkRealization& real, const NetworkParams& params, int antenna) {
  return link_sinr(make_link_spec(params, LinkKind::Direct), real.direct, antenna);
}

double sinr_br(const NetworkRealization& real, const NetworkParams& params) {
  return link_sinr(make_link_spec(params, LinkKind::BR), real.br, 0);
}

double sinr_rd(const NetworkRealization& real, const NetworkParams& params, int antenna) {
  return link_sinr(make_link_spec(params, LinkKind::RD), real.rd, antenna);
}

CoverageTallies run_trials(const NetworkParams& params, std::span<const double> taus,
                           const SimConfig& sim) {
  validate(params);
  sim.validate();
  const std::size_t n_taus = taus.size();
  CoverageTallies tallies;
  tallies.trials = sim.trials;
  tallies.taus.assign(taus.begin(), taus.end());
  tallies.direct.assign(n_taus, 0);
  tallies.br.assign(n_taus, 0);
  tallies.rd.assign(n_taus, 0);
  tallies.total.assign(n_taus, 0);

  const int n_workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(sim.workers), sim.trials));

  struct WorkerTally {
    std::vector<std::uint64_t> direct, br, rd, total;
  };
  std::vector<WorkerTally> locals(static_cast<std::size_t>(n_workers));

  auto work = [&](int w, std::uint64_t begin, std::uint64_t end) {
    WorkerTally& local = locals[static_cast<std::size_t>(w)];
    local.direct.assign(n_taus, 0);
    local.br.assign(n_taus, 0);
    local.rd.assign(n_taus, 0);
    local.total.assign(n_taus, 0);
    TrialEngine engine(params, sim.correlation_mode, sim.desired_fading);
    for (std::uint64_t t = begin; t < end; ++t) {
      SplitMix64 rng = substream(sim.seed, t);
      const TrialEngine::MaxSinrs s = engine.run(rng);
      for (std::size_t i = 0; i < n_taus; ++i) {
        const bool dir_ok = s.direct > taus[i];
        const bool br_ok = s.br > taus[i];
        const bool rd_ok = s.rd > taus[i];
        local.direct[i] += dir_ok;
        local.br[i] += br_ok;
        local.rd[i] += rd_ok;
        local.total[i] += dir_ok || (br_ok && rd_ok);
      }
    }
  };

  if (n_workers == 1) {
    work(0, 0, sim.trials);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_workers));
    const std::uint64_t chunk = sim.trials / static_cast<std::uint64_t>(n_workers);
    const std::uint64_t rem = sim.trials % static_cast<std::uint64_t>(n_workers);
    std::uint64_t begin = 0;
    for (int w = 0; w < n_workers; ++w) {
      const std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
      threads.emplace_back(work, w, begin, end);
      begin = end;
    }
    for (std::thread& th : threads) th.join();
  }

  // Order-independent reduction: plain integer sums.
  for (const auto& local : locals) {
    for (std::size_t i = 0; i < n_taus; ++i) {
      tallies.direct[i] += local.direct[i];
      tallies.br[i] += local.br[i];
      tallies.rd[i] += local.rd[i];
      tallies.total[i] += local.total[i];
    }
  }
  return tallies;
}

CoverageResult estimate_coverage(const NetworkParams& params, double tau, const SimConfig& sim) {
  const double taus[] = {tau};
  const CoverageTallies tallies = run_trials(params, taus, sim);
  return tally_to_result(tallies, tallies.total, 0, sim);
}

CoverageResult estimate_link_coverage(const NetworkParams& params, double tau,
                                      const SimConfig& sim, LinkKind kind) {
  const double taus[] = {tau};
  const CoverageTallies tallies = run_trials(params, taus, sim);
  switch (kind) {
    case LinkKind::Direct: return tally_to_result(tallies, tallies.direct, 0, sim);
    case LinkKind::BR: return tally_to_result(tallies, tallies.br, 0, sim);
    case LinkKind::RD: return tally_to_result(tallies, tallies.rd, 0, sim);
  }
  throw std::logic_error("unknown link kind");
}

}  // namespace relaycov
