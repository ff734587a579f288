#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qubobench/sample_set.hpp"

namespace qubobench {

/// Aggregated quality-of-solution and resource metrics for one method row.
struct MetricReport {
  double ps = 0.0;        // pooled over all shots
  double ps_sigma = 0.0;  // across experiments
  double se = 0.0;        // shot-noise standard error on pooled ps
  double ps_post = 0.0;
  double ps_post_sigma = 0.0;
  double se_post = 0.0;
  double ar_post = 0.0;
  double ar_post_sigma = 0.0;
  double user_runtime_s = 0.0;
  double user_runtime_sigma = 0.0;
  std::optional<double> qpu_time_s;
  std::optional<double> tts_s;
  std::optional<double> tt_eps_s;
  int n_experiments = 0;
  std::uint64_t n_shots_per_experiment = 0;
};

/// Keeps exactly the records whose zero count equals n_vacancies. Timing
/// metadata is preserved; the result may be empty.
SampleSet post_select(const SampleSet& samples, int n_vacancies);

/// Fraction of shots with energy within 1e-9 of e_ground. Empty input is an
/// undefined metric and throws.
double optimal_solution_probability(const SampleSet& samples, double e_ground);

/// (E - e_max) / (e_min - e_max) with E the shot-weighted mean energy. Callers
/// pass post-selected samples; e_min == e_max throws (degenerate range).
double approximation_ratio(const SampleSet& samples, double e_min, double e_max);

/// sqrt(ps (1 - ps) / n_solutions).
double standard_error(double ps, std::uint64_t n_solutions);

/// Population standard deviation (divisor N).
double std_deviation(const std::vector<double>& values);

/// T ln(1 - p_desired) / ln(1 - ps). Conventions: ps = 1 gives T, ps = 0 gives
/// +infinity; the formula itself is undefined at both ends.
double time_to_solution(double user_runtime_s, double ps, double p_desired);

struct TrajectoryPoint {
  double elapsed_s = 0.0;
  double best_energy = 0.0;
};

/// First elapsed time at which best_energy <= e_ground + epsilon * |e_ground|
/// (or + epsilon when absolute=true); nullopt if never reached.
std::optional<double> time_to_epsilon(const std::vector<TrajectoryPoint>& trajectory,
                                      double e_ground, double epsilon, bool absolute = false);

struct RuntimeBreakdown {
  double user_runtime_s = 0.0;
  double qpu_time_s = 0.0;
};

/// user = t_encoding + t_latency + t_device; qpu = t_device (the caller labels
/// simulated-device time as device time).
RuntimeBreakdown runtime_breakdown(const SampleSet& samples);

/// CSV rows shaped like the benchmark summary table: one row per method.
std::string metrics_csv(const std::vector<std::pair<std::string, MetricReport>>& rows);

/// Tolerance used to classify a sample as hitting the ground energy.
inline constexpr double kGroundTolerance = 1e-9;

}  // namespace qubobench
