#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qubobench/qubo.hpp"
#include "qubobench/sample_set.hpp"

namespace qubobench {

enum class ScheduleKind { Geometric };

/// Inverse-temperature schedule. beta_min == beta_max is the degenerate
/// constant-temperature case and is allowed.
struct SaSchedule {
  double beta_min = 0.1;
  double beta_max = 10.0;
  int n_sweeps = 1000;
  ScheduleKind kind = ScheduleKind::Geometric;
};

struct BruteForceResult {
  Bits x_opt;
  double e_opt = 0.0;
  double elapsed_s = 0.0;
};

/// Exhaustive scan of all 2^N bitstrings via Gray-code flips. Ties resolve to
/// the lexicographically smallest bitstring. Guarded by N <= 30.
BruteForceResult brute_force(const QuboInstance& instance);

/// n_samples iid uniform bitstrings with evaluated energies.
SampleSet random_sampling(const QuboInstance& instance, std::uint64_t n_samples,
                          std::uint64_t seed);

struct SaOptions {
  bool record_best = false;        // record best-seen state instead of the final state
  bool random_sweep_order = false; // shuffle the visit order every sweep
  int n_threads = 0;               // <= 0: hardware_workers()
  // Test/trace hooks, invoked in deterministic (read, sweep) order after the
  // parallel phase completes.
  std::function<void(int read, int sweep, double best_energy)> sweep_hook;
  std::function<void(int read, double best_energy, double elapsed_s)> read_hook;
};

/// Per-read recorded bitstrings in read-index order. Each read owns an RNG
/// seeded mix_seed(seed, read), so parallel and serial execution agree.
std::vector<Bits> sa_reads(const QuboInstance& instance, const SaSchedule& schedule, int n_reads,
                           std::uint64_t seed, const SaOptions& options = {});

/// Metropolis simulated annealing: every read starts from a fresh uniform
/// bitstring, sweeps visit variables in fixed index order, flips accepted with
/// probability min(1, exp(-beta dE)), beta geometric from beta_min to beta_max.
SampleSet simulated_annealing(const QuboInstance& instance, const SaSchedule& schedule,
                              int n_reads, std::uint64_t seed, const SaOptions& options = {});

/// Inverse temperature of sweep t under the schedule (degenerate cases give
/// beta_min).
double schedule_beta(const SaSchedule& schedule, int sweep);

}  // namespace qubobench
