#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "qubobench/common.hpp"
#include "qubobench/lattice.hpp"

namespace qubobench {

/// Upper-triangular QUBO cost matrix plus the penalty bookkeeping needed to
/// report absolute energies. The constant lambda*n_carbon^2 dropped by the
/// penalty expansion is kept in constant_offset so that a constraint-satisfying
/// configuration's energy equals minus the number of surviving bonds times kappa.
struct QuboInstance {
  int n_vars = 0;
  std::vector<double> q;  // n_vars * n_vars row-major; entries below the diagonal are zero
  double kappa = 1.0;
  double lambda_coeff = 0.0;
  int n_carbon = 0;
  double constant_offset = 0.0;

  double at(int i, int j) const { return q[static_cast<std::size_t>(i) * n_vars + j]; }
  double& at(int i, int j) { return q[static_cast<std::size_t>(i) * n_vars + j]; }

  int n_vacancies() const { return n_vars - n_carbon; }

  /// x^T Q x + constant_offset.
  double evaluate(const Bits& x) const;
};

QuboInstance build_qubo(const LatticeGraph& graph, double kappa, double lambda_coeff,
                        int n_vacancies);

/// Assembles an instance from explicit (i, j, value) entries, j >= i.
/// Used for custom instances in tests and file loading.
QuboInstance make_qubo(int n_vars, const std::vector<std::tuple<int, int, double>>& entries,
                       double constant_offset = 0.0);

/// Ising model with local fields h, strictly-upper couplings J and a constant.
/// Spin convention: x_i = (1 - s_i) / 2, s_i in {+1, -1}.
struct IsingInstance {
  int n_spins = 0;
  std::vector<double> h;
  std::vector<double> j;  // n_spins * n_spins row-major upper
  double energy_offset = 0.0;

  double coupling(int a, int b) const {
    return a < b ? j[static_cast<std::size_t>(a) * n_spins + b]
                 : j[static_cast<std::size_t>(b) * n_spins + a];
  }
  double& coupling_ref(int a, int b) {
    return a < b ? j[static_cast<std::size_t>(a) * n_spins + b]
                 : j[static_cast<std::size_t>(b) * n_spins + a];
  }

  double energy_spins(const std::vector<int>& s) const;
  /// Energy of the bit configuration under s = 1 - 2x; equals the QUBO energy
  /// of x when this instance came from to_ising.
  double energy_bits(const Bits& x) const;
};

IsingInstance to_ising(const QuboInstance& instance);
QuboInstance ising_to_qubo(const IsingInstance& ising);

struct ConstrainedExtrema {
  double e_min = 0.0;
  double e_max = 0.0;
  std::uint64_t n_ground_states = 0;
};

/// Min/max energy and ground-state degeneracy over exactly the bitstrings with
/// the instance's vacancy count. Guarded by C(N, k) <= 1e8.
ConstrainedExtrema constrained_extrema(const QuboInstance& instance);

std::string qubo_to_json(const QuboInstance& instance);
QuboInstance qubo_from_json(const std::string& text);

}  // namespace qubobench
