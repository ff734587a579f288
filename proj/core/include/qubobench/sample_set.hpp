#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qubobench/common.hpp"

namespace qubobench {

/// Runtime breakdown in seconds. t_latency stays 0 for local execution.
struct Timing {
  double t_encoding = 0.0;
  double t_latency = 0.0;
  double t_device = 0.0;
};

struct SampleRecord {
  Bits bits;
  double energy = 0.0;
  std::uint64_t count = 1;
};

/// Multiset of sampled configurations; the universal solver output. Records
/// are kept canonically sorted by (energy, bits) with duplicates merged, so
/// identical runs serialize byte-identically.
struct SampleSet {
  int n_vars = 0;
  std::vector<SampleRecord> records;
  Timing timing;
  std::uint64_t n_shots_total = 0;

  void add(Bits bits, double energy, std::uint64_t count = 1);
  void canonicalize();

  bool empty() const { return n_shots_total == 0; }
  double min_energy() const;
  /// Shot-weighted mean energy.
  double mean_energy() const;
};

/// One meta line followed by one JSON line per distinct bitstring.
std::string sample_set_to_jsonl(const SampleSet& s);
SampleSet sample_set_from_jsonl(const std::string& text);

}  // namespace qubobench
