#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qubobench {

/// Binary configuration, one entry per variable, values 0/1.
using Bits = std::vector<std::uint8_t>;

/// Thrown when a tractability guard is exceeded (exit code 2 in the CLI).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed input files or inconsistent configuration (exit code 4).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string bits_to_string(const Bits& x);
Bits bits_from_string(const std::string& s);

inline int count_ones(const Bits& x) {
  int c = 0;
  for (auto b : x) c += b;
  return c;
}

inline int count_zeros(const Bits& x) {
  return static_cast<int>(x.size()) - count_ones(x);
}

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and a stream index.
/// Used for per-read / per-experiment RNGs so parallel and serial execution
/// produce identical results.
inline constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x5851f42d4c957f2dull));
}

/// mt19937_64 with portable sampling helpers. The standard distributions are
/// implementation-defined, so everything random in the solvers goes through
/// these methods instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n), unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  bool coin() { return (gen_() >> 32) & 1u; }

  Bits random_bits(int n) {
    Bits x(static_cast<std::size_t>(n));
    for (auto& b : x) b = static_cast<std::uint8_t>((gen_() >> 32) & 1u);
    return x;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qubobench
