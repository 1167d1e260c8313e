#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace hspec {

/// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
/// is pinned by the standard) and derives doubles by hand so that identical
/// seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53 significant bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). Modulo bias is irrelevant at the scales used here.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// Strictly positive exponential variate; -log(1-u) with u in [0, 1).
  double exponential();

 private:
  std::mt19937_64 engine_;
};

/// Binomial coefficient C(n, k) in exact 64-bit arithmetic.
/// Returns 0 when k > n. Throws std::overflow_error if the value
/// (or an intermediate product) does not fit.
std::uint64_t binomial(int n, int k);

/// base^exp by repeated multiplication; exact for small integer bases.
double ipow(double base, int exp);

/// Calls fn with every size-`size` subset of {0,...,n-1}, in lexicographic
/// order. The vector passed to fn is reused between calls.
void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn);

/// Thread budget for optional internal parallelism: the value of the
/// HSPEC_THREADS environment variable if set and >= 1, otherwise 1.
int thread_budget();

}  // namespace hspec
