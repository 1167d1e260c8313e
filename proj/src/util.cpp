#include "hspec/util.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hspec {

double Rng::exponential() {
  double u = uniform();
  return -std::log1p(-u);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i at every step.
    std::uint64_t numer;
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(n - k + i), &numer)) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds 64 bits");
    }
    result = numer / static_cast<std::uint64_t>(i);
  }
  return result;
}

double ipow(double base, int exp) {
  if (exp < 0) return 1.0 / ipow(base, -exp);
  double result = 1.0;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

void for_each_subset(int n, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (size < 0 || size > n) return;
  std::vector<int> subset(size);
  for (int i = 0; i < size; ++i) subset[i] = i;
  if (size == 0) {
    fn(subset);
    return;
  }
  while (true) {
    fn(subset);
    // advance to next lexicographic combination
    int i = size - 1;
    while (i >= 0 && subset[i] == n - size + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
  }
}

int thread_budget() {
  const char* env = std::getenv("HSPEC_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == env || value < 1) return 1;
  return static_cast<int>(value);
}

}  // namespace hspec
