#include "axioclust/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace axioclust {

double log_sum_exp(std::span<const double> args) {
  double max_arg = -std::numeric_limits<double>::infinity();
  for (double a : args) max_arg = std::max(max_arg, a);
  if (!std::isfinite(max_arg)) return max_arg;
  double sum = 0.0;
  for (double a : args) {
    if (a == -std::numeric_limits<double>::infinity()) continue;
    sum += std::exp(a - max_arg);
  }
  return max_arg + std::log(sum);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  state = a ^ (index + 0x9e3779b97f4a7c15ULL);
  return splitmix64(state);
}

std::mt19937_64 make_rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  std::uint64_t a = splitmix64(state);
  std::uint64_t b = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k && i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::size_t j = pick(rng);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

std::vector<double> random_simplex(std::size_t c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> alpha(c);
  double total = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    double u = unif(rng);
    while (u <= 0.0) u = unif(rng);
    alpha[i] = -std::log(u);
    total += alpha[i];
  }
  for (double& a : alpha) a /= total;
  return alpha;
}

}  // namespace axioclust
