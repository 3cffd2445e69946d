#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace axioclust {

// log(sum_i exp(args[i])) with the usual max shift; -inf entries are skipped
// so log-domain zeros behave like true zeros. Returns -inf for an empty or
// all -inf input.
double log_sum_exp(std::span<const double> args);

// SplitMix64 step; used to derive independent per-trial RNG streams so
// parallel and serial runs see identical draws.
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic stream seed for (base seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 seeded through splitmix so nearby seeds do not correlate.
std::mt19937_64 make_rng(std::uint64_t seed);

// k distinct indices from [0, n), order of selection preserved.
std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k, std::mt19937_64& rng);

// Positive random point on the simplex (alpha_i > 0, sum = 1).
std::vector<double> random_simplex(std::size_t c, std::mt19937_64& rng);

}  // namespace axioclust
