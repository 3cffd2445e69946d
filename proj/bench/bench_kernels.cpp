// Compares the OpenMP kernels against their serial reference
// implementations: affinity tables, pairwise distances, and theorem trial
// batches. Checks that parallel output matches the serial output exactly,
// then reports timings.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "axioclust/algorithms.hpp"
#include "axioclust/numeric.hpp"
#include "axioclust/theorems.hpp"

using namespace axioclust;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  fn();  // warm up
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

void report_row(const std::string& name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx   %s\n", name.c_str(),
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              match ? "bitwise-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel paths run serially\n");
#endif

  const std::size_t n = 4000;
  const std::size_t r = 16;
  const std::size_t c = 32;
  auto rng = make_rng(7);
  std::uniform_real_distribution<double> unif(0.0, 10.0);

  Matrix features(n, r);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < r; ++j) features(k, j) = unif(rng);
  }
  auto data = std::make_shared<DataSet>(DataSet::from_features(features));

  GaussianModel gm;
  gm.v = Matrix(c, r);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < r; ++j) gm.v(i, j) = unif(rng);
  }
  gm.sigma = 4.0;
  CategoryModel model = gm;
  AffinityMap map = AffinityMap::density();

  AffinityTable serial_table = affinity_table_serial(*data, model, map);
  AffinityTable parallel_table = affinity_table(*data, model, map);
  double t_serial = time_ms([&]() { affinity_table_serial(*data, model, map); }, 5);
  double t_parallel = time_ms([&]() { affinity_table(*data, model, map); }, 5);
  report_row("affinity_table", t_serial, t_parallel, serial_table.t == parallel_table.t);

  Matrix small(1200, 8);
  for (std::size_t k = 0; k < small.rows(); ++k) {
    for (std::size_t j = 0; j < small.cols(); ++j) small(k, j) = unif(rng);
  }
  Matrix d_serial = pairwise_distances_serial(small);
  Matrix d_parallel = pairwise_distances(small);
  t_serial = time_ms([&]() { pairwise_distances_serial(small); }, 5);
  t_parallel = time_ms([&]() { pairwise_distances(small); }, 5);
  report_row("pairwise_distances", t_serial, t_parallel, d_serial == d_parallel);

  AlgoConfig cfg;
  cfg.c = 3;
  cfg.seed = 11;
  Matrix verify_features(512, 4);
  for (std::size_t k = 0; k < verify_features.rows(); ++k) {
    for (std::size_t j = 0; j < verify_features.cols(); ++j) verify_features(k, j) = unif(rng);
  }
  auto verify_data = std::make_shared<DataSet>(DataSet::from_features(verify_features));
  ClusteringResult result = cml_gaussian(verify_data, cfg);
  TheoremReport rep_serial = verify_thm4(result, 4000, 17, /*parallel=*/false);
  TheoremReport rep_parallel = verify_thm4(result, 4000, 17, /*parallel=*/true);
  bool match = rep_serial.checks == rep_parallel.checks &&
               rep_serial.violations.size() == rep_parallel.violations.size() &&
               rep_serial.max_breach == rep_parallel.max_breach;
  t_serial = time_ms([&]() { verify_thm4(result, 4000, 17, false); }, 3);
  t_parallel = time_ms([&]() { verify_thm4(result, 4000, 17, true); }, 3);
  report_row("verify_thm4 (4000 trials)", t_serial, t_parallel, match);

  return 0;
}
