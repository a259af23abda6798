// Compares the serial reference kernels against the OpenMP versions.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "catgal/group.hpp"
#include "catgal/kernels.hpp"

using namespace catgal;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  // carrier for the associativity scan: A5 x A4, order 720
  auto a5 = grp::Group::from_permutations("a5", 5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, 256);
  auto a4 = grp::Group::from_permutations("a4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, 256);
  auto big = grp::product(a5, a4).group;
  std::printf("assoc scan carrier: order %d\n", big.order());

  auto t0 = Clock::now();
  auto s = kernels::assoc_violation_serial(big.flat_table().data(), big.order());
  double ser = ms_since(t0);
  t0 = Clock::now();
  auto p = kernels::assoc_violation_parallel(big.flat_table().data(), big.order());
  double par = ms_since(t0);
  std::printf("assoc:      serial %8.1f ms   parallel %8.1f ms   speedup %.2fx  (%lld/%lld)\n",
              ser, par, ser / par, (long long)s, (long long)p);

  // hom filter: all 8^8 maps D4 -> D4
  auto d4 = grp::Group::from_permutations("d4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, 256);
  t0 = Clock::now();
  auto cs = kernels::hom_filter_count_serial(d4.flat_table().data(), 8, d4.flat_table().data(), 8);
  ser = ms_since(t0);
  t0 = Clock::now();
  auto cp = kernels::hom_filter_count_parallel(d4.flat_table().data(), 8,
                                               d4.flat_table().data(), 8);
  par = ms_since(t0);
  std::printf("hom filter: serial %8.1f ms   parallel %8.1f ms   speedup %.2fx  (%lld/%lld)\n",
              ser, par, ser / par, (long long)cs, (long long)cp);
  return s == p && cs == cp ? 0 : 1;
}
