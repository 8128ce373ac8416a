// Timing comparison of the serial reference kernels against the OpenMP ones.

#include <omp.h>

#include <cstdio>
#include <functional>

#include "cpav/brute.hpp"
#include "cpav/classify.hpp"
#include "cpav/cluster.hpp"

using namespace cpav;

namespace {

double timed(const std::function<void()>& fn) {
  const double t0 = omp_get_wtime();
  fn();
  return omp_get_wtime() - t0;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-40s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (argc > 1) cfg.threads = std::atoi(argv[1]);
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  std::printf("threads: %d\n\n", threads);
  std::printf("%-40s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const Permutation sigma = Permutation::parse("1324");
    const int n = 10;
    UDistribution a, b;
    const double ts = timed([&] { a = brute_distribution_serial(sigma, n, cfg); });
    const double tp = timed([&] { b = brute_distribution(sigma, n, cfg); });
    if (!(a == b)) std::fprintf(stderr, "MISMATCH in brute_distribution\n");
    row("brute_distribution(1324, n=10)", ts, tp);
  }
  {
    const PatternSet ps(Permutation::parse("123"));
    const int n = 11;
    mpz_class a, b;
    const double ts = timed([&] { a = brute_avoiders_serial(ps, n, cfg); });
    const double tp = timed([&] { b = brute_avoiders(ps, n, cfg); });
    if (a != b) std::fprintf(stderr, "MISMATCH in brute_avoiders\n");
    row("brute_avoiders(123, n=11)", ts, tp);
  }
  {
    const PatternSet ps(Permutation::parse("2143"));
    Config c = cfg;
    c.cluster_n_max = 30;
    c.extension_cap = 30;
    const int n = 28;
    ClusterPolynomial a, b;
    const double ts = timed([&] { a = cluster_polynomial_serial(ps, n, c); });
    const double tp = timed([&] { b = cluster_polynomial(ps, n, c); });
    if (!(a == b)) std::fprintf(stderr, "MISMATCH in cluster_polynomial\n");
    row("cluster_polynomial(2143, n=28)", ts, tp);
  }
  {
    const PatternSet ps(Permutation::identity(5));
    Config c = cfg;
    c.cluster_n_max = 26;
    c.extension_cap = 26;
    const int n = 26;
    ClusterPolynomial a, b;
    const double ts = timed([&] { a = cluster_polynomial_serial(ps, n, c); });
    const double tp = timed([&] { b = cluster_polynomial(ps, n, c); });
    if (!(a == b)) std::fprintf(stderr, "MISMATCH in cluster_polynomial\n");
    row("cluster_polynomial(12345, n=26)", ts, tp);
  }
  {
    Config serial_cfg = cfg;
    serial_cfg.threads = 1;
    ClassPartition a, b;
    const double ts = timed([&] { a = partition(5, 13, serial_cfg); });
    const double tp = timed([&] { b = partition(5, 13, cfg); });
    if (a.count() != b.count()) std::fprintf(stderr, "MISMATCH in partition\n");
    row("partition(m=5, n_max=13)", ts, tp);
  }
  return 0;
}
