// Benchmark: serial reference vs OpenMP kernel loops.  The parallel variants
// assign whole output elements to threads with serial inner sums, so they are
// bit-identical to the reference; this harness times both and verifies that.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "minrep/inversion.hpp"
#include "minrep/spectral.hpp"

using namespace minrep;
using spectral::cdouble;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const int grid_n = (argc > 1) ? std::atoi(argv[1]) : 96;
  const int reps = 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both paths run serially\n");
#endif

  const spectral::Sector sector{1.0, 3, 0};
  const spectral::SectorBasis basis(sector, 60, 200);
  const spectral::SemigroupKernel kernel(basis, cdouble(0.7, 0.4));
  const auto grid = linspace(0.05, 5.0, grid_n);

  // kernel matrix
  std::vector<cdouble> m_serial, m_omp;
  const double t_ms = time_best_of(reps, [&] { m_serial = kernel_matrix_serial(kernel, grid, grid); });
  const double t_mp = time_best_of(reps, [&] { m_omp = kernel_matrix_omp(kernel, grid, grid); });
  bool identical = m_serial == m_omp;
  std::printf("semigroup kernel matrix %dx%d  serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
              grid_n, grid_n, t_ms, t_mp, t_ms / t_mp, identical ? "bit-identical" : "MISMATCH");

  // kernel application
  std::vector<double> f(basis.node_count());
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = basis.eigenfunction(2, basis.radii()[i]) - 0.3 * basis.eigenfunction(7, basis.radii()[i]);
  std::vector<cdouble> a_serial, a_omp;
  const double t_as = time_best_of(reps, [&] { a_serial = kernel_apply_serial(kernel, basis, f, grid); });
  const double t_ap = time_best_of(reps, [&] { a_omp = kernel_apply_omp(kernel, basis, f, grid); });
  identical = a_serial == a_omp;
  std::printf("semigroup kernel apply  %4d pts  serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
              grid_n, t_as, t_ap, t_as / t_ap, identical ? "bit-identical" : "MISMATCH");

  // Hilbert-Schmidt double integral
  double hs_serial = 0.0, hs_omp = 0.0;
  const double t_hs = time_best_of(reps, [&] { hs_serial = hs_norm2_kernel_serial(kernel, basis); });
  const double t_hp = time_best_of(reps, [&] { hs_omp = hs_norm2_kernel_omp(kernel, basis); });
  std::printf("HS norm double integral          serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
              t_hs, t_hp, t_hs / t_hp, hs_serial == hs_omp ? "bit-identical" : "MISMATCH");

  // oscillatory Hankel transform
  auto profile = [](double r) { return r * r * std::exp(-0.5 * r * r); };
  const auto rho = linspace(0.1, 6.0, grid_n);
  std::vector<double> h_serial, h_omp;
  const double t_hks =
      time_best_of(reps, [&] { h_serial = inversion::hankel_transform_serial(3, 2, profile, rho); });
  const double t_hkp =
      time_best_of(reps, [&] { h_omp = inversion::hankel_transform_omp(3, 2, profile, rho); });
  identical = h_serial == h_omp;
  std::printf("Hankel transform        %4d pts  serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
              grid_n, t_hks, t_hkp, t_hks / t_hkp, identical ? "bit-identical" : "MISMATCH");

  // rank-1 inversion kernel
  const inversion::RankOneInversion inv(0.5);
  auto fsrc = [&](double x) { return inv.eigenfunction(3, x); };
  std::vector<double> r_serial, r_omp;
  const double t_rs = time_best_of(reps, [&] { r_serial = inv.apply(fsrc, rho); });
  const double t_rp = time_best_of(reps, [&] { r_omp = inv.apply_omp(fsrc, rho); });
  identical = r_serial == r_omp;
  std::printf("rank-1 inversion        %4d pts  serial %.3fs  omp %.3fs  speedup %.2fx  %s\n",
              grid_n, t_rs, t_rp, t_rs / t_rp, identical ? "bit-identical" : "MISMATCH");
  return 0;
}
