#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "minrep/radial_symbolic.hpp"
#include "minrep/specfun.hpp"
#include "minrep/spectral.hpp"

using namespace minrep;
using spectral::cdouble;
using spectral::Sector;
using spectral::SectorBasis;

namespace {

double eval_symbolic(const symb::RadialFunction& f, double r) {
  double acc = 0.0;
  for (const auto& [s, c] : f.terms()) acc += to_double(c.re) * std::pow(r, to_double(s));
  return acc * std::exp(-to_double(f.exp_c()) * std::pow(r, to_double(f.exp_a())));
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

}  // namespace

TEST_CASE("spectra: printed special cases as exact rationals") {
  {
    const auto s = spectral::merged_spectrum(Rational(1), 3, 3);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == Rational(-1));
    CHECK(s[1] == Rational(-2));
    CHECK(s[2] == Rational(-3));
  }
  {
    const auto s = spectral::merged_spectrum(Rational(2), 2, 3);
    CHECK(s[0] == Rational(-1, 2));
    CHECK(s[1] == Rational(-1));
    CHECK(s[2] == Rational(-3, 2));
  }
  {
    // a=2, m=1, ell=0 sector: nu = -1/2, eigenvalues -(k + 1/4); these are
    // exactly the even Hermite eigenvalues -(2k + 1/2)/2 of the oscillator
    const auto s = spectral::sector_spectrum(Rational(2), 1, 0, 3);
    CHECK(s[0] == Rational(-1, 4));
    CHECK(s[1] == Rational(-5, 4));
    CHECK(s[2] == Rational(-9, 4));
    for (int k = 0; k < 3; ++k) CHECK(s[k] == -Rational(2 * k) / 2 - Rational(1, 4));
  }
  // merged spectra for m = 1 must skip the empty harmonic sectors ell >= 2
  {
    const auto s = spectral::merged_spectrum(Rational(2), 1, 4);
    CHECK(s[0] == Rational(-1, 4));
    CHECK(s[1] == Rational(-3, 4));
    CHECK(s[2] == Rational(-5, 4));
    CHECK(s[3] == Rational(-7, 4));
  }
}

TEST_CASE("lowest weights: both printed families") {
  CHECK(spectral::lowest_weight(Rational(1), 3, 0) == Rational(2));  // pi_{2j+m-1} at j=0
  CHECK(spectral::lowest_weight(Rational(2), 2, 1) == Rational(2));  // pi_{j+m/2} at j=1
  CHECK(spectral::lowest_weight(Rational(4), 2, 0) == Rational(1));
  for (int ell = 0; ell <= 10; ++ell) {
    CHECK(spectral::lowest_weight(Rational(1), 3, ell) == Rational(2 * ell + 3 - 1));
    CHECK(spectral::lowest_weight(Rational(2), 4, ell) == Rational(ell) + Rational(4, 2));
  }
}

TEST_CASE("sector validation") {
  CHECK_THROWS_AS((Sector{1.0, 1, 0}).validate_for_expansion(), std::invalid_argument);
  CHECK_NOTHROW((Sector{2.0, 1, 0}).validate_for_expansion());
  CHECK_NOTHROW((Sector{1.0, 3, 0}).validate_for_expansion());
}

TEST_CASE("analyze: eigenbasis projection is the identity on basis vectors") {
  const SectorBasis basis({1.0, 3, 0}, 40, 200);
  auto e0 = spectral::analyze(basis, [&](double r) { return basis.eigenfunction(0, r); });
  CHECK(std::abs(e0.coeffs[0] - 1.0) <= 1e-12);
  for (int k = 1; k < basis.truncation(); ++k) CHECK(std::abs(e0.coeffs[k]) <= 1e-10);

  auto mix = spectral::analyze(basis, [&](double r) {
    return basis.eigenfunction(2, r) + 3.0 * basis.eigenfunction(5, r);
  });
  CHECK(std::abs(mix.coeffs[2] - 1.0) <= 1e-10);
  CHECK(std::abs(mix.coeffs[5] - 3.0) <= 1e-10);
  for (int k = 0; k < basis.truncation(); ++k) {
    if (k == 2 || k == 5) continue;
    CHECK(std::abs(mix.coeffs[k]) <= 1e-10);
  }
}

TEST_CASE("analyze: (1 + r^a) profile has exactly two coefficients") {
  // r^ell e^{-r^a/a} (1 + r^a) = (1 + (a/2)(nu+1)) g_0 - (a/2) g_1 since
  // u = (2/a) r^a and L_1^nu(u) = nu + 1 - u
  const double a = 1.5;
  const int m = 3, ell = 1;
  const SectorBasis basis({a, m, ell}, 30, 200);
  const double nu = basis.sector().nu();
  auto e = spectral::analyze(basis, [&](double r) {
    return std::pow(r, ell) * std::exp(-std::pow(r, a) / a) * (1.0 + std::pow(r, a));
  });
  CHECK(std::abs(e.coeffs[0] - (1.0 + 0.5 * a * (nu + 1.0))) <= 1e-10);
  CHECK(std::abs(e.coeffs[1] - (-0.5 * a)) <= 1e-10);
  for (int k = 2; k < basis.truncation(); ++k) CHECK(std::abs(e.coeffs[k]) <= 1e-9);
}

TEST_CASE("analyze/synthesize round trip on a band-limited function") {
  const SectorBasis basis({2.0, 2, 1}, 60, 200);
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> c(25);
  for (auto& x : c) x = dist(rng);
  auto f = [&](double r) {
    double acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * basis.eigenfunction(int(k), r);
    return acc;
  };
  const auto e = spectral::analyze(basis, f);
  const auto grid = linspace(0.05, 5.0, 60);
  const auto back = spectral::synthesize(basis, e, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(back[i] - f(grid[i])) <= 1e-8);
}

TEST_CASE("analyze: rejects non-integrable samples and oversized truncation") {
  const SectorBasis basis({1.0, 3, 0}, 20, 120);
  CHECK_THROWS_AS(spectral::analyze(basis, [](double r) { return std::exp(r); }),
                  std::invalid_argument);
  CHECK_THROWS_AS(SectorBasis({1.0, 3, 0}, 150, 120), std::length_error);
}

TEST_CASE("semigroup_apply: identity at t=0, eigen-scaling, semigroup law, unitarity") {
  const Sector sector{1.0, 3, 0};
  const SectorBasis basis(sector, 30, 160);
  spectral::Expansion f;
  f.sector = sector;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  f.coeffs.resize(30);
  for (auto& x : f.coeffs) x = cdouble(dist(rng), dist(rng));

  const auto id = spectral::semigroup_apply({cdouble(0.0, 0.0), sector, 30}, f);
  for (int k = 0; k < 30; ++k) CHECK(std::abs(id.coeffs[k] - f.coeffs[k]) == 0.0);

  const double nu = sector.nu();
  const auto g = spectral::semigroup_apply({cdouble(0.7, 0.0), sector, 30}, f);
  for (int k = 0; k < 30; ++k) {
    const double lam = -(k + (nu + 1.0) / 2.0);
    CHECK(std::abs(g.coeffs[k] - f.coeffs[k] * std::exp(0.7 * lam)) <= 1e-15 * std::abs(f.coeffs[k]));
  }

  const auto ab = spectral::semigroup_apply(
      {cdouble(0.3, 0.2), sector, 30},
      spectral::semigroup_apply({cdouble(0.9, -0.1), sector, 30}, f));
  const auto a_plus_b = spectral::semigroup_apply({cdouble(1.2, 0.1), sector, 30}, f);
  for (int k = 0; k < 30; ++k) CHECK(std::abs(ab.coeffs[k] - a_plus_b.coeffs[k]) <= 1e-12);

  std::uniform_real_distribution<double> tdist(0.0, 2.0 * M_PI);
  for (int rep = 0; rep < 5; ++rep) {
    const auto u = spectral::semigroup_apply({cdouble(0.0, tdist(rng)), sector, 30}, f);
    CHECK(std::abs(spectral::expansion_norm(basis, u) - spectral::expansion_norm(basis, f)) <=
          1e-12 * spectral::expansion_norm(basis, f));
  }

  CHECK_THROWS_AS(spectral::semigroup_apply({cdouble(-0.1, 0.0), sector, 30}, f),
                  std::domain_error);
}

TEST_CASE("semigroup kernel: matches the truncated spectral sum (a=1, m=3, t=1)") {
  const Sector sector{1.0, 3, 0};
  const SectorBasis basis(sector, 60, 200);
  const spectral::SemigroupKernel kernel(basis, cdouble(1.0, 0.0));
  CHECK(std::abs(kernel.calibration() - 1.0) <= 1e-8);  // closed form is already normalized

  const auto grid = linspace(0.2, 4.0, 20);
  for (double r : grid) {
    for (double s : grid) {
      cdouble spec_sum(0.0, 0.0);
      for (int k = 0; k < 60; ++k) {
        spec_sum += std::exp(cdouble(1.0, 0.0) * basis.eigenvalue(k)) *
                    basis.eigenfunction(k, r) * basis.eigenfunction(k, s) / basis.norm2(k);
      }
      CHECK(std::abs(kernel.value(r, s) - spec_sum) <= 1e-8);
    }
  }
}

TEST_CASE("semigroup kernel: complex time t = 1 + i") {
  const Sector sector{2.0, 2, 1};
  const SectorBasis basis(sector, 60, 200);
  const spectral::SemigroupKernel kernel(basis, cdouble(1.0, 1.0));
  const auto grid = linspace(0.3, 3.0, 8);
  for (double r : grid) {
    for (double s : grid) {
      cdouble spec_sum(0.0, 0.0);
      for (int k = 0; k < 60; ++k)
        spec_sum += std::exp(cdouble(1.0, 1.0) * basis.eigenvalue(k)) *
                    basis.eigenfunction(k, r) * basis.eigenfunction(k, s) / basis.norm2(k);
      CHECK(std::abs(kernel.value(r, s) - spec_sum) <= 1e-9);
    }
  }
}

TEST_CASE("semigroup kernel: operator action agrees with spectral application") {
  const Sector sector{1.0, 3, 0};
  const SectorBasis basis(sector, 60, 200);
  const cdouble t(0.8, 0.0);
  const spectral::SemigroupKernel kernel(basis, t);

  std::vector<double> f(basis.node_count());
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = basis.eigenfunction(1, basis.radii()[i]) - 0.5 * basis.eigenfunction(4, basis.radii()[i]);
  const auto grid = linspace(0.1, 5.0, 25);
  const auto by_kernel = spectral::kernel_apply_serial(kernel, basis, f, grid);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const cdouble want = std::exp(t * basis.eigenvalue(1)) * basis.eigenfunction(1, grid[j]) -
                         0.5 * std::exp(t * basis.eigenvalue(4)) * basis.eigenfunction(4, grid[j]);
    CHECK(std::abs(by_kernel[j] - want) <= 1e-9);
  }
}

TEST_CASE("Mehler kernel: a=2, m=1 assembly equals the closed Gaussian form") {
  const SectorBasis even({2.0, 1, 0}, 60, 200);
  const SectorBasis odd({2.0, 1, 1}, 60, 200);
  for (double t : {0.4, 1.0, 2.5}) {
    const spectral::SemigroupKernel k0(even, cdouble(t, 0.0));
    const spectral::SemigroupKernel k1(odd, cdouble(t, 0.0));
    const double rho = std::exp(-0.5 * t);
    for (double x : {-2.0, -0.7, 0.4, 1.3}) {
      for (double y : {-1.8, -0.3, 0.8, 2.2}) {
        const cdouble kfull =
            0.5 * (k0.value(std::fabs(x), std::fabs(y)) +
                   ((x < 0) == (y < 0) ? 1.0 : -1.0) * k1.value(std::fabs(x), std::fabs(y)));
        const double mehler =
            std::exp(-t / 4.0) / std::sqrt(M_PI * (1.0 - rho * rho)) *
            std::exp((2.0 * x * y * rho - (x * x + y * y) * rho * rho) / (1.0 - rho * rho) -
                     0.5 * (x * x + y * y));
        CHECK(std::abs(kfull - mehler) <= 1e-8 * std::max(1.0, std::fabs(mehler)));
      }
    }
  }
}

TEST_CASE("Hilbert-Schmidt norms: geometric series, kernel double integral, full space") {
  const Sector sector{1.0, 3, 0};
  CHECK(spectral::hs_norm2_sector(cdouble(1.0, 0.0), sector) ==
        doctest::Approx(std::exp(-2.0) / (1.0 - std::exp(-2.0))).epsilon(1e-14));
  CHECK_THROWS_AS(spectral::hs_norm2_sector(cdouble(0.0, 1.0), sector), std::domain_error);

  const SectorBasis basis(sector, 60, 200);
  for (double t : {0.5, 1.0}) {
    const spectral::SemigroupKernel kernel(basis, cdouble(t, 0.0));
    const double by_kernel = spectral::hs_norm2_kernel_serial(kernel, basis);
    const double by_series = spectral::hs_norm2_sector(cdouble(t, 0.0), sector);
    CHECK(std::fabs(by_kernel - by_series) / by_series <= 1e-4);
  }

  // full space m=2, t=2: sum over harmonic degrees, finite
  const double full = spectral::hs_norm2_full(cdouble(2.0, 0.0), 1.0, 2);
  double manual = 0.0;
  for (int ell = 0; ell < 200; ++ell) {
    const int dim = (ell == 0) ? 1 : 2;
    const double nu = (2.0 * ell + 2.0 - 2.0) / 1.0;
    manual += dim * std::exp(-2.0 * (nu + 1.0)) / (1.0 - std::exp(-4.0));
  }
  CHECK(full == doctest::Approx(manual).epsilon(1e-12));
}

TEST_CASE("kernel loops: OpenMP variants are bit-identical to the serial reference") {
  const Sector sector{2.0, 2, 1};
  const SectorBasis basis(sector, 40, 160);
  const spectral::SemigroupKernel kernel(basis, cdouble(0.6, 0.3));
  const auto r = linspace(0.1, 4.0, 17);
  const auto s = linspace(0.2, 3.5, 13);

  const auto m1 = spectral::kernel_matrix_serial(kernel, r, s);
  const auto m2 = spectral::kernel_matrix_omp(kernel, r, s);
  REQUIRE(m1.size() == m2.size());
  for (std::size_t i = 0; i < m1.size(); ++i) CHECK(m1[i] == m2[i]);

  std::vector<double> f(basis.node_count());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = basis.eigenfunction(2, basis.radii()[i]);
  const auto a1 = spectral::kernel_apply_serial(kernel, basis, f, r);
  const auto a2 = spectral::kernel_apply_omp(kernel, basis, f, r);
  for (std::size_t i = 0; i < a1.size(); ++i) CHECK(a1[i] == a2[i]);

  CHECK(spectral::hs_norm2_kernel_serial(kernel, basis) ==
        spectral::hs_norm2_kernel_omp(kernel, basis));
}

TEST_CASE("singular parameter: w = e^{-t} = 1 is rejected") {
  const SectorBasis basis({1.0, 3, 0}, 20, 120);
  CHECK_THROWS_AS(spectral::SemigroupKernel(basis, cdouble(0.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(spectral::SemigroupKernel(basis, cdouble(0.0, 2.0 * M_PI)), std::domain_error);
}

TEST_CASE("symmetry of D_a under the sector measure (quadrature proxy)") {
  // <D_a f, g> = <f, D_a g> for compactly supported smooth bumps; the bump
  // derivatives come from the chain rule, so only quadrature error remains
  const double a = 1.0;
  const int m = 3, ell = 0;
  struct Bump {
    double c, w;
    // value and first two derivatives of exp(-1/(1-z^2)) at z = (r-c)/w
    void eval(double r, double& v, double& d1, double& d2) const {
      const double z = (r - c) / w;
      if (std::fabs(z) >= 1.0) {
        v = d1 = d2 = 0.0;
        return;
      }
      const double q = 1.0 - z * z;
      const double g = -1.0 / q;
      const double gp = -2.0 * z / (q * q);
      const double gpp = -2.0 / (q * q) - 8.0 * z * z / (q * q * q);
      v = std::exp(g);
      d1 = gp * v / w;
      d2 = (gpp + gp * gp) * v / (w * w);
    }
  };
  const Bump f{2.0, 0.8}, g{2.3, 0.9};
  auto d_a = [&](const Bump& b, double r) {
    double v, d1, d2;
    b.eval(r, v, d1, d2);
    const double lap = d2 + (m - 1) / r * d1 - double(ell * (ell + m - 2)) / (r * r) * v;
    return (std::pow(r, 2.0 - a) * lap - std::pow(r, a) * v) / (2.0 * a);
  };
  const auto rule = quad::composite_legendre(24, 40, 1.0, 3.4);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    const double mu = std::pow(r, m + a - 3.0) * rule.weights[i];
    double fv, fd1, fd2, gv, gd1, gd2;
    f.eval(r, fv, fd1, fd2);
    g.eval(r, gv, gd1, gd2);
    lhs += mu * d_a(f, r) * gv;
    rhs += mu * fv * d_a(g, r);
  }
  CHECK(std::fabs(lhs - rhs) <= 1e-8 * std::max(1.0, std::fabs(lhs)));
}

TEST_CASE("finite differences converge at 4th order to the exact symbolic action") {
  const Rational a(2);
  const int m = 2, ell = 1, k = 2;
  const auto g = symb::deformed_eigenfunction(a, m, ell, k);
  const auto dg = symb::apply(symb::deformed_generator(a, m), g);
  auto gval = [&](double r) { return eval_symbolic(g, r); };
  const double r0 = 1.37;
  double prev_err = -1.0;
  for (double h : {0.02, 0.01, 0.005}) {
    const double d2 = (-gval(r0 - 2 * h) + 16 * gval(r0 - h) - 30 * gval(r0) + 16 * gval(r0 + h) -
                       gval(r0 + 2 * h)) /
                      (12 * h * h);
    const double d1 =
        (gval(r0 - 2 * h) - 8 * gval(r0 - h) + 8 * gval(r0 + h) - gval(r0 + 2 * h)) / (12 * h);
    const double lap = d2 + (m - 1) / r0 * d1 - double(ell * (ell + m - 2)) / (r0 * r0) * gval(r0);
    const double got = (std::pow(r0, 2.0 - to_double(a)) * lap - std::pow(r0, to_double(a)) * gval(r0)) /
                       (2.0 * to_double(a));
    const double err = std::fabs(got - eval_symbolic(dg, r0));
    if (prev_err > 0.0) CHECK(err < prev_err / 12.0);  // ~16x per halving, slack for roundoff
    prev_err = err;
  }
}
