#pragma once

#include <complex>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "minrep/quadrature.hpp"
#include "minrep/rational.hpp"

namespace minrep::spectral {

using cdouble = std::complex<double>;

/// One SL(2) x O(m) sector of L^2(R^m, |x|^{a-2} dx): deformation a > 0,
/// dimension m >= 1, spherical-harmonic degree ell >= 0.  The radial measure
/// is r^{m+a-3} dr and the Laguerre parameter is nu = (2 ell + m - 2)/a.
struct Sector {
  double a = 1.0;
  int m = 1;
  int ell = 0;

  double nu() const { return (2.0 * ell + m - 2.0) / a; }
  double measure_exponent() const { return m + a - 3.0; }
  double lowest_weight() const { return nu() + 1.0; }

  /// nu > -1 and measure exponent > -1 are required for the L^2 eigenbasis;
  /// spectra and weights as formulas need neither.
  void validate_for_expansion() const;
};

/// Eigenvalues of D_a on the sector: lambda_k = -(k + (nu+1)/2), exact.
std::vector<Rational> sector_spectrum(const Rational& a, int m, int ell, int count);

/// First `count` distinct eigenvalues of D_a on the full space, merged over
/// sectors with dim H^ell(R^m) > 0, ordered decreasing (closest to 0 first).
std::vector<Rational> merged_spectrum(const Rational& a, int m, int count);

Rational lowest_weight(const Rational& a, int m, int ell);

std::vector<double> sector_spectrum_d(const Sector& sector, int count);

// --- eigenbasis with quadrature backing --------------------------------------

/// Gauss-Laguerre-backed eigenbasis of a sector: nodes in u = (2/a) r^a with
/// weight u^nu e^{-u}, eigenfunctions g_k(r) = r^ell L_k^nu(u) e^{-u/2} and
/// their exact norms h_k = (1/a)(a/2)^{nu+1} Gamma(k+nu+1)/k!.
class SectorBasis {
 public:
  SectorBasis(Sector sector, int truncation, int nodes = 200,
              std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const Sector& sector() const { return sector_; }
  int truncation() const { return n_; }
  std::size_t node_count() const { return rule_.size(); }
  const quad::Rule& rule() const { return rule_; }
  const std::vector<double>& radii() const { return radii_; }

  double eigenvalue(int k) const { return -(k + (sector_.nu() + 1.0) / 2.0); }
  double eigenfunction(int k, double r) const;
  double norm2(int k) const;
  double measure_const() const { return measure_const_; }

  /// Laguerre value L_k^nu(u_i) at node i (precomputed table).
  double laguerre_at_node(int k, std::size_t i) const { return lag_[k * rule_.size() + i]; }

 private:
  Sector sector_;
  int n_;
  quad::Rule rule_;
  std::vector<double> radii_;
  std::vector<double> lag_;  // row k: L_k^nu at nodes
  double measure_const_;
};

// --- expansions ---------------------------------------------------------------

struct Expansion {
  Sector sector;
  std::vector<cdouble> coeffs;
  double tail_estimate = 0.0;  ///< ||f - P_N f|| proxy from the last 5 coefficients

  double norm() const;  ///< sqrt(sum |c_k|^2 h_k)
};

double expansion_norm(const SectorBasis& basis, const Expansion& e);

/// Projects sampled values (at the basis radii) onto the first N
/// eigenfunctions.  Throws std::invalid_argument when the tail of the
/// quadrature grid carries most of the mass (not square integrable on the
/// grid) and std::length_error when N exceeds the node table.
Expansion analyze(const SectorBasis& basis, std::span<const double> values_at_radii);
Expansion analyze(const SectorBasis& basis, const std::function<double(double)>& f);

std::vector<cdouble> synthesize(const SectorBasis& basis, const Expansion& e,
                                std::span<const double> radii);

// --- holomorphic semigroup -----------------------------------------------------

struct SemigroupQuery {
  cdouble t;
  Sector sector;
  int truncation = 60;
};

/// e^{t D_a} on coefficients: c_k -> e^{t lambda_k} c_k.  Requires Re t >= 0.
Expansion semigroup_apply(const SemigroupQuery& q, const Expansion& f);

/// Sector Hilbert-Schmidt norm squared: sum_k e^{2 Re t lambda_k} (geometric,
/// closed form).  Throws std::domain_error when Re t <= 0.
double hs_norm2_sector(cdouble t, const Sector& sector);

/// Full-space norm squared: sum_ell dim H^ell(R^m) * sector sum.
double hs_norm2_full(cdouble t, double a, int m);

/// Closed-form integral kernel of e^{t D_a} on a sector, built from the
/// bilinear (Hardy-Hille) generating function of the Laguerre basis:
///   K_t(r,s) = C (rs)^ell e^{-(u+v)/2} w^{(nu+1)/2} (1-w)^{-(nu+1)}
///              exp(-w(u+v)/(1-w)) Itilde_nu(2 sqrt(uvw)/(1-w)),  w = e^{-t}.
/// The constant is calibrated once against semigroup_apply on g_0 and
/// recorded.  Branches follow the spectral definition: w^{s} := e^{-t s}.
class SemigroupKernel {
 public:
  SemigroupKernel(const SectorBasis& basis, cdouble t);

  cdouble t() const { return t_; }
  const Sector& sector() const { return sector_; }
  cdouble calibration() const { return calibration_; }

  /// log of the measure-peeled kernel Khat(u,v) = K(r,s) (rs)^{-ell} e^{(u+v)/2}.
  cdouble log_peeled(double u, double v) const;
  /// Kernel value at radii (assembled from log form; underflows to 0).
  cdouble value(double r, double s) const;

  double u_of_r(double r) const;

 private:
  Sector sector_;
  cdouble t_;
  cdouble w_;              // e^{-t}
  cdouble log_pref_;       // log of the closed-form prefactor, before calibration
  cdouble calibration_;    // recorded factor (should be 1 up to rounding)
  cdouble log_calibration_;
};

/// Richardson extrapolation toward epsilon = 0 from samples at eps, eps/2,
/// eps/4 (the Re t down 0 boundary rule).
cdouble richardson3(cdouble f_eps, cdouble f_half, cdouble f_quarter);

// --- kernel evaluation loops: serial reference and OpenMP versions ------------

/// Row-major matrix K(r_i, s_j).  The _omp variant parallelizes over rows with
/// a serial inner loop, so results are bit-identical to the serial reference.
std::vector<cdouble> kernel_matrix_serial(const SemigroupKernel& kernel,
                                          std::span<const double> r, std::span<const double> s);
std::vector<cdouble> kernel_matrix_omp(const SemigroupKernel& kernel, std::span<const double> r,
                                       std::span<const double> s);

/// (K f)(y_j) by Gauss-Laguerre quadrature over the basis nodes, f sampled at
/// the basis radii.
std::vector<cdouble> kernel_apply_serial(const SemigroupKernel& kernel, const SectorBasis& basis,
                                         std::span<const double> f_at_radii,
                                         std::span<const double> out_radii);
std::vector<cdouble> kernel_apply_omp(const SemigroupKernel& kernel, const SectorBasis& basis,
                                      std::span<const double> f_at_radii,
                                      std::span<const double> out_radii);

/// Hilbert-Schmidt norm squared by the double quadrature of |K|^2 d mu d mu.
double hs_norm2_kernel_serial(const SemigroupKernel& kernel, const SectorBasis& basis);
double hs_norm2_kernel_omp(const SemigroupKernel& kernel, const SectorBasis& basis);

}  // namespace minrep::spectral
