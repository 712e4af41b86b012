#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace minrep::bargmann {

/// Rank-1 Fock space: holomorphic functions on C^x square integrable against
/// Ktilde_{lambda-1}(|z|) dnu(z), with the orbit measure
/// dnu = c_F |z|^{2(lambda-1)} dA(z).  Monomial norms come in closed form from
/// the Mellin transform of the K-Bessel weight:
///   w_n = c_F 2 pi 4^{n+lambda-1} n! Gamma(n+lambda).
class FockModel {
 public:
  FockModel(double lambda, double c_f);

  double lambda() const { return lambda_; }
  double c_f() const { return c_f_; }

  double monomial_norm2(int n) const;             ///< closed form w_n
  double monomial_norm2_quadrature(int n) const;  ///< direct weight-integral oracle
  double norm2(std::span<const double> coeffs) const;  ///< sum |a_n|^2 w_n

 private:
  double lambda_;
  double c_f_;
};

/// Generalized Bargmann transform at rank 1:
///   (B f)(z) = Gamma(lambda) e^{-z/2} int_0^inf Itilde_{lambda-1}(2 sqrt(zx))
///              e^{-x} f(x) dmu(x),   dmu = c_mu x^{lambda-1} dx.
/// c_mu is the shared model constant (calibrated by the inversion operator);
/// c_F is calibrated here by vacuum normalization, with unitarity on f_1
/// recorded as the calibration residual.
class RankOneBargmann {
 public:
  RankOneBargmann(double lambda, double c_mu, int coeff_count = 24);

  /// Bypasses calibration and pins both constants (replaying a recorded
  /// calibration, or deliberately mis-calibrating in tests).
  static RankOneBargmann with_constants(double lambda, double c_mu, double c_f,
                                        int coeff_count = 24);

  double lambda() const { return lambda_; }
  double c_mu() const { return c_mu_; }
  double c_f() const { return c_f_; }
  double calibration_residual() const { return calibration_residual_; }
  int coeff_count() const { return coeff_count_; }
  const FockModel& fock() const { return fock_; }

  double eigenfunction(int k, double x) const;  ///< f_k = L_k^{lambda-1}(2x) e^{-x}
  double eigen_norm2(int k) const;              ///< under dmu

  /// Taylor coefficients a_0..a_{N-1} of B f at z = 0, via the moment
  /// integrals of the Itilde series and the e^{-z/2} Cauchy product.
  /// Emits a std::runtime_error when the coefficient tail has not decayed.
  std::vector<double> apply(const std::function<double(double)>& f,
                            bool check_tail = false) const;

  /// L^2(dmu) norm of a sampled function.
  double source_norm(const std::function<double(double)>& f) const;

 private:
  double lambda_;
  double c_mu_;
  int coeff_count_;
  double c_f_ = 0.0;
  double calibration_residual_ = 0.0;
  FockModel fock_;
};

struct CayleyReport {
  double lambda = 0.0;
  double c_mu = 0.0;
  double c_f = 0.0;
  std::vector<double> leakage;      // per k: off-monomial mass fraction of B f_k
  double isometry_residual = 0.0;   // worst | ||B f|| / ||f|| - 1 | on the span
  bool pass = false;
};

/// The rank-1 expression of the Cayley-transform factorization: B must send
/// the k-th eigenfunction to the z^k monomial direction (it diagonalizes the
/// same generator the Cayley element conjugates to h) and be an isometry.
CayleyReport cayley_consistency(const RankOneBargmann& op, int kmax, double leak_tol = 1e-7,
                                double isometry_tol = 1e-6);

// --- classical Segal-Bargmann transform ------------------------------------------

/// K_B(x,z) = exp(-<z,z>/2 + 2<z,x> - <x,x>) on R^m, m in {1,2}.  The
/// completed square fixes the oscillator eigenfunctions as
/// h_n(x) = H_n(sqrt(2) x) e^{-x^2}, which map to pure monomials; the global
/// isometry constant is calibrated and recorded.
class ClassicalBargmann {
 public:
  explicit ClassicalBargmann(int m, int coeff_count = 16);

  int m() const { return m_; }
  double scale() const { return scale_; }  ///< calibrated global norm factor

  /// m = 1: coefficients a_n of (B f)(z); m = 2: row-major a_{n1,n2}.
  std::vector<double> apply(const std::function<double(std::span<const double>)>& f) const;

  double eigenfunction_1d(int n, double x) const;  ///< H_n(sqrt 2 x) e^{-x^2}

  /// ||f||_{L^2(R^m)} by Gauss-Hermite quadrature.
  double source_norm(const std::function<double(std::span<const double>)>& f) const;

  /// Fock-side norm of a coefficient array under e^{-|z|^2} dA, including the
  /// calibrated scale.
  double fock_norm(std::span<const double> coeffs) const;

 private:
  int m_;
  int coeff_count_;
  double scale_ = 1.0;
};

}  // namespace minrep::bargmann
