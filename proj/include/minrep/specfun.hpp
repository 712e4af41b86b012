#pragma once

#include <complex>
#include <vector>

#include "minrep/rational.hpp"

namespace minrep::specfun {

/// Gamma function. Throws std::domain_error at nonpositive integers and
/// std::overflow_error past the representable range (x > ~171.6).
double gamma_fn(double x);

/// 1/Gamma(x), entire; evaluates to exactly 0 at nonpositive integers.
double rgamma(double x);

/// log |Gamma(x)|, x not a nonpositive integer.
double lgamma_fn(double x);

/// sin(pi*x) and cos(pi*x) with exact zeros at (half-)integer lattice points.
double sinpi(double x);
double cospi(double x);

enum class BesselKind { J, I, K };

/// Cylinder Bessel functions of real order nu and argument x > 0.
/// J/Y are computed together (Steed's continued fractions plus Temme's series
/// for small x), as are I/K.
void bessel_jy(double nu, double x, double& j, double& y);
void bessel_ik(double nu, double x, double& i, double& k);

double bessel_j(double nu, double x);  ///< any real nu, x > 0 (x == 0 allowed for nu >= 0)
double bessel_y(double nu, double x);  ///< nu >= 0, x > 0
double bessel_i(double nu, double x);  ///< any real nu, x >= 0 as for J
double bessel_k(double nu, double x);  ///< any real nu, x > 0

/// Renormalized Bessel functions  (t/2)^{-nu} * C_nu(t).
/// For kinds J and I these are entire and even in t, with value 1/Gamma(nu+1)
/// at t = 0.  Kind K is singular at t = 0 (std::domain_error).
/// Throws std::domain_error for t < 0.
double bessel_renorm(BesselKind kind, double nu, double t);

/// log of the renormalized I-Bessel as a function of the *squared* argument:
/// returns log( Itilde_nu(z) ) where z = sqrt(zsq) (principal branch).
/// Itilde_nu is entire and even, so it is a single-valued function of zsq;
/// this is the form semigroup kernels need, where zsq may be complex or
/// negative real (in which case the value is the oscillatory Jtilde branch).
/// The log form keeps huge arguments representable.
std::complex<double> log_besseli_renorm_sq(double nu, std::complex<double> zsq);

/// Generalized Laguerre polynomial L_k^alpha(x) by the three-term recurrence.
double laguerre(int k, double alpha, double x);

/// Exact-rational backend of the same recurrence.
Rational laguerre_rational(int k, const Rational& alpha, const Rational& x);

/// Coefficients c_0..c_k of L_k^alpha in the monomial basis, exact.
std::vector<Rational> laguerre_coeffs(int k, const Rational& alpha);

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// Exact monomial coefficients of H_n (integer; index j = coefficient of x^j).
std::vector<BigInt> hermite_coeffs(int n);

/// Gamma(k+alpha+1)/k!  — the squared weight norm of L_k^alpha — and its log.
double laguerre_norm(int k, double alpha);
double log_laguerre_norm(int k, double alpha);

}  // namespace minrep::specfun
