// Independent high-precision oracles for the test suites.  Everything here is
// deliberately implemented from series/quadrature definitions, not by calling
// back into the library under test.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace oracles {

using mpf = boost::multiprecision::cpp_bin_float_100;

inline mpf mp_gamma(const mpf& x) { return boost::multiprecision::tgamma(x); }

// Renormalized Bessel series (t/2)^{-nu} J_nu(t) resp. I:
//   sum_j s^j (t^2/4)^j / (j! Gamma(nu+j+1)),  s = -1 for J, +1 for I.
// At 50 digits the alternating cancellation for t <= 60 is harmless.
inline mpf bessel_renorm_series(char kind, const mpf& nu, double t, int max_terms = 500) {
  const mpf q = mpf(t) * mpf(t) / 4;
  const mpf s = (kind == 'J') ? mpf(-1) : mpf(1);
  mpf sum = 0, term;
  // handle 1/Gamma poles at nonpositive nu+j+1 by skipping those j
  for (int j = 0, started = 0; j < max_terms; ++j) {
    const mpf a = nu + j + 1;
    if (a <= 0 && boost::multiprecision::floor(a) == a) continue;
    if (!started) {
      term = 1;
      for (int i = 1; i <= j; ++i) term *= q / i;
      if (kind == 'J' && (j & 1)) term = -term;
      term /= mp_gamma(a);
      started = 1;
    } else {
      term *= s * q / (mpf(j) * (nu + j));
    }
    sum += term;
    if (boost::multiprecision::abs(term) < boost::multiprecision::abs(sum) * mpf(1e-90) &&
        j > t)
      break;
  }
  return sum;
}

// K via the reflection formula in 50-digit arithmetic (cancellation there is
// only ~e^{2t}, well inside the precision budget for t <= 40).
inline mpf mp_bessel_k(double nu, double t) {
  const mpf pi = boost::multiprecision::acos(mpf(-1));
  mpf n(nu);
  if (boost::multiprecision::floor(n) == n) n += mpf(1e-30);  // nudge off the pole
  const mpf half_t = mpf(t) / 2;
  const mpf ip = boost::multiprecision::pow(half_t, n) * bessel_renorm_series('I', n, t);
  const mpf im = boost::multiprecision::pow(half_t, -n) * bessel_renorm_series('I', -n, t);
  return pi / 2 * (im - ip) / boost::multiprecision::sin(pi * n);
}

}  // namespace oracles
