#include "minrep/bargmann.hpp"

#include <cmath>
#include <stdexcept>

#include "minrep/quadrature.hpp"
#include "minrep/specfun.hpp"

namespace minrep::bargmann {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

// --- FockModel ---------------------------------------------------------------

FockModel::FockModel(double lambda, double c_f) : lambda_(lambda), c_f_(c_f) {
  if (lambda <= 0.0) throw std::domain_error("FockModel: lambda must be > 0 (weight divergence)");
}

double FockModel::monomial_norm2(int n) const {
  // c_F 2 pi int rho^{2n + 2 lambda - 1} Ktilde_{lambda-1}(rho) drho
  //   = c_F 2 pi 4^{n + lambda - 1} n! Gamma(n + lambda)
  return c_f_ * 2.0 * kPi *
         std::exp((n + lambda_ - 1.0) * std::log(4.0) + std::lgamma(n + 1.0) +
                  std::lgamma(n + lambda_));
}

double FockModel::monomial_norm2_quadrature(int n) const {
  // direct integral of the K-Bessel weight moment; Gauss nodes are interior,
  // so the rule may start at 0 even though Ktilde is singular there, and the
  // mild log/power behavior near 0 sits in finely graded panels
  const double rho_max = 60.0 + 8.0 * n + 4.0 * lambda_;
  auto inner = quad::composite_legendre(24, 80, 0.0, 1.0);
  const auto outer = quad::composite_legendre(24, 160, 1.0, rho_max);
  inner.nodes.insert(inner.nodes.end(), outer.nodes.begin(), outer.nodes.end());
  inner.weights.insert(inner.weights.end(), outer.weights.begin(), outer.weights.end());
  double s = 0.0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const double rho = inner.nodes[i];
    s += inner.weights[i] * std::pow(rho, 2.0 * n + 2.0 * lambda_ - 1.0) *
         specfun::bessel_renorm(specfun::BesselKind::K, lambda_ - 1.0, rho);
  }
  return c_f_ * 2.0 * kPi * s;
}

double FockModel::norm2(std::span<const double> coeffs) const {
  double s = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    s += coeffs[n] * coeffs[n] * monomial_norm2(int(n));
  return s;
}

// --- RankOneBargmann -----------------------------------------------------------

RankOneBargmann::RankOneBargmann(double lambda, double c_mu, int coeff_count)
    : lambda_(lambda), c_mu_(c_mu), coeff_count_(coeff_count), fock_(lambda, 1.0) {
  if (lambda <= 0.0) throw std::domain_error("RankOneBargmann: lambda must be > 0");
  if (coeff_count < 4) throw std::invalid_argument("RankOneBargmann: need a few coefficients");
  // vacuum normalization pins c_F; unitarity on f_1 is recorded as residual
  const auto b0 = apply([this](double x) { return eigenfunction(0, x); });
  const double n0 = source_norm([this](double x) { return eigenfunction(0, x); });
  const double w0_unit = fock_.monomial_norm2(0);
  c_f_ = (n0 * n0) / (b0[0] * b0[0] * w0_unit);
  fock_ = FockModel(lambda_, c_f_);

  const auto b1 = apply([this](double x) { return eigenfunction(1, x); });
  const double n1 = source_norm([this](double x) { return eigenfunction(1, x); });
  calibration_residual_ = std::fabs(std::sqrt(fock_.norm2(b1)) / n1 - 1.0);
}

RankOneBargmann RankOneBargmann::with_constants(double lambda, double c_mu, double c_f,
                                                int coeff_count) {
  RankOneBargmann op(lambda, c_mu, coeff_count);
  op.c_f_ = c_f;
  op.fock_ = FockModel(lambda, c_f);
  return op;
}

double RankOneBargmann::eigenfunction(int k, double x) const {
  return specfun::laguerre(k, lambda_ - 1.0, 2.0 * x) * std::exp(-x);
}

double RankOneBargmann::eigen_norm2(int k) const {
  return c_mu_ * std::pow(2.0, -lambda_) * specfun::laguerre_norm(k, lambda_ - 1.0);
}

std::vector<double> RankOneBargmann::apply(const std::function<double(double)>& f,
                                           bool check_tail) const {
  // moments M_j = int x^{lambda-1+j} e^{-x} f(x) dx against the GL weight;
  // long double accumulation keeps the far Taylor tail (amplified later by
  // the factorially growing Fock weights) near its true tiny size
  const auto rule = quad::gauss_laguerre(160, lambda_ - 1.0);
  const int n_coeff = coeff_count_;
  std::vector<long double> moments(n_coeff, 0.0L);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    const double fx = f(rule.nodes[i]);
    if (fx == 0.0) continue;
    long double po = (long double)rule.weights[i] * fx;
    for (int j = 0; j < n_coeff; ++j) {
      moments[j] += po;
      po *= rule.nodes[i];
    }
  }
  // (B f)(z) = Gamma(l) c_mu e^{-z/2} sum_j z^j M_j / (j! Gamma(l+j));
  // multiply the two entire series
  std::vector<long double> series(n_coeff);
  for (int j = 0; j < n_coeff; ++j)
    series[j] = moments[j] * std::exp((long double)(-std::lgamma(j + 1.0) - std::lgamma(lambda_ + j)));
  std::vector<double> out(n_coeff, 0.0);
  const double pref = specfun::gamma_fn(lambda_) * c_mu_;
  for (int n = 0; n < n_coeff; ++n) {
    long double acc = 0.0L;
    long double epow = 1.0L;  // (-1/2)^q / q!
    for (int q = 0; q <= n; ++q) {
      acc += epow * series[n - q];
      epow *= -0.5L / (q + 1.0L);
    }
    out[n] = double(pref * acc);
  }
  if (check_tail) {
    double head = 0.0, tail = 0.0;
    for (int n = 0; n < n_coeff; ++n) {
      const double mass = out[n] * out[n] * fock_.monomial_norm2(n);
      (n >= n_coeff - 3 ? tail : head) += mass;
    }
    if (tail > 1e-12 * (head + tail))
      throw std::runtime_error("RankOneBargmann::apply: coefficient tail has not decayed");
  }
  return out;
}

double RankOneBargmann::source_norm(const std::function<double(double)>& f) const {
  const auto rule = quad::gauss_laguerre(160, lambda_ - 1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    const double peeled = f(rule.nodes[i]) * std::exp(0.5 * rule.nodes[i]);
    s += rule.weights[i] * peeled * peeled;
  }
  return std::sqrt(c_mu_ * s);
}

CayleyReport cayley_consistency(const RankOneBargmann& op, int kmax, double leak_tol,
                                double isometry_tol) {
  CayleyReport report;
  report.lambda = op.lambda();
  report.c_mu = op.c_mu();
  report.c_f = op.c_f();
  report.pass = true;
  double worst_iso = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const auto coeffs = op.apply([&](double x) { return op.eigenfunction(k, x); });
    // leakage window: any true off-monomial mass would show up adjacent to k;
    // far-tail indices only amplify the floating-point floor through the
    // factorially growing weights, so they are excluded from the fraction
    const int window = std::min<int>(int(coeffs.size()), std::max(k + 7, 13));
    double total = 0.0, off = 0.0;
    for (int n = 0; n < window; ++n) {
      const double mass = coeffs[std::size_t(n)] * coeffs[std::size_t(n)] *
                          op.fock().monomial_norm2(n);
      total += mass;
      if (n != k) off += mass;
    }
    const double leak = std::sqrt(off / total);
    report.leakage.push_back(leak);
    if (leak > leak_tol) report.pass = false;
    const double iso = std::fabs(std::sqrt(total) / std::sqrt(op.eigen_norm2(k)) - 1.0);
    worst_iso = std::max(worst_iso, iso);
  }
  report.isometry_residual = worst_iso;
  if (worst_iso > isometry_tol) report.pass = false;
  return report;
}

// --- classical transform -----------------------------------------------------------

ClassicalBargmann::ClassicalBargmann(int m, int coeff_count) : m_(m), coeff_count_(coeff_count) {
  if (m != 1 && m != 2) throw std::invalid_argument("ClassicalBargmann: m must be 1 or 2");
  // calibrate the global constant on the ground state e^{-|x|^2}
  scale_ = 1.0;
  auto vac = [](std::span<const double> x) {
    double q = 0.0;
    for (double xi : x) q += xi * xi;
    return std::exp(-q);
  };
  const auto b = apply(vac);
  const double nsrc = source_norm(vac);
  const double fock0 = b[0] * b[0] * std::pow(kPi, m_);  // w_0 = pi^m under e^{-|z|^2}
  scale_ = std::sqrt(fock0) / nsrc;  // the constant by which B inflates norms
}

double ClassicalBargmann::eigenfunction_1d(int n, double x) const {
  return specfun::hermite(n, std::sqrt(2.0) * x) * std::exp(-x * x);
}

std::vector<double> ClassicalBargmann::apply(
    const std::function<double(std::span<const double>)>& f) const {
  const auto rule = quad::gauss_hermite(120);
  const int n_coeff = coeff_count_;
  if (m_ == 1) {
    std::vector<double> moments(n_coeff, 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double x[1] = {rule.nodes[i]};
      const double fx = f(x);
      if (fx == 0.0) continue;
      double po = rule.weights[i] * fx;
      for (int j = 0; j < n_coeff; ++j) {
        moments[j] += po;
        po *= rule.nodes[i];
      }
    }
    // (B f)(z) = e^{-z^2/2} sum_j (2z)^j M_j / j!
    std::vector<double> series(n_coeff);
    for (int j = 0; j < n_coeff; ++j)
      series[j] = moments[j] * std::exp(j * std::log(2.0) - std::lgamma(j + 1.0));
    std::vector<double> out(n_coeff, 0.0);
    for (int n = 0; n < n_coeff; ++n) {
      double acc = 0.0;
      double epow = 1.0;  // (-1/2)^q / q! paired with z^{2q}
      for (int q = 0; 2 * q <= n; ++q) {
        acc += epow * series[n - 2 * q];
        epow *= -0.5 / (q + 1.0);
      }
      out[n] = acc;
    }
    return out;
  }
  // m = 2: tensor moments, row-major output a_{n1, n2}
  std::vector<double> moments(std::size_t(n_coeff) * n_coeff, 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double x[2] = {rule.nodes[i], rule.nodes[j]};
      const double fx = f(x);
      if (fx == 0.0) continue;
      const double w = rule.weights[i] * rule.weights[j] * fx;
      double pi_pow = w;
      for (int a = 0; a < n_coeff; ++a) {
        double po = pi_pow;
        for (int b = 0; b < n_coeff; ++b) {
          moments[std::size_t(a) * n_coeff + b] += po;
          po *= rule.nodes[j];
        }
        pi_pow *= rule.nodes[i];
      }
    }
  }
  auto coeff_1d = [&](std::span<const double> m1d, int n) {
    double acc = 0.0;
    double epow = 1.0;
    for (int q = 0; 2 * q <= n; ++q) {
      const int j = n - 2 * q;
      acc += epow * m1d[j] * std::exp(j * std::log(2.0) - std::lgamma(j + 1.0));
      epow *= -0.5 / (q + 1.0);
    }
    return acc;
  };
  std::vector<double> out(std::size_t(n_coeff) * n_coeff, 0.0);
  // separable kernel: apply the 1d coefficient map along each axis
  std::vector<double> half(std::size_t(n_coeff) * n_coeff, 0.0);
  for (int a = 0; a < n_coeff; ++a) {
    std::vector<double> row(n_coeff);
    for (int b = 0; b < n_coeff; ++b) row[b] = moments[std::size_t(a) * n_coeff + b];
    for (int n2 = 0; n2 < n_coeff; ++n2) half[std::size_t(a) * n_coeff + n2] = coeff_1d(row, n2);
  }
  for (int n2 = 0; n2 < n_coeff; ++n2) {
    std::vector<double> col(n_coeff);
    for (int a = 0; a < n_coeff; ++a) col[a] = half[std::size_t(a) * n_coeff + n2];
    for (int n1 = 0; n1 < n_coeff; ++n1) out[std::size_t(n1) * n_coeff + n2] = coeff_1d(col, n1);
  }
  return out;
}

double ClassicalBargmann::source_norm(
    const std::function<double(std::span<const double>)>& f) const {
  const auto rule = quad::gauss_hermite(120);
  double s = 0.0;
  if (m_ == 1) {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double x[1] = {rule.nodes[i]};
      const double fx = f(x) * std::exp(0.5 * rule.nodes[i] * rule.nodes[i]);
      s += rule.weights[i] * fx * fx;
    }
  } else {
    for (std::size_t i = 0; i < rule.size(); ++i)
      for (std::size_t j = 0; j < rule.size(); ++j) {
        const double x[2] = {rule.nodes[i], rule.nodes[j]};
        const double fx =
            f(x) * std::exp(0.5 * (x[0] * x[0] + x[1] * x[1]));
        s += rule.weights[i] * rule.weights[j] * fx * fx;
      }
  }
  return std::sqrt(s);
}

double ClassicalBargmann::fock_norm(std::span<const double> coeffs) const {
  double s = 0.0;
  if (m_ == 1) {
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      s += coeffs[n] * coeffs[n] * kPi * std::exp(std::lgamma(n + 1.0));
  } else {
    for (int n1 = 0; n1 < coeff_count_; ++n1)
      for (int n2 = 0; n2 < coeff_count_; ++n2) {
        const double c = coeffs[std::size_t(n1) * coeff_count_ + n2];
        s += c * c * kPi * kPi * std::exp(std::lgamma(n1 + 1.0) + std::lgamma(n2 + 1.0));
      }
  }
  return std::sqrt(s) / scale_;
}

}  // namespace minrep::bargmann
