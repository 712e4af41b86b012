#include "minrep/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "minrep/cones.hpp"
#include "minrep/specfun.hpp"

namespace minrep::spectral {

namespace {
constexpr double kLogTiny = -745.0;  // exp underflow threshold

cdouble exp_guarded(cdouble logv) {
  if (logv.real() < kLogTiny) return {0.0, 0.0};
  return std::exp(logv);
}
}  // namespace

void Sector::validate_for_expansion() const {
  if (a <= 0.0 || m < 1 || ell < 0)
    throw std::invalid_argument("Sector: need a > 0, m >= 1, ell >= 0");
  if (!(nu() > -1.0))
    throw std::invalid_argument("Sector: nu = (2 ell + m - 2)/a must exceed -1 for the eigenbasis");
  if (!(measure_exponent() > -1.0))
    throw std::invalid_argument("Sector: measure exponent m + a - 3 must exceed -1");
}

std::vector<Rational> sector_spectrum(const Rational& a, int m, int ell, int count) {
  if (count < 1) throw std::invalid_argument("sector_spectrum: count must be >= 1");
  const Rational nu = (Rational(2 * ell) + m - 2) / a;
  std::vector<Rational> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(-(Rational(k) + (nu + 1) / 2));
  return out;
}

std::vector<Rational> merged_spectrum(const Rational& a, int m, int count) {
  if (count < 1) throw std::invalid_argument("merged_spectrum: count must be >= 1");
  std::set<Rational, std::greater<Rational>> values;
  // lowest sector eigenvalue magnitude grows with ell; scan until a sector
  // starts past everything we could still need
  for (int ell = 0;; ++ell) {
    if (cones::harmonic_dim(m, ell) == 0) {
      if (ell > 1) break;  // m = 1 has no harmonics past degree 1
      continue;
    }
    const Rational nu = (Rational(2 * ell) + m - 2) / a;
    const Rational top = -(nu + 1) / 2;  // k = 0 eigenvalue, the largest
    if (int(values.size()) >= count && top < *std::next(values.begin(), count - 1)) break;
    for (int k = 0; k < count; ++k) values.insert(-(Rational(k) + (nu + 1) / 2));
  }
  std::vector<Rational> out(values.begin(), values.end());
  if (int(out.size()) > count) out.resize(count);
  return out;
}

Rational lowest_weight(const Rational& a, int m, int ell) {
  return (Rational(2 * ell) + m - 2) / a + 1;
}

std::vector<double> sector_spectrum_d(const Sector& sector, int count) {
  std::vector<double> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(-(k + (sector.nu() + 1.0) / 2.0));
  return out;
}

// --- SectorBasis ---------------------------------------------------------------

SectorBasis::SectorBasis(Sector sector, int truncation, int nodes,
                         std::optional<std::filesystem::path> cache_dir)
    : sector_(sector), n_(truncation) {
  sector_.validate_for_expansion();
  if (truncation < 1) throw std::invalid_argument("SectorBasis: truncation must be >= 1");
  if (nodes < truncation)
    throw std::length_error("SectorBasis: truncation exceeds the node table size");
  const double nu = sector_.nu();
  if (cache_dir) {
    const quad::SectorKey key{sector_.a, std::uint32_t(sector_.m), std::uint32_t(sector_.ell),
                              std::uint32_t(nodes)};
    rule_ = quad::cached_rule(*cache_dir, key, [&]() { return quad::gauss_laguerre(nodes, nu); });
  } else {
    rule_ = quad::gauss_laguerre(nodes, nu);
  }
  radii_.resize(rule_.size());
  for (std::size_t i = 0; i < rule_.size(); ++i)
    radii_[i] = std::pow(sector_.a * rule_.nodes[i] / 2.0, 1.0 / sector_.a);
  // Laguerre table rows k = 0..n-1
  lag_.assign(std::size_t(n_) * rule_.size(), 0.0);
  for (std::size_t i = 0; i < rule_.size(); ++i) {
    const double u = rule_.nodes[i];
    double lm1 = 0.0, l = 1.0;
    for (int k = 0; k < n_; ++k) {
      lag_[std::size_t(k) * rule_.size() + i] = l;
      const double lp1 = ((2.0 * k + 1.0 + nu - u) * l - (k + nu) * lm1) / (k + 1.0);
      lm1 = l;
      l = lp1;
    }
  }
  measure_const_ = (1.0 / sector_.a) * std::pow(sector_.a / 2.0, nu + 1.0);
}

double SectorBasis::eigenfunction(int k, double r) const {
  if (r < 0.0) throw std::domain_error("eigenfunction: r must be >= 0");
  const double u = (2.0 / sector_.a) * std::pow(r, sector_.a);
  const double lk = specfun::laguerre(k, sector_.nu(), u);
  const double powl = (sector_.ell == 0) ? 1.0 : std::pow(r, double(sector_.ell));
  return powl * lk * std::exp(-0.5 * u);
}

double SectorBasis::norm2(int k) const {
  return measure_const_ * specfun::laguerre_norm(k, sector_.nu());
}

// --- expansions -----------------------------------------------------------------

double Expansion::norm() const {
  const double nu = sector.nu();
  const double meas = (1.0 / sector.a) * std::pow(sector.a / 2.0, nu + 1.0);
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    s += std::norm(coeffs[k]) * meas * specfun::laguerre_norm(int(k), nu);
  return std::sqrt(s);
}

double expansion_norm(const SectorBasis& basis, const Expansion& e) {
  double s = 0.0;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k)
    s += std::norm(e.coeffs[k]) * basis.norm2(int(k));
  return std::sqrt(s);
}

namespace {

// peeled samples F_i = f(r_i) r_i^{-ell} e^{u_i/2}; nodes with underflowed
// weights are skipped by every consumer
std::vector<double> peel(const SectorBasis& basis, std::span<const double> values) {
  if (values.size() != basis.node_count())
    throw std::invalid_argument("analyze: sample count must match the node grid");
  const int ell = basis.sector().ell;
  std::vector<double> peeled(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double u = basis.rule().nodes[i];
    const double lr = (ell == 0) ? 0.0 : ell * std::log(basis.radii()[i]);
    peeled[i] = values[i] * std::exp(0.5 * u - lr);
  }
  return peeled;
}

}  // namespace

Expansion analyze(const SectorBasis& basis, std::span<const double> values_at_radii) {
  const auto peeled = peel(basis, values_at_radii);
  const auto& w = basis.rule().weights;

  // square-integrability proxy: the top decile of the grid must not carry the mass
  double total = 0.0, tail = 0.0;
  const std::size_t tail_start = basis.node_count() - basis.node_count() / 10;
  for (std::size_t i = 0; i < peeled.size(); ++i) {
    if (w[i] == 0.0) continue;
    const double contrib = w[i] * peeled[i] * peeled[i];
    total += contrib;
    if (i >= tail_start) tail += contrib;
  }
  if (!std::isfinite(total) || (total > 0.0 && tail > 0.5 * total))
    throw std::invalid_argument(
        "analyze: samples are not square integrable on the quadrature grid");

  Expansion e;
  e.sector = basis.sector();
  e.coeffs.assign(basis.truncation(), cdouble(0.0, 0.0));
  const double nu = basis.sector().nu();
  for (int k = 0; k < basis.truncation(); ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < peeled.size(); ++i) {
      if (w[i] == 0.0) continue;
      s += w[i] * peeled[i] * basis.laguerre_at_node(k, i);
    }
    e.coeffs[k] = s * std::exp(-specfun::log_laguerre_norm(k, nu));
  }
  double tail2 = 0.0;
  for (int k = std::max(0, basis.truncation() - 5); k < basis.truncation(); ++k)
    tail2 += std::norm(e.coeffs[k]) * basis.norm2(k);
  e.tail_estimate = std::sqrt(tail2);
  return e;
}

Expansion analyze(const SectorBasis& basis, const std::function<double(double)>& f) {
  std::vector<double> values(basis.node_count());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = f(basis.radii()[i]);
  return analyze(basis, values);
}

std::vector<cdouble> synthesize(const SectorBasis& basis, const Expansion& e,
                                std::span<const double> radii) {
  std::vector<cdouble> out(radii.size(), cdouble(0.0, 0.0));
  for (std::size_t j = 0; j < radii.size(); ++j) {
    cdouble acc(0.0, 0.0);
    for (std::size_t k = 0; k < e.coeffs.size(); ++k)
      acc += e.coeffs[k] * basis.eigenfunction(int(k), radii[j]);
    out[j] = acc;
  }
  return out;
}

// --- semigroup -------------------------------------------------------------------

Expansion semigroup_apply(const SemigroupQuery& q, const Expansion& f) {
  if (q.t.real() < 0.0)
    throw std::domain_error("semigroup_apply: Re t >= 0 required (holomorphic domain)");
  Expansion out = f;
  const double nu = q.sector.nu();
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    const double lambda = -(double(k) + (nu + 1.0) / 2.0);
    out.coeffs[k] *= std::exp(q.t * lambda);
  }
  return out;
}

double hs_norm2_sector(cdouble t, const Sector& sector) {
  const double tau = t.real();
  if (!(tau > 0.0)) throw std::domain_error("hs_norm2: not Hilbert-Schmidt for Re t <= 0");
  const double nu = sector.nu();
  return std::exp(-tau * (nu + 1.0)) / (1.0 - std::exp(-2.0 * tau));
}

double hs_norm2_full(cdouble t, double a, int m) {
  const double tau = t.real();
  if (!(tau > 0.0)) throw std::domain_error("hs_norm2: not Hilbert-Schmidt for Re t <= 0");
  double total = 0.0;
  for (int ell = 0;; ++ell) {
    const int dim = cones::harmonic_dim(m, ell);
    if (dim == 0) {
      if (ell > 1) break;
      continue;
    }
    Sector s{a, m, ell};
    const double term = dim * hs_norm2_sector(t, s);
    total += term;
    if (term < 1e-17 * total) break;
  }
  return total;
}

// --- closed-form kernel ------------------------------------------------------------

SemigroupKernel::SemigroupKernel(const SectorBasis& basis, cdouble t)
    : sector_(basis.sector()), t_(t) {
  if (t.real() < 0.0) throw std::domain_error("SemigroupKernel: Re t >= 0 required");
  w_ = std::exp(-t);
  if (std::abs(cdouble(1.0, 0.0) - w_) < 1e-12)
    throw std::domain_error("SemigroupKernel: singular parameter, e^{-t} = 1");
  const double nu = sector_.nu();
  const double a = sector_.a;
  // branch fixed by the spectral definition: w^s := e^{-t s}
  log_pref_ = std::log(a) + (nu + 1.0) * std::log(2.0 / a) + (nu + 1.0) * (-t / 2.0) -
              (nu + 1.0) * std::log(cdouble(1.0, 0.0) - w_);
  calibration_ = cdouble(1.0, 0.0);
  log_calibration_ = cdouble(0.0, 0.0);

  // Calibrate against the spectral action on g_0: <K g_0, g_0> = e^{t l_0} h_0.
  // Near the oscillatory boundary the Gauss-Laguerre double sum cannot see the
  // kernel reliably, so the recorded constant stays at the closed form's 1.
  if (t.real() >= 0.05) {
    const auto& rule = basis.rule();
    std::vector<double> logw(rule.size(), 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i)
      logw[i] = (rule.weights[i] > 0.0) ? std::log(rule.weights[i]) : 0.0;
    cdouble acc(0.0, 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      if (rule.weights[i] == 0.0) continue;
      cdouble row(0.0, 0.0);
      for (std::size_t j = 0; j < rule.size(); ++j) {
        if (rule.weights[j] == 0.0) continue;
        row += exp_guarded(log_peeled(rule.nodes[i], rule.nodes[j]) + cdouble(logw[j], 0.0));
      }
      acc += rule.weights[i] * row;
    }
    const double meas = basis.measure_const();
    const cdouble expected = std::exp(t * basis.eigenvalue(0)) * basis.norm2(0);
    calibration_ = meas * meas * acc / expected;
    log_calibration_ = std::log(calibration_);
  }
}

double SemigroupKernel::u_of_r(double r) const {
  return (2.0 / sector_.a) * std::pow(r, sector_.a);
}

cdouble SemigroupKernel::log_peeled(double u, double v) const {
  const cdouble one(1.0, 0.0);
  const cdouble zsq = 4.0 * u * v * w_ / ((one - w_) * (one - w_));
  return log_pref_ - w_ * (u + v) / (one - w_) +
         specfun::log_besseli_renorm_sq(sector_.nu(), zsq) - log_calibration_;
}

cdouble SemigroupKernel::value(double r, double s) const {
  const double u = u_of_r(r), v = u_of_r(s);
  const int ell = sector_.ell;
  double lr = 0.0;
  if (ell != 0) {
    if (r == 0.0 || s == 0.0) return {0.0, 0.0};
    lr = ell * (std::log(r) + std::log(s));
  }
  return exp_guarded(log_peeled(u, v) + cdouble(lr - 0.5 * (u + v), 0.0));
}

cdouble richardson3(cdouble f_eps, cdouble f_half, cdouble f_quarter) {
  return (f_eps - 6.0 * f_half + 8.0 * f_quarter) / 3.0;
}

// --- kernel loops -------------------------------------------------------------------

std::vector<cdouble> kernel_matrix_serial(const SemigroupKernel& kernel, std::span<const double> r,
                                          std::span<const double> s) {
  std::vector<cdouble> out(r.size() * s.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) out[i * s.size() + j] = kernel.value(r[i], s[j]);
  return out;
}

std::vector<cdouble> kernel_matrix_omp(const SemigroupKernel& kernel, std::span<const double> r,
                                       std::span<const double> s) {
  std::vector<cdouble> out(r.size() * s.size());
  const std::int64_t rows = std::int64_t(r.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      out[std::size_t(i) * s.size() + j] = kernel.value(r[std::size_t(i)], s[j]);
  return out;
}

namespace {

std::vector<cdouble> kernel_apply_impl(const SemigroupKernel& kernel, const SectorBasis& basis,
                                       std::span<const double> f_at_radii,
                                       std::span<const double> out_radii, bool parallel) {
  if (kernel.t().real() <= 0.0)
    throw std::domain_error("kernel_apply: quadrature application needs Re t > 0");
  if (f_at_radii.size() != basis.node_count())
    throw std::invalid_argument("kernel_apply: samples must live on the basis grid");
  const int ell = basis.sector().ell;
  const auto& rule = basis.rule();
  std::vector<double> peeled(f_at_radii.size());
  for (std::size_t i = 0; i < peeled.size(); ++i) {
    const double lr = (ell == 0) ? 0.0 : ell * std::log(basis.radii()[i]);
    peeled[i] = f_at_radii[i] * std::exp(0.5 * rule.nodes[i] - lr);
  }
  const double meas = basis.measure_const();
  std::vector<double> logw(rule.size(), 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i)
    logw[i] = (rule.weights[i] > 0.0) ? std::log(rule.weights[i]) : 0.0;
  std::vector<cdouble> out(out_radii.size());
  const std::int64_t n_out = std::int64_t(out_radii.size());

  auto one_output = [&](std::int64_t j) {
    const double y = out_radii[std::size_t(j)];
    if (ell != 0 && y == 0.0) {
      out[std::size_t(j)] = cdouble(0.0, 0.0);
      return;
    }
    const double uy = kernel.u_of_r(y);
    cdouble acc(0.0, 0.0);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      if (rule.weights[i] == 0.0) continue;
      acc += exp_guarded(kernel.log_peeled(uy, rule.nodes[i]) + cdouble(logw[i], 0.0)) * peeled[i];
    }
    const double lr = (ell == 0) ? 0.0 : ell * std::log(y);
    out[std::size_t(j)] = acc * meas * std::exp(lr - 0.5 * uy);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < n_out; ++j) one_output(j);
  } else {
    for (std::int64_t j = 0; j < n_out; ++j) one_output(j);
  }
  return out;
}

double hs_norm2_kernel_impl(const SemigroupKernel& kernel, const SectorBasis& basis,
                            bool parallel) {
  if (kernel.t().real() <= 0.0)
    throw std::domain_error("hs_norm2_kernel: not Hilbert-Schmidt for Re t <= 0");
  const auto& rule = basis.rule();
  const std::int64_t n = std::int64_t(rule.size());
  std::vector<double> row_sums(rule.size(), 0.0);
  // weights enter in log space: |Khat|^2 alone can overflow before the
  // e^{-u-v} factor inside the weights pulls the product back down
  std::vector<double> logw(rule.size(), 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i)
    logw[i] = (rule.weights[i] > 0.0) ? std::log(rule.weights[i]) : 0.0;

  auto one_row = [&](std::int64_t i) {
    const std::size_t ii = std::size_t(i);
    if (rule.weights[ii] == 0.0) return;
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      if (rule.weights[j] == 0.0) continue;
      const cdouble lp = kernel.log_peeled(rule.nodes[ii], rule.nodes[j]);
      const double logterm = 2.0 * lp.real() + logw[ii] + logw[j];
      acc += (logterm < kLogTiny) ? 0.0 : std::exp(logterm);
    }
    row_sums[ii] = acc;
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) one_row(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) one_row(i);
  }
  // fixed-order reduction keeps serial and parallel results bit-identical
  double total = 0.0;
  for (double rs : row_sums) total += rs;
  const double meas = basis.measure_const();
  return meas * meas * total;
}

}  // namespace

std::vector<cdouble> kernel_apply_serial(const SemigroupKernel& kernel, const SectorBasis& basis,
                                         std::span<const double> f_at_radii,
                                         std::span<const double> out_radii) {
  return kernel_apply_impl(kernel, basis, f_at_radii, out_radii, false);
}

std::vector<cdouble> kernel_apply_omp(const SemigroupKernel& kernel, const SectorBasis& basis,
                                      std::span<const double> f_at_radii,
                                      std::span<const double> out_radii) {
  return kernel_apply_impl(kernel, basis, f_at_radii, out_radii, true);
}

double hs_norm2_kernel_serial(const SemigroupKernel& kernel, const SectorBasis& basis) {
  return hs_norm2_kernel_impl(kernel, basis, false);
}

double hs_norm2_kernel_omp(const SemigroupKernel& kernel, const SectorBasis& basis) {
  return hs_norm2_kernel_impl(kernel, basis, true);
}

}  // namespace minrep::spectral
