#include "minrep/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minrep/quadrature.hpp"
#include "minrep/specfun.hpp"

namespace minrep::inversion {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// composite rule in s for integrands oscillating like cos(freq * s): keeps
// at least 20 nodes per oscillation
quad::Rule oscillatory_rule(double s_max, double freq) {
  const int per_panel = 16;
  const double oscillations = s_max * freq / (2.0 * kPi);
  const int panels = std::max(30, int(std::ceil(oscillations * 20.0 / per_panel)) + 2);
  return quad::composite_legendre(per_panel, panels, 0.0, s_max);
}
}  // namespace

cdouble sector_phase(double a, int m, int ell) {
  (void)m;
  // e^{-i pi (nu - nu0)/2} = e^{-i pi ell / a}
  return std::exp(cdouble(0.0, -kPi * ell / a));
}

Expansion invert_spectral(const Expansion& f) {
  Expansion out = f;
  const cdouble sigma = sector_phase(f.sector.a, f.sector.m, f.sector.ell);
  for (std::size_t k = 0; k < out.coeffs.size(); ++k)
    out.coeffs[k] *= (k % 2 == 0) ? sigma : -sigma;
  return out;
}

cdouble inversion_kernel_value(const Sector& sector, double r, double s) {
  const double nu = sector.nu();
  const double a = sector.a;
  const double arg = (2.0 / a) * std::pow(r * s, a / 2.0);
  const double mag = a * std::pow(a, -(nu + 1.0)) *
                     ((sector.ell == 0) ? 1.0 : std::pow(r * s, double(sector.ell))) *
                     specfun::bessel_renorm(specfun::BesselKind::J, nu, arg);
  return sector_phase(a, sector.m, sector.ell) * mag;
}

// --- rank-1 -----------------------------------------------------------------

RankOneInversion::RankOneInversion(double lambda) : lambda_(lambda) {
  if (lambda <= 0.0) throw std::domain_error("RankOneInversion: lambda must be > 0");
  // unitarity on f_0 fixes c_mu (the transform is linear in c_mu); the spare
  // eigenfunction f_1 records the calibration residual
  const double ratio0 = transform_ratio_unit_measure(0);
  c_mu_ = 1.0 / ratio0;
  calibrated_ = true;
  calibration_residual_ = std::fabs(c_mu_ * transform_ratio_unit_measure(1) - 1.0);
}

double RankOneInversion::c_mu() const {
  if (!calibrated_) throw std::logic_error("RankOneInversion: measure calibration missing");
  return c_mu_;
}

double RankOneInversion::eigenfunction(int k, double x) const {
  return specfun::laguerre(k, lambda_ - 1.0, 2.0 * x) * std::exp(-x);
}

double RankOneInversion::eigen_norm2(int k) const {
  return c_mu() * std::pow(2.0, -lambda_) * specfun::laguerre_norm(k, lambda_ - 1.0);
}

double RankOneInversion::norm(const std::function<double(double)>& f) const {
  const auto rule = quad::gauss_laguerre(120, lambda_ - 1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    const double peeled = f(rule.nodes[i]) * std::exp(0.5 * rule.nodes[i]);
    s += rule.weights[i] * peeled * peeled;
  }
  return std::sqrt(c_mu() * s);
}

std::vector<double> RankOneInversion::apply_impl(const std::function<double(double)>& f,
                                                 std::span<const double> y, bool parallel,
                                                 double measure_const) const {
  // (F f)(y) = 2^{-lambda} Gamma(lambda) c_mu int Jtilde_{l-1}(2 sqrt(xy)) f(x) x^{l-1} dx
  // with x = s^2:  = 2^{1-lambda} Gamma(lambda) c_mu int Jtilde(2 s sqrt(y)) f(s^2) s^{2l-1} ds
  double y_max = 0.0;
  for (double yy : y) y_max = std::max(y_max, yy);
  const double s_max = std::sqrt(60.0 + 4.0 * lambda_);
  const auto rule = oscillatory_rule(s_max, 2.0 * std::sqrt(std::max(y_max, 1e-12)));

  std::vector<double> fs(rule.size()), ws(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double s = rule.nodes[i];
    fs[i] = f(s * s);
    ws[i] = rule.weights[i] * std::pow(s, 2.0 * lambda_ - 1.0);
  }
  const double pref = std::pow(2.0, 1.0 - lambda_) * specfun::gamma_fn(lambda_) * measure_const;

  std::vector<double> out(y.size());
  const std::int64_t n = std::int64_t(y.size());
  auto one = [&](std::int64_t j) {
    const double sq = 2.0 * std::sqrt(y[std::size_t(j)]);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
      acc += ws[i] * specfun::bessel_renorm(specfun::BesselKind::J, lambda_ - 1.0,
                                            sq * rule.nodes[i]) *
             fs[i];
    out[std::size_t(j)] = pref * acc;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < n; ++j) one(j);
  } else {
    for (std::int64_t j = 0; j < n; ++j) one(j);
  }
  return out;
}

std::vector<double> RankOneInversion::apply(const std::function<double(double)>& f,
                                            std::span<const double> y) const {
  return apply_impl(f, y, false, c_mu());
}

std::vector<double> RankOneInversion::apply_omp(const std::function<double(double)>& f,
                                                std::span<const double> y) const {
  return apply_impl(f, y, true, c_mu());
}

double RankOneInversion::transform_ratio_unit_measure(int k) const {
  // ||F^{(c_mu = 1)} f_k||_{x^{l-1} dx} / ||f_k||_{x^{l-1} dx}; the measure
  // constant cancels between the two norms, so only the operator carries it
  const auto rule = quad::gauss_laguerre(120, lambda_ - 1.0);
  auto fk = [this, k](double x) {
    return specfun::laguerre(k, lambda_ - 1.0, 2.0 * x) * std::exp(-x);
  };
  const auto transformed = apply_impl(fk, rule.nodes, false, 1.0);

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    const double e = std::exp(0.5 * rule.nodes[i]);
    const double tf = transformed[i] * e;
    const double ff = fk(rule.nodes[i]) * e;
    num += rule.weights[i] * tf * tf;
    den += rule.weights[i] * ff * ff;
  }
  return std::sqrt(num / den);
}

// --- folding ------------------------------------------------------------------

std::vector<double> hankel_transform_impl(int m, int ell, const std::function<double(double)>& f,
                                          std::span<const double> rho, bool parallel) {
  const double nu = ell + 0.5 * m - 1.0;
  double rho_max = 0.0;
  for (double p : rho) rho_max = std::max(rho_max, p);
  const double r_max = 12.0;
  const auto rule = oscillatory_rule(r_max, std::max(rho_max, 1e-12));
  std::vector<double> fr(rule.size()), wr(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    fr[i] = f(rule.nodes[i]);
    wr[i] = rule.weights[i] * std::pow(rule.nodes[i], 0.5 * m);
  }
  std::vector<double> out(rho.size());
  const std::int64_t n = std::int64_t(rho.size());
  auto one = [&](std::int64_t j) {
    const double p = rho[std::size_t(j)];
    if (p <= 0.0) throw std::domain_error("hankel_transform: rho must be positive");
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
      acc += wr[i] * specfun::bessel_j(nu, p * rule.nodes[i]) * fr[i];
    out[std::size_t(j)] = std::pow(p, 1.0 - 0.5 * m) * acc;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < n; ++j) one(j);
  } else {
    for (std::int64_t j = 0; j < n; ++j) one(j);
  }
  return out;
}

std::vector<double> hankel_transform_serial(int m, int ell,
                                            const std::function<double(double)>& f,
                                            std::span<const double> rho) {
  return hankel_transform_impl(m, ell, f, rho, false);
}

std::vector<double> hankel_transform_omp(int m, int ell, const std::function<double(double)>& f,
                                         std::span<const double> rho) {
  return hankel_transform_impl(m, ell, f, rho, true);
}

FoldingReport folding_check(int m, int ell, const std::function<double(double)>& profile,
                            double tol) {
  if (ell % 2 != 0)
    throw std::invalid_argument("folding_check: the folded model sees even sectors only");
  FoldingReport report;
  report.m = m;
  report.ell = ell;

  const Sector sector{2.0, m, ell};
  const SectorBasis basis(sector, 60, 200);
  const auto expansion = spectral::analyze(basis, profile);
  const auto inverted = invert_spectral(expansion);

  std::vector<double> grid;
  for (double p = 0.2; p <= 4.01; p += 0.2) grid.push_back(p);
  const auto spec_vals = spectral::synthesize(basis, inverted, grid);
  const auto hankel_vals = hankel_transform_serial(m, ell, profile, grid);
  const cdouble phase = sector_phase(2.0, m, ell);  // (-i)^ell, real for even ell

  double sup = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j)
    sup = std::max(sup, std::abs(spec_vals[j] - phase * hankel_vals[j]));
  report.sup_error = sup;

  // Parseval under r^{m-1} dr
  const auto pr = quad::composite_legendre(20, 60, 1e-6, 12.0);
  double n_in = 0.0, n_out = 0.0;
  const auto h_at = hankel_transform_serial(m, ell, profile, pr.nodes);
  for (std::size_t i = 0; i < pr.size(); ++i) {
    const double mu = pr.weights[i] * std::pow(pr.nodes[i], m - 1.0);
    n_in += mu * profile(pr.nodes[i]) * profile(pr.nodes[i]);
    n_out += mu * h_at[i] * h_at[i];
  }
  report.parseval_error = std::fabs(std::sqrt(n_out) - std::sqrt(n_in)) / std::sqrt(n_in);
  report.pass = (sup <= tol);
  return report;
}

// --- integrability probe ---------------------------------------------------------

namespace {

IntegrabilityProbe probe_common(std::string model, const std::function<double(double, double)>& absk,
                                const std::function<double(double)>& measure_density,
                                std::span<const double> box_radii) {
  IntegrabilityProbe probe;
  probe.model = std::move(model);
  double sup = 0.0;
  for (double rmax : box_radii) {
    const auto rule = quad::gauss_legendre(80, 1e-9, rmax);
    double integral = 0.0, mu = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      mu += rule.weights[i] * measure_density(rule.nodes[i]);
      double row = 0.0;
      for (std::size_t j = 0; j < rule.size(); ++j) {
        const double k = absk(rule.nodes[i], rule.nodes[j]);
        sup = std::max(sup, k);
        row += rule.weights[j] * measure_density(rule.nodes[j]) * k;
      }
      integral += rule.weights[i] * measure_density(rule.nodes[i]) * row;
    }
    probe.box_measures.push_back(mu * mu);
    probe.integrals.push_back(integral);
  }
  // least-squares slope of log I against log mu^2
  const std::size_t n = probe.integrals.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(probe.box_measures[i]);
    const double y = std::log(probe.integrals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  probe.growth_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  probe.sup_estimate = sup;
  probe.bounded_kernel = std::isfinite(sup);
  probe.conclusive = false;
  probe.verdict = probe.bounded_kernel
                      ? "kernel bounded on probed boxes; locally integrable there (evidence only)"
                      : "kernel unbounded on probed boxes (evidence only)";
  return probe;
}

}  // namespace

IntegrabilityProbe kernel_local_integrability_probe(const Sector& sector,
                                                    std::span<const double> box_radii) {
  auto absk = [sector](double r, double s) {
    return std::abs(inversion_kernel_value(sector, r, s));
  };
  auto dens = [sector](double r) { return std::pow(r, sector.measure_exponent()); };
  return probe_common("sector(a=" + std::to_string(sector.a) + ",m=" + std::to_string(sector.m) +
                          ",ell=" + std::to_string(sector.ell) + ")",
                      absk, dens, box_radii);
}

IntegrabilityProbe kernel_local_integrability_probe_rank1(double lambda,
                                                          std::span<const double> box_radii) {
  auto absk = [lambda](double x, double y) {
    return std::pow(2.0, -lambda) * specfun::gamma_fn(lambda) *
           std::fabs(specfun::bessel_renorm(specfun::BesselKind::J, lambda - 1.0,
                                            2.0 * std::sqrt(x * y)));
  };
  auto dens = [lambda](double x) { return std::pow(x, lambda - 1.0); };
  return probe_common("rank1(lambda=" + std::to_string(lambda) + ", unit measure)", absk, dens,
                      box_radii);
}

}  // namespace minrep::inversion
