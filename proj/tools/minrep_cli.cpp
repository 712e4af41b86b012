// Command-line front end: spectra, commutator checks, transforms, semigroup
// kernels, Bargmann reports, fourth-order scans, cone certificates, the
// static catalog, and the acceptance gate.
#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "minrep/acceptance.hpp"
#include "minrep/bargmann.hpp"
#include "minrep/catalog.hpp"
#include "minrep/cones.hpp"
#include "minrep/fourth_order.hpp"
#include "minrep/inversion.hpp"
#include "minrep/quadrature.hpp"
#include "minrep/radial_symbolic.hpp"
#include "minrep/serialize.hpp"
#include "minrep/specfun.hpp"
#include "minrep/spectral.hpp"

using namespace minrep;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct Output {
  std::string path;  // empty = stdout
  std::string format = "json";

  void emit_json(json j) const {
    j["schema"] = "1";
    const std::string text = j.dump(2) + "\n";
    write(text);
  }

  // one row per (index, value-real, value-imag)
  void emit_csv(const std::vector<std::complex<double>>& values) const {
    std::ostringstream os;
    os << "index,value_re,value_im\n";
    for (std::size_t i = 0; i < values.size(); ++i)
      os << i << "," << std::setprecision(17) << values[i].real() << "," << values[i].imag()
         << "\n";
    write(os.str());
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
  }
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

std::optional<std::filesystem::path> cache_dir_or_default(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  return quad::default_cache_dir();
}

json load_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  json j;
  is >> j;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schrodinger-model analysis toolkit: deformed sl2 triples, Laguerre spectra, "
               "Bessel-kernel transforms, Fock-space transforms, fourth-order operators and "
               "cone criteria"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  std::string cache_flag;
  app.add_option("--output,-o", output.path, "write results to a file instead of stdout");
  app.add_option("--format", output.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", cache_flag,
                 "node-table cache directory (default: MINREP_CACHE or the system temp dir)");

  // --- spectrum ---------------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the deformed generator");
  std::string sp_a = "1";
  int sp_m = 3, sp_count = 10, sp_ell = -1;
  spectrum->add_option("--a", sp_a, "deformation parameter (rational, e.g. 1/2)");
  spectrum->add_option("--m", sp_m, "ambient dimension")->check(CLI::PositiveNumber);
  spectrum->add_option("--ell", sp_ell, "restrict to one sector (default: merged over sectors)");
  spectrum->add_option("--count", sp_count, "number of eigenvalues")->check(CLI::PositiveNumber);

  // --- commutators ------------------------------------------------------------
  auto* comm = app.add_subcommand("commutators", "exact sl2 relation check for a triple");
  std::string cm_a = "2";
  int cm_m = 3, cm_lmax = 3, cm_jmax = 5;
  bool cm_matrix = false;
  comm->add_option("--a", cm_a, "deformation parameter (rational)");
  comm->add_option("--m", cm_m, "ambient dimension")->check(CLI::PositiveNumber);
  comm->add_option("--lmax", cm_lmax, "largest sector degree tested");
  comm->add_option("--jmax", cm_jmax, "lattice test functions per sector");
  comm->add_flag("--matrix", cm_matrix, "also run the exact 2x2 matrix checks");

  // --- transform --------------------------------------------------------------
  auto* transform = app.add_subcommand("transform", "unitary inversion operator");
  std::string tr_backend = "spectral";
  std::string tr_a = "2";
  int tr_m = 3, tr_ell = 0, tr_k = 0, tr_grid_n = 0;
  double tr_lambda = 1.0, tr_grid_max = 6.0;
  transform->add_option("--backend", tr_backend, "spectral or kernel")
      ->check(CLI::IsMember({"spectral", "kernel"}));
  transform->add_option("--a", tr_a, "deformation parameter (spectral backend)");
  transform->add_option("--m", tr_m, "ambient dimension (spectral backend)");
  transform->add_option("--ell", tr_ell, "sector (spectral backend)");
  transform->add_option("--lambda", tr_lambda, "rank-1 parameter (kernel backend)");
  transform->add_option("--k", tr_k, "eigenfunction index to transform");
  transform->add_option("--grid-n", tr_grid_n, "emit transformed samples on a radial grid");
  transform->add_option("--grid-max", tr_grid_max, "grid upper end");

  // --- semigroup ----------------------------------------------------------------
  auto* semigroup = app.add_subcommand("semigroup", "holomorphic semigroup kernel on a sector");
  double sg_a = 1.0, sg_tre = 1.0, sg_tim = 0.0, sg_grid_max = 4.0;
  int sg_m = 3, sg_ell = 0, sg_n = 60, sg_grid_n = 8;
  bool sg_hs = false;
  semigroup->add_option("--a", sg_a, "deformation parameter");
  semigroup->add_option("--m", sg_m, "ambient dimension");
  semigroup->add_option("--ell", sg_ell, "sector degree");
  semigroup->add_option("--t-re", sg_tre, "Re t (>= 0)");
  semigroup->add_option("--t-im", sg_tim, "Im t");
  semigroup->add_option("--truncation,-N", sg_n, "eigenbasis truncation");
  semigroup->add_option("--grid-n", sg_grid_n, "kernel sample grid size");
  semigroup->add_option("--grid-max", sg_grid_max, "kernel sample grid upper end");
  semigroup->add_flag("--hs", sg_hs, "include Hilbert-Schmidt norms (kernel and series)");

  // --- bargmann -------------------------------------------------------------------
  auto* barg = app.add_subcommand("bargmann", "generalized Bargmann transform report");
  double bg_lambda = 1.0;
  int bg_kmax = 10, bg_classical = 0;
  barg->add_option("--lambda", bg_lambda, "rank-1 parameter (> 0)");
  barg->add_option("--kmax", bg_kmax, "eigenfunctions checked");
  barg->add_option("--classical-m", bg_classical, "run the classical transform on R^m (1 or 2)");

  // --- fourth-order ------------------------------------------------------------------
  auto* fourth_cmd = app.add_subcommand("fourth-order", "fourth-order operator toolkit");
  std::string fo_mu = "-1", fo_nu = "0", fo_gauge = "expx", fo_frobenius, fo_apply_file;
  int fo_maxdeg = 8, fo_order = 20, fo_root = 0;
  bool fo_scan = false;
  fourth_cmd->add_option("--mu", fo_mu, "parameter mu (rational)");
  fourth_cmd->add_option("--nu", fo_nu, "parameter nu (rational)");
  fourth_cmd->add_flag("--scan", fo_scan, "search polynomial eigenfunctions under the gauge");
  fourth_cmd->add_option("--gauge", fo_gauge, "expx, gauss, or none")
      ->check(CLI::IsMember({"expx", "gauss", "none"}));
  fourth_cmd->add_option("--maxdeg", fo_maxdeg, "scan degree bound");
  fourth_cmd->add_option("--frobenius", fo_frobenius,
                         "four Meijer exponents b1,b2,b3,b4 (rationals)");
  fourth_cmd->add_option("--root", fo_root, "Frobenius root index 0..3");
  fourth_cmd->add_option("--order", fo_order, "Frobenius truncation order");
  fourth_cmd->add_option("--apply", fo_apply_file, "apply the operator to a series JSON file");

  // --- cone-check -----------------------------------------------------------------------
  auto* cone_cmd = app.add_subcommand("cone-check", "discrete-branching cone criterion");
  std::string cc_c1, cc_c2, cc_beta;
  cone_cmd->add_option("--c1", cc_c1, "momentum-image cone JSON file")->required();
  cone_cmd->add_option("--c2", cc_c2, "second cone JSON file");
  cone_cmd->add_option("--beta", cc_beta, "asymptotic-support ray, e.g. \"1,0\"");

  // --- catalog -------------------------------------------------------------------------
  auto* catalog_cmd = app.add_subcommand("catalog", "static family tables");
  std::string ct_family;
  catalog_cmd->add_option("--family", ct_family, "split, euclidean, complex, or quaternionic");

  // --- verify ---------------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
  int vf_only = 0;
  verify->add_option("--only", vf_only, "run a single criterion id (1..9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spectrum) {
      const Rational a = parse_rational(sp_a);
      const auto values = (sp_ell >= 0) ? spectral::sector_spectrum(a, sp_m, sp_ell, sp_count)
                                        : spectral::merged_spectrum(a, sp_m, sp_count);
      if (output.format == "csv") {
        std::vector<std::complex<double>> rows;
        for (const auto& v : values) rows.emplace_back(to_double(v), 0.0);
        output.emit_csv(rows);
      } else {
        json j;
        j["a"] = to_string(a);
        j["m"] = sp_m;
        if (sp_ell >= 0) j["ell"] = sp_ell;
        json nums = json::array(), exact = json::array();
        for (const auto& v : values) {
          nums.push_back(to_double(v));
          exact.push_back(to_string(v));
        }
        j["eigenvalues"] = nums;
        j["eigenvalues_exact"] = exact;
        output.emit_json(j);
      }
      return kExitOk;
    }

    if (*comm) {
      const Rational a = parse_rational(cm_a);
      const auto triple = symb::deformed_triple(a, cm_m);
      json sectors = json::array();
      bool pass = true;
      for (int ell = 0; ell <= cm_lmax; ++ell) {
        const auto set = symb::lattice_test_set(a, cm_m, ell, cm_jmax, Rational(1) / a);
        const auto report = symb::commutator_check(triple, set);
        pass = pass && report.pass;
        sectors.push_back({{"ell", ell}, {"pass", report.pass}});
      }
      json j{{"triple", triple.label}, {"pass", pass}, {"sectors", sectors}};
      if (cm_matrix) {
        const auto mreport = symb::matrix_sl2_checks(symb::standard_sl2_basis());
        pass = pass && mreport.pass;
        j["matrix_checks"] = io::matrix_report_to_json(mreport);
        j["pass"] = pass;
      }
      output.emit_json(j);
      return pass ? kExitOk : kExitNumerical;
    }

    if (*transform) {
      if (tr_backend == "spectral") {
        const spectral::Sector sector{std::stod(tr_a), tr_m, tr_ell};
        sector.validate_for_expansion();
        const auto phase = inversion::sector_phase(sector.a, sector.m, sector.ell);
        json j{{"backend", "spectral"},
               {"sector", {{"a", sector.a}, {"m", sector.m}, {"ell", sector.ell}}},
               {"phase", {{"re", phase.real()}, {"im", phase.imag()}}},
               {"calibration", nullptr}};
        if (tr_grid_n > 0) {
          const spectral::SectorBasis basis(sector, std::max(tr_k + 8, 24), 200,
                                            cache_dir_or_default(cache_flag));
          spectral::Expansion e;
          e.sector = sector;
          e.coeffs.assign(basis.truncation(), {0.0, 0.0});
          e.coeffs[tr_k] = 1.0;
          const auto inv = inversion::invert_spectral(e);
          std::vector<double> grid(tr_grid_n);
          for (int i = 0; i < tr_grid_n; ++i)
            grid[i] = tr_grid_max * (i + 1.0) / tr_grid_n;
          const auto vals = spectral::synthesize(basis, inv, grid);
          if (output.format == "csv") {
            output.emit_csv(vals);
            return kExitOk;
          }
          json samples = json::array();
          for (std::size_t i = 0; i < grid.size(); ++i)
            samples.push_back({{"r", grid[i]}, {"re", vals[i].real()}, {"im", vals[i].imag()}});
          j["samples"] = samples;
        }
        output.emit_json(j);
      } else {
        const inversion::RankOneInversion inv(tr_lambda);
        json j{{"backend", "kernel"},
               {"sector", {{"lambda", tr_lambda}, {"rank", 1}}},
               {"phase", {{"re", 1.0}, {"im", 0.0}}},
               {"calibration",
                {{"c_mu", inv.c_mu()}, {"residual", inv.calibration_residual()}}}};
        if (tr_grid_n > 0) {
          std::vector<double> grid(tr_grid_n);
          for (int i = 0; i < tr_grid_n; ++i) grid[i] = tr_grid_max * (i + 1.0) / tr_grid_n;
          const auto vals =
              inv.apply_omp([&](double x) { return inv.eigenfunction(tr_k, x); }, grid);
          if (output.format == "csv") {
            std::vector<std::complex<double>> rows;
            for (double v : vals) rows.emplace_back(v, 0.0);
            output.emit_csv(rows);
            return kExitOk;
          }
          json samples = json::array();
          for (std::size_t i = 0; i < grid.size(); ++i)
            samples.push_back({{"x", grid[i]}, {"value", vals[i]}});
          j["samples"] = samples;
        }
        output.emit_json(j);
      }
      return kExitOk;
    }

    if (*semigroup) {
      const spectral::Sector sector{sg_a, sg_m, sg_ell};
      sector.validate_for_expansion();
      const spectral::cdouble time(sg_tre, sg_tim);
      const spectral::SectorBasis basis(sector, sg_n, 200, cache_dir_or_default(cache_flag));
      const spectral::SemigroupKernel kernel(basis, time);
      std::vector<double> grid(sg_grid_n);
      for (int i = 0; i < sg_grid_n; ++i) grid[i] = sg_grid_max * (i + 1.0) / sg_grid_n;
      const auto matrix = spectral::kernel_matrix_omp(kernel, grid, grid);
      if (output.format == "csv") {
        output.emit_csv(matrix);
        return kExitOk;
      }
      json j{{"sector", {{"a", sector.a}, {"m", sector.m}, {"ell", sector.ell}}},
             {"t", {{"re", sg_tre}, {"im", sg_tim}}},
             {"truncation", sg_n},
             {"calibration",
              {{"re", kernel.calibration().real()}, {"im", kernel.calibration().imag()}}}};
      json rows = json::array();
      for (int i = 0; i < sg_grid_n; ++i) {
        json row = json::array();
        for (int k = 0; k < sg_grid_n; ++k) {
          const auto v = matrix[std::size_t(i) * sg_grid_n + k];
          row.push_back({{"re", v.real()}, {"im", v.imag()}});
        }
        rows.push_back(row);
      }
      j["kernel"] = rows;
      j["grid"] = grid;
      if (sg_hs) {
        if (sg_tre > 0.0) {
          j["hs_norm2_kernel"] = spectral::hs_norm2_kernel_omp(kernel, basis);
          j["hs_norm2_series"] = spectral::hs_norm2_sector(time, sector);
          j["hs_norm2_full_space"] = spectral::hs_norm2_full(time, sector.a, sector.m);
        } else {
          j["hs_norm2_kernel"] = nullptr;
          j["hs_note"] = "not Hilbert-Schmidt for Re t <= 0";
        }
      }
      output.emit_json(j);
      return kExitOk;
    }

    if (*barg) {
      if (bg_classical == 1 || bg_classical == 2) {
        const bargmann::ClassicalBargmann op(bg_classical);
        output.emit_json(json{{"classical", true}, {"m", bg_classical}, {"scale", op.scale()}});
        return kExitOk;
      }
      const inversion::RankOneInversion inv(bg_lambda);
      const bargmann::RankOneBargmann op(bg_lambda, inv.c_mu());
      const auto report = bargmann::cayley_consistency(op, bg_kmax);
      output.emit_json(io::cayley_report_to_json(report));
      return report.pass ? kExitOk : kExitNumerical;
    }

    if (*fourth_cmd) {
      const fourth::FourthOrderParams params{parse_rational(fo_mu), parse_rational(fo_nu)};
      const fourth::Gauge gauge = (fo_gauge == "expx")   ? fourth::Gauge::ExpX
                                  : (fo_gauge == "gauss") ? fourth::Gauge::GaussHalf
                                                          : fourth::Gauge::None;
      if (!fo_frobenius.empty()) {
        const auto bs = parse_rational_list(fo_frobenius);
        if (bs.size() != 4) {
          std::cerr << "fourth-order: --frobenius needs exactly four exponents\n";
          return kExitUsage;
        }
        const fourth::MeijerParams mp{{bs[0], bs[1], bs[2], bs[3]}};
        const auto u = fourth::frobenius_solution(mp, fo_root, fo_order);
        // a truncated solution leaves exactly one residual term past the
        // truncation; every determined order must vanish
        const auto res = fourth::meijer_residual(mp, u);
        bool zero_through_order = true;
        for (int n = 0; n <= res.truncation(); ++n)
          if (res.coeffs[n] != 0 && res.exponent(n) <= mp.b[fo_root] + fo_order)
            zero_through_order = false;
        output.emit_json(json{{"series", io::theta_series_to_json(u)},
                              {"residual_zero_through_order", zero_through_order}});
        return kExitOk;
      }
      if (!fo_apply_file.empty()) {
        const auto u = io::theta_series_from_json(load_json_file(fo_apply_file));
        const auto out = fourth::apply_fourth_order(params, u, false);
        output.emit_json(json{{"mu", to_string(params.mu)},
                              {"nu", to_string(params.nu)},
                              {"series", io::theta_series_to_json(out)}});
        return kExitOk;
      }
      // default action: the eigenfunction scan
      (void)fo_scan;
      const auto eigs = fourth::polynomial_eigenfunctions(params, gauge, fo_maxdeg);
      output.emit_json(json{{"mu", to_string(params.mu)},
                            {"nu", to_string(params.nu)},
                            {"gauge", fo_gauge},
                            {"maxdeg", fo_maxdeg},
                            {"count", eigs.size()},
                            {"eigenfunctions", io::eigenfunctions_to_json(eigs)}});
      return kExitOk;
    }

    if (*cone_cmd) {
      const auto c1 = io::cone_from_json(load_json_file(cc_c1));
      cones::RationalCone c2;
      if (!cc_beta.empty()) {
        c2.dim = c1.dim;
        c2.generators.push_back(parse_rational_list(cc_beta));
      } else if (!cc_c2.empty()) {
        c2 = io::cone_from_json(load_json_file(cc_c2));
      } else {
        std::cerr << "cone-check: provide --beta or --c2\n";
        return kExitUsage;
      }
      const auto cert = cones::intersect_trivially(c1, c2);
      output.emit_json(io::certificate_to_json(cert));
      return kExitOk;
    }

    if (*catalog_cmd) {
      if (!ct_family.empty()) {
        output.emit_json(io::catalog_entry_to_json(catalog::query(ct_family)));
      } else {
        json j = json::array();
        for (const auto& e : catalog::all_entries()) j.push_back(io::catalog_entry_to_json(e));
        output.emit_json(json{{"families", j}});
      }
      return kExitOk;
    }

    if (*verify) {
      const auto results = acceptance::run_all(vf_only);
      for (const auto& r : results)
        std::printf("%s\n", acceptance::format_line(r).c_str());
      const bool ok = acceptance::all_passed(results);
      std::printf("%s\n", ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
      return ok ? kExitOk : kExitNumerical;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
