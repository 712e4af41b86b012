#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

namespace minrep::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Laguerre rule for weight u^alpha e^{-u} on (0, inf), alpha > -1.
Rule gauss_laguerre(int n, double alpha);

/// Gauss-Legendre rule on [a, b].
Rule gauss_legendre(int n, double a, double b);

/// Gauss-Hermite rule for weight e^{-x^2} on R.
Rule gauss_hermite(int n);

/// Composite Gauss-Legendre over [a, b] split into `panels` equal panels with
/// `per_panel` points each; the workhorse for oscillatory kernels after the
/// u = sqrt(x) substitution.
Rule composite_legendre(int per_panel, int panels, double a, double b);

// --- node-table cache -------------------------------------------------------
//
// Binary file, little-endian: header {a: f64, m: u32, ell: u32, N: u32},
// then N (node, weight) pairs of f64.

struct SectorKey {
  double a;
  std::uint32_t m;
  std::uint32_t ell;
  std::uint32_t n;
};

std::filesystem::path default_cache_dir();
std::filesystem::path cache_file_path(const std::filesystem::path& dir, const SectorKey& key);

void write_table(const std::filesystem::path& file, const SectorKey& key, const Rule& rule);
std::optional<Rule> read_table(const std::filesystem::path& file, const SectorKey& key);

/// Returns the cached rule for the key, materializing it with `compute` under
/// a single-writer contract (write to temp file, atomic rename) on first use.
Rule cached_rule(const std::filesystem::path& dir, const SectorKey& key,
                 const std::function<Rule()>& compute);

}  // namespace minrep::quad
