#include "minrep/quadrature.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "minrep/specfun.hpp"

namespace minrep::quad {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, tracking the first
// components of the eigenvectors (Golub-Welsch).  d: diagonal, e: subdiagonal
// (e[n-1] unused), z: on input the weight seed, on output the first-row
// eigenvector components.  Eigenvalues come back sorted ascending.
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = int(d.size());
  if (n == 1) return;
  e[n - 1] = 0.0;
  const double prec = 2.2204460492503131e-16;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m;
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= prec * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("imtqlx: too many iterations");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  // insertion sort by node
  for (int i = 1; i < n; ++i) {
    double dk = d[i], zk = z[i];
    int j = i - 1;
    while (j >= 0 && d[j] > dk) {
      d[j + 1] = d[j];
      z[j + 1] = z[j];
      --j;
    }
    d[j + 1] = dk;
    z[j + 1] = zk;
  }
}

Rule golub_welsch(std::vector<double> diag, std::vector<double> sub, double mu0) {
  const int n = int(diag.size());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  imtqlx(diag, sub, z);
  Rule rule;
  rule.nodes = std::move(diag);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * z[i] * z[i];
  return rule;
}

void put_f64(std::ofstream& os, double v) {
  unsigned char buf[8];
  std::memcpy(buf, &v, 8);
  os.write(reinterpret_cast<const char*>(buf), 8);
}

void put_u32(std::ofstream& os, std::uint32_t v) {
  unsigned char buf[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(buf), 4);
}

bool get_f64(std::ifstream& is, double& v) {
  char buf[8];
  if (!is.read(buf, 8)) return false;
  std::memcpy(&v, buf, 8);
  return true;
}

bool get_u32(std::ifstream& is, std::uint32_t& v) {
  unsigned char buf[4];
  if (!is.read(reinterpret_cast<char*>(buf), 4)) return false;
  v = std::uint32_t(buf[0]) | (std::uint32_t(buf[1]) << 8) | (std::uint32_t(buf[2]) << 16) |
      (std::uint32_t(buf[3]) << 24);
  return true;
}

static_assert(std::endian::native == std::endian::little,
              "node-table cache assumes a little-endian host");

std::mutex g_cache_mutex;

}  // namespace

Rule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::domain_error("gauss_laguerre: n must be >= 1");
  if (alpha <= -1.0) throw std::domain_error("gauss_laguerre: alpha must be > -1");
  std::vector<double> diag(n), sub(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = 2.0 * i + alpha + 1.0;
    sub[i] = (i + 1 < n) ? std::sqrt((i + 1.0) * (i + 1.0 + alpha)) : 0.0;
  }
  return golub_welsch(std::move(diag), std::move(sub), specfun::gamma_fn(alpha + 1.0));
}

Rule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
  std::vector<double> diag(n, 0.0), sub(n);
  for (int i = 0; i + 1 < n; ++i) {
    double k = i + 1.0;
    sub[i] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  sub[n - 1] = 0.0;
  Rule rule = golub_welsch(std::move(diag), std::move(sub), 2.0);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

Rule gauss_hermite(int n) {
  if (n < 1) throw std::domain_error("gauss_hermite: n must be >= 1");
  std::vector<double> diag(n, 0.0), sub(n);
  for (int i = 0; i + 1 < n; ++i) sub[i] = std::sqrt(0.5 * (i + 1.0));
  sub[n - 1] = 0.0;
  return golub_welsch(std::move(diag), std::move(sub), std::sqrt(3.141592653589793238462643));
}

Rule composite_legendre(int per_panel, int panels, double a, double b) {
  if (panels < 1) throw std::domain_error("composite_legendre: panels must be >= 1");
  Rule base = gauss_legendre(per_panel, 0.0, 1.0);
  Rule rule;
  rule.nodes.reserve(std::size_t(per_panel) * panels);
  rule.weights.reserve(std::size_t(per_panel) * panels);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * h;
    for (int i = 0; i < per_panel; ++i) {
      rule.nodes.push_back(left + h * base.nodes[i]);
      rule.weights.push_back(h * base.weights[i]);
    }
  }
  return rule;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("MINREP_CACHE")) return std::filesystem::path(env);
  return std::filesystem::temp_directory_path() / "minrep-cache";
}

std::filesystem::path cache_file_path(const std::filesystem::path& dir, const SectorKey& key) {
  char name[128];
  std::snprintf(name, sizeof(name), "nodes_a%.17g_m%u_l%u_N%u.tbl", key.a, key.m, key.ell, key.n);
  return dir / name;
}

void write_table(const std::filesystem::path& file, const SectorKey& key, const Rule& rule) {
  if (rule.size() != key.n) throw std::invalid_argument("write_table: size mismatch");
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("write_table: cannot open " + tmp.string());
    put_f64(os, key.a);
    put_u32(os, key.m);
    put_u32(os, key.ell);
    put_u32(os, key.n);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      put_f64(os, rule.nodes[i]);
      put_f64(os, rule.weights[i]);
    }
  }
  std::filesystem::rename(tmp, file);
}

std::optional<Rule> read_table(const std::filesystem::path& file, const SectorKey& key) {
  std::ifstream is(file, std::ios::binary);
  if (!is) return std::nullopt;
  double a;
  std::uint32_t m, ell, n;
  if (!get_f64(is, a) || !get_u32(is, m) || !get_u32(is, ell) || !get_u32(is, n))
    return std::nullopt;
  if (a != key.a || m != key.m || ell != key.ell || n != key.n) return std::nullopt;
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (!get_f64(is, rule.nodes[i]) || !get_f64(is, rule.weights[i])) return std::nullopt;
  return rule;
}

Rule cached_rule(const std::filesystem::path& dir, const SectorKey& key,
                 const std::function<Rule()>& compute) {
  const auto file = cache_file_path(dir, key);
  if (auto hit = read_table(file, key)) return *hit;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  if (auto hit = read_table(file, key)) return *hit;  // lost the race, table is there
  Rule rule = compute();
  write_table(file, key, rule);
  return rule;
}

}  // namespace minrep::quad
