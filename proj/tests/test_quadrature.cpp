#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>

#include "minrep/quadrature.hpp"
#include "minrep/specfun.hpp"

using namespace minrep;

TEST_CASE("gauss_laguerre: integrates moments exactly") {
  for (double alpha : {0.0, 0.5, 2.0, -0.5}) {
    const auto rule = quad::gauss_laguerre(20, alpha);
    // int_0^inf u^j u^alpha e^-u du = Gamma(alpha+j+1), exact for j <= 39
    for (int j = 0; j <= 20; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i)
        s += rule.weights[i] * std::pow(rule.nodes[i], j);
      const double want = specfun::gamma_fn(alpha + j + 1.0);
      CHECK(std::fabs(s - want) / want <= 1e-12);
    }
  }
}

TEST_CASE("gauss_laguerre: large rule stays finite and ordered") {
  const auto rule = quad::gauss_laguerre(200, 1.0);
  REQUIRE(rule.size() == 200);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    CHECK(std::isfinite(rule.nodes[i]));
    CHECK(rule.weights[i] >= 0.0);
    if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i];
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));  // Gamma(2) = 1
}

TEST_CASE("gauss_legendre: polynomial exactness and interval mapping") {
  const auto rule = quad::gauss_legendre(12, -1.0, 3.0);
  for (int j = 0; j <= 23; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
      s += rule.weights[i] * std::pow(rule.nodes[i], j);
    const double want = (std::pow(3.0, j + 1) - std::pow(-1.0, j + 1)) / (j + 1);
    CHECK(std::fabs(s - want) <= 1e-11 * std::max(1.0, std::fabs(want)));
  }
}

TEST_CASE("gauss_hermite: even moments of the Gaussian") {
  const auto rule = quad::gauss_hermite(40);
  double m0 = 0.0, m2 = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    m0 += rule.weights[i];
    m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    m4 += rule.weights[i] * std::pow(rule.nodes[i], 4);
  }
  const double sp = std::sqrt(M_PI);
  CHECK(m0 == doctest::Approx(sp).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(0.5 * sp).epsilon(1e-13));
  CHECK(m4 == doctest::Approx(0.75 * sp).epsilon(1e-13));
}

TEST_CASE("composite_legendre: resolves an oscillatory integral") {
  // int_0^10 cos(8 s) ds = sin(80)/8
  const auto rule = quad::composite_legendre(10, 40, 0.0, 10.0);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::cos(8.0 * rule.nodes[i]);
  CHECK(s == doctest::Approx(std::sin(80.0) / 8.0).epsilon(1e-12));
}

TEST_CASE("node-table cache: round trip and key checking") {
  const auto dir = std::filesystem::temp_directory_path() / "minrep-test-cache";
  std::filesystem::remove_all(dir);
  const quad::SectorKey key{1.5, 3, 2, 24};
  int builds = 0;
  auto compute = [&]() {
    ++builds;
    return quad::gauss_laguerre(int(key.n), 2.0);
  };
  const auto r1 = quad::cached_rule(dir, key, compute);
  const auto r2 = quad::cached_rule(dir, key, compute);
  CHECK(builds == 1);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1.nodes[i] == r2.nodes[i]);  // bit-identical through the cache
    CHECK(r1.weights[i] == r2.weights[i]);
  }
  // a different key must not alias the same file
  const quad::SectorKey other{1.5, 3, 2, 32};
  const auto r3 = quad::cached_rule(dir, other, [&]() {
    ++builds;
    return quad::gauss_laguerre(int(other.n), 2.0);
  });
  CHECK(builds == 2);
  CHECK(r3.size() == 32);
  // corrupt header is rejected, table rebuilt
  const auto file = quad::cache_file_path(dir, key);
  CHECK(quad::read_table(file, other) == std::nullopt);
  std::filesystem::remove_all(dir);
}
