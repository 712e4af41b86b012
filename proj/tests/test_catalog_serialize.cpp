#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minrep/catalog.hpp"
#include "minrep/serialize.hpp"

using namespace minrep;

TEST_CASE("catalog: family lists are verbatim") {
  const auto& eu = catalog::query("euclidean");
  CHECK(eu.algebras == std::vector<std::string>{"sp(k,R)", "su(k,k)", "so*(4k)", "so(2,k)",
                                                "e7(-25)"});
  CHECK(eu.highest_weight_module);
  CHECK(eu.joseph == catalog::JosephAnnihilator::Yes);

  const auto& qu = catalog::query("quaternionic");
  CHECK(qu.algebras == std::vector<std::string>{"sp(k,k)", "su*(4k)", "so(k,1)"});
  CHECK(qu.joseph == catalog::JosephAnnihilator::No);
  CHECK_FALSE(qu.highest_weight_module);

  const auto& sp = catalog::query("split");
  CHECK(sp.algebras ==
        std::vector<std::string>{"sl(2k,R)", "so(2k,2k)", "so(p+1,q+1)", "e7(7)"});
  CHECK(sp.type_a_members == std::vector<std::string>{"sl(2k,R)"});

  const auto& cx = catalog::query("complex");
  CHECK(cx.algebras.size() == 5);

  CHECK_THROWS_AS(catalog::query("octonionic"), std::invalid_argument);
  CHECK(catalog::all_entries().size() == 4);
}

TEST_CASE("catalog: entries serialize and are immutable statics") {
  const auto j = io::catalog_entry_to_json(catalog::query(catalog::Family::Euclidean));
  CHECK(j.at("family") == "euclidean");
  CHECK(j.at("highestWeightModule") == true);
  CHECK(j.at("josephAnnihilator") == "yes");
  // round trip through text
  const auto text = j.dump();
  const auto back = io::json::parse(text);
  CHECK(back == j);
}

TEST_CASE("serialize: radial function round trip") {
  symb::RadialFunction f(1, 3, Rational(1, 2), Rational(2));
  f.add_term(Rational(3), GaussianRational(Rational(2, 3), Rational(-1, 7)));
  f.add_term(Rational(5, 2), GaussianRational(Rational(4)));
  const auto j = io::radial_function_to_json(f);
  const auto g = io::radial_function_from_json(j);
  CHECK(f == g);
  CHECK(j.at("expFactor").at("c") == "1/2");
  CHECK(j.at("ell") == 1);
}

TEST_CASE("serialize: cones round trip with p/q strings") {
  cones::RationalCone cone{2, {{Rational(1), Rational(-2, 3)}, {Rational(0), Rational(5)}}};
  const auto j = io::cone_to_json(cone);
  CHECK(j.at("generators")[0][1] == "-2/3");
  const auto back = io::cone_from_json(j);
  CHECK(back.dim == 2);
  CHECK(back.generators == cone.generators);
  const auto cert = cones::intersect_trivially(cone, {2, {{Rational(1), Rational(0)}}});
  const auto cj = io::certificate_to_json(cert);
  CHECK(cj.contains("trivial"));
  CHECK(cj.contains("note"));
}

TEST_CASE("serialize: theta series round trip") {
  fourth::ThetaSeries s{Rational(-1, 2), 1, {Rational(1), Rational(0), Rational(7, 5)}};
  const auto j = io::theta_series_to_json(s);
  CHECK(j.at("N") == 2);
  const auto back = io::theta_series_from_json(j);
  CHECK(back.sigma == s.sigma);
  CHECK(back.step == 1);
  CHECK(back.coeffs == s.coeffs);
}

TEST_CASE("serialize: commutator report carries residual functions") {
  const auto triple = symb::weil_triple(3);
  const auto set = symb::lattice_test_set(Rational(2), 3, 0, 2, Rational(1, 2));
  const auto report = symb::commutator_check(triple, set);
  const auto j = io::commutator_report_to_json(report);
  CHECK(j.at("pass") == true);
  CHECK(j.at("residuals").size() == set.size() * 3);
}
