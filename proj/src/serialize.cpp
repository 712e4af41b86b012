#include "minrep/serialize.hpp"

namespace minrep::io {

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

json radial_function_to_json(const symb::RadialFunction& f) {
  json terms = json::array();
  for (const auto& [s, c] : f.terms()) {
    terms.push_back({{"coeff", {{"re", rational_to_json(c.re)}, {"im", rational_to_json(c.im)}}},
                     {"exponent", rational_to_json(s)}});
  }
  return {{"terms", terms},
          {"expFactor", {{"c", rational_to_json(f.exp_c())}, {"a", rational_to_json(f.exp_a())}}},
          {"ell", f.ell()},
          {"m", f.m()}};
}

symb::RadialFunction radial_function_from_json(const json& j) {
  symb::RadialFunction f(j.at("ell").get<int>(), j.at("m").get<int>(),
                         rational_from_json(j.at("expFactor").at("c")),
                         rational_from_json(j.at("expFactor").at("a")));
  for (const auto& t : j.at("terms")) {
    f.add_term(rational_from_json(t.at("exponent")),
               GaussianRational(rational_from_json(t.at("coeff").at("re")),
                                rational_from_json(t.at("coeff").at("im"))));
  }
  return f;
}

json commutator_report_to_json(const symb::CommutatorReport& report) {
  json residuals = json::array();
  for (const auto& r : report.residuals) {
    residuals.push_back({{"relation", r.relation},
                         {"zero", r.zero},
                         {"residual", radial_function_to_json(r.residual)}});
  }
  return {{"pass", report.pass}, {"residuals", residuals}};
}

json matrix_report_to_json(const symb::MatrixCheckReport& report) {
  json checks = json::array();
  for (const auto& [name, ok] : report.checks) checks.push_back({{"check", name}, {"pass", ok}});
  return {{"pass", report.pass}, {"checks", checks}};
}

json cone_to_json(const cones::RationalCone& cone) {
  json gens = json::array();
  for (const auto& g : cone.generators) {
    json row = json::array();
    for (const auto& x : g) row.push_back(rational_to_json(x));
    gens.push_back(row);
  }
  return {{"dim", cone.dim}, {"generators", gens}};
}

cones::RationalCone cone_from_json(const json& j) {
  cones::RationalCone cone;
  cone.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("generators")) {
    cones::Vec g;
    for (const auto& x : row) g.push_back(rational_from_json(x));
    cone.generators.push_back(std::move(g));
  }
  cone.validate();
  return cone;
}

json certificate_to_json(const cones::IntersectionCertificate& cert) {
  json out{{"trivial", cert.trivial}, {"verified", cert.verified}, {"note", cert.note}};
  if (cert.witness) {
    json w = json::array();
    for (const auto& x : *cert.witness) w.push_back(rational_to_json(x));
    out["witness"] = w;
  }
  if (cert.functional) {
    json f = json::array();
    for (const auto& x : *cert.functional) f.push_back(rational_to_json(x));
    out["functional"] = f;
  }
  return out;
}

json theta_series_to_json(const fourth::ThetaSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(rational_to_json(c));
  return {{"sigma", rational_to_json(s.sigma)},
          {"step", s.step},
          {"coeffs", coeffs},
          {"N", s.truncation()}};
}

fourth::ThetaSeries theta_series_from_json(const json& j) {
  fourth::ThetaSeries s;
  s.sigma = rational_from_json(j.at("sigma"));
  s.step = j.value("step", 2);
  for (const auto& c : j.at("coeffs")) s.coeffs.push_back(rational_from_json(c));
  return s;
}

json eigenfunctions_to_json(const std::vector<fourth::PolyEigenfunction>& eigs) {
  json out = json::array();
  for (const auto& e : eigs) {
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(rational_to_json(c));
    out.push_back(
        {{"degree", e.degree}, {"eigenvalue", rational_to_json(e.eigenvalue)}, {"coeffs", coeffs}});
  }
  return out;
}

json cayley_report_to_json(const bargmann::CayleyReport& report) {
  return {{"lambda", report.lambda},    {"c_mu", report.c_mu},
          {"c_F", report.c_f},          {"leakage", report.leakage},
          {"isometry_residual", report.isometry_residual}, {"pass", report.pass}};
}

json folding_report_to_json(const inversion::FoldingReport& report) {
  return {{"m", report.m},
          {"ell", report.ell},
          {"sup_error", report.sup_error},
          {"parseval_error", report.parseval_error},
          {"pass", report.pass}};
}

json probe_to_json(const inversion::IntegrabilityProbe& probe) {
  return {{"model", probe.model},
          {"box_measures", probe.box_measures},
          {"integrals", probe.integrals},
          {"growth_exponent", probe.growth_exponent},
          {"sup_estimate", probe.sup_estimate},
          {"bounded_kernel", probe.bounded_kernel},
          {"conclusive", probe.conclusive},
          {"verdict", probe.verdict}};
}

json catalog_entry_to_json(const catalog::FamilyEntry& entry) {
  return {{"family", entry.name},
          {"algebras", entry.algebras},
          {"highestWeightModule", entry.highest_weight_module},
          {"josephAnnihilator", catalog::to_string(entry.joseph)},
          {"typeAMembers", entry.type_a_members},
          {"remark", entry.remark}};
}

}  // namespace minrep::io
