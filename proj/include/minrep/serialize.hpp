#pragma once

#include <json.hpp>

#include "minrep/bargmann.hpp"
#include "minrep/catalog.hpp"
#include "minrep/cones.hpp"
#include "minrep/fourth_order.hpp"
#include "minrep/inversion.hpp"
#include "minrep/radial_symbolic.hpp"

namespace minrep::io {

using nlohmann::json;

// rationals travel as "p/q" strings
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

// {terms: [{coeff: {re, im}, exponent}], expFactor: {c, a}, ell, m}
json radial_function_to_json(const symb::RadialFunction& f);
symb::RadialFunction radial_function_from_json(const json& j);

json commutator_report_to_json(const symb::CommutatorReport& report);
json matrix_report_to_json(const symb::MatrixCheckReport& report);

// {dim, generators: [["p/q", ...], ...]}
json cone_to_json(const cones::RationalCone& cone);
cones::RationalCone cone_from_json(const json& j);
json certificate_to_json(const cones::IntersectionCertificate& cert);

// {sigma, step, coeffs: ["p/q", ...], N}
json theta_series_to_json(const fourth::ThetaSeries& s);
fourth::ThetaSeries theta_series_from_json(const json& j);
json eigenfunctions_to_json(const std::vector<fourth::PolyEigenfunction>& eigs);

// {lambda, c_mu, c_F, leakage: [...], isometry_residual}
json cayley_report_to_json(const bargmann::CayleyReport& report);

json folding_report_to_json(const inversion::FoldingReport& report);
json probe_to_json(const inversion::IntegrabilityProbe& probe);

json catalog_entry_to_json(const catalog::FamilyEntry& entry);

}  // namespace minrep::io
