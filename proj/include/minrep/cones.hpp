#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minrep/rational.hpp"

namespace minrep::cones {

using Vec = std::vector<Rational>;

/// Finitely generated cone {sum lambda_i g_i : lambda_i >= 0} in Q^n.
struct RationalCone {
  int dim = 0;
  std::vector<Vec> generators;

  void validate() const;  // nonzero generators, consistent dimension
};

/// Asymptotic support data; a single ray for minimal representations.
struct AsymptoticSupport {
  std::vector<Vec> rays;

  RationalCone as_cone(int dim) const { return RationalCone{dim, rays}; }
};

struct IntersectionCertificate {
  bool trivial = false;
  /// nonzero point in both cones (when not trivial)
  std::optional<Vec> witness;
  /// functional >= 0 on c1 generators, <= 0 on c2 generators, strict somewhere
  /// (when trivial and one exists; transverse linear subspaces admit none)
  std::optional<Vec> functional;
  bool verified = false;  ///< certificate re-checked exactly
  std::string note;
};

/// Exact verdict on C1 cap C2 = {0} via rational phase-1 simplex; always
/// returns a machine-checkable certificate when one exists.
IntersectionCertificate intersect_trivially(const RationalCone& c1, const RationalCone& c2);

/// dim H^j(R^m): binomial fast path.
int harmonic_dim(int m, int j);

/// Brute-force oracle: kernel dimension of the Laplacian on degree-j
/// monomials by exact rational elimination.
int harmonic_dim_brute(int m, int j);

// --- exact linear programming (phase-1 feasibility) ---------------------------

struct Feasibility {
  bool feasible = false;
  Vec x;  // solves A x = b, x >= 0 componentwise
};

/// Finds x >= 0 with A x = b exactly (Bland's rule, artificial variables).
Feasibility solve_feasibility(const std::vector<Vec>& a, const Vec& b);

}  // namespace minrep::cones
