#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "minrep/rational.hpp"

namespace minrep::fourth {

/// Truncated exact series  x^sigma * sum_n c_n x^{step n}  with rational
/// offset and coefficients; step is 2 on the even lattice the fourth-order
/// operator preserves, 1 when unit shifts occur (Meijer residuals, gauges).
struct ThetaSeries {
  Rational sigma;
  int step = 2;
  std::vector<Rational> coeffs;

  int truncation() const { return int(coeffs.size()) - 1; }
  Rational exponent(int n) const { return sigma + Rational(step) * n; }
  bool is_zero() const;

  static ThetaSeries monomial(Rational sigma, int step, int index, Rational coeff, int truncation);
};

bool same_lattice(const ThetaSeries& a, const ThetaSeries& b);
ThetaSeries add(const ThetaSeries& a, const ThetaSeries& b);
ThetaSeries sub(const ThetaSeries& a, const ThetaSeries& b);
ThetaSeries scale(const ThetaSeries& a, const Rational& c);

/// theta = x d/dx acting diagonally: c_n -> (sigma + step n) c_n.
ThetaSeries theta_apply(const ThetaSeries& a);

/// Multiplication by x^power (power need not be a lattice multiple; it moves
/// the offset).
ThetaSeries xpow_mult(const ThetaSeries& a, int power);

struct FourthOrderParams {
  Rational mu, nu;
};

/// The fourth-order operator
///   D_{mu,nu} = x^{-2} ((th+nu)(th+mu+nu) - x^2)(th(th+mu) - x^2)
///               - (mu-nu)(mu+nu+2)/2,
/// factors applied right to left as printed.  Exact on the lattice; the
/// result lives at offset sigma - 2.  With strict = true, any nonzero
/// coefficient at an exponent below sigma raises std::domain_error (the
/// input is outside the operator's formal domain at that sigma).
ThetaSeries apply_fourth_order(const FourthOrderParams& params, const ThetaSeries& u,
                               bool strict = true);

struct MeijerParams {
  std::array<Rational, 4> b;
};

/// prod_j (theta - b_j) u — diagonal and exact.
ThetaSeries apply_meijer_lhs(const MeijerParams& params, const ThetaSeries& u);

/// prod_j (theta - b_j) u - x u (requires step 1).
ThetaSeries meijer_residual(const MeijerParams& params, const ThetaSeries& u);

/// Frobenius solution u = x^{b_root} (1 + sum c_n x^n) of the Meijer ODE,
/// solved through the stated order; throws on resonant exponents.
ThetaSeries frobenius_solution(const MeijerParams& params, int root_index, int order);

// --- gauge-conjugated polynomial eigenproblem ---------------------------------

enum class Gauge { None, ExpX, GaussHalf };

/// G^{-1} D_{mu,nu} G on step-1 polynomial series, computed exactly through
/// the substitution theta -> theta - x (ExpX) or theta -> theta - x^2
/// (GaussHalf).  Output offset is sigma - 2 (negative slots carry the formal
/// x^{-2}, x^{-1} coefficients).
ThetaSeries apply_gauged(const FourthOrderParams& params, Gauge gauge, const ThetaSeries& u);

struct PolyEigenfunction {
  int degree = 0;
  Rational eigenvalue;
  std::vector<Rational> coeffs;  // monomial basis, indices 0..degree
};

/// All polynomial eigenfunctions of the gauge-conjugated operator up to
/// maxdeg, found by exact triangular back-substitution plus the formal-domain
/// constraint rows; every hit is re-verified by direct application.  An empty
/// list is a valid (and for generic parameters the expected) result.
std::vector<PolyEigenfunction> polynomial_eigenfunctions(const FourthOrderParams& params,
                                                         Gauge gauge, int maxdeg);

struct ReductionReport {
  bool found = false;
  /// coefficients c[i][j] of sum_{i<=2, j<=jmax} c_ij x^j theta^i when found
  std::vector<std::vector<Rational>> op_coeffs;
  std::string note;
};

/// Searches (exact nullspace) for a nonzero second-order theta-operator with
/// polynomial coefficients of degree <= coeff_degree annihilating the given
/// gauged polynomial, i.e. S (p * gauge) = 0.
ReductionReport second_order_reduction_probe(Gauge gauge, const std::vector<Rational>& poly,
                                             int coeff_degree = 3);

}  // namespace minrep::fourth
