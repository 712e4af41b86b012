#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "minrep/rational.hpp"

namespace minrep::symb {

/// Exact radial function on the (ell, m) sector:
///     sum_i  c_i * r^{s_i} * exp(-c r^a)
/// with Gaussian-rational coefficients and rational exponents.  One common
/// exponential factor per function; addition requires matching factors.
class RadialFunction {
 public:
  RadialFunction(int ell, int m, Rational exp_c, Rational exp_a);

  static RadialFunction zero(int ell, int m, Rational exp_c, Rational exp_a);
  static RadialFunction monomial(int ell, int m, const Rational& exponent,
                                 const GaussianRational& coeff, const Rational& exp_c,
                                 const Rational& exp_a);

  int ell() const { return ell_; }
  int m() const { return m_; }
  const Rational& exp_c() const { return exp_c_; }
  const Rational& exp_a() const { return exp_a_; }
  const std::map<Rational, GaussianRational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  /// True when every exponent s satisfies s >= ell and (s - ell)/a in Z>=0.
  bool smooth_at_origin() const;

  void add_term(const Rational& exponent, const GaussianRational& coeff);

  RadialFunction& operator+=(const RadialFunction& other);
  RadialFunction& operator-=(const RadialFunction& other);
  friend RadialFunction operator+(RadialFunction a, const RadialFunction& b) { return a += b; }
  friend RadialFunction operator-(RadialFunction a, const RadialFunction& b) { return a -= b; }
  RadialFunction scaled(const GaussianRational& c) const;
  /// Multiplication by r^p; throws std::domain_error when p < 0 would push a
  /// smooth-at-origin function below the r^ell floor.
  RadialFunction power_multiplied(const Rational& p) const;

  bool operator==(const RadialFunction& other) const;

  std::string str() const;

 private:
  int ell_;
  int m_;
  Rational exp_c_;  // c in exp(-c r^a), c >= 0
  Rational exp_a_;  // a > 0
  std::map<Rational, GaussianRational> terms_;
};

// --- differential operators -------------------------------------------------

struct OperatorSpec;

struct OpEuler {};             ///< E = r d/dr on radial profiles
struct OpRadialLaplacian {};   ///< Delta_ell = d^2/dr^2 + (m-1)/r d/dr - ell(ell+m-2)/r^2
struct OpPowerMult {
  Rational p;
};
struct OpScalar {
  GaussianRational c;
};
struct OpSum {
  std::vector<OperatorSpec> parts;
};
struct OpCompose {
  std::vector<OperatorSpec> factors;  ///< rightmost factor acts first
};
struct OpCommutator {
  std::vector<OperatorSpec> ab;  ///< exactly two entries: [ab[0], ab[1]]
};

struct OperatorSpec {
  std::variant<OpEuler, OpRadialLaplacian, OpPowerMult, OpScalar, OpSum, OpCompose, OpCommutator>
      node;
};

OperatorSpec op_euler();
OperatorSpec op_laplacian();
OperatorSpec op_power(Rational p);
OperatorSpec op_scalar(GaussianRational c);
OperatorSpec op_sum(std::vector<OperatorSpec> parts);
OperatorSpec op_compose(std::vector<OperatorSpec> factors);
OperatorSpec op_commutator(OperatorSpec a, OperatorSpec b);
OperatorSpec op_scale(const GaussianRational& c, OperatorSpec inner);

/// Exact application; every rule is termwise on the monomial-times-exponential
/// lattice.
RadialFunction apply(const OperatorSpec& op, const RadialFunction& f);

// --- sl2 triples of differential operators ----------------------------------

enum class TripleKind { Weil, SoM12, Deformed };

struct Sl2Triple {
  OperatorSpec h, e, f;
  TripleKind kind;
  Rational a;  ///< deformation parameter (2 for Weil, 1 for SoM12)
  int m;
  std::string label;
};

/// h = (2/a)E + (m+a-2)/a,  e = (i/a) r^a,  f = (i/a) r^{2-a} Delta.
Sl2Triple deformed_triple(const Rational& a, int m);
/// a = 2 specialization: h = E + m/2, e = (i/2) r^2, f = (i/2) Delta.
Sl2Triple weil_triple(int m);
/// h = 2E + m - 1, e = 2 i r, f = (i/2) r Delta  (the a = 1 triple rescaled
/// by e -> 2e, f -> f/2).
Sl2Triple so_m12_triple(int m);

struct RelationResidual {
  std::string relation;       // "[h,e]-2e" etc.
  RadialFunction residual;    // exact; must be identically zero
  bool zero;
};

struct CommutatorReport {
  bool pass = true;
  std::vector<RelationResidual> residuals;  // one per (relation, test function)
};

/// Applies [h,e]-2e, [h,f]+2f, [e,f]-h to every test function; PASS iff all
/// residuals vanish identically.
CommutatorReport commutator_check(const Sl2Triple& triple,
                                  const std::vector<RadialFunction>& test_set);

/// Standard lattice test set: r^{ell + a j} exp(-c r^a), j = 0..jmax.
std::vector<RadialFunction> lattice_test_set(const Rational& a, int m, int ell, int jmax,
                                             const Rational& exp_c);

struct EigencheckResult {
  Rational eigenvalue;      // -(k + (nu+1)/2)
  Rational nu;              // (2 ell + m - 2)/a
  RadialFunction residual;  // D_a g_k - lambda g_k, exact
  bool zero;
};

/// Candidate eigenfunction g_k = r^ell L_k^nu((2/a) r^a) e^{-r^a/a} under
/// D_a = (1/(2a)) (r^{2-a} Delta_ell - r^a); the residual must vanish exactly.
EigencheckResult eigencheck_deformed(const Rational& a, int m, int ell, int k);

/// The deformed operator itself, as an OperatorSpec.
OperatorSpec deformed_generator(const Rational& a, int m);

/// Exact eigenfunction g_k (shared with the checks above).
RadialFunction deformed_eigenfunction(const Rational& a, int m, int ell, int k);

// --- exact 2x2 sl2 matrices over Q(i) ----------------------------------------

struct Mat2 {
  GaussianRational a, b, c, d;  // row-major [[a, b], [c, d]]

  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2 scaled(const GaussianRational& s) const;
  GaussianRational det() const;
  Mat2 inverse() const;
  bool operator==(const Mat2& o) const;
  std::string str() const;
};

Mat2 mat2_commutator(const Mat2& x, const Mat2& y);

struct Sl2Basis {
  Mat2 h, e, f, k, c1;
};

/// h, e, f the standard basis; k = i(-e+f); c1 the Cayley element.
Sl2Basis standard_sl2_basis();

struct MatrixCheckReport {
  bool pass = true;
  std::vector<std::pair<std::string, bool>> checks;
};

/// Bracket relations, Ad(c1) k = h, the four-factor factorization of c1, and
/// exp(-(t/2)k)|_{t = i pi} = [[0,-1],[1,0]] via the order-4 rotation
/// structure k^2 = 1 (no series involved).
MatrixCheckReport matrix_sl2_checks(const Sl2Basis& basis);

}  // namespace minrep::symb
