#include "minrep/radial_symbolic.hpp"

#include <sstream>
#include <stdexcept>

#include "minrep/specfun.hpp"

namespace minrep::symb {

// --- RadialFunction ----------------------------------------------------------

RadialFunction::RadialFunction(int ell, int m, Rational exp_c, Rational exp_a)
    : ell_(ell), m_(m), exp_c_(std::move(exp_c)), exp_a_(std::move(exp_a)) {
  if (ell_ < 0) throw std::invalid_argument("RadialFunction: ell must be >= 0");
  if (m_ < 1) throw std::invalid_argument("RadialFunction: m must be >= 1");
  if (exp_c_ < 0) throw std::invalid_argument("RadialFunction: exp factor c must be >= 0");
  if (exp_a_ <= 0) throw std::invalid_argument("RadialFunction: exp power a must be > 0");
}

RadialFunction RadialFunction::zero(int ell, int m, Rational exp_c, Rational exp_a) {
  return RadialFunction(ell, m, std::move(exp_c), std::move(exp_a));
}

RadialFunction RadialFunction::monomial(int ell, int m, const Rational& exponent,
                                        const GaussianRational& coeff, const Rational& exp_c,
                                        const Rational& exp_a) {
  RadialFunction f(ell, m, exp_c, exp_a);
  f.add_term(exponent, coeff);
  return f;
}

bool RadialFunction::smooth_at_origin() const {
  for (const auto& [s, c] : terms_) {
    if (s < ell_) return false;
    const Rational q = (s - Rational(ell_)) / exp_a_;
    if (!is_integer(q) || q < 0) return false;
  }
  return true;
}

void RadialFunction::add_term(const Rational& exponent, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void require_compatible(const RadialFunction& a, const RadialFunction& b) {
  if (a.ell() != b.ell() || a.m() != b.m())
    throw std::invalid_argument("RadialFunction: sector mismatch");
  if (a.exp_a() != b.exp_a())
    throw std::invalid_argument("RadialFunction: exponential power mismatch");
  // Zero functions combine with anything; otherwise the c's must agree.
  if (!a.is_zero() && !b.is_zero() && a.exp_c() != b.exp_c())
    throw std::invalid_argument("RadialFunction: exponential factor mismatch");
}
}  // namespace

RadialFunction& RadialFunction::operator+=(const RadialFunction& other) {
  require_compatible(*this, other);
  if (is_zero()) exp_c_ = other.exp_c();
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

RadialFunction& RadialFunction::operator-=(const RadialFunction& other) {
  require_compatible(*this, other);
  if (is_zero()) exp_c_ = other.exp_c();
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

RadialFunction RadialFunction::scaled(const GaussianRational& c) const {
  RadialFunction out(ell_, m_, exp_c_, exp_a_);
  if (c.is_zero()) return out;
  for (const auto& [s, coeff] : terms_) out.terms_.emplace(s, coeff * c);
  return out;
}

RadialFunction RadialFunction::power_multiplied(const Rational& p) const {
  if (p < 0 && smooth_at_origin()) {
    for (const auto& [s, c] : terms_) {
      if (s + p < ell_)
        throw std::domain_error(
            "power_multiplied: r^p with p < 0 would break smoothness at the origin "
            "(exponent would drop below ell)");
    }
  }
  RadialFunction out(ell_, m_, exp_c_, exp_a_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s + p, c);
  return out;
}

bool RadialFunction::operator==(const RadialFunction& other) const {
  if (ell_ != other.ell_ || m_ != other.m_ || exp_a_ != other.exp_a_) return false;
  if (!is_zero() && !other.is_zero() && exp_c_ != other.exp_c_) return false;
  return terms_ == other.terms_;
}

std::string RadialFunction::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")*r^(" << to_string(s) << ")";
  }
  if (exp_c_ != 0)
    os << " * exp(-(" << to_string(exp_c_) << ")*r^(" << to_string(exp_a_) << "))";
  return os.str();
}

// --- operators ---------------------------------------------------------------

OperatorSpec op_euler() { return {OpEuler{}}; }
OperatorSpec op_laplacian() { return {OpRadialLaplacian{}}; }
OperatorSpec op_power(Rational p) { return {OpPowerMult{std::move(p)}}; }
OperatorSpec op_scalar(GaussianRational c) { return {OpScalar{std::move(c)}}; }
OperatorSpec op_sum(std::vector<OperatorSpec> parts) { return {OpSum{std::move(parts)}}; }
OperatorSpec op_compose(std::vector<OperatorSpec> factors) {
  return {OpCompose{std::move(factors)}};
}
OperatorSpec op_commutator(OperatorSpec a, OperatorSpec b) {
  return {OpCommutator{{std::move(a), std::move(b)}}};
}
OperatorSpec op_scale(const GaussianRational& c, OperatorSpec inner) {
  return op_compose({op_scalar(c), std::move(inner)});
}

namespace {

RadialFunction apply_euler(const RadialFunction& f) {
  // E(r^s e^{-c r^a}) = s r^s - c a r^{s+a}, times the factor
  RadialFunction out(f.ell(), f.m(), f.exp_c(), f.exp_a());
  const Rational ca = f.exp_c() * f.exp_a();
  for (const auto& [s, coeff] : f.terms()) {
    out.add_term(s, coeff * GaussianRational(s));
    if (ca != 0) out.add_term(s + f.exp_a(), coeff * GaussianRational(-ca));
  }
  return out;
}

RadialFunction apply_laplacian(const RadialFunction& f) {
  // Delta_ell(r^s e^{-c r^a}) =
  //   [s(s+m-2) - ell(ell+m-2)] r^{s-2}
  //   - c a (2s + a + m - 2)    r^{s+a-2}
  //   + c^2 a^2                 r^{s+2a-2},   all times e^{-c r^a}
  RadialFunction out(f.ell(), f.m(), f.exp_c(), f.exp_a());
  const Rational m(f.m()), ell(f.ell());
  const Rational c = f.exp_c(), a = f.exp_a();
  const Rational ca = c * a;
  const Rational c2a2 = ca * ca;
  for (const auto& [s, coeff] : f.terms()) {
    const Rational indicial = s * (s + m - 2) - ell * (ell + m - 2);
    out.add_term(s - 2, coeff * GaussianRational(indicial));
    if (ca != 0) {
      out.add_term(s + a - 2, coeff * GaussianRational(-ca * (2 * s + a + m - 2)));
      out.add_term(s + 2 * a - 2, coeff * GaussianRational(c2a2));
    }
  }
  return out;
}

}  // namespace

RadialFunction apply(const OperatorSpec& op, const RadialFunction& f) {
  return std::visit(
      [&f](const auto& node) -> RadialFunction {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, OpEuler>) {
          return apply_euler(f);
        } else if constexpr (std::is_same_v<T, OpRadialLaplacian>) {
          return apply_laplacian(f);
        } else if constexpr (std::is_same_v<T, OpPowerMult>) {
          return f.power_multiplied(node.p);
        } else if constexpr (std::is_same_v<T, OpScalar>) {
          return f.scaled(node.c);
        } else if constexpr (std::is_same_v<T, OpSum>) {
          RadialFunction acc(f.ell(), f.m(), f.exp_c(), f.exp_a());
          for (const auto& part : node.parts) acc += apply(part, f);
          return acc;
        } else if constexpr (std::is_same_v<T, OpCompose>) {
          RadialFunction acc = f;
          for (auto it = node.factors.rbegin(); it != node.factors.rend(); ++it)
            acc = apply(*it, acc);
          return acc;
        } else {
          static_assert(std::is_same_v<T, OpCommutator>);
          const auto& a = node.ab[0];
          const auto& b = node.ab[1];
          return apply(a, apply(b, f)) - apply(b, apply(a, f));
        }
      },
      op.node);
}

// --- triples -----------------------------------------------------------------

Sl2Triple deformed_triple(const Rational& a, int m) {
  if (a <= 0) throw std::invalid_argument("deformed_triple: a must be > 0");
  const GaussianRational i_over_a(Rational(0), Rational(1) / a);
  Sl2Triple t;
  t.h = op_sum({op_scale(GaussianRational(Rational(2) / a), op_euler()),
                op_scalar(GaussianRational((Rational(m) + a - 2) / a))});
  t.e = op_scale(i_over_a, op_power(a));
  t.f = op_scale(i_over_a, op_compose({op_power(Rational(2) - a), op_laplacian()}));
  t.kind = TripleKind::Deformed;
  t.a = a;
  t.m = m;
  t.label = "deformed(a=" + to_string(a) + ", m=" + std::to_string(m) + ")";
  return t;
}

Sl2Triple weil_triple(int m) {
  Sl2Triple t = deformed_triple(Rational(2), m);
  t.kind = TripleKind::Weil;
  t.label = "weil(m=" + std::to_string(m) + ")";
  return t;
}

Sl2Triple so_m12_triple(int m) {
  Sl2Triple base = deformed_triple(Rational(1), m);
  Sl2Triple t;
  t.h = base.h;
  t.e = op_scale(GaussianRational(Rational(2)), base.e);
  t.f = op_scale(GaussianRational(Rational(1, 2)), base.f);
  t.kind = TripleKind::SoM12;
  t.a = Rational(1);
  t.m = m;
  t.label = "so(m+1,2)(m=" + std::to_string(m) + ")";
  return t;
}

CommutatorReport commutator_check(const Sl2Triple& triple,
                                  const std::vector<RadialFunction>& test_set) {
  if (test_set.empty()) throw std::invalid_argument("commutator_check: empty test set");
  CommutatorReport report;
  const OperatorSpec he = op_commutator(triple.h, triple.e);
  const OperatorSpec hf = op_commutator(triple.h, triple.f);
  const OperatorSpec ef = op_commutator(triple.e, triple.f);
  for (const auto& g : test_set) {
    if (g.m() != triple.m)
      throw std::invalid_argument("commutator_check: test function m mismatch");
    RelationResidual r1{"[h,e]-2e", apply(he, g) - apply(triple.e, g).scaled(GaussianRational(2)),
                        false};
    RelationResidual r2{"[h,f]+2f", apply(hf, g) + apply(triple.f, g).scaled(GaussianRational(2)),
                        false};
    RelationResidual r3{"[e,f]-h", apply(ef, g) - apply(triple.h, g), false};
    for (auto* r : {&r1, &r2, &r3}) {
      r->zero = r->residual.is_zero();
      if (!r->zero) report.pass = false;
    }
    report.residuals.push_back(std::move(r1));
    report.residuals.push_back(std::move(r2));
    report.residuals.push_back(std::move(r3));
  }
  return report;
}

std::vector<RadialFunction> lattice_test_set(const Rational& a, int m, int ell, int jmax,
                                             const Rational& exp_c) {
  std::vector<RadialFunction> set;
  for (int j = 0; j <= jmax; ++j) {
    set.push_back(RadialFunction::monomial(ell, m, Rational(ell) + a * j, GaussianRational(1),
                                           exp_c, a));
  }
  return set;
}

OperatorSpec deformed_generator(const Rational& a, int m) {
  (void)m;
  // D_a = (1/(2a)) (r^{2-a} Delta_ell - r^a)
  return op_scale(GaussianRational(Rational(1) / (2 * a)),
                  op_sum({op_compose({op_power(Rational(2) - a), op_laplacian()}),
                          op_scale(GaussianRational(Rational(-1)), op_power(a))}));
}

RadialFunction deformed_eigenfunction(const Rational& a, int m, int ell, int k) {
  const Rational nu = (Rational(2 * ell) + m - 2) / a;
  const auto coeffs = specfun::laguerre_coeffs(k, nu);  // polynomial in u = (2/a) r^a
  RadialFunction g(ell, m, Rational(1) / a, a);
  const Rational two_over_a = Rational(2) / a;
  Rational pw(1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    g.add_term(Rational(ell) + a * Rational(long(j)), GaussianRational(coeffs[j] * pw));
    pw *= two_over_a;
  }
  return g;
}

EigencheckResult eigencheck_deformed(const Rational& a, int m, int ell, int k) {
  if (k < 0) throw std::invalid_argument("eigencheck_deformed: k must be >= 0");
  const Rational nu = (Rational(2 * ell) + m - 2) / a;
  const Rational lambda = -(Rational(k) + (nu + 1) / 2);
  const RadialFunction g = deformed_eigenfunction(a, m, ell, k);
  const RadialFunction dg = apply(deformed_generator(a, m), g);
  EigencheckResult out{lambda, nu, dg - g.scaled(GaussianRational(lambda)), false};
  out.zero = out.residual.is_zero();
  return out;
}

// --- exact 2x2 matrices -------------------------------------------------------

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}
Mat2 Mat2::scaled(const GaussianRational& s) const { return {a * s, b * s, c * s, d * s}; }
GaussianRational Mat2::det() const { return a * d - b * c; }
Mat2 Mat2::inverse() const {
  const GaussianRational dt = det();
  if (dt.is_zero()) throw std::domain_error("Mat2: singular");
  const GaussianRational one(Rational(1));
  const GaussianRational inv = one / dt;
  return {d * inv, (-b) * inv, (-c) * inv, a * inv};
}
bool Mat2::operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
std::string Mat2::str() const {
  return "[[" + to_string(a) + ", " + to_string(b) + "], [" + to_string(c) + ", " + to_string(d) +
         "]]";
}

Mat2 mat2_commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

Sl2Basis standard_sl2_basis() {
  const Rational z(0), one(1);
  const GaussianRational i = GaussianRational::i();
  Sl2Basis b;
  b.h = {GaussianRational(one), GaussianRational(z), GaussianRational(z), GaussianRational(-one)};
  b.e = {GaussianRational(z), GaussianRational(one), GaussianRational(z), GaussianRational(z)};
  b.f = {GaussianRational(z), GaussianRational(z), GaussianRational(one), GaussianRational(z)};
  b.k = (b.f - b.e).scaled(i);  // i(-e+f)
  b.c1 = {GaussianRational(one), -i, (-i) * GaussianRational(Rational(1, 2)),
          GaussianRational(Rational(1, 2))};
  return b;
}

MatrixCheckReport matrix_sl2_checks(const Sl2Basis& basis) {
  MatrixCheckReport report;
  const GaussianRational two(Rational(2));
  const GaussianRational i = GaussianRational::i();

  auto record = [&report](const std::string& name, bool ok) {
    report.checks.emplace_back(name, ok);
    if (!ok) report.pass = false;
  };

  record("[h,e] = 2e", mat2_commutator(basis.h, basis.e) == basis.e.scaled(two));
  record("[h,f] = -2f", mat2_commutator(basis.h, basis.f) == basis.f.scaled(-two));
  record("[e,f] = h", mat2_commutator(basis.e, basis.f) == basis.h);
  record("k = i(-e+f)", basis.k == (basis.f - basis.e).scaled(i));
  record("det c1 = 1", basis.c1.det() == GaussianRational(Rational(1)));
  record("Ad(c1) k = h", basis.c1 * basis.k * basis.c1.inverse() == basis.h);

  // k^2 = 1 exactly, so exp(theta k) = cos(theta) + sin(theta) k; at
  // theta = -(t/2)|_{t = i pi} the rotation values are cos(pi/2) = 0 and
  // sin(-i * i pi / 2)... evaluated exactly: exp(-(i pi/2) k) = -i k.
  const Mat2 identity{GaussianRational(Rational(1)), GaussianRational(Rational(0)),
                      GaussianRational(Rational(0)), GaussianRational(Rational(1))};
  record("k^2 = 1", basis.k * basis.k == identity);
  const Mat2 w = basis.k.scaled(-i);  // cos(pi/2) * 1 + sin(pi/2) * (-i k)
  const Mat2 w_expected{GaussianRational(Rational(0)), GaussianRational(Rational(-1)),
                        GaussianRational(Rational(1)), GaussianRational(Rational(0))};
  record("exp(-(t/2)k)|_{t=i pi} = [[0,-1],[1,0]]", w == w_expected);

  // four-factor factorization of c1
  const GaussianRational z(Rational(0)), one(Rational(1));
  const Mat2 f1{two * i, z, z, one / (two * i)};
  const Mat2 f2{one, (-i) * GaussianRational(Rational(1, 2)), z, one};
  const Mat2 f3{z, -one, one, z};
  const Mat2 f4{one, i, z, one};
  record("c1 = diag(2i, 1/(2i)) * upper(-i/2) * inv * upper(i)", f1 * f2 * f3 * f4 == basis.c1);

  return report;
}

}  // namespace minrep::symb
