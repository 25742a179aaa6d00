#ifndef COXINV_FIELD_HPP
#define COXINV_FIELD_HPP

#include <gmpxx.h>

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxinv {

using Rational = mpq_class;

// Dense univariate polynomial over Q, coefficients low degree first.
// Normal form has no trailing zero coefficients; the zero polynomial is {}.
using Poly = std::vector<Rational>;

int poly_deg(const Poly& p);
Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_neg(Poly p);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& p);
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_monic(Poly p);
Poly poly_gcd(Poly a, Poly b);
// Exact square root of a monic polynomial, if it is a perfect square.
std::optional<Poly> poly_sqrt(const Poly& q);
std::string poly_to_string(const Poly& p, const std::string& var = "x");

// Number of distinct real roots of p in the half-open interval (a, b].
// Requires p(a) != 0 and p(b) != 0.
int sturm_count(const Poly& p, const Rational& a, const Rational& b);

// Isolating intervals (lo, hi] for all distinct real roots of a squarefree p,
// searched within [-bound, bound].
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p,
                                                              const Rational& bound);

// D_n with D_n(2 cos t) = 2 cos(n t):  D_0 = 2, D_1 = x, D_{n+1} = x D_n - D_{n-1}.
Poly two_cos_multiple_angle(int n);

// Minimal polynomial of 2 cos(2 pi / n) over Q (degree phi(n)/2 for n >= 3).
Poly real_cyclotomic(int n);

// Trial factorization for monic integer polynomials of desk-scale degree.
// Searches for a monic integer factor through the numerically located real
// roots; every factor of a monic integer polynomial shows up that way.
bool is_irreducible_desk(const Poly& p);

// Minimal polynomial of 2 cos(pi / m) over Q, m >= 3, following the factor
// split of the degree-m polynomial with roots 2 cos((2k+1) pi / m).
Poly minpoly_2cos(int m);

enum class FieldKind { rational, quadratic_sqrt5, cos_extension };

class invalid_operand_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact real field Q(gamma), gamma algebraic with all-real conjugates.
// Instances are interned and immutable; Scalars hold a plain pointer.
// The chosen real embedding takes gamma to the largest root of its minimal
// polynomial, which is 2 cos(pi/m) for the cos extensions.
class Field {
 public:
  static const Field* rationals();
  // Q(2 cos(pi/m)); m = 3 collapses to a degree-1 field, m = 5 is Q(sqrt 5).
  static const Field* cos_extension(int m);

  FieldKind kind() const { return kind_; }
  int cos_m() const { return m_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const Poly& minpoly() const { return minpoly_; }
  std::string description() const;

  // Exact sign of p(gamma), p given by its coefficient vector (len <= degree).
  int sign_at_generator(const std::vector<Rational>& coeffs) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(FieldKind kind, int m, Poly minpoly);

  FieldKind kind_;
  int m_;
  Poly minpoly_;
  mutable std::mutex iso_mu_;
  mutable Rational iso_lo_, iso_hi_;  // bracket with exactly one root (gamma)

  void refine_isolating_interval() const;
};

// Element of Q(gamma): the reduced residue polynomial in gamma.
class Scalar {
 public:
  Scalar() : Scalar(Rational(0)) {}
  explicit Scalar(Rational q);
  Scalar(long n) : Scalar(Rational(n)) {}
  Scalar(const Field* f, std::vector<Rational> coeffs);

  static Scalar generator(const Field* f);
  static Scalar zero(const Field* f);
  static Scalar one(const Field* f);

  const Field* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  // The value as a rational; requires all generator coefficients to vanish.
  Rational rational_value() const;
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Deterministic total order on representations (not the real order).
  static bool lex_less(const Scalar& a, const Scalar& b);

  std::string to_string(const std::string& var = "g") const;

 private:
  const Field* field_;
  std::vector<Rational> c_;  // size == field->degree()

  static std::pair<Scalar, Scalar> aligned(const Scalar& a, const Scalar& b);
};

}  // namespace coxinv

#endif
