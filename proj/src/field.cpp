#include "field.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>

namespace coxinv {

namespace {

const Rational kZero(0);

int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), kZero);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), kZero);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, kZero);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

Poly poly_neg(Poly p) {
  for (auto& c : p) c = -c;
  return p;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw invalid_operand_error("polynomial division by zero");
  Poly rem = a;
  int db = poly_deg(b);
  if (poly_deg(a) < db) return {Poly{}, poly_trim(std::move(rem))};
  Poly quo(a.size() - b.size() + 1, kZero);
  for (int k = poly_deg(a) - db; k >= 0; --k) {
    Rational c = rem[k + db] / b[db];
    quo[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
  }
  return {poly_trim(std::move(quo)), poly_trim(std::move(rem))};
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1, kZero);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
  return poly_trim(std::move(r));
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Poly poly_monic(Poly p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

std::optional<Poly> poly_sqrt(const Poly& q) {
  int d = poly_deg(q);
  if (d < 0) return Poly{};
  if (d % 2 != 0 || q.back() != 1) return std::nullopt;
  int k = d / 2;
  Poly r(k + 1, kZero);
  r[k] = 1;
  // Match coefficients of q = r^2 from the top down; each step determines
  // the next lower coefficient of r linearly.
  for (int i = k - 1; i >= 0; --i) {
    Rational acc(0);
    for (int j = i + 1; j < k; ++j) {
      int other = i + k - j;
      if (other > j && other <= k) acc += r[j] * r[other] * 2;
      if (other == j) acc += r[j] * r[j];
    }
    r[i] = (q[i + k] - acc) / 2;
  }
  if (poly_mul(r, r) != q) return std::nullopt;
  return r;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly_deg(p); i >= 0; --i) {
    const Rational& c = p[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (i == 0 || !unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Signed remainder sequence for Sturm's theorem.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(poly_trim(p));
  chain.push_back(poly_derivative(p));
  while (!chain.back().empty() && poly_deg(chain.back()) > 0) {
    Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(poly_neg(std::move(r)));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int vars = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sgn(poly_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

}  // namespace

int sturm_count(const Poly& p, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p,
                                                              const Rational& bound) {
  auto chain = sturm_chain(p);
  auto count = [&chain](const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
  };
  std::vector<std::pair<Rational, Rational>> out;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    Rational m = (a + b) / 2;
    while (poly_eval(p, m) == 0) m = (a + 2 * m) / 3;  // nudge off a root
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Poly two_cos_multiple_angle(int n) {
  Poly prev{Rational(2)};          // D_0
  Poly cur{kZero, Rational(1)};    // D_1 = x
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Poly next = poly_sub(poly_mul(Poly{kZero, Rational(1)}, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly real_cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, Poly> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [](auto&& self, int k) -> Poly {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    Poly result;
    if (k == 1) {
      result = Poly{Rational(-2), Rational(1)};
    } else if (k == 2) {
      result = Poly{Rational(2), Rational(1)};
    } else {
      Poly q = poly_sub(two_cos_multiple_angle(k), Poly{Rational(2)});
      q = poly_divmod(q, Poly{Rational(-2), Rational(1)}).first;
      if (k % 2 == 0) q = poly_divmod(q, Poly{Rational(2), Rational(1)}).first;
      for (int d = 3; d < k; ++d) {
        if (k % d != 0) continue;
        Poly f = self(self, d);
        for (int rep = 0; rep < 2; ++rep) {
          auto [quo, rem] = poly_divmod(q, f);
          if (!rem.empty())
            throw std::logic_error("real_cyclotomic: inexact division");
          q = std::move(quo);
        }
      }
      auto root = poly_sqrt(q);
      if (!root) throw std::logic_error("real_cyclotomic: quotient not a square");
      result = *root;
    }
    memo.emplace(k, result);
    return result;
  };
  return compute(compute, n);
}

namespace {

std::vector<long> divisors_of(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    ds.push_back(d);
    if (d != n / d) ds.push_back(n / d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

bool is_irreducible_desk(const Poly& poly) {
  Poly p = poly_trim(poly);
  int d = poly_deg(p);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d > 16)
    throw invalid_operand_error("irreducibility search limited to degree <= 16");
  if (p.back() != 1)
    throw invalid_operand_error("irreducibility search expects a monic polynomial");
  for (const Rational& c : p)
    if (c.get_den() != 1)
      throw invalid_operand_error("irreducibility search expects integer coefficients");

  // Linear factors: rational roots of a monic integer polynomial are integer
  // divisors of the constant term.
  if (p[0] == 0) return false;
  long c0 = std::labs(p[0].get_num().get_si());
  for (long q : divisors_of(c0)) {
    if (poly_eval(p, Rational(q)) == 0) return false;
    if (poly_eval(p, Rational(-q)) == 0) return false;
  }
  if (d <= 3) return true;

  // Higher-degree factors correspond to subsets of the roots whose symmetric
  // functions are integers. Our polynomials are totally real with roots in
  // (-2, 2), so locate all roots and scan the subsets.
  Rational bound(4);
  auto intervals = isolate_real_roots(p, bound);
  if (static_cast<int>(intervals.size()) != d)
    throw std::logic_error("irreducibility search expects totally real input");
  std::vector<double> roots;
  for (auto [lo, hi] : intervals) {
    for (int it = 0; it < 80; ++it) {
      Rational mid = (lo + hi) / 2;
      if (poly_eval(p, mid) == 0) {
        lo = hi = mid;
        break;
      }
      if (sgn(poly_eval(p, lo)) * sgn(poly_eval(p, mid)) <= 0)
        hi = mid;
      else
        lo = mid;
    }
    roots.push_back(((lo + hi) / 2).get_d());
  }

  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    int k = __builtin_popcount(mask);
    if (k < 2 || k > d / 2) continue;
    // Multiply out prod (x - r_i) for the chosen subset, in doubles.
    std::vector<double> f{1.0};
    for (int i = 0; i < d; ++i) {
      if (!(mask & (1u << i))) continue;
      f.push_back(0.0);
      for (size_t j = f.size() - 1; j > 0; --j) f[j] = f[j - 1] - roots[i] * f[j];
      f[0] *= -roots[i];
    }
    Poly candidate(f.size());
    bool integral = true;
    for (size_t i = 0; i < f.size(); ++i) {
      double r = std::round(f[i]);
      if (std::fabs(f[i] - r) > 1e-6) {
        integral = false;
        break;
      }
      candidate[i] = Rational(static_cast<long>(r));
    }
    if (!integral) continue;
    auto [quo, rem] = poly_divmod(p, candidate);
    (void)quo;
    if (rem.empty()) return false;
  }
  return true;
}

Poly minpoly_2cos(int m) {
  if (m < 3) throw invalid_operand_error("minpoly_2cos requires m >= 3");
  // Roots of D_m + 2 are 2 cos((2k+1) pi / m); its irreducible factors over Q
  // are the real cyclotomic polynomials Psi_d for d | 2m, d not dividing m.
  Poly target = poly_add(two_cos_multiple_angle(m), Poly{Rational(2)});
  std::vector<Poly> factors;
  Poly product{Rational(1)};
  for (long d : divisors_of(2L * m)) {
    if (d < 1 || m % d == 0) continue;
    Poly f = real_cyclotomic(static_cast<int>(d));
    int mult = (d == 2) ? 1 : 2;
    for (int i = 0; i < mult; ++i) product = poly_mul(product, f);
    factors.push_back(std::move(f));
  }
  if (product != target)
    throw std::logic_error("minpoly_2cos: factor product mismatch");

  const double x0 = 2.0 * std::cos(M_PI / m);
  const Poly* chosen = nullptr;
  for (const Poly& f : factors) {
    double v = 0.0;
    for (size_t i = f.size(); i-- > 0;) v = v * x0 + f[i].get_d();
    if (std::fabs(v) < 1e-9) {
      if (chosen) throw std::logic_error("minpoly_2cos: ambiguous factor");
      chosen = &f;
    }
  }
  if (!chosen) throw std::logic_error("minpoly_2cos: no factor vanishes at 2cos(pi/m)");
  if (poly_deg(*chosen) > 16)
    throw invalid_operand_error("minimal polynomial degree above desk scale");
  if (!is_irreducible_desk(*chosen))
    throw std::logic_error("minpoly_2cos: selected factor is reducible");

  if (poly_deg(*chosen) >= 1) {
    // Exact confirmation: the factor changes sign across a rational bracket
    // of 2cos(pi/m) that excludes every other root of D_m + 2.
    double gap = 4.0;
    for (int k = 1; k < 2 * m; ++k) {
      double other = 2.0 * std::cos((2 * k + 1) * M_PI / m);
      gap = std::min(gap, std::fabs(other - x0));
    }
    Rational a(x0 - gap / 2), b(x0 + gap / 2);
    if (sgn(poly_eval(*chosen, a)) * sgn(poly_eval(*chosen, b)) >= 0)
      throw std::logic_error("minpoly_2cos: sign check failed");
  }
  return *chosen;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(FieldKind kind, int m, Poly minpoly)
    : kind_(kind), m_(m), minpoly_(std::move(minpoly)) {
  if (minpoly_.empty() || minpoly_.back() != 1)
    throw invalid_operand_error("field minimal polynomial must be monic");
  if (!is_irreducible_desk(minpoly_))
    throw invalid_operand_error("field minimal polynomial must be irreducible");
  if (kind_ != FieldKind::rational) {
    double x0 = 2.0 * std::cos(M_PI / m_);
    double v = 0.0;
    for (size_t i = minpoly_.size(); i-- > 0;) v = v * x0 + minpoly_[i].get_d();
    if (std::fabs(v) > 1e-9)
      throw invalid_operand_error("minimal polynomial does not vanish at 2cos(pi/m)");
  }
  if (degree() > 1) {
    // gamma is the largest real root; shrink [lo, hi] until it is the only
    // root in the bracket (Sturm-certified), with minpoly(lo) < 0 < minpoly(hi).
    Rational lo(-3), hi(3);
    if (sgn(poly_eval(minpoly_, hi)) <= 0)
      throw std::logic_error("field: unexpected sign at +3");
    while (sturm_count(minpoly_, lo, hi) > 1) {
      Rational mid = (lo + hi) / 2;
      if (poly_eval(minpoly_, mid) == 0)
        throw std::logic_error("field: rational root in irreducible minpoly");
      if (sturm_count(minpoly_, mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    }
    iso_lo_ = lo;
    iso_hi_ = hi;
    if (sgn(poly_eval(minpoly_, iso_lo_)) >= 0)
      throw std::logic_error("field: isolating bracket lost the sign change");
  }
}

const Field* Field::rationals() {
  static Field f(FieldKind::rational, 0, Poly{kZero, Rational(1)});
  return &f;
}

const Field* Field::cos_extension(int m) {
  if (m < 3) throw invalid_operand_error("cos extension requires m >= 3");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second.get();
  FieldKind kind = (m == 5) ? FieldKind::quadratic_sqrt5 : FieldKind::cos_extension;
  auto f = std::unique_ptr<Field>(new Field(kind, m, minpoly_2cos(m)));
  return cache.emplace(m, std::move(f)).first->second.get();
}

std::string Field::description() const {
  if (degree() == 1) return "Q";
  std::ostringstream os;
  os << "Q(g), g = 2cos(pi/" << m_ << "), minpoly " << poly_to_string(minpoly_);
  return os.str();
}

void Field::refine_isolating_interval() const {
  Rational mid = (iso_lo_ + iso_hi_) / 2;
  if (sgn(poly_eval(minpoly_, mid)) < 0)
    iso_lo_ = mid;
  else
    iso_hi_ = mid;
}

int Field::sign_at_generator(const std::vector<Rational>& coeffs) const {
  Poly p = poly_trim(Poly(coeffs.begin(), coeffs.end()));
  if (p.empty()) return 0;
  if (poly_deg(p) == 0) return sgn(p[0]);
  std::lock_guard<std::mutex> lock(iso_mu_);
  for (int iter = 0; iter < 100000; ++iter) {
    // Interval Horner evaluation of p over [lo, hi], exact endpoints.
    Rational lo(0), hi(0);
    for (size_t i = p.size(); i-- > 0;) {
      Rational c1 = lo * iso_lo_, c2 = lo * iso_hi_, c3 = hi * iso_lo_,
               c4 = hi * iso_hi_;
      Rational nlo = std::min(std::min(c1, c2), std::min(c3, c4));
      Rational nhi = std::max(std::max(c1, c2), std::max(c3, c4));
      lo = nlo + p[i];
      hi = nhi + p[i];
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    refine_isolating_interval();
  }
  throw std::logic_error("sign_at_generator failed to converge");
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Rational q) : field_(Field::rationals()), c_{std::move(q)} {}

Scalar::Scalar(const Field* f, std::vector<Rational> coeffs) : field_(f) {
  if (static_cast<int>(coeffs.size()) > f->degree()) {
    Poly rem = poly_divmod(poly_trim(Poly(coeffs.begin(), coeffs.end())),
                           f->minpoly())
                   .second;
    coeffs.assign(rem.begin(), rem.end());
  }
  coeffs.resize(f->degree(), kZero);
  c_ = std::move(coeffs);
}

Scalar Scalar::generator(const Field* f) {
  if (f->degree() == 1) {
    // gamma is rational: the negated constant term of the (monic) minpoly.
    return Scalar(f, {-f->minpoly()[0]});
  }
  std::vector<Rational> c(f->degree(), kZero);
  c[1] = 1;
  return Scalar(f, std::move(c));
}

Scalar Scalar::zero(const Field* f) { return Scalar(f, {}); }

Scalar Scalar::one(const Field* f) { return Scalar(f, {Rational(1)}); }

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (!is_rational())
    throw invalid_operand_error("scalar is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

int Scalar::sign() const {
  if (field_->degree() == 1) return c_.empty() ? 0 : sgn(c_[0]);
  return field_->sign_at_generator(c_);
}

std::pair<Scalar, Scalar> Scalar::aligned(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return {a, b};
  // Rational values lift into any extension.
  if (a.field_ == Field::rationals() && a.is_rational())
    return {Scalar(b.field_, {a.rational_value()}), b};
  if (b.field_ == Field::rationals() && b.is_rational())
    return {a, Scalar(a.field_, {b.rational_value()})};
  throw invalid_operand_error("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto [a, b] = aligned(*this, o);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = std::move(a);
}

Scalar& Scalar::operator-=(const Scalar& o) {
  auto [a, b] = aligned(*this, o);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return *this = std::move(a);
}

Scalar& Scalar::operator*=(const Scalar& o) {
  auto [a, b] = aligned(*this, o);
  Poly prod = poly_mul(poly_trim(Poly(a.c_.begin(), a.c_.end())),
                       poly_trim(Poly(b.c_.begin(), b.c_.end())));
  Poly rem = poly_divmod(prod, a.field_->minpoly()).second;
  std::vector<Rational> c(rem.begin(), rem.end());
  c.resize(a.field_->degree(), kZero);
  a.c_ = std::move(c);
  return *this = std::move(a);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  auto [a, b] = aligned(*this, o);
  if (b.is_zero()) throw invalid_operand_error("division by zero");
  // Invert b modulo the minimal polynomial via the extended Euclid algorithm.
  Poly r0 = a.field_->minpoly();
  Poly r1 = poly_trim(Poly(b.c_.begin(), b.c_.end()));
  Poly t0{}, t1{Rational(1)};
  while (!r1.empty() && poly_deg(r1) > 0) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) throw std::logic_error("scalar inverse: gcd degenerated");
  Poly inv = t1;
  for (auto& c : inv) c /= r1[0];
  Scalar binv(a.field_, std::vector<Rational>(inv.begin(), inv.end()));
  a *= binv;
  return *this = std::move(a);
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto [x, y] = Scalar::aligned(a, b);
  return x.c_ == y.c_;
}

bool Scalar::lex_less(const Scalar& a, const Scalar& b) {
  auto [x, y] = aligned(a, b);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] != y.c_[i]) return x.c_[i] < y.c_[i];
  }
  return false;
}

std::string Scalar::to_string(const std::string& var) const {
  return poly_to_string(poly_trim(Poly(c_.begin(), c_.end())), var);
}

}  // namespace coxinv
