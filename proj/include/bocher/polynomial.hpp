#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bocher/gaussrat.hpp"

namespace bocher::exact {

using VarId = std::uint32_t;

/// Process-wide variable table. A fixed set of names is interned up front so
/// canonical forms and serializations do not depend on evaluation order.
class VarTable {
 public:
  static VarTable& instance();

  VarId intern(const std::string& name);
  /// Returns the id of an already-interned name; aborts if unknown.
  VarId id(const std::string& name) const;
  const std::string& name(VarId v) const;
  bool known(const std::string& name) const;

 private:
  VarTable();
  std::vector<std::string> names_;
  std::map<std::string, VarId> ids_;
};

inline VarId var(const std::string& name) { return VarTable::instance().intern(name); }

/// Sparse exponent vector, sorted by variable id, all exponents positive.
struct Monomial {
  std::vector<std::pair<VarId, unsigned>> v;

  static Monomial one() { return {}; }
  static Monomial of(VarId x, unsigned e = 1) {
    Monomial m;
    if (e) m.v.push_back({x, e});
    return m;
  }

  bool is_one() const { return v.empty(); }
  int total_degree() const;
  unsigned degree(VarId x) const;
  bool contains(VarId x) const { return degree(x) > 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / o, assuming o.divides(*this).
  Monomial divide(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.v == b.v; }
};

/// Graded-lex comparison; returns <0, 0, >0. Larger monomials sort first.
int cmp_monomial(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  GaussRat c;
};

class Scalar;

/// Multivariate polynomial over Q(i), terms held in decreasing monomial order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(GaussRat c) {
    if (!c.is_zero()) t_.push_back({Monomial::one(), std::move(c)});
  }
  explicit Poly(long n) : Poly(GaussRat(n)) {}

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(GaussRat(1)); }
  static Poly variable(VarId x) {
    Poly p;
    p.t_.push_back({Monomial::of(x), GaussRat(1)});
    return p;
  }
  static Poly term(Monomial m, GaussRat c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c.is_one(); }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  const GaussRat& leading_coeff() const { return t_.front().c; }
  const Monomial& leading_monomial() const { return t_.front().m; }
  GaussRat constant_term() const;

  int degree(VarId x) const;
  int total_degree() const;
  std::vector<VarId> variables() const;
  bool contains(VarId x) const { return degree(x) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly operator*(const GaussRat& c) const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Poly derivative(VarId x) const;

  /// Coefficient of x^k, a polynomial in the remaining variables.
  Poly coeff_of(VarId x, unsigned k) const;
  /// All coefficients by x-degree (only nonzero ones).
  std::map<int, Poly> by_degree(VarId x) const;

  /// Common monomial factor of all terms.
  Monomial monomial_content() const;
  Poly divide_monomial(const Monomial& m) const;

  /// Substitute x := 0.
  Poly at_zero(VarId x) const;
  /// Substitute variables by scalars (absent vars stay). Defined in scalar.cpp.
  Scalar substitute(const std::map<VarId, Scalar>& sub) const;

  /// Leading coefficient scaled to 1.
  Poly monic() const;

  std::string str() const;

  /// Assembles from arbitrary order, merging duplicates and dropping zeros.
  static Poly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> t_;
  void normalize_sorted();
};

/// Monic gcd. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Exact quotient; aborts if b does not divide a.
Poly poly_div_exact(const Poly& a, const Poly& b);
/// Quotient if b divides a exactly.
std::optional<Poly> poly_try_div(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

}  // namespace bocher::exact
