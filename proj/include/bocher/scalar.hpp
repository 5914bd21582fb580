#pragma once

#include <map>
#include <string>

#include "bocher/polynomial.hpp"

namespace bocher::exact {

/// Rational function over Q(i) in canonical form: gcd(num, den) = 1 and the
/// denominator monic in the global term order. Equality is syntactic.
class Scalar {
 public:
  Scalar() : num_(), den_(Poly::one()) {}
  Scalar(long n) : num_(Poly(n)), den_(Poly::one()) {}
  explicit Scalar(GaussRat c) : num_(Poly(std::move(c))), den_(Poly::one()) {}
  explicit Scalar(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
  Scalar(Poly n, Poly d);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(GaussRat::i()); }
  static Scalar variable(VarId x) { return Scalar(Poly::variable(x)); }
  static Scalar var(const std::string& name) { return variable(exact::var(name)); }
  static Scalar ratio(long num, long den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Constant value; only valid when is_constant().
  GaussRat constant_value() const { return num_.constant_term(); }
  bool contains(VarId x) const { return num_.contains(x) || den_.contains(x); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(int e) const;
  Scalar derivative(VarId x) const;
  Scalar substitute(const std::map<VarId, Scalar>& sub) const;

  std::string str() const;

 private:
  Poly num_, den_;
  void canonicalize();
};

/// Parses the canonical textual form (names, integers, i, + - * / ^, parens).
Scalar parse_scalar(const std::string& text);

}  // namespace bocher::exact
