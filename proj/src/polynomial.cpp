#include "bocher/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bocher::exact {

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  if (im == 0) return rational_str(re);
  std::string imag;
  if (im == 1)
    imag = "i";
  else if (im == -1)
    imag = "-i";
  else
    imag = rational_str(im) + "*i";
  if (re == 0) return imag;
  std::string out = rational_str(re);
  if (im > 0)
    out += "+" + imag;
  else
    out += imag;  // imag already carries '-'
  return out;
}

// ---------------------------------------------------------------------------
// VarTable

VarTable& VarTable::instance() {
  static VarTable t;
  return t;
}

VarTable::VarTable() {
  static const char* preset[] = {
      "eps", "x",  "y",  "s",  "x'", "y'", "s'", "x1", "x2", "x3", "x4",
      "x1'", "x2'", "x3'", "x4'", "s1", "s2", "s3", "u",  "r",  "a1", "a2",
      "a3",  "a4",  "b1",  "b2",  "b3", "b4", "A1", "A2", "A3", "A4", "E", "H"};
  for (const char* n : preset) intern(n);
}

VarId VarTable::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  return id;
}

VarId VarTable::id(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw std::runtime_error("unknown variable: " + name);
  return it->second;
}

const std::string& VarTable::name(VarId v) const { return names_.at(v); }

bool VarTable::known(const std::string& name) const { return ids_.count(name) > 0; }

// ---------------------------------------------------------------------------
// Monomial

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [_, e] : v) d += static_cast<int>(e);
  return d;
}

unsigned Monomial::degree(VarId x) const {
  for (auto& [var, e] : v)
    if (var == x) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.v.reserve(v.size() + o.v.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() && j < o.v.size()) {
    if (v[i].first == o.v[j].first) {
      out.v.push_back({v[i].first, v[i].second + o.v[j].second});
      ++i, ++j;
    } else if (v[i].first < o.v[j].first) {
      out.v.push_back(v[i++]);
    } else {
      out.v.push_back(o.v[j++]);
    }
  }
  for (; i < v.size(); ++i) out.v.push_back(v[i]);
  for (; j < o.v.size(); ++j) out.v.push_back(o.v[j]);
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (auto& [var, e] : v) {
    while (j < o.v.size() && o.v[j].first < var) ++j;
    if (j == o.v.size() || o.v[j].first != var || o.v[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial out;
  std::size_t j = 0;
  for (auto& [var, e] : v) {
    unsigned sub = 0;
    while (j < o.v.size() && o.v[j].first < var) ++j;
    if (j < o.v.size() && o.v[j].first == var) sub = o.v[j].second;
    assert(e >= sub);
    if (e > sub) out.v.push_back({var, e - sub});
  }
  return out;
}

int cmp_monomial(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.v.size() && j < b.v.size()) {
    if (a.v[i].first != b.v[j].first)
      return a.v[i].first < b.v[j].first ? 1 : -1;  // lower id with positive exponent wins
    if (a.v[i].second != b.v[j].second) return a.v[i].second > b.v[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.v.size()) return 1;
  if (j < b.v.size()) return -1;
  return 0;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t j = 0;
  for (auto& [var, e] : a.v) {
    while (j < b.v.size() && b.v[j].first < var) ++j;
    if (j < b.v.size() && b.v[j].first == var) {
      unsigned m = std::min(e, b.v[j].second);
      if (m) out.v.push_back({var, m});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Poly basics

namespace {
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp_monomial(a, b) > 0; }
};
}  // namespace

void Poly::normalize_sorted() {
  std::sort(t_.begin(), t_.end(),
            [](const Term& a, const Term& b) { return cmp_monomial(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  t_ = std::move(out);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.t_ = std::move(terms);
  p.normalize_sorted();
  return p;
}

GaussRat Poly::constant_term() const {
  if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
  return GaussRat(0);
}

int Poly::degree(VarId x) const {
  int d = 0;
  for (auto& t : t_) d = std::max(d, static_cast<int>(t.m.degree(x)));
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& t : t_) d = std::max(d, t.m.total_degree());
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::set<VarId> s;
  for (auto& t : t_)
    for (auto& [v, _] : t.m.v) s.insert(v);
  return {s.begin(), s.end()};
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.t_) t.c = -t.c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = cmp_monomial(t_[i].m, o.t_[j].m);
    if (c > 0) {
      out.push_back(std::move(t_[i++]));
    } else if (c < 0) {
      out.push_back(o.t_[j++]);
    } else {
      GaussRat sum = t_[i].c + o.t_[j].c;
      if (!sum.is_zero()) out.push_back({t_[i].m, std::move(sum)});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
  for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
  t_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::map<Monomial, GaussRat, MonoGreater> acc;
  for (auto& ta : a.t_)
    for (auto& tb : b.t_) {
      Monomial m = ta.m * tb.m;
      GaussRat c = ta.c * tb.c;
      auto [it, inserted] = acc.emplace(std::move(m), std::move(c));
      if (!inserted) it->second += c;
    }
  Poly out;
  out.t_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.t_.push_back({m, c});
  return out;
}

Poly Poly::operator*(const GaussRat& c) const {
  if (c.is_zero()) return Poly();
  Poly out = *this;
  for (auto& t : out.t_) t.c *= c;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly base = *this, out = Poly::one();
  while (e) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

Poly Poly::derivative(VarId x) const {
  std::vector<Term> out;
  for (auto& t : t_) {
    unsigned e = t.m.degree(x);
    if (!e) continue;
    Monomial m = t.m.divide(Monomial::of(x));
    out.push_back({std::move(m), t.c * GaussRat(static_cast<long>(e))});
  }
  return from_terms(std::move(out));
}

Poly Poly::coeff_of(VarId x, unsigned k) const {
  std::vector<Term> out;
  for (auto& t : t_)
    if (t.m.degree(x) == k) out.push_back({t.m.divide(Monomial::of(x, k)), t.c});
  return from_terms(std::move(out));
}

std::map<int, Poly> Poly::by_degree(VarId x) const {
  std::map<int, std::vector<Term>> parts;
  for (auto& t : t_) {
    unsigned e = t.m.degree(x);
    parts[static_cast<int>(e)].push_back({t.m.divide(Monomial::of(x, e)), t.c});
  }
  std::map<int, Poly> out;
  for (auto& [d, terms] : parts) out.emplace(d, from_terms(std::move(terms)));
  return out;
}

Monomial Poly::monomial_content() const {
  if (t_.empty()) return Monomial::one();
  Monomial g = t_[0].m;
  for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i) g = monomial_gcd(g, t_[i].m);
  return g;
}

Poly Poly::divide_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly out = *this;
  for (auto& t : out.t_) t.m = t.m.divide(m);
  return out;
}

Poly Poly::at_zero(VarId x) const {
  std::vector<Term> out;
  for (auto& t : t_)
    if (t.m.degree(x) == 0) out.push_back(t);
  return from_terms(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  GaussRat inv = leading_coeff().inverse();
  return *this * inv;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    GaussRat c = t.c;
    bool neg = false;
    // pull a leading '-' for purely real or purely imaginary coefficients
    if ((c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0)) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool mixed = (c.re != 0 && c.im != 0);
    std::string cs = mixed ? "(" + c.str() + ")" : c.str();
    if (t.m.is_one()) {
      os << cs;
    } else {
      if (!c.is_one()) os << cs << "*";
      bool fv = true;
      for (auto& [v, e] : t.m.v) {
        if (!fv) os << "*";
        fv = false;
        os << VarTable::instance().name(v);
        if (e > 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<Poly> poly_try_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly();
  Poly rem = a;
  std::vector<Term> quot;
  const Monomial& lmb = b.leading_monomial();
  const GaussRat& lcb = b.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& lmr = rem.leading_monomial();
    if (!lmb.divides(lmr)) return std::nullopt;
    Monomial qm = lmr.divide(lmb);
    GaussRat qc = rem.leading_coeff() / lcb;
    quot.push_back({qm, qc});
    rem -= b * Poly::term(std::move(qm), std::move(qc));
  }
  return Poly::from_terms(std::move(quot));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto q = poly_try_div(a, b);
  if (!q) throw std::runtime_error("poly_div_exact: not divisible");
  return *q;
}

namespace {

// Leading coefficient of p viewed as univariate in x.
Poly lead_coeff_in(const Poly& p, VarId x, int deg) { return p.coeff_of(x, static_cast<unsigned>(deg)); }

// Pseudo-remainder of a by b w.r.t. x; multiplies by lc(b)^(deg a - deg b + 1).
Poly pseudo_rem(const Poly& a, const Poly& b, VarId x) {
  int da = a.degree(x), db = b.degree(x);
  Poly lcb = lead_coeff_in(b, x, db);
  Poly r = a;
  int e = da - db + 1;
  while (!r.is_zero()) {
    int dr = r.degree(x);
    if (dr < db) break;
    Poly lcr = lead_coeff_in(r, x, dr);
    r = r * lcb - b * (lcr * Poly::variable(x).pow(static_cast<unsigned>(dr - db)));
    --e;
  }
  if (e > 0) r = r * lcb.pow(static_cast<unsigned>(e));
  return r;
}

Poly gcd_inner(Poly a, Poly b);

// gcd of the x-coefficients of p.
Poly content_in(const Poly& p, VarId x) {
  auto coeffs = p.by_degree(x);
  Poly g;
  for (auto& [_, c] : coeffs) {
    g = gcd_inner(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_part_in(const Poly& p, VarId x, const Poly& content) {
  if (content.is_one()) return p;
  return poly_div_exact(p, content);
}

Poly gcd_inner(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::one();
  if (a == b) return a.monic();

  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial mg = monomial_gcd(ma, mb);
  if (!ma.is_one()) a = a.divide_monomial(ma);
  if (!mb.is_one()) b = b.divide_monomial(mb);

  Poly result;
  if (a.is_constant() || b.is_constant()) {
    result = Poly::one();
  } else {
    // quick exits: one dividing the other covers most cancellation patterns
    if (auto q = poly_try_div(a, b)) {
      result = b.monic();
    } else if (auto q2 = poly_try_div(b, a)) {
      result = a.monic();
    } else {
      auto va = a.variables();
      auto vb = b.variables();
      std::vector<VarId> common;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
      if (common.empty()) {
        result = Poly::one();
      } else {
        VarId x = common[0];
        int best = std::min(a.degree(common[0]), b.degree(common[0]));
        for (VarId v : common) {
          int d = std::min(a.degree(v), b.degree(v));
          if (d < best) {
            best = d;
            x = v;
          }
        }
        Poly ca = content_in(a, x);
        Poly cb = content_in(b, x);
        Poly pa = primitive_part_in(a, x, ca);
        Poly pb = primitive_part_in(b, x, cb);
        if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);

        // subresultant polynomial remainder sequence
        int delta = pa.degree(x) - pb.degree(x);
        Poly beta = (delta % 2 == 0) ? Poly(-1) : Poly(1);  // (-1)^(delta+1)
        Poly psi = Poly(-1);
        Poly g;
        while (true) {
          Poly r = pseudo_rem(pa, pb, x);
          if (r.is_zero()) {
            g = primitive_part_in(pb, x, content_in(pb, x));
            break;
          }
          if (r.degree(x) == 0) {
            g = Poly::one();
            break;
          }
          r = poly_div_exact(r, beta);
          Poly lc = lead_coeff_in(pb, x, pb.degree(x));
          Poly neg = -lc;
          Poly psinext;
          if (delta == 0)
            psinext = psi;
          else if (delta == 1)
            psinext = neg;
          else
            psinext = poly_div_exact(neg.pow(static_cast<unsigned>(delta)),
                                     psi.pow(static_cast<unsigned>(delta - 1)));
          int deltanext = pb.degree(x) - r.degree(x);
          beta = -(lc * psinext.pow(static_cast<unsigned>(deltanext)));
          psi = std::move(psinext);
          delta = deltanext;
          pa = std::move(pb);
          pb = std::move(r);
        }
        result = gcd_inner(ca, cb) * g;
      }
    }
  }
  if (!mg.is_one()) result = result * Poly::term(mg, GaussRat(1));
  return result.monic();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_inner(a, b); }

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return (a * poly_div_exact(b, g)).monic();
}

}  // namespace bocher::exact
