#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vex/dyadic.hpp"

namespace vex {

/// Variable families in canonical order. `q` is internal: q_k stands for the
/// free generator Q_k while an element of Gamma is in unstraightened form.
enum class Family : std::uint8_t { x = 0, y, t, z, h, u, q };

char family_char(Family f);

struct Variable {
  Family family;
  int index;  // >= 1

  std::uint16_t key() const {
    return static_cast<std::uint16_t>((static_cast<unsigned>(family) << 10) | static_cast<unsigned>(index));
  }
  static Variable from_key(std::uint16_t k) {
    return {static_cast<Family>(k >> 10), static_cast<int>(k & 1023u)};
  }
  std::string name() const;  // "x1"

  friend bool operator==(Variable a, Variable b) { return a.key() == b.key(); }
  friend bool operator<(Variable a, Variable b) { return a.key() < b.key(); }
};

inline Variable xv(int i) { return {Family::x, i}; }
inline Variable yv(int i) { return {Family::y, i}; }
inline Variable tv(int i) { return {Family::t, i}; }
inline Variable zv(int i) { return {Family::z, i}; }
inline Variable hv(int i) { return {Family::h, i}; }
inline Variable uv(int i) { return {Family::u, i}; }
inline Variable qv(int k) { return {Family::q, k}; }

/// Sparse exponent vector, sorted by variable key, with no zero exponents.
/// Exponents are signed so that Laurent monomials in h can share the type.
class Monomial {
 public:
  using Factor = std::pair<std::uint16_t, std::int16_t>;
  using Storage = boost::container::small_vector<Factor, 6>;

  Monomial() = default;
  static Monomial of(Variable v, int e = 1);

  int exponent(Variable v) const;
  /// Total degree, with q_k weighted by k.
  int degree() const;
  /// Plain sum of exponents over one family.
  int family_degree(Family f) const;
  bool empty() const { return f_.empty(); }
  bool has_negative() const;
  const Storage& factors() const { return f_; }

  Monomial operator*(const Monomial& o) const;
  /// this / o when every exponent of the quotient is nonnegative.
  std::optional<Monomial> divide(const Monomial& o) const;
  /// Monomial restricted to (or without) one family.
  Monomial only(Family f) const;
  Monomial without(Family f) const;

  /// Graded lexicographic comparison: higher degree first, then lex with
  /// x1 > x2 > ... > y1 > ... (family order x<y<t<z<h<u<q). Returns <0, 0, >0.
  static int compare(const Monomial& a, const Monomial& b);

  std::string to_string() const;  // "x1^2*y3", "" for 1
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Builds from factors that are already sorted and nonzero.
  static Monomial from_sorted(Storage s) {
    Monomial m;
    m.f_ = std::move(s);
    return m;
  }

 private:
  Storage f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Dyadic coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Sparse multivariate polynomial with dyadic coefficients. Terms are kept in
/// canonical (descending graded-lex) order with no zero coefficients, so
/// structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Dyadic c);       // NOLINT(google-explicit-constructor)
  Polynomial(long long c) : Polynomial(Dyadic(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(Variable v);     // NOLINT(google-explicit-constructor)
  Polynomial(Monomial m, Dyadic c);

  /// Canonicalizes arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }
  Dyadic constant_term() const;
  Dyadic coefficient(const Monomial& m) const;
  /// Max total degree; -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  bool has_family(Family f) const;
  bool all_coefficients_integral() const;
  bool all_coefficients_nonnegative() const;

  Polynomial homogeneous_part(int d) const;
  Polynomial truncated(int max_degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Dyadic& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Dyadic& c) { return a *= c; }
  friend Polynomial operator*(Polynomial a, long long c) { return a *= Dyadic(c); }
  friend Polynomial operator*(long long c, Polynomial a) { return a *= Dyadic(c); }
  friend Polynomial operator*(const Dyadic& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Product truncated to total degree <= max_degree.
  static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree);
  Polynomial pow(int e) const;

  /// Multiplies the degree-d component by (-1)^d.
  Polynomial star() const;
  /// Renames every variable of family a to family b and vice versa.
  Polynomial swap_families(Family a, Family b) const;
  /// Applies fn to every monomial (which must stay canonical-safe) with a sign.
  Polynomial map_monomials(const std::function<std::pair<Monomial, Dyadic>(const Monomial&)>& fn) const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Mutable accumulator used to build polynomials from many terms.
class PolyBuilder {
 public:
  void add(const Monomial& m, const Dyadic& c);
  void add(const Polynomial& p, const Dyadic& scale = Dyadic(1), const Monomial& shift = Monomial());
  Polynomial finish();
  bool empty() const { return acc_.empty(); }

 private:
  std::vector<Term> acc_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Simultaneous substitution: mapped variables are replaced, others pass through.
using Substitution = std::map<Variable, Polynomial>;

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_substitute(const Polynomial& p, const Substitution& map, int max_degree = -1);
Polynomial star(const Polynomial& p);
/// Exact quotient p / d; throws NotDivisible when d does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

/// prod_{i in idx} (1 + v_i).
Polynomial one_plus_product(Family f, const std::vector<int>& indices);
/// prod_{i=1}^{n} (1 + v_i).
Polynomial one_plus_product(Family f, int n);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

}  // namespace vex
