#include "vex/polynomial.hpp"

#include <algorithm>
#include <boost/functional/hash.hpp>
#include <map>
#include <unordered_map>

#include "vex/errors.hpp"

namespace vex {

char family_char(Family f) {
  static constexpr char kNames[] = {'x', 'y', 't', 'z', 'h', 'u', 'q'};
  return kNames[static_cast<int>(f)];
}

std::string Variable::name() const { return family_char(family) + std::to_string(index); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Variable v, int e) {
  Monomial m;
  if (e != 0) m.f_.emplace_back(v.key(), static_cast<std::int16_t>(e));
  return m;
}

int Monomial::exponent(Variable v) const {
  const auto k = v.key();
  for (const auto& [key, e] : f_) {
    if (key == k) return e;
    if (key > k) break;
  }
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [key, e] : f_) {
    const Variable v = Variable::from_key(key);
    d += v.family == Family::q ? e * v.index : e;
  }
  return d;
}

int Monomial::family_degree(Family f) const {
  int d = 0;
  for (const auto& [key, e] : f_)
    if (Variable::from_key(key).family == f) d += e;
  return d;
}

bool Monomial::has_negative() const {
  return std::any_of(f_.begin(), f_.end(), [](const Factor& x) { return x.second < 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Storage out;
  out.reserve(f_.size() + o.f_.size());
  auto a = f_.begin();
  auto b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) out.emplace_back(a->first, static_cast<std::int16_t>(e));
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, f_.end());
  out.insert(out.end(), b, o.f_.end());
  return from_sorted(std::move(out));
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Storage out;
  auto a = f_.begin();
  auto b = o.f_.begin();
  while (b != o.f_.end()) {
    if (a == f_.end() || b->first < a->first) return std::nullopt;
    if (a->first < b->first) {
      out.push_back(*a++);
      continue;
    }
    const int e = a->second - b->second;
    if (e < 0) return std::nullopt;
    if (e > 0) out.emplace_back(a->first, static_cast<std::int16_t>(e));
    ++a;
    ++b;
  }
  out.insert(out.end(), a, f_.end());
  return from_sorted(std::move(out));
}

Monomial Monomial::only(Family f) const {
  Storage out;
  for (const auto& x : f_)
    if (Variable::from_key(x.first).family == f) out.push_back(x);
  return from_sorted(std::move(out));
}

Monomial Monomial::without(Family f) const {
  Storage out;
  for (const auto& x : f_)
    if (Variable::from_key(x.first).family != f) out.push_back(x);
  return from_sorted(std::move(out));
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  auto i = a.f_.begin();
  auto j = b.f_.begin();
  while (i != a.f_.end() && j != b.f_.end()) {
    if (i->first != j->first) {
      // The one holding the earlier variable wins when its exponent is positive.
      if (i->first < j->first) return i->second > 0 ? 1 : -1;
      return j->second > 0 ? -1 : 1;
    }
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i != a.f_.end()) return i->second > 0 ? 1 : -1;
  if (j != b.f_.end()) return j->second > 0 ? -1 : 1;
  return 0;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [key, e] : f_) {
    if (!s.empty()) s += '*';
    s += Variable::from_key(key).name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::size_t Monomial::hash() const {
  std::size_t h = f_.size();
  for (const auto& [key, e] : f_) {
    boost::hash_combine(h, key);
    boost::hash_combine(h, e);
  }
  return h;
}

// ---------------------------------------------------------------- Polynomial

namespace {

bool term_before(const Term& a, const Term& b) { return Monomial::compare(a.mono, b.mono) > 0; }

}  // namespace

Polynomial::Polynomial(Dyadic c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial::of(v), Dyadic(1)}); }

Polynomial::Polynomial(Monomial m, Dyadic c) {
  if (!c.is_zero()) terms_.push_back({std::move(m), std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolyBuilder b;
  for (auto& t : terms) b.add(t.mono, t.coeff);
  return b.finish();
}

Dyadic Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.empty()) return terms_.back().coeff;
  return Dyadic();
}

Dyadic Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return Monomial::compare(t.mono, x) > 0;
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Dyadic();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::has_family(Family f) const {
  for (const auto& t : terms_)
    for (const auto& [key, e] : t.mono.factors())
      if (Variable::from_key(key).family == f) return true;
  return false;
}

bool Polynomial::all_coefficients_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_integer(); });
}

bool Polynomial::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.sign() > 0; });
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r;
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r;
  for (const auto& t : terms_)
    if (t.mono.degree() <= max_degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    const int c = Monomial::compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Dyadic s = a->coeff + b->coeff;
      if (!s.is_zero()) out.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  std::move(a, terms_.end(), std::back_inserter(out));
  out.insert(out.end(), b, o.terms_.end());
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Dyadic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return Polynomial::multiply_truncated(a, b, -1); }

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant() && max_degree < 0) return b * a.constant_term();
  if (b.is_constant() && max_degree < 0) return a * b.constant_term();
  PolyBuilder acc;
  for (const auto& s : a.terms_) {
    const int ds = s.mono.degree();
    for (const auto& t : b.terms_) {
      if (max_degree >= 0 && ds + t.mono.degree() > max_degree) continue;
      acc.add(s.mono * t.mono, s.coeff * t.coeff);
    }
  }
  return acc.finish();
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

Polynomial Polynomial::star() const {
  Polynomial r = *this;
  for (auto& t : r.terms_)
    if (t.mono.degree() % 2 != 0) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::swap_families(Family a, Family b) const {
  return map_monomials([a, b](const Monomial& m) {
    Monomial::Storage s;
    for (auto [key, e] : m.factors()) {
      Variable v = Variable::from_key(key);
      if (v.family == a) {
        v.family = b;
      } else if (v.family == b) {
        v.family = a;
      }
      s.emplace_back(v.key(), e);
    }
    std::sort(s.begin(), s.end());
    return std::make_pair(Monomial::from_sorted(std::move(s)), Dyadic(1));
  });
}

Polynomial Polynomial::map_monomials(const std::function<std::pair<Monomial, Dyadic>(const Monomial&)>& fn) const {
  PolyBuilder acc;
  for (const auto& t : terms_) {
    auto [m, c] = fn(t.mono);
    acc.add(m, t.coeff * c);
  }
  return acc.finish();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Dyadic c = t.coeff;
    if (!first) {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    } else if (c.sign() < 0 && !t.mono.empty() && c == Dyadic(-1)) {
      s += "-";
      c = -c;
    }
    first = false;
    if (t.mono.empty()) {
      s += c.to_string();
    } else if (c.is_one()) {
      s += t.mono.to_string();
    } else {
      s += c.to_string() + "*" + t.mono.to_string();
    }
  }
  return s;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    boost::hash_combine(h, t.mono.hash());
    boost::hash_combine(h, t.coeff.hash());
  }
  return h;
}

// ---------------------------------------------------------------- PolyBuilder

void PolyBuilder::add(const Monomial& m, const Dyadic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = index_.try_emplace(m, acc_.size());
  if (inserted) {
    acc_.push_back({m, c});
  } else {
    acc_[it->second].coeff += c;
  }
}

void PolyBuilder::add(const Polynomial& p, const Dyadic& scale, const Monomial& shift) {
  if (scale.is_zero()) return;
  const bool plain = scale.is_one();
  for (const auto& t : p.terms()) {
    add(shift.empty() ? t.mono : t.mono * shift, plain ? t.coeff : t.coeff * scale);
  }
}

Polynomial PolyBuilder::finish() {
  std::vector<Term> out;
  out.reserve(acc_.size());
  for (auto& t : acc_)
    if (!t.coeff.is_zero()) out.push_back(std::move(t));
  std::sort(out.begin(), out.end(), term_before);
  acc_.clear();
  index_.clear();
  Polynomial p;
  p.terms_ = std::move(out);
  return p;
}

// ---------------------------------------------------------------- free functions

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial star(const Polynomial& p) { return p.star(); }

Polynomial poly_substitute(const Polynomial& p, const Substitution& map, int max_degree) {
  // Cache powers of each substituted variable.
  std::map<std::pair<std::uint16_t, int>, Polynomial> powers;
  auto power_of = [&](std::uint16_t key, const Polynomial& image, int e) -> const Polynomial& {
    auto it = powers.find({key, e});
    if (it != powers.end()) return it->second;
    Polynomial v = e == 1 ? image : Polynomial::multiply_truncated(image, image.pow(e - 1), max_degree);
    if (max_degree >= 0) v = v.truncated(max_degree);
    return powers.emplace(std::make_pair(key, e), std::move(v)).first->second;
  };
  PolyBuilder acc;
  for (const auto& t : p.terms()) {
    Monomial kept;
    Polynomial product(t.coeff);
    for (const auto& [key, e] : t.mono.factors()) {
      auto it = map.find(Variable::from_key(key));
      if (it == map.end()) {
        kept = kept * Monomial::from_sorted({{key, e}});
        continue;
      }
      if (e < 0) throw DomainError("cannot substitute into a negative power of " + Variable::from_key(key).name());
      product = Polynomial::multiply_truncated(product, power_of(key, it->second, e), max_degree);
    }
    if (max_degree >= 0) {
      const int dk = kept.degree();
      if (dk > max_degree) continue;
      product = product.truncated(max_degree - dk);
    }
    acc.add(product, Dyadic(1), kept);
  }
  return acc.finish();
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.is_zero()) return {};
  if (d.size() == 1) {
    const Term& lt = d.terms().front();
    PolyBuilder q;
    for (const auto& t : p.terms()) {
      auto m = t.mono.divide(lt.mono);
      if (!m) throw NotDivisible(p.to_string() + " is not divisible by " + d.to_string());
      q.add(*m, t.coeff.divide_exact(lt.coeff));
    }
    return q.finish();
  }
  auto cmp = [](const Monomial& a, const Monomial& b) { return Monomial::compare(a, b) > 0; };
  std::map<Monomial, Dyadic, decltype(cmp)> rem(cmp);
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lead = d.terms().front();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    auto m = top->first.divide(lead.mono);
    if (!m) throw NotDivisible(p.to_string() + " is not divisible by " + d.to_string());
    Dyadic c = top->second.divide_exact(lead.coeff);
    for (const auto& t : d.terms()) {
      Monomial prod = t.mono * *m;
      auto [it, inserted] = rem.try_emplace(prod, Dyadic());
      it->second -= t.coeff * c;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.push_back({std::move(*m), std::move(c)});
  }
  return Polynomial::from_terms(std::move(quotient));
}

Polynomial one_plus_product(Family f, const std::vector<int>& indices) {
  Polynomial r(1);
  for (int i : indices) r *= Polynomial(1) + Polynomial(Variable{f, i});
  return r;
}

Polynomial one_plus_product(Family f, int n) {
  std::vector<int> idx;
  for (int i = 1; i <= n; ++i) idx.push_back(i);
  return one_plus_product(f, idx);
}

}  // namespace vex
