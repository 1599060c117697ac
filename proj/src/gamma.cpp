#include "vex/gamma.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include "cache.hpp"
#include "vex/errors.hpp"
#include "vex/pfaffian.hpp"

namespace vex {

namespace {

using PartList = std::vector<int>;

/// Splits a gen-form monomial into (sorted generator parts, remaining monomial).
std::pair<PartList, Monomial> split_generators(const Monomial& m) {
  PartList parts;
  Monomial::Storage rest;
  for (const auto& [key, e] : m.factors()) {
    const Variable v = Variable::from_key(key);
    if (v.family == Family::q) {
      if (e < 0) throw DomainError("negative power of a generator");
      for (int i = 0; i < e; ++i) parts.push_back(v.index);
    } else {
      rest.emplace_back(key, e);
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  return {std::move(parts), Monomial::from_sorted(std::move(rest))};
}

Monomial generator_monomial(const PartList& parts) {
  Monomial m;
  for (int a : parts)
    if (a > 0) m = m * Monomial::of(qv(a));
  return m;
}

/// Gen-form entry Q_{k l}.
Polynomial gen_pair(int k, int l) {
  Polynomial r = gen(k) * gen(l);
  for (int j = 1; j <= l; ++j) {
    Polynomial t = gen(k + j) * gen(l - j) * 2;
    if (j % 2 == 1) {
      r -= t;
    } else {
      r += t;
    }
  }
  return r;
}

GammaElement from_builders(std::map<StrictPartition, PolyBuilder>& acc) {
  GammaElement::Combo combo;
  for (auto& [la, b] : acc) {
    Polynomial p = b.finish();
    if (!p.is_zero()) combo.emplace(la, std::move(p));
  }
  return GammaElement::from_combo(std::move(combo));
}

detail::MemoTable<StrictPartition, Polynomial>& pf_table() {
  static detail::MemoTable<StrictPartition, Polynomial> t;
  return t;
}

detail::MemoTable<PartList, GammaElement>& straighten_table() {
  static detail::MemoTable<PartList, GammaElement> t;
  return t;
}

detail::MemoTable<std::pair<StrictPartition, StrictPartition>, GammaElement>& product_table() {
  static detail::MemoTable<std::pair<StrictPartition, StrictPartition>, GammaElement> t;
  return t;
}

const GammaElement& basis_product(const StrictPartition& a, const StrictPartition& b) {
  const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  return product_table().get(key, [&] { return straighten(pf_expansion(key.first) * pf_expansion(key.second)); });
}

}  // namespace

// ---------------------------------------------------------------- GammaElement

GammaElement::GammaElement(Polynomial scalar) {
  if (!scalar.is_zero()) combo_.emplace(StrictPartition(), std::move(scalar));
}

GammaElement GammaElement::q_basis(const StrictPartition& la) {
  GammaElement e;
  e.combo_.emplace(la, Polynomial(1));
  return e;
}

GammaElement GammaElement::p_basis(const StrictPartition& la) {
  GammaElement e;
  e.combo_.emplace(la, Polynomial(Dyadic::pow2(-la.length())));
  e.view_ = GammaView::GammaPrime;
  return e;
}

GammaElement GammaElement::from_combo(Combo combo, GammaView view) {
  GammaElement e;
  for (auto& [la, c] : combo)
    if (!c.is_zero()) e.combo_.emplace(la, std::move(c));
  e.view_ = view;
  return e;
}

GammaElement GammaElement::with_view(GammaView v) const {
  GammaElement e = *this;
  e.view_ = v;
  return e;
}

Polynomial GammaElement::coefficient(const StrictPartition& la, Basis basis) const {
  auto it = combo_.find(la);
  if (it == combo_.end()) return {};
  if (basis == Basis::Q) return it->second;
  return it->second * Dyadic::pow2(la.length());
}

GammaElement::Combo GammaElement::expand(Basis basis) const {
  if (basis == Basis::Q) return combo_;
  Combo out;
  for (const auto& [la, c] : combo_) out.emplace(la, c * Dyadic::pow2(la.length()));
  return out;
}

int GammaElement::degree() const {
  int d = -1;
  for (const auto& [la, c] : combo_) d = std::max(d, la.size() + c.degree());
  return d;
}

bool GammaElement::is_homogeneous(int d) const {
  for (const auto& [la, c] : combo_) {
    for (const auto& t : c.terms())
      if (la.size() + t.mono.degree() != d) return false;
  }
  return true;
}

GammaElement GammaElement::homogeneous_part(int d) const {
  Combo out;
  for (const auto& [la, c] : combo_) {
    if (d - la.size() < 0) continue;
    Polynomial h = c.homogeneous_part(d - la.size());
    if (!h.is_zero()) out.emplace(la, std::move(h));
  }
  return from_combo(std::move(out), view_);
}

GammaElement GammaElement::basis_degree_part(int d) const {
  Combo out;
  for (const auto& [la, c] : combo_)
    if (la.size() == d) out.emplace(la, c);
  return from_combo(std::move(out), view_);
}

void GammaElement::add_term(const StrictPartition& la, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = combo_.try_emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) combo_.erase(it);
  }
}

GammaElement GammaElement::operator-() const {
  GammaElement e = *this;
  for (auto& [la, c] : e.combo_) c = -c;
  return e;
}

GammaElement& GammaElement::operator+=(const GammaElement& o) {
  for (const auto& [la, c] : o.combo_) add_term(la, c);
  if (o.view_ == GammaView::GammaPrime) view_ = GammaView::GammaPrime;
  return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& o) { return *this += -o; }

GammaElement& GammaElement::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    combo_.clear();
    return *this;
  }
  for (auto it = combo_.begin(); it != combo_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? combo_.erase(it) : std::next(it);
  }
  return *this;
}

GammaElement operator*(const GammaElement& a, const GammaElement& b) {
  std::map<StrictPartition, PolyBuilder> acc;
  for (const auto& [la, ca] : a.combo_) {
    for (const auto& [mu, cb] : b.combo_) {
      const Polynomial prod = ca * cb;
      if (la.empty() || mu.empty()) {
        acc[la.empty() ? mu : la].add(prod);
        continue;
      }
      for (const auto& [nu, d] : basis_product(la, mu).combo()) acc[nu].add(prod, d.constant_term());
    }
  }
  GammaElement r = from_builders(acc);
  if (a.view_ == GammaView::GammaPrime || b.view_ == GammaView::GammaPrime) r.view_ = GammaView::GammaPrime;
  return r;
}

GammaElement GammaElement::map_coefficients(const std::function<Polynomial(const Polynomial&)>& fn) const {
  Combo out;
  for (const auto& [la, c] : combo_) {
    Polynomial p = fn(c);
    if (!p.is_zero()) out.emplace(la, std::move(p));
  }
  return from_combo(std::move(out), view_);
}

Polynomial GammaElement::to_generator_form() const {
  PolyBuilder b;
  for (const auto& [la, c] : combo_) b.add(c * pf_expansion(la));
  return b.finish();
}

std::string GammaElement::to_string(Basis basis) const {
  if (combo_.empty()) return "0";
  const char sym = basis == Basis::Q ? 'Q' : 'P';
  std::string s;
  for (auto it = combo_.rbegin(); it != combo_.rend(); ++it) {
    const Polynomial c = coefficient(it->first, basis);
    if (!s.empty()) s += " + ";
    if (it->first.empty()) {
      s += "(" + c.to_string() + ")";
    } else {
      s += "(" + c.to_string() + ")*" + sym + "_" + it->first.to_string();
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const GammaElement& e) { return os << e.to_string(); }

// ---------------------------------------------------------------- series

GeneratorSeries::GeneratorSeries(bool with_q, Polynomial g) : has_q(with_q), multiplier(std::move(g)) {
  if (multiplier.constant_term() != Dyadic(1))
    throw std::invalid_argument("series multiplier must have constant term 1");
}

Polynomial gen(int k) {
  if (k < 0) return {};
  if (k == 0) return Polynomial(1);
  return Polynomial(qv(k));
}

// ---------------------------------------------------------------- straightening

const Polynomial& pf_expansion(const StrictPartition& la) {
  return pf_table().get(la, [&] {
    const auto& p = la.parts();
    return pfaffian<Polynomial>(
        la.length(), [&](int i, int j) { return gen_pair(p[i], p[j]); }, [&](int k) { return gen(p[k]); },
        Polynomial(), Polynomial(1));
  });
}

const GammaElement& straighten_generators(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  if (std::any_of(parts.begin(), parts.end(), [](int a) { return a < 0; })) {
    static const GammaElement zero;
    return zero;
  }
  std::sort(parts.rbegin(), parts.rend());
  return straighten_table().get(parts, [&] {
    if (parts.empty()) return GammaElement(1);
    // A repeated generator: Q_a^2 = sum_{j=1}^{a} (-1)^{j+1} 2 Q_{a+j} Q_{a-j}.
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      if (parts[i] != parts[i + 1]) continue;
      const int a = parts[i];
      PartList rest(parts.begin(), parts.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i), rest.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      GammaElement total;
      for (int j = 1; j <= a; ++j) {
        PartList next = rest;
        next.push_back(a + j);
        next.push_back(a - j);
        GammaElement t = straighten_generators(next) * Polynomial(2);
        if (j % 2 == 1) {
          total += t;
        } else {
          total -= t;
        }
      }
      return total;
    }
    // Strictly decreasing: the product is Q_λ minus the other terms of its Pfaffian.
    const StrictPartition la(parts);
    const Monomial self = generator_monomial(parts);
    GammaElement total = GammaElement::q_basis(la);
    bool seen = false;
    for (const auto& t : pf_expansion(la).terms()) {
      if (t.mono == self) {
        if (!t.coeff.is_one()) throw std::logic_error("leading Pfaffian coefficient is not 1");
        seen = true;
        continue;
      }
      auto [sub, rest] = split_generators(t.mono);
      total -= straighten_generators(sub) * Polynomial(t.coeff);
    }
    if (!seen) throw std::logic_error("leading Pfaffian term missing");
    return total;
  });
}

GammaElement straighten(const Polynomial& gen_form) {
  std::map<PartList, PolyBuilder> groups;
  for (const auto& t : gen_form.terms()) {
    auto [parts, rest] = split_generators(t.mono);
    groups[parts].add(rest, t.coeff);
  }
  std::map<StrictPartition, PolyBuilder> acc;
  for (auto& [parts, b] : groups) {
    const Polynomial c = b.finish();
    if (c.is_zero()) continue;
    for (const auto& [la, d] : straighten_generators(parts).combo()) acc[la].add(c, d.constant_term());
  }
  return from_builders(acc);
}

Polynomial series_coeff_gen(const GeneratorSeries& c, int m) {
  if (m < 0) return {};
  if (!c.has_q) return c.multiplier.homogeneous_part(m);
  Polynomial r;
  for (int j = 0; j <= m; ++j) {
    const Polynomial g = c.multiplier.homogeneous_part(j);
    if (!g.is_zero()) r += g * gen(m - j);
  }
  return r;
}

GammaElement series_coeff(const GeneratorSeries& c, int m) {
  if (m < 0) return {};
  if (!c.has_q) return GammaElement(c.multiplier.homogeneous_part(m));
  GammaElement r;
  for (int j = 0; j <= m; ++j) {
    const Polynomial g = c.multiplier.homogeneous_part(j);
    if (g.is_zero()) continue;
    r += (m - j == 0) ? GammaElement(g) : GammaElement::q_basis(StrictPartition({m - j})) * g;
  }
  return r;
}

GammaElement q_pair(int k, int l, const GeneratorSeries& ck, const GeneratorSeries& cl) {
  Polynomial g = series_coeff_gen(ck, k) * series_coeff_gen(cl, l);
  for (int j = 1; j <= l; ++j) {
    Polynomial t = series_coeff_gen(ck, k + j) * series_coeff_gen(cl, l - j) * 2;
    if (j % 2 == 1) {
      g -= t;
    } else {
      g += t;
    }
  }
  return straighten(g);
}

GammaElement q_lambda(const StrictPartition& la) { return GammaElement::q_basis(la); }

GammaElement p_lambda(const StrictPartition& la) { return GammaElement::p_basis(la); }

// ---------------------------------------------------------------- symmetries

Polynomial apply_to_scalars(const Symmetry& op, const Polynomial& p) {
  const Family f = op.family;
  return p.map_monomials([&](const Monomial& m) {
    Monomial::Storage s;
    int sign = 1;
    for (auto [key, e] : m.factors()) {
      Variable v = Variable::from_key(key);
      if (v.family == f) {
        switch (op.kind) {
          case Symmetry::Kind::Transposition:
            if (v.index == op.index) {
              v.index = op.index + 1;
            } else if (v.index == op.index + 1) {
              v.index = op.index;
            }
            break;
          case Symmetry::Kind::SignChange:
            if (v.index == 1 && e % 2 != 0) sign = -sign;
            break;
          case Symmetry::Kind::HatOne:
            if (v.index == 1 || v.index == 2) {
              v.index = 3 - v.index;
              if (e % 2 != 0) sign = -sign;
            }
            break;
        }
      }
      s.emplace_back(v.key(), e);
    }
    std::sort(s.begin(), s.end());
    return std::make_pair(Monomial::from_sorted(std::move(s)), Dyadic(sign));
  });
}

namespace {

/// Image of the generator q_k under a sign-type symmetry, in gen form.
Polynomial generator_image(const Symmetry& op, int k) {
  const Polynomial v1(Variable{op.family, 1});
  Polynomial r = gen(k);
  if (op.kind == Symmetry::Kind::SignChange) {
    Polynomial power(1);
    for (int j = 1; j <= k; ++j) {
      power *= v1;
      r += power * gen(k - j) * 2;
    }
  } else {
    const Polynomial v2(Variable{op.family, 2});
    // w_j = sum_{a+b=j} v1^a v2^b
    std::vector<Polynomial> w{Polynomial(1)};
    for (int j = 1; j < k; ++j) {
      Polynomial next = v2.pow(j);
      next += v1 * w.back();
      w.push_back(next);
    }
    Polynomial sum;
    for (int j = 1; j <= k; ++j) sum += w[static_cast<std::size_t>(j - 1)] * gen(k - j);
    r += (v1 + v2) * sum * 2;
  }
  return r;
}

using SymKey = std::tuple<int, int, int, StrictPartition>;

detail::MemoTable<SymKey, GammaElement>& symmetry_table() {
  static detail::MemoTable<SymKey, GammaElement> t;
  return t;
}

}  // namespace

const GammaElement& symmetry_image(const Symmetry& op, const StrictPartition& la) {
  const SymKey key{static_cast<int>(op.kind), static_cast<int>(op.family), op.index, la};
  return symmetry_table().get(key, [&] {
    if (op.kind == Symmetry::Kind::Transposition || la.empty()) return GammaElement::q_basis(la);
    Substitution sub;
    for (int k = 1; k <= la.size(); ++k) sub.emplace(qv(k), generator_image(op, k));
    return straighten(poly_substitute(pf_expansion(la), sub));
  });
}

GammaElement apply_symmetry(const Symmetry& op, const GammaElement& e) {
  std::map<StrictPartition, PolyBuilder> acc;
  for (const auto& [la, c] : e.combo()) {
    const Polynomial sc = apply_to_scalars(op, c);
    for (const auto& [mu, d] : symmetry_image(op, la).combo()) acc[mu].add(sc * d);
  }
  return from_builders(acc).with_view(e.view());
}

// ---------------------------------------------------------------- oracle

Polynomial specialize_oracle(const GammaElement& e, const SpecializationMode& mode) {
  int top = 0;
  for (const auto& [la, c] : e.combo()) top = std::max(top, la.size());
  Polynomial series(1);
  if (const auto* sf = std::get_if<SymFun>(&mode)) {
    if (sf->max_degree < e.degree()) throw TruncationTooSmall("symfun truncation below element degree");
    top = sf->max_degree;
    // (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
    for (int i = 1; i <= sf->n_vars; ++i) {
      Polynomial f(1);
      const Polynomial z(zv(i));
      Polynomial power(1);
      for (int d = 1; d <= top; ++d) {
        power *= z;
        f += power * 2;
      }
      series = Polynomial::multiply_truncated(series, f, top);
    }
  } else {
    // (1-t)/(1+t) = 1 + sum_{d>=1} 2 (-t)^d
    for (int nu : std::get<NegT>(mode).nu) {
      const Polynomial mt = -Polynomial(tv(nu));
      Polynomial f(1);
      Polynomial power(1);
      for (int d = 1; d <= top; ++d) {
        power *= mt;
        f += power * 2;
      }
      series = Polynomial::multiply_truncated(series, f, top);
    }
  }
  Substitution sub;
  for (int k = 1; k <= top; ++k) sub.emplace(qv(k), series.homogeneous_part(k));
  Polynomial out;
  for (const auto& [la, c] : e.combo()) out += c * poly_substitute(pf_expansion(la), sub);
  return out;
}

}  // namespace vex
