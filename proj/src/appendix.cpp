#include "vex/appendix.hpp"

#include <algorithm>
#include <sstream>

#include "vex/errors.hpp"
#include "vex/multischur.hpp"
#include "vex/pfaffian.hpp"
#include "vex/schubert.hpp"

namespace vex {

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(int r, int window) : r_(r), window_(window) {
  if (r < 0) throw DomainError("negative rank");
}

Laurent Laurent::constant(int r, int window, const Dyadic& c) {
  Laurent out(r, window);
  out.add(Key(static_cast<std::size_t>(2 * r), 0), c);
  return out;
}

Laurent Laurent::monomial(int r, int window, const std::vector<int>& h, const std::vector<int>& u, const Dyadic& c) {
  if (h.size() != static_cast<std::size_t>(r) || u.size() != static_cast<std::size_t>(r)) {
    throw SizeMismatch("monomial exponents must have one entry per index");
  }
  for (int e : u) {
    if (e < 0) throw DomainError("u exponents must be nonnegative");
  }
  Key k(h.begin(), h.end());
  k.insert(k.end(), u.begin(), u.end());
  Laurent out(r, window);
  if (out.weight(k) <= window) out.add(k, c);
  return out;
}

Laurent Laurent::h_power(int r, int window, int i, int e) {
  std::vector<int> h(static_cast<std::size_t>(r), 0);
  h.at(static_cast<std::size_t>(i - 1)) = e;
  return monomial(r, window, h, std::vector<int>(static_cast<std::size_t>(r), 0));
}

Laurent Laurent::u_power(int r, int window, int i, int e) {
  std::vector<int> u(static_cast<std::size_t>(r), 0);
  u.at(static_cast<std::size_t>(i - 1)) = e;
  return monomial(r, window, std::vector<int>(static_cast<std::size_t>(r), 0), u);
}

int Laurent::weight(const Key& k) const {
  int w = 0;
  for (int i = 0; i < r_; ++i) w += (r_ - i) * k[static_cast<std::size_t>(i)];
  return w;
}

int Laurent::min_weight() const {
  if (terms_.empty()) return 0;
  int w = weight(terms_.begin()->first);
  for (const auto& [k, c] : terms_) w = std::min(w, weight(k));
  return w;
}

void Laurent::add(const Key& k, const Dyadic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Laurent::check_compatible(const Laurent& o) const {
  if (r_ != o.r_ || window_ != o.window_) throw SizeMismatch("Laurent elements with different rank or window");
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  a.check_compatible(b);
  Laurent out(a.r_, a.window_);
  Laurent::Key k(a.terms_.empty() ? 0 : a.terms_.begin()->first.size());
  for (const auto& [ka, ca] : a.terms_) {
    const int wa = a.weight(ka);
    for (const auto& [kb, cb] : b.terms_) {
      if (wa + a.weight(kb) > a.window_) continue;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out.add(k, ca * cb);
    }
  }
  return out;
}

Laurent operator*(Laurent a, const Dyadic& c) {
  if (c.is_zero()) return Laurent(a.r_, a.window_);
  for (auto& [k, v] : a.terms_) v *= c;
  return a;
}

Laurent Laurent::zeta(const std::vector<int>& J) const {
  Laurent out(r_, window_);
  for (const auto& [k, c] : terms_) {
    bool killed = false;
    for (int j : J) {
      const int e = k.at(static_cast<std::size_t>(j - 1));
      if (e < 0) throw DomainError("ζ applied to a negative power of h" + std::to_string(j));
      if (e > 0) killed = true;
    }
    if (!killed) out.add(k, c);
  }
  return out;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (int i = 0; i < r_; ++i) {
      const int e = k[static_cast<std::size_t>(i)];
      if (e != 0) os << "*h" << i + 1 << "^" << e;
    }
    for (int i = 0; i < r_; ++i) {
      const int e = k[static_cast<std::size_t>(r_ + i)];
      if (e != 0) os << "*u" << i + 1 << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- f and signs

Laurent f_pair(int i, int j, int r, int window) {
  if (i == j) throw DomainError("f[i,j] needs i != j");
  if (i > j) return -f_pair(j, i, r, window);
  Laurent out = Laurent::constant(r, window, Dyadic(1));
  for (int k = 1; k * (j - i) <= window; ++k) {
    std::vector<int> h(static_cast<std::size_t>(r), 0);
    h.at(static_cast<std::size_t>(i - 1)) = k;
    h.at(static_cast<std::size_t>(j - 1)) = -k;
    out += Laurent::monomial(r, window, h, std::vector<int>(static_cast<std::size_t>(r), 0),
                             Dyadic(k % 2 == 0 ? 2 : -2));
  }
  return out;
}

Laurent f_index(const std::vector<int>& I, int r, int window) {
  const Laurent zero(r, window);
  const Laurent one = Laurent::constant(r, window, Dyadic(1));
  return pfaffian<Laurent>(
      static_cast<int>(I.size()),
      [&](int a, int b) { return f_pair(I[static_cast<std::size_t>(a)], I[static_cast<std::size_t>(b)], r, window); },
      [&](int) { return one; }, zero, one);
}

bool f_index_identity(const std::vector<int>& I, int r, int window) {
  if (I.size() >= 2 && window < 1) throw WindowTooSmall("window must keep the first correction of f[i,j]");
  Laurent product = Laurent::constant(r, window, Dyadic(1));
  for (std::size_t a = 0; a < I.size(); ++a) {
    for (std::size_t b = a + 1; b < I.size(); ++b) product = product * f_pair(I[a], I[b], r, window);
  }
  return f_index(I, r, window) == product;
}

namespace {

/// 1-based position of k in K.
int position(int k, const std::vector<int>& K) {
  auto it = std::find(K.begin(), K.end(), k);
  if (it == K.end()) throw DomainError("index " + std::to_string(k) + " not in the set");
  return static_cast<int>(it - K.begin()) + 1;
}

std::vector<int> erase_one(const std::vector<int>& s, int k) {
  std::vector<int> out;
  for (int v : s) {
    if (v != k) out.push_back(v);
  }
  return out;
}

std::vector<int> complement(const std::vector<int>& K, const std::vector<int>& J) {
  std::vector<int> out;
  for (int k : K) {
    if (std::find(J.begin(), J.end(), k) == J.end()) out.push_back(k);
  }
  return out;
}

std::vector<int> subset_of(const std::vector<int>& K, unsigned mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (mask & (1u << i)) out.push_back(K[i]);
  }
  return out;
}

int minus_one_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

int epsilon(int k, const std::vector<int>& K) { return position(k, K) % 2 == 1 ? -1 : 1; }

int sgn(const std::vector<int>& K, const std::vector<int>& J) {
  int odd = 0;
  for (int j : J) {
    if (position(j, K) % 2 == 1) ++odd;
  }
  const int jk = static_cast<int>(J.size() * K.size());
  return minus_one_pow(jk) * minus_one_pow(odd);
}

bool lemma_A1_check(const std::vector<int>& K) {
  const int s = static_cast<int>(K.size());
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    const std::vector<int> J = subset_of(K, mask);
    if (sgn(K, J) != minus_one_pow(s / 2) * sgn(K, complement(K, J))) return false;
    if (s % 2 == 0) continue;
    int total = 0;
    for (std::size_t p = 0; p < J.size(); ++p) {
      const int lhs = -epsilon(J[p], K) * sgn(erase_one(K, J[p]), erase_one(J, J[p]));
      if (lhs != minus_one_pow(static_cast<int>(p)) * sgn(K, J)) return false;
      total += lhs;
    }
    if (total != (J.size() % 2 == 1 ? sgn(K, J) : 0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- operators

namespace {

int part(const std::vector<int>& la, int i) { return la.at(static_cast<std::size_t>(i - 1)); }

Laurent h_pow(const Laurent& like, int i, int e) { return Laurent::h_power(like.rank(), like.window(), i, e); }
Laurent u_pow(const Laurent& like, int i, int e) { return Laurent::u_power(like.rank(), like.window(), i, e); }

Laurent f_tilde_single(const std::vector<int>& la, int k, const Laurent& x) {
  const int a = part(la, k);
  return h_pow(x, k, a) * x + u_pow(x, k, a) * x.zeta({k});
}

Laurent h_power_of_set(const std::vector<int>& la, const std::vector<int>& I, const Laurent& like) {
  Laurent out = Laurent::constant(like.rank(), like.window(), Dyadic(1));
  for (int i : I) out = out * h_pow(like, i, part(la, i));
  return out;
}

Laurent u_power_of_set(const std::vector<int>& la, const std::vector<int>& J, const Laurent& like) {
  Laurent out = Laurent::constant(like.rank(), like.window(), Dyadic(1));
  for (int j : J) out = out * u_pow(like, j, part(la, j));
  return out;
}

int test_exponent_bound(std::size_t size) { return size <= 1 ? 4 : (size == 2 ? 2 : 1); }

}  // namespace

Laurent f_tilde_definition(const std::vector<int>& la, int i, int j, const Laurent& x) {
  if (i == j) throw DomainError("f̃[i,j] needs i != j");
  const int a = part(la, i);
  const int b = part(la, j);
  Laurent out = h_pow(x, i, a) * h_pow(x, j, b) * f_pair(i, j, x.rank(), x.window()) * x;
  out += h_pow(x, i, a) * u_pow(x, j, b) * x.zeta({j});
  out -= u_pow(x, i, a) * h_pow(x, j, b) * x.zeta({i});
  const Laurent both = u_pow(x, i, a) * u_pow(x, j, b) * x.zeta({i, j});
  if (i < j) {
    out -= both;
  } else {
    out += both;
  }
  return out;
}

Laurent f_tilde_factored(const std::vector<int>& la, int i, int j, const Laurent& x) {
  if (i >= j) throw DomainError("factored f̃[i,j] needs i < j");
  const int a = part(la, i);
  const int b = part(la, j);
  const Laurent y = h_pow(x, j, b) * x + u_pow(x, j, b) * x.zeta({j});
  Laurent out = h_pow(x, i, a) * y - u_pow(x, i, a) * y.zeta({i});
  for (int k = 1; k * (j - i) <= x.window(); ++k) {
    std::vector<int> h(static_cast<std::size_t>(x.rank()), 0);
    h[static_cast<std::size_t>(i - 1)] = a + k;
    h[static_cast<std::size_t>(j - 1)] = b - k;
    const Laurent m = Laurent::monomial(x.rank(), x.window(), h, std::vector<int>(static_cast<std::size_t>(x.rank()), 0),
                                        Dyadic(k % 2 == 0 ? 2 : -2));
    out += m * x;
  }
  return out;
}

Laurent operator_pfaffian(const std::vector<int>& la, const std::vector<int>& K, const Laurent& x) {
  if (K.empty()) return x;
  Laurent out(x.rank(), x.window());
  if (K.size() % 2 == 1) {
    for (std::size_t p = 0; p < K.size(); ++p) {
      const Laurent term = f_tilde_single(la, K[p], operator_pfaffian(la, erase_one(K, K[p]), x));
      if (p % 2 == 0) {
        out += term;
      } else {
        out -= term;
      }
    }
    return out;
  }
  const int first = K.front();
  for (std::size_t l = 1; l < K.size(); ++l) {
    std::vector<int> rest = erase_one(erase_one(K, first), K[l]);
    const Laurent term = f_tilde_factored(la, first, K[l], operator_pfaffian(la, rest, x));
    if (l % 2 == 1) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

Laurent operator_expansion(const std::vector<int>& la, const std::vector<int>& K, const Laurent& x) {
  Laurent out(x.rank(), x.window());
  for (unsigned mask = 0; mask < (1u << K.size()); ++mask) {
    const std::vector<int> J = subset_of(K, mask);
    const std::vector<int> I = complement(K, J);
    Laurent term = h_power_of_set(la, I, x) * u_power_of_set(la, J, x) * f_index(I, x.rank(), x.window()) * x.zeta(J);
    out += term * Dyadic(sgn(K, J));
  }
  return out;
}

std::vector<Laurent> test_monomials(const std::vector<int>& K, int r, int window) {
  const int bound = test_exponent_bound(K.size());
  std::vector<Laurent> out;
  const std::size_t s = K.size();
  std::vector<int> a(s, 0);
  for (bool done = false; !done;) {
    for (int with_u = 0; with_u < 2; ++with_u) {
      std::vector<int> h(static_cast<std::size_t>(r), 0);
      std::vector<int> u(static_cast<std::size_t>(r), 0);
      for (std::size_t i = 0; i < s; ++i) h[static_cast<std::size_t>(K[i] - 1)] = a[i];
      if (with_u == 1 && !K.empty()) u[static_cast<std::size_t>(K.front() - 1)] = 1;
      out.push_back(Laurent::monomial(r, window, h, u));
    }
    std::size_t i = 0;
    while (i < s && a[i] == bound) a[i++] = 0;
    if (i == s) {
      done = true;
    } else {
      ++a[i];
    }
  }
  return out;
}

int default_window(const std::vector<int>& la, const std::vector<int>& K) {
  const int r = static_cast<int>(la.size());
  const int bound = test_exponent_bound(K.size());
  int w = 0;
  for (int k : K) w += (r + 1 - k) * (part(la, k) + bound);
  return w + 2;
}

bool prop_A1_check(const TypeDPartition& la, const std::vector<int>& K, const std::vector<Laurent>& tests,
                   int window) {
  const std::vector<int>& parts = la.parts();
  const int r = static_cast<int>(parts.size());
  int lead = 0;
  for (int k : K) lead += (r + 1 - k) * part(parts, k);
  for (const Laurent& x : tests) {
    if (x.rank() != r || x.window() != window) throw SizeMismatch("test monomial has the wrong rank or window");
    if (window < lead + x.min_weight() + 1) throw WindowTooSmall("window cuts the leading terms of the check");
    for (std::size_t a = 0; a < K.size(); ++a) {
      for (std::size_t b = a + 1; b < K.size(); ++b) {
        if (f_tilde_factored(parts, K[a], K[b], x) != f_tilde_definition(parts, K[a], K[b], x)) return false;
      }
    }
    if (operator_pfaffian(parts, K, x) != operator_expansion(parts, K, x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- pushforward

Polynomial h_series(int k, int max_degree) {
  Polynomial out(1);
  for (int i = 1; i < k; ++i) {
    Polynomial factor(1);
    Polynomial pw(1);
    for (int e = 1; e <= max_degree; ++e) {
      pw = pw * Polynomial(Variable{Family::h, i});
      factor += pw * Dyadic(e % 2 == 0 ? 2 : -2);
    }
    out = Polynomial::multiply_truncated(out, factor, max_degree);
  }
  return out;
}

GammaElement pushforward_step(int k, const GammaElement& e, const PushforwardData& data) {
  const int r = static_cast<int>(data.lambda.size());
  if (k < 1 || k > r) throw DomainError("pushforward index out of range");
  const int lk = data.lambda[static_cast<std::size_t>(k - 1)];
  const Variable hk{Family::h, k};
  std::map<int, GammaElement> images;
  auto image = [&](int m) -> const GammaElement& {
    if (auto it = images.find(m); it != images.end()) return it->second;
    const int top = lk + m;
    if (top > data.max_index) {
      throw WindowTooSmall("d(" + std::to_string(k) + ")_" + std::to_string(top) + " is beyond the known range");
    }
    const Polynomial H = h_series(k, top);
    GammaElement sum;
    for (int j = 0; j <= top; ++j) {
      Polynomial hj = H.homogeneous_part(j);
      if (hj.is_zero()) continue;
      if (data.sign == PushforwardSign::Alternating && j % 2 == 1) hj = -hj;
      sum += data.d(k, top - j) * hj;
    }
    if (data.g) {
      sum *= Polynomial(Dyadic::pow2(-1));
      if (m == 0) {
        const Polynomial gk = data.g(k, lk) * Dyadic::pow2(-1);
        sum += GammaElement((r - k) % 2 == 0 ? gk : -gk);
      }
    }
    return images.emplace(m, std::move(sum)).first->second;
  };
  std::map<std::pair<StrictPartition, int>, PolyBuilder> grouped;
  for (const auto& [la, coeff] : e.combo()) {
    for (const auto& t : coeff.terms()) {
      const int m = t.mono.exponent(hk);
      Monomial::Storage rest;
      for (auto fac : t.mono.factors()) {
        if (fac.first != hk.key()) rest.push_back(fac);
      }
      grouped[{la, m}].add(Monomial::from_sorted(std::move(rest)), t.coeff);
    }
  }
  GammaElement out;
  for (auto& [key, builder] : grouped) {
    const GammaElement base = GammaElement::q_basis(key.first) * builder.finish();
    const GammaElement& img = image(key.second);
    out += key.first.length() == 0 ? img * base.scalar_part() : base * img;
  }
  return out;
}

GammaElement pushforward_compose(const PushforwardData& data, const Polynomial& start) {
  GammaElement e(start);
  for (int k = static_cast<int>(data.lambda.size()); k >= 1; --k) e = pushforward_step(k, e, data);
  return e;
}

PairedTestData paired_test_data(const TypeDPartition& la) {
  PairedTestData out;
  int size = 0;
  for (int p : la.parts()) size += p;
  out.top = size + (la.parts().empty() ? 0 : la.parts().front()) + 2;
  Polynomial F(1);
  for (int i = 1; i <= 2; ++i) {
    Polynomial fi(1);
    Polynomial pw(1);
    for (int e = 1; e <= out.top; ++e) {
      pw = pw * Polynomial(Variable{Family::z, i});
      fi += pw * Dyadic(2);
    }
    F = Polynomial::multiply_truncated(F, fi, out.top);
  }
  for (int p : la.parts()) {
    Polynomial g = one_plus_product(Family::t, p);
    out.d.push_back(F * g);
    out.g.push_back(std::move(g));
  }
  return out;
}

bool prop_A2_check(const TypeDPartition& la, PushforwardSign sign) {
  return prop_A2_check(la, paired_test_data(la), sign);
}

bool prop_A2_check(const TypeDPartition& la, const PairedTestData& data, PushforwardSign sign) {
  const std::vector<int>& parts = la.parts();
  const std::size_t r = parts.size();
  if (data.g.size() != r || data.d.size() != r) throw SizeMismatch("one g and one d per part");
  std::vector<DPairedSeries> pairs;
  for (std::size_t k = 0; k < r; ++k) pairs.push_back({data.g[k], GeneratorSeries::plain(data.d[k])});
  try {
    check_paired_series(parts, pairs);
  } catch (const StarRelationFailed& e) {
    throw RelationViolated(e.what());
  } catch (const DivisibilityFailed& e) {
    throw RelationViolated(e.what());
  }
  const GammaElement rhs = multischur_pf_D(parts, pairs, false) * Polynomial(Dyadic::pow2(-static_cast<int>(r)));
  PushforwardData pd;
  pd.lambda = parts;
  pd.d = [&](int k, int n) { return GammaElement(data.d[static_cast<std::size_t>(k - 1)].homogeneous_part(n)); };
  pd.g = [&](int k, int n) { return data.g[static_cast<std::size_t>(k - 1)].homogeneous_part(n); };
  pd.max_index = data.top;
  pd.sign = sign;
  return pushforward_compose(pd) == rhs;
}

bool gysin_type_c_check(const Triple& t, const std::vector<int>& m, PushforwardSign sign) {
  if (t.type != WeylType::C) throw WrongType("the Gysin cross-check runs on a type C triple");
  const std::vector<int> la = lambda_parts(t);
  const std::size_t s = la.size();
  if (m.size() != s) throw SizeMismatch("one exponent per row");
  const ChernData chern = schubert_chern_data(t);
  std::vector<GeneratorSeries> c;
  for (std::size_t row = 1; row <= s; ++row) {
    std::size_t i = 0;
    while (t.k[i] < static_cast<int>(row)) ++i;
    Polynomial g(1);
    if (auto it = chern.quotient_e.find(t.p[i]); it != chern.quotient_e.end()) g = g * it->second;
    if (auto it = chern.quotient_f.find(t.q[i]); it != chern.quotient_f.end()) g = g * it->second;
    c.push_back(GeneratorSeries::q_times(g));
  }
  PushforwardData pd;
  pd.lambda = la;
  pd.d = [&](int k, int n) { return series_coeff(c[static_cast<std::size_t>(k - 1)], n); };
  pd.max_index = 1 << 20;
  pd.sign = sign;
  Polynomial start(1);
  std::vector<int> shifted;
  bool all_zero = true;
  for (std::size_t k = 0; k < s; ++k) {
    if (m[k] < 0) throw DomainError("exponents must be nonnegative");
    if (m[k] > 0) {
      start = start * Polynomial(Monomial::of(Variable{Family::h, static_cast<int>(k + 1)}, m[k]), Dyadic(1));
      all_zero = false;
    }
    shifted.push_back(la[k] + m[k]);
  }
  const GammaElement lhs = pushforward_compose(pd, start);
  if (lhs != multischur_pf(shifted, c, SkewPolicy::Trust)) return false;
  return !all_zero || lhs == vexillary_polynomial(t).value;
}

}  // namespace vex
