#include "vex/schubert.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "vex/errors.hpp"
#include "vex/multischur.hpp"

namespace vex {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Monomial power(Variable v, int e) { return e == 0 ? Monomial() : Monomial::of(v, e); }

/// (f - s_i f) / (v_i - v_{i+1}) monomial by monomial.
Polynomial transposition_dd(const Polynomial& p, Family f, int i) {
  const Variable a{f, i};
  const Variable b{f, i + 1};
  PolyBuilder out;
  for (const auto& t : p.terms()) {
    const int ea = t.mono.exponent(a);
    const int eb = t.mono.exponent(b);
    if (ea == eb) continue;
    Monomial::Storage rest;
    for (auto fac : t.mono.factors()) {
      if (fac.first != a.key() && fac.first != b.key()) rest.push_back(fac);
    }
    const Monomial base = Monomial::from_sorted(std::move(rest));
    const int hi = std::max(ea, eb);
    const int lo = std::min(ea, eb);
    const Dyadic c = ea > eb ? t.coeff : -t.coeff;
    for (int k = 0; k < hi - lo; ++k) out.add(base * power(a, hi - 1 - k) * power(b, lo + k), c);
  }
  return out.finish();
}

WeylType group_type(WeylType t) { return t == WeylType::B ? WeylType::C : t; }

Polynomial inverse_one_plus(Family f, int count, int max_degree) {
  Polynomial r(1);
  for (int j = 1; j <= count; ++j) {
    Polynomial geo(1);
    Polynomial pw(1);
    for (int e = 1; e <= max_degree; ++e) {
      pw = pw * Polynomial(Variable{f, j});
      geo += e % 2 == 0 ? pw : -pw;
    }
    r = Polynomial::multiply_truncated(r, geo, max_degree);
  }
  return r;
}

Polynomial lookup_or_one(const std::map<int, Polynomial>& m, int key) {
  auto it = m.find(key);
  return it == m.end() ? Polynomial(1) : it->second;
}

/// Index i of the block serving row k (1-based): smallest i with k_i >= k.
std::size_t block_of_row(const Triple& t, int k) {
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    if (t.k[i] >= k) return i;
  }
  throw InvalidTriple("row beyond the rank of the triple");
}

Rational to_rational(const Dyadic& d) {
  Rational r(d.num());
  if (d.log2den() > 0) r /= Rational(boost::multiprecision::cpp_int(1) << d.log2den());
  return r;
}

Dyadic to_dyadic(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int den = boost::multiprecision::denominator(r);
  int shift = 0;
  while (den > 1) {
    if ((den & 1) != 0) throw DomainError("non-dyadic coefficient in product expansion");
    den >>= 1;
    ++shift;
  }
  return Dyadic(boost::multiprecision::numerator(r)).scaled_pow2(-shift);
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

/// e = sum_m m * e_m over y-monomials m, with e_m free of y.
std::map<Monomial, GammaElement, MonoLess> split_y(const GammaElement& e) {
  std::map<Monomial, GammaElement::Combo, MonoLess> acc;
  for (const auto& [la, c] : e.combo()) {
    std::map<Monomial, PolyBuilder, MonoLess> by_mono;
    for (const auto& t : c.terms()) by_mono[t.mono.only(Family::y)].add(t.mono.without(Family::y), t.coeff);
    for (auto& [m, b] : by_mono) acc[m].emplace(la, b.finish());
  }
  std::map<Monomial, GammaElement, MonoLess> out;
  for (auto& [m, combo] : acc) out.emplace(m, GammaElement::from_combo(std::move(combo)));
  return out;
}

/// Integral a with target = sum a_c basis_c, if one exists.
std::optional<std::vector<Dyadic>> solve_in_span(const GammaElement& target, const std::vector<GammaElement>& basis) {
  using Key = std::pair<StrictPartition, Monomial>;
  auto key_less = [](const Key& a, const Key& b) {
    if (a.first != b.first) return a.first < b.first;
    return Monomial::compare(a.second, b.second) < 0;
  };
  std::map<Key, std::size_t, decltype(key_less)> rows(key_less);
  auto row_of = [&](const Key& k) { return rows.try_emplace(k, rows.size()).first->second; };
  const std::size_t nc = basis.size();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(nc + 1);
  auto collect = [&](const GammaElement& e, std::size_t col) {
    for (const auto& [la, c] : e.combo()) {
      for (const auto& t : c.terms()) entries[col].push_back({row_of({la, t.mono}), to_rational(t.coeff)});
    }
  };
  for (std::size_t c = 0; c < nc; ++c) collect(basis[c], c);
  collect(target, nc);
  const std::size_t nr = rows.size();
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc + 1));
  for (std::size_t c = 0; c <= nc; ++c) {
    for (auto& [r, val] : entries[c]) a[r][c] = val;
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < nr; ++c) {
    std::size_t piv = row;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[row]);
    const Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k <= nc; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= nc; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < nr; ++r) {
    if (a[r][nc] != 0) return std::nullopt;
  }
  if (pivots.size() != nc) throw DomainError("Schubert classes are linearly dependent; expansion not unique");
  std::vector<Dyadic> out(nc);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Rational& val = a[r][nc];
    if (boost::multiprecision::denominator(val) != 1) throw DomainError("non-integral product coefficient");
    out[pivots[r]] = to_dyadic(val);
  }
  return out;
}

}  // namespace

const Polynomial& SchubertPolynomial::polynomial() const {
  static const Polynomial zero;
  auto it = value.combo().find(StrictPartition());
  return it == value.combo().end() ? zero : it->second;
}

Polynomial divided_difference(int g, const Polynomial& p, Family side) {
  if (g < 1) throw WrongType("only s_i with i >= 1 act on plain polynomials");
  return transposition_dd(p, side, g);
}

GammaElement divided_difference(int g, const GammaElement& e, WeylType type, Family side) {
  if (g >= 1) {
    return e.map_coefficients([&](const Polynomial& c) { return transposition_dd(c, side, g); });
  }
  const Polynomial v1(Variable{side, 1});
  if (g == 0) {
    if (type != WeylType::B && type != WeylType::C) throw WrongType("s_0 exists only in types B and C");
    const GammaElement diff = e - apply_symmetry(Symmetry::s0(side), e);
    const Polynomial divisor = type == WeylType::C ? v1 * -2 : -v1;
    return diff.map_coefficients([&](const Polynomial& c) { return exact_divide(c, divisor); });
  }
  if (g == kHatOne) {
    if (type != WeylType::D) throw WrongType("s_1hat exists only in type D");
    const GammaElement diff = e - apply_symmetry(Symmetry::s1hat(side), e);
    const Polynomial divisor = -(v1 + Polynomial(Variable{side, 2}));
    return diff.map_coefficients([&](const Polynomial& c) { return exact_divide(c, divisor); });
  }
  throw WrongType("unknown generator " + std::to_string(g));
}

Triple top_triple(int n, WeylType type, bool d_zero) {
  if (type == WeylType::A) throw WrongType("type A top class is a product, not a triple");
  Triple t;
  t.type = type;
  if (type == WeylType::D) {
    const int rows = d_zero ? n : n - 1;
    for (int i = 1; i <= rows; ++i) {
      t.k.push_back(i);
      t.p.push_back(n - i);
      t.q.push_back(n - i);
    }
    return t;
  }
  for (int i = 1; i <= n; ++i) {
    t.k.push_back(i);
    t.p.push_back(n + 1 - i);
    t.q.push_back(n + 1 - i);
  }
  return t;
}

SignedPermutation top_element(int n, WeylType type, bool d_zero) {
  if (type != WeylType::D) return longest_element(n, group_type(type));
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i == 1 && !d_zero ? 1 : -i);
  return SignedPermutation(v);
}

bool uses_d_zero_top(const SignedPermutation& w, int n) { return w.bar_count() % 2 == n % 2; }

SchubertPolynomial top_class(int n, WeylType type, bool d_zero) {
  if (n < 1) throw DomainError("rank must be positive");
  if (type == WeylType::D && n < 2 && !d_zero) {
    return {type, SignedPermutation::identity(n), n, GammaElement(1)};
  }
  if (type == WeylType::A) {
    Polynomial prod(1);
    for (int i = 1; i < n; ++i) {
      for (int j = 1; i + j <= n; ++j) prod = prod * (Polynomial(xv(i)) - Polynomial(yv(j)));
    }
    return {type, longest_element(n, WeylType::A), n, GammaElement(prod)};
  }
  SchubertPolynomial s = vexillary_polynomial(top_triple(n, type, d_zero));
  s.w = top_element(n, type, d_zero);
  s.n = n;
  return s;
}

SchubertPolynomial schubert_along(const SignedPermutation& w, WeylType type, int n, const std::vector<int>& word) {
  const bool dz = type == WeylType::D && uses_d_zero_top(w, n);
  SchubertPolynomial s = top_class(n, type, dz);
  SignedPermutation cur = s.w;
  const WeylType gt = group_type(type);
  for (int g : word) {
    SignedPermutation next = cur.times_generator(g);
    if (length(next, gt) != length(cur, gt) - 1) throw DomainError("word is not a descending reduced word");
    s.value = divided_difference(g, s.value, type);
    cur = std::move(next);
  }
  if (cur != w) throw DomainError("word does not lead to " + w.to_string());
  s.w = w;
  return s;
}

namespace {

SignedPermutation fit_rank(const SignedPermutation& w, int n) {
  if (w.size() > n) {
    SignedPermutation t = w.trimmed();
    if (t.size() > n) throw SizeMismatch(w.to_string() + " is not in rank " + std::to_string(n));
    return t.embedded(n);
  }
  return w.embedded(n);
}

}  // namespace

SchubertPolynomial schubert(const SignedPermutation& w0, WeylType type, int n) {
  const SignedPermutation w = fit_rank(w0, n);
  if (type == WeylType::A && !w.is_unsigned()) throw WrongType("type A takes unsigned permutations");
  const bool dz = type == WeylType::D && uses_d_zero_top(w, n);
  const SignedPermutation top = top_element(n, type, dz);
  const SignedPermutation u = compose(inverse(top), w);
  return schubert_along(w, type, n, reduced_word(u, group_type(type)));
}

std::vector<int> random_descent_word(const SignedPermutation& w0, WeylType type, int n, std::mt19937& rng) {
  const SignedPermutation w = fit_rank(w0, n);
  const bool dz = type == WeylType::D && uses_d_zero_top(w, n);
  SignedPermutation u = compose(inverse(top_element(n, type, dz)), w);
  std::vector<int> word;
  const WeylType gt = group_type(type);
  while (length(u, gt) > 0) {
    const std::vector<int> ds = right_descents(u, gt, n);
    const int g = ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)];
    u = u.times_generator(g);
    word.push_back(g);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

const std::map<SignedPermutation, GammaElement>& schubert_table(WeylType type, int n, int threads) {
  static std::mutex mu;
  static std::map<std::pair<WeylType, int>, std::map<SignedPermutation, GammaElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({type, n}); it != cache.end()) return it->second;

  const WeylType gt = group_type(type);
  std::map<SignedPermutation, GammaElement> table;
  std::map<int, std::vector<SignedPermutation>, std::greater<>> by_length;
  auto add_top = [&](bool dz) {
    SchubertPolynomial s = top_class(n, type, dz);
    by_length[length(s.w, gt)].push_back(s.w);
    table.emplace(s.w, std::move(s.value));
  };
  add_top(false);
  if (type == WeylType::D) add_top(true);

  while (!by_length.empty()) {
    auto layer_it = by_length.begin();
    std::vector<SignedPermutation> layer = std::move(layer_it->second);
    by_length.erase(layer_it);
    std::sort(layer.begin(), layer.end());
    struct Job {
      SignedPermutation target;
      SignedPermutation source;
      int g;
    };
    std::vector<Job> jobs;
    std::set<SignedPermutation> pending;
    for (const auto& w : layer) {
      for (int g : generators(n, gt)) {
        SignedPermutation v = w.times_generator(g);
        if (length(v, gt) >= length(w, gt)) continue;
        if (table.count(v) != 0 || pending.count(v) != 0) continue;
        pending.insert(v);
        jobs.push_back({std::move(v), w, g});
      }
    }
    std::vector<GammaElement> results(jobs.size());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    auto run = [&](int worker) {
      for (std::size_t j = static_cast<std::size_t>(worker); j < jobs.size(); j += static_cast<std::size_t>(workers)) {
        results[j] = divided_difference(jobs[j].g, table.at(jobs[j].source), type);
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
      for (auto& th : pool) th.join();
    }
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      by_length[length(jobs[j].target, gt)].push_back(jobs[j].target);
      table.emplace(std::move(jobs[j].target), std::move(results[j]));
    }
  }
  return cache.emplace(std::make_pair(type, n), std::move(table)).first->second;
}

ChernData schubert_chern_data(const Triple& t) {
  ChernData data;
  const std::vector<int> la = lambda_parts(t);
  const int max_degree = (la.empty() ? 0 : la.front()) + static_cast<int>(la.size()) - 1;
  for (std::size_t i = 0; i < t.k.size(); ++i) {
    const int p = t.p[i];
    const int q = t.q[i];
    switch (t.type) {
      case WeylType::A:
        data.total = Polynomial(1);
        data.quotient_e[p] = one_plus_product(Family::x, p);
        data.quotient_f[q] = inverse_one_plus(Family::y, q, max_degree);
        break;
      case WeylType::B:
      case WeylType::C:
        data.quotient_e[p] = one_plus_product(Family::x, p - 1);
        data.quotient_f[q] = one_plus_product(Family::y, q - 1);
        break;
      case WeylType::D:
        data.quotient_e[p] = one_plus_product(Family::x, p);
        data.quotient_f[q] = one_plus_product(Family::y, q);
        break;
    }
  }
  return data;
}

namespace {

/// Row series of the type A determinant, each truncated at the largest degree its row reads.
std::vector<Polynomial> type_a_row_series(const Triple& t, const std::vector<int>& la, const ChernData& chern) {
  const int r = static_cast<int>(la.size());
  const Polynomial total = chern.total.value_or(Polynomial(1));
  std::vector<Polynomial> out;
  for (int row = 1; row <= r; ++row) {
    const std::size_t i = block_of_row(t, row);
    const int top = la[static_cast<std::size_t>(row - 1)] + r - row;
    Polynomial f = Polynomial::multiply_truncated(lookup_or_one(chern.quotient_e, t.p[i]).truncated(top),
                                                  lookup_or_one(chern.quotient_f, t.q[i]).truncated(top), top);
    out.push_back(Polynomial::multiply_truncated(total.truncated(top), f, top));
  }
  return out;
}

Polynomial series_entry(const std::vector<Polynomial>& rows, const std::vector<int>& la, int i, int j) {
  const int m = la[static_cast<std::size_t>(i)] + j - i;
  return m < 0 ? Polynomial() : rows[static_cast<std::size_t>(i)].homogeneous_part(m);
}

}  // namespace

std::optional<ReductionCertificate> type_a_reduction_certificate(const Triple& t) {
  if (t.type != WeylType::A) throw WrongType("the row-operation certificate is for type A triples");
  const Triple reduced = reduce_redundant(t);
  const std::vector<int> la = lambda_parts(t);
  if (lambda_parts(reduced) != la) return std::nullopt;
  const int r = static_cast<int>(la.size());
  const auto rows = type_a_row_series(t, la, schubert_chern_data(t));
  const auto reduced_rows = type_a_row_series(reduced, la, schubert_chern_data(reduced));
  ReductionCertificate cert;
  cert.reduced = reduced;
  cert.ops.resize(static_cast<std::size_t>(r));
  for (int row = r; row >= 1; --row) {
    const std::size_t bi = block_of_row(t, row);
    const std::size_t bj = block_of_row(reduced, row);
    const int p = t.p[bi];
    const int q = t.q[bi];
    const int P = reduced.p[bj];
    const int Q = reduced.q[bj];
    if (p < P || q > Q) return std::nullopt;
    // Series of this row = series of the reduced row times f.
    Polynomial f(1);
    for (int j = P + 1; j <= p; ++j) f = f * (Polynomial(1) + Polynomial(Variable{Family::x, j}));
    for (int j = q + 1; j <= Q; ++j) f = f * (Polynomial(1) + Polynomial(Variable{Family::y, j}));
    const int offset = la[static_cast<std::size_t>(row - 1)] - row;
    auto& ops = cert.ops[static_cast<std::size_t>(row - 1)];
    for (int d = 1; d <= f.degree(); ++d) {
      const Polynomial fd = f.homogeneous_part(d);
      int target = 0;
      for (int k = row + 1; k <= r && target == 0; ++k) {
        if (block_of_row(reduced, k) == bj && la[static_cast<std::size_t>(k - 1)] - k == offset - d) target = k;
      }
      if (target != 0) {
        ops[target] += fd;
      } else if (offset - d + r - 1 >= 0) {
        return std::nullopt;
      }
    }
    for (int j = 0; j < r; ++j) {
      Polynomial rhs = series_entry(reduced_rows, la, row - 1, j);
      for (const auto& [k, c] : ops) rhs += c * series_entry(reduced_rows, la, k - 1, j);
      if (rhs != series_entry(rows, la, row - 1, j)) return std::nullopt;
    }
  }
  return cert;
}

GammaElement degeneracy_formula(const Triple& t, const ChernData& chern) {
  if (validate(t) == Validity::Invalid) throw InvalidTriple("invalid triple " + t.to_string());
  const std::vector<int> la = lambda_parts(t);
  const int r = static_cast<int>(la.size());
  auto row_factor = [&](int row) {
    const std::size_t i = block_of_row(t, row);
    return lookup_or_one(chern.quotient_e, t.p[i]) * lookup_or_one(chern.quotient_f, t.q[i]);
  };
  switch (t.type) {
    case WeylType::A: {
      std::vector<GeneratorSeries> a;
      for (auto& s : type_a_row_series(t, la, chern)) a.push_back(GeneratorSeries::plain(std::move(s)));
      return GammaElement(multischur_det(la, a));
    }
    case WeylType::B:
    case WeylType::C: {
      std::vector<GeneratorSeries> c;
      for (int row = 1; row <= r; ++row) {
        Polynomial g = row_factor(row);
        c.push_back(chern.total ? GeneratorSeries::plain(*chern.total * g) : GeneratorSeries::q_times(g));
      }
      GammaElement v = multischur_pf(la, c, chern.total ? SkewPolicy::Trust : SkewPolicy::Verify);
      if (t.type == WeylType::B) v = (v * Polynomial(Dyadic::pow2(-r))).with_view(GammaView::GammaPrime);
      return v;
    }
    case WeylType::D: {
      std::vector<DPairedSeries> pairs;
      for (int row = 1; row <= r; ++row) {
        Polynomial g = row_factor(row);
        GeneratorSeries d = chern.total ? GeneratorSeries::plain(*chern.total * g) : GeneratorSeries::q_times(g);
        pairs.push_back({std::move(g), std::move(d)});
      }
      GammaElement v = multischur_pf_D(la, pairs) * Polynomial(Dyadic::pow2(-r));
      return v.with_view(GammaView::GammaPrime);
    }
  }
  throw WrongType("unknown type");
}

SchubertPolynomial vexillary_polynomial(const Triple& t) {
  SchubertPolynomial s;
  s.type = t.type;
  s.value = degeneracy_formula(t, schubert_chern_data(t));
  s.w = t.empty() ? SignedPermutation::identity(1) : w_of_triple(t);
  s.n = s.w.size();
  return s;
}

GammaElement::Combo expand_coeffs(const GammaElement& e, Basis basis) { return e.expand(basis); }

GammaElement top_term(const GammaElement& e, int d) { return e.basis_degree_part(d); }

GammaElement swap_xy(const GammaElement& e) {
  return e.map_coefficients([](const Polynomial& c) { return c.swap_families(Family::x, Family::y); });
}

SchubertPolynomial swap_xy(const SchubertPolynomial& s) {
  SchubertPolynomial out = s;
  out.value = swap_xy(s.value);
  out.w = inverse(s.w);
  return out;
}

std::optional<std::map<SignedPermutation, Polynomial>> product_coefficients(const SignedPermutation& u,
                                                                            const SignedPermutation& v,
                                                                            WeylType type, int n) {
  const WeylType gt = group_type(type);
  const auto& table = schubert_table(type, n);
  const SignedPermutation uu = fit_rank(u, n);
  const SignedPermutation vv = fit_rank(v, n);
  const int d = length(uu, gt) + length(vv, gt);
  const int parity = (uu.bar_count() + vv.bar_count()) % 2;

  // Candidates of each length, with their y = 0 parts.
  std::map<int, std::vector<std::pair<SignedPermutation, std::map<Monomial, GammaElement, MonoLess>>>> by_length;
  for (const auto& [w, value] : table) {
    if (type == WeylType::D && w.bar_count() % 2 != parity) continue;
    const int l = length(w, gt);
    if (l <= d) by_length[l].emplace_back(w, split_y(value));
  }

  GammaElement residual = table.at(uu) * table.at(vv);
  std::map<SignedPermutation, PolyBuilder> acc;
  for (int j = 0; j <= d && !residual.is_zero(); ++j) {
    const auto& candidates = by_length[d - j];
    std::vector<GammaElement> basis;
    for (const auto& [w, parts] : candidates) {
      auto it = parts.find(Monomial());
      basis.push_back(it == parts.end() ? GammaElement() : it->second);
    }
    GammaElement step;
    for (const auto& [m, part] : split_y(residual)) {
      if (m.degree() != j) continue;
      auto sol = solve_in_span(part, basis);
      if (!sol) return std::nullopt;
      for (std::size_t c = 0; c < sol->size(); ++c) {
        const Dyadic& a = (*sol)[c];
        if (a.is_zero()) continue;
        const SignedPermutation& w = candidates[c].first;
        acc[w].add(m, a);
        step += table.at(w) * Polynomial(m, a);
      }
    }
    residual -= step;
  }
  if (!residual.is_zero()) return std::nullopt;
  std::map<SignedPermutation, Polynomial> out;
  for (auto& [w, b] : acc) {
    Polynomial p = b.finish();
    if (!p.is_zero()) out.emplace(w, std::move(p));
  }
  return out;
}

}  // namespace vex
