#include "vex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "vex/appendix.hpp"
#include "vex/errors.hpp"
#include "vex/io.hpp"
#include "vex/multischur.hpp"
#include "vex/schubert.hpp"
#include "vex/triples.hpp"

namespace vex {

void Report::check(bool ok, const std::string& what) {
  if (ok) return;
  pass = false;
  failures.push_back(what);
}

namespace {

WeylType combinatorial(WeylType t) { return t == WeylType::B ? WeylType::C : t; }

std::vector<WeylType> types_or(const VerifyOptions& opts, std::vector<WeylType> all) {
  if (opts.type) return {*opts.type};
  return all;
}

std::string tname(WeylType t) { return std::string(1, type_char(t)); }

/// Runs fn(i) for i in [0, count) on up to `threads` workers; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, int threads, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return out;
}

void bound(int value, int lo, int hi, const char* name) {
  if (value < lo || value > hi) {
    throw BoundExceeded(std::string(name) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

void census(Report& rep, const VerifyOptions& opts) {
  const int n = opts.n.value_or(3);
  bound(n, 1, 5, "--n");
  std::map<WeylType, std::string> count;
  for (WeylType t : {WeylType::C, WeylType::D}) {
    const auto group = enumerate_group(n, t);
    int vex = 0;
    for (const auto& w : group) {
      const auto tau = triple_of_w(w, t);
      if (!tau) continue;
      ++vex;
      const SignedPermutation back = tau->empty() ? SignedPermutation() : w_of_triple(*tau).trimmed();
      rep.check(back == w.trimmed(), tname(t) + " round trip " + w.to_string());
    }
    count[t] = std::to_string(vex) + "/" + std::to_string(group.size());
    if (n == 3) rep.check(vex == (t == WeylType::C ? 33 : 18), tname(t) + " count " + std::to_string(vex));
  }
  rep.lines.push_back("C: " + count[WeylType::C] + " vexillary, D: " + count[WeylType::D]);
  if (n == 3) {
    const SignedPermutation w = parse_word("-3 2 -1");
    const bool vexillary = triple_of_w(w, WeylType::C).has_value();
    const GammaElement top = top_term(schubert(w, WeylType::C, 3).value, length(w, WeylType::C));
    rep.lines.push_back("witness " + w.to_string() + ": " + (vexillary ? "vexillary" : "not vexillary") +
                        ", top term " + render_gamma(top, Basis::Q, Format::Plain));
    const GammaElement expect = GammaElement::q_basis(StrictPartition({3, 2})) + GammaElement::q_basis(StrictPartition({4, 1}));
    rep.check(!vexillary && top == expect, "witness top term " + render_gamma(top, Basis::Q, Format::Plain));
  }
}

void theorem_equivalence(Report& rep, const VerifyOptions& opts) {
  const int n = opts.n.value_or(3);
  bound(n, 1, 4, "--n");
  for (WeylType t : types_or(opts, {WeylType::A, WeylType::B, WeylType::C, WeylType::D})) {
    const auto& table = schubert_table(t, n, opts.threads);
    std::vector<std::pair<SignedPermutation, Triple>> cases;
    for (const auto& [w, value] : table) {
      auto tau = triple_of_w(w, combinatorial(t));
      if (!tau) continue;
      tau->type = t;
      cases.emplace_back(w, *tau);
    }
    const auto ok = parallel_map<char>(cases.size(), opts.threads, [&](std::size_t i) -> char {
      return vexillary_polynomial(cases[i].second).value == table.at(cases[i].first);
    });
    for (std::size_t i = 0; i < cases.size(); ++i) {
      rep.check(ok[i] != 0, tname(t) + " " + cases[i].first.to_string() + " via " + cases[i].second.to_string());
    }
    rep.lines.push_back(tname(t) + " W_" + std::to_string(n) + ": " + std::to_string(cases.size()) +
                        " vexillary elements compared");
  }
}

void stability(Report& rep, const VerifyOptions& opts) {
  const int n = opts.n.value_or(3);
  bound(n, 1, 3, "--n");
  std::mt19937 rng(static_cast<std::mt19937::result_type>(opts.seed));
  for (WeylType t : types_or(opts, {WeylType::A, WeylType::B, WeylType::C, WeylType::D})) {
    const auto& table = schubert_table(t, n, opts.threads);
    const auto& bigger = schubert_table(t, n + 1, opts.threads);
    std::vector<std::pair<SignedPermutation, std::vector<int>>> routes;
    for (const auto& [w, value] : table) routes.emplace_back(w, random_descent_word(w, t, n, rng));
    const auto ok = parallel_map<char>(routes.size(), opts.threads, [&](std::size_t i) -> char {
      return schubert_along(routes[i].first, t, n, routes[i].second).value == table.at(routes[i].first);
    });
    for (std::size_t i = 0; i < routes.size(); ++i) {
      const auto& w = routes[i].first;
      rep.check(ok[i] != 0, tname(t) + " route " + w.to_string());
      const auto it = bigger.find(w.embedded(n + 1));
      rep.check(it != bigger.end() && it->second == table.at(w), tname(t) + " embedding " + w.to_string());
    }
    rep.lines.push_back(tname(t) + " W_" + std::to_string(n) + ": " + std::to_string(table.size()) +
                        " elements, two routes and W_" + std::to_string(n + 1) + " embedding");
  }
}

void b_scaling(Report& rep, const VerifyOptions& opts) {
  const int n = opts.n.value_or(3);
  bound(n, 1, 4, "--n");
  const auto& b = schubert_table(WeylType::B, n, opts.threads);
  const auto& c = schubert_table(WeylType::C, n, opts.threads);
  for (const auto& [w, value] : c) {
    rep.check(b.at(w) == value * Polynomial(Dyadic::pow2(-w.bar_count())), w.to_string());
  }
  rep.lines.push_back("B = 2^-bars C on " + std::to_string(c.size()) + " elements of W_" + std::to_string(n));
}

void inverse_swap(Report& rep, const VerifyOptions& opts) {
  const int n = opts.n.value_or(3);
  bound(n, 1, 4, "--n");
  for (WeylType t : types_or(opts, {WeylType::B, WeylType::C, WeylType::D})) {
    const auto& table = schubert_table(t, n, opts.threads);
    for (const auto& [w, value] : table) {
      const auto it = table.find(inverse(w));
      // Type A: S_{w^-1}(x, y) = S_w(-y, -x) = (-1)^l(w) S_w(y, x).
      const bool odd = t == WeylType::A && length(w, WeylType::A) % 2 == 1;
      const GammaElement expect = odd ? -swap_xy(value) : swap_xy(value);
      rep.check(it != table.end() && it->second == expect, tname(t) + " " + w.to_string());
    }
    rep.lines.push_back(tname(t) + " W_" + std::to_string(n) + ": " + std::to_string(table.size()) + " elements" +
                        (t == WeylType::A ? " (with the sign (-1)^l(w))" : ""));
  }
}

void redundancy(Report& rep, const VerifyOptions& opts) {
  std::mt19937 rng(static_cast<std::mt19937::result_type>(opts.seed));
  // Entry skew-symmetry with c(k) = Q prod_{j in S} (1 + t_j), |S| < λ_k.
  int skew = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> lam(1, 5);
    const int lk = lam(rng);
    const int ll = lam(rng);
    auto random_series = [&](int bound_) {
      std::vector<int> pool{1, 2, 3, 4, 5, 6};
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, bound_ - 1)(rng)));
      return GeneratorSeries::q_times(one_plus_product(Family::t, pool));
    };
    const GeneratorSeries ck = random_series(lk);
    const GeneratorSeries cl = random_series(ll);
    const bool ok = (multischur_entry(lk, ll, ck, cl) + multischur_entry(ll, lk, cl, ck)).is_zero() &&
                    multischur_entry(lk, lk, ck, ck).is_zero();
    rep.check(ok, "skew trial " + std::to_string(trial) + " (" + std::to_string(lk) + "," + std::to_string(ll) + ")");
    ++skew;
  }
  rep.lines.push_back(std::to_string(skew) + " randomized skew-symmetry checks");

  const Triple worked = parse_triple("k=1,2,3,4,5,6,7,8;p=7,7,6,6,5,4,3,2;q=4,5,6,7,7,7,9,9;type=A");
  const Triple reduced = reduce_redundant(worked);
  const auto cert = type_a_reduction_certificate(worked);
  rep.check(validate(worked) == Validity::Redundant, "worked type A triple is not redundant");
  rep.check(w_of_triple(worked) == w_of_triple(reduced), "worked type A triple changes w");
  rep.check(cert.has_value() && cert->reduced == reduced, "no row-operation certificate for the worked type A triple");
  rep.lines.push_back("type A " + worked.to_string() + " -> " + reduced.to_string() + ": " +
                      (cert ? "determinants equal by certificate" : "no certificate"));

  std::vector<Triple> picks;
  for (WeylType t : {WeylType::C, WeylType::D}) {
    auto all = enumerate_triples(t, 3, 3, 3, true);
    std::shuffle(all.begin(), all.end(), rng);
    if (all.size() > 25) all.resize(25);
    picks.insert(picks.end(), all.begin(), all.end());
  }
  const auto ok = parallel_map<char>(picks.size(), opts.threads, [&](std::size_t i) -> char {
    const Triple red = reduce_redundant(picks[i]);
    return w_of_triple(picks[i]) == w_of_triple(red) &&
           vexillary_polynomial(picks[i]).value == vexillary_polynomial(red).value;
  });
  for (std::size_t i = 0; i < picks.size(); ++i) rep.check(ok[i] != 0, "redundant " + picks[i].to_string());
  rep.lines.push_back(std::to_string(picks.size()) + " random redundant C/D triples");
}

std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) s.push_back(pool[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void lemma25(Report& rep, const VerifyOptions& opts) {
  struct Case {
    int k, l;
    std::vector<int> nu;
    bool hypothesis;
  };
  std::vector<Case> cases;
  for (int k = 2; k <= 4; ++k) {
    for (int l = 1; l < k; ++l) {
      for (auto nu : subsets_of({4, 3, 2, 1})) {
        if (nu.empty()) continue;
        std::sort(nu.rbegin(), nu.rend());
        const int nu2 = nu.size() > 1 ? nu[1] : 0;
        cases.push_back({k, l, nu, nu[0] < k || nu2 < l});
      }
    }
  }
  const auto zero = parallel_map<char>(cases.size(), opts.threads, [&](std::size_t i) -> char {
    const Case& c = cases[i];
    const GeneratorSeries ck = GeneratorSeries::q_times(one_plus_product(Family::t, c.k - 1));
    const GeneratorSeries cl = GeneratorSeries::q_times(one_plus_product(Family::t, c.l - 1));
    return specialize_oracle(q_pair(c.k, c.l, ck, cl), NegT{c.nu}).is_zero();
  });
  int in = 0;
  int outside_nonzero = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    std::string nu;
    for (int v : c.nu) nu += (nu.empty() ? "" : ",") + std::to_string(v);
    if (c.hypothesis) {
      ++in;
      rep.check(zero[i] != 0, "Q_{" + std::to_string(c.k) + "," + std::to_string(c.l) + "} at nu=(" + nu + ")");
    } else if (zero[i] == 0) {
      ++outside_nonzero;
    }
  }
  rep.lines.push_back(std::to_string(in) + " cases within the hypothesis vanish; " +
                      std::to_string(outside_nonzero) + " of " + std::to_string(cases.size() - static_cast<std::size_t>(in)) +
                      " outside it do not");
}

/// Pads μ with a 0 to the length parity of λ, then adds 1 to every part.
StrictPartition shifted(const StrictPartition& mu, int parity) {
  std::vector<int> parts = mu.parts();
  if (static_cast<int>(parts.size()) % 2 != parity) parts.push_back(0);
  return TypeDPartition(parts).plus();
}

bool same_shifted(const GammaElement::Combo& r, const GammaElement::Combo& p, int parity) {
  if (r.size() != p.size()) return false;
  for (const auto& [mu, coeff] : r) {
    const auto it = p.find(shifted(mu, parity));
    if (it == p.end() || it->second != coeff) return false;
  }
  return true;
}

void identity_2_3(Report& rep, const VerifyOptions& opts) {
  const auto partitions = typed_partitions_bounded(5);
  const auto ok2 = parallel_map<char>(partitions.size(), opts.threads, [&](std::size_t i) -> char {
    const TypeDPartition& la = partitions[i];
    return same_shifted(expand_coeffs(r_lambda_t(la), Basis::P), expand_coeffs(p_lambda_t(la.plus()), Basis::P),
                        la.length() % 2);
  });
  for (std::size_t i = 0; i < partitions.size(); ++i) rep.check(ok2[i] != 0, "(2) at " + partitions[i].to_string());
  rep.lines.push_back("(2): " + std::to_string(partitions.size()) + " type D partitions with parts <= 5");

  const auto triples = enumerate_triples(WeylType::D, 3, 3, 3);
  const auto ok3 = parallel_map<char>(triples.size(), opts.threads, [&](std::size_t i) -> char {
    const Triple& d = triples[i];
    Triple b = plus_map(d);
    b.type = WeylType::B;
    return same_shifted(expand_coeffs(vexillary_polynomial(d).value, Basis::P),
                        expand_coeffs(vexillary_polynomial(b).value, Basis::P), lambda_of_d(d).length() % 2);
  });
  for (std::size_t i = 0; i < triples.size(); ++i) rep.check(ok3[i] != 0, "(3) at " + triples[i].to_string());
  rep.lines.push_back("(3): " + std::to_string(triples.size()) + " type D triples with k_s, p_1, q_1 <= 3");
}

std::vector<std::vector<int>> all_subsets_of_range(int r) {
  std::vector<int> pool;
  for (int i = 1; i <= r; ++i) pool.push_back(i);
  auto subsets = subsets_of(pool);
  subsets.erase(subsets.begin());
  return subsets;
}

/// Type D partitions with parts <= max_part and 1..max_len parts.
std::vector<TypeDPartition> small_type_d(int max_part, int max_len) {
  std::vector<TypeDPartition> out;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cur) {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    const int top = cur.empty() ? max_part : cur.back() - 1;
    for (int v = top; v >= 0; --v) {
      cur.push_back(v);
      grow(cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  grow(cur);
  return out;
}

void appendix_a1(Report& rep, const VerifyOptions& opts) {
  int lemma = 0;
  for (const auto& K : all_subsets_of_range(6)) {
    rep.check(lemma_A1_check(K), "sign lemma at |K|=" + std::to_string(K.size()));
    ++lemma;
  }
  rep.lines.push_back("sign lemma: " + std::to_string(lemma) + " index sets K in [6], all J");

  int products = 0;
  for (const auto& I : all_subsets_of_range(4)) {
    rep.check(f_index_identity(I, 4, 8), "f[I] product identity, |I|=" + std::to_string(I.size()));
    ++products;
  }
  rep.lines.push_back("f[I] = prod f[i,j]: " + std::to_string(products) + " sets I in [4], window 8");

  struct Case {
    TypeDPartition la;
    std::vector<int> K;
  };
  std::vector<Case> cases;
  for (const auto& la : small_type_d(4, 3)) {
    for (const auto& K : all_subsets_of_range(la.length())) cases.push_back({la, K});
  }
  const auto ok = parallel_map<char>(cases.size(), opts.threads, [&](std::size_t i) -> char {
    const auto& c = cases[i];
    const int w = default_window(c.la.parts(), c.K);
    return prop_A1_check(c.la, c.K, test_monomials(c.K, c.la.length(), w), w);
  });
  for (std::size_t i = 0; i < cases.size(); ++i) {
    rep.check(ok[i] != 0, "operator Pfaffian at " + cases[i].la.to_string() + " |K|=" + std::to_string(cases[i].K.size()));
  }
  rep.lines.push_back("operator Pfaffian expansion: " + std::to_string(cases.size()) + " (λ, K) with parts <= 4, |K| <= 3");
}

void appendix_a2(Report& rep, const VerifyOptions& opts) {
  const int r = opts.r.value_or(3);
  bound(r, 1, 3, "--r");
  const auto partitions = small_type_d(4, r);
  const auto ok = parallel_map<char>(partitions.size(), opts.threads, [&](std::size_t i) -> char {
    return prop_A2_check(partitions[i], PushforwardSign::Plain);
  });
  for (std::size_t i = 0; i < partitions.size(); ++i) rep.check(ok[i] != 0, "pushforward at " + partitions[i].to_string());
  rep.lines.push_back("pushforward Pfaffian: " + std::to_string(partitions.size()) + " λ with parts <= 4, length <= " +
                      std::to_string(r));

  int alt_fail = 0;
  for (const auto& la : partitions) alt_fail += prop_A2_check(la, PushforwardSign::Alternating) ? 0 : 1;
  rep.lines.push_back("with (-1)^j on the d(k) terms: " + std::to_string(alt_fail) + " of " +
                      std::to_string(partitions.size()) + " fail (sign-free form used)");

  const Triple t1 = parse_triple("k=2;p=2;q=2;type=C");
  const Triple t2 = parse_triple("k=1,2;p=3,2;q=2,1;type=C");
  int gysin = 0;
  for (const auto& m : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}}) {
    rep.check(gysin_type_c_check(t1, m, PushforwardSign::Plain), "degenerate Gysin on " + t1.to_string());
    ++gysin;
  }
  for (const auto& m : std::vector<std::vector<int>>{{0, 0}, {1, 1}}) {
    rep.check(gysin_type_c_check(t2, m, PushforwardSign::Plain), "degenerate Gysin on " + t2.to_string());
    ++gysin;
  }
  rep.lines.push_back("degenerate type C Gysin: " + std::to_string(gysin) + " exponent vectors on " + t1.to_string() +
                      " and " + t2.to_string());
}

void positivity(Report& rep, const VerifyOptions& opts) {
  const int n = opts.n.value_or(3);
  bound(n, 1, 4, "--n");
  int negative = 0;
  const auto& table = schubert_table(WeylType::C, n, opts.threads);
  for (const auto& [w, value] : table) {
    for (const auto& [la, c] : value.combo()) {
      if (c.all_coefficients_nonnegative()) continue;
      ++negative;
      rep.check(false, w.to_string() + " at Q" + la.to_string() + ": " + c.to_string());
    }
  }
  rep.lines.push_back("C W_" + std::to_string(n) + ": " + std::to_string(table.size()) + " elements, " +
                      std::to_string(negative) + " Q-coefficients with a negative term");
}

void type_a(Report& rep, const VerifyOptions& opts) {
  const int n = opts.n.value_or(4);
  bound(n, 1, 5, "--n");
  int vex = 0;
  const auto& table = schubert_table(WeylType::A, n, opts.threads);
  for (const auto& [w, value] : table) {
    const auto tau = triple_of_w(w, WeylType::A);
    if (!tau) continue;
    ++vex;
    rep.check(vexillary_polynomial(*tau).polynomial() == value.scalar_part(), "determinant at " + w.to_string());
  }
  rep.lines.push_back("S_" + std::to_string(n) + ": " + std::to_string(vex) + " vexillary determinants");

  const Triple worked = parse_triple("k=2,6,8;p=7,4,2;q=5,7,9;type=A");
  const SignedPermutation w = w_of_triple(worked);
  rep.check(w == parse_word("1 10 8 9 2 3 6 4 5 7"), "w of " + worked.to_string() + " is " + w.to_string());
  rep.lines.push_back("w(" + worked.to_string() + ") = " + w.to_string());

  const Triple redundant = parse_triple("k=1,2,3,4,5,6,7,8;p=7,7,6,6,5,4,3,2;q=4,5,6,7,7,7,9,9;type=A");
  const Triple reduced = reduce_redundant(redundant);
  rep.check(reduced == worked, "reduction gives " + reduced.to_string());
  const auto cert = type_a_reduction_certificate(redundant);
  rep.check(cert.has_value(), "no row-operation certificate");
  rep.lines.push_back("reduction " + reduced.to_string() + (cert ? ", row-operation certificate checked" : ""));
}

using SuiteFn = void (*)(Report&, const VerifyOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"census", census},
      {"theorem-equivalence", theorem_equivalence},
      {"stability", stability},
      {"b-scaling", b_scaling},
      {"inverse-swap", inverse_swap},
      {"redundancy", redundancy},
      {"lemma25", lemma25},
      {"identity-2-3", identity_2_3},
      {"appendix-a1", appendix_a1},
      {"appendix-a2", appendix_a2},
      {"positivity", positivity},
      {"type-a", type_a},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"census",       "theorem-equivalence", "stability",   "b-scaling",
                                              "inverse-swap", "redundancy",          "lemma25",     "identity-2-3",
                                              "appendix-a1",  "appendix-a2",         "positivity",  "type-a"};
  return names;
}

Report run_suite(const std::string& name, const VerifyOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuite("unknown suite: " + name);
  Report rep;
  rep.suite = name;
  const auto start = std::chrono::steady_clock::now();
  it->second(rep, opts);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace vex
