#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vex/gamma.hpp"
#include "vex/partition.hpp"
#include "vex/triples.hpp"

namespace vex {

/// Truncated Laurent series in h_1..h_r, polynomial in u_1..u_r.
///
/// h_i has weight r + 1 - i and u_i weight 0, so h_i/h_j (i < j) has weight
/// j - i > 0. Terms of weight above the window are dropped; since every
/// element used here has nonnegative weight, the truncation is a ring quotient.
class Laurent {
 public:
  using Key = std::vector<int>;  // h_1..h_r exponents, then u_1..u_r

  Laurent(int r, int window);
  static Laurent constant(int r, int window, const Dyadic& c);
  /// Nonzero c * h^h * u^u (h and u sized r). Zero when above the window.
  static Laurent monomial(int r, int window, const std::vector<int>& h, const std::vector<int>& u,
                          const Dyadic& c = Dyadic(1));
  static Laurent h_power(int r, int window, int i, int e);
  static Laurent u_power(int r, int window, int i, int e);

  int rank() const { return r_; }
  int window() const { return window_; }
  const std::map<Key, Dyadic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int weight(const Key& k) const;
  /// Smallest weight of a term; 0 for zero.
  int min_weight() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(Laurent a, const Dyadic& c);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  /// ζ_J: h_j -> 0 for j in J (1-based). Throws DomainError on a negative h_j exponent.
  Laurent zeta(const std::vector<int>& J) const;

  std::string to_string() const;

 private:
  void add(const Key& k, const Dyadic& c);
  void check_compatible(const Laurent& o) const;

  int r_;
  int window_;
  std::map<Key, Dyadic> terms_;
};

/// f[i,j] = (1 - h_i/h_j)/(1 + h_i/h_j), expanded in h_i/h_j for i < j and
/// defined by skew-symmetry for i > j. Indices are 1-based.
Laurent f_pair(int i, int j, int r, int window);
/// f[I]: Pfaffian of (f[i,j]) with border f[k] = 1.
Laurent f_index(const std::vector<int>& I, int r, int window);
/// f[I] == prod_{i<j} f[i,j] within the window.
bool f_index_identity(const std::vector<int>& I, int r, int window);

/// ε(k, K): -1 for an odd element of K (position 1, 3, ...), 1 for an even one.
int epsilon(int k, const std::vector<int>& K);
/// sgn(K, J) = (-1)^{|J||K|} (-1)^{#odd elements of J}, parity taken in K.
int sgn(const std::vector<int>& K, const std::vector<int>& J);
/// Both sign identities for every J ⊆ K.
bool lemma_A1_check(const std::vector<int>& K);

/// Pf of the operator matrix (f̃[i,j]) on K applied to x; λ is indexed by 1..r.
Laurent operator_pfaffian(const std::vector<int>& la, const std::vector<int>& K, const Laurent& x);
/// sum_{I ⊔ J = K} sgn(K, J) h^I u^J f[I] ζ_J (x).
Laurent operator_expansion(const std::vector<int>& la, const std::vector<int>& K, const Laurent& x);
/// f̃[i,j] applied to x, from its definition through f[i,j] (i != j).
Laurent f_tilde_definition(const std::vector<int>& la, int i, int j, const Laurent& x);
/// f̃[i,j] applied to x in the factored form (i < j).
Laurent f_tilde_factored(const std::vector<int>& la, int i, int j, const Laurent& x);
/// h^a u^b with exponents bounded by 4, 2, 1 for |K| = 1, 2, 3, each with and without u_{K_1}.
std::vector<Laurent> test_monomials(const std::vector<int>& K, int r, int window);
/// Default window: weight of h^λ_K times the heaviest test monomial, plus 2.
int default_window(const std::vector<int>& la, const std::vector<int>& K);
/// Both sides agree on every test monomial. Throws WindowTooSmall when a
/// leading term would be cut.
bool prop_A1_check(const TypeDPartition& la, const std::vector<int>& K, const std::vector<Laurent>& tests, int window);

/// Sign attached to d(k)_{λ_k+m-j} H_j in the pushforward.
enum class PushforwardSign { Alternating, Plain };

/// Data of the maps (φ_k)_*: A_k -> A_{k-1}. Indices k are 1-based.
struct PushforwardData {
  std::vector<int> lambda;
  /// d(k)_n; called only with 0 <= n <= max_index.
  std::function<GammaElement(int k, int n)> d;
  /// g(k)_n; empty for the degenerate setting (u = 0, no halves).
  std::function<Polynomial(int k, int n)> g;
  int max_index = 0;
  PushforwardSign sign = PushforwardSign::Plain;
};

/// H^(k) = prod_{i<k} (1 - h_i)/(1 + h_i) up to the given degree.
Polynomial h_series(int k, int max_degree);
/// (φ_k)_* on an element of Γ[t, h_1..h_k]. Throws WindowTooSmall past max_index.
GammaElement pushforward_step(int k, const GammaElement& e, const PushforwardData& data);
/// (φ_1)_* ... (φ_r)_*(start).
GammaElement pushforward_compose(const PushforwardData& data, const Polynomial& start = Polynomial(1));

/// Test data g(k) = prod_{j <= λ_k} (1 + t_j), d(k) = F g(k) with F F* = 1 up
/// to degree top, F = prod_{i=1,2} (1 + z_i)/(1 - z_i).
struct PairedTestData {
  std::vector<Polynomial> g;
  std::vector<Polynomial> d;
  int top = 0;
};
PairedTestData paired_test_data(const TypeDPartition& la);

/// (φ_1)_*...(φ_r)_*(1) == 2^-r Pf_λ(g|d). Throws RelationViolated if the data break d(k)d(l)* = g(k)g(l)*.
bool prop_A2_check(const TypeDPartition& la, PushforwardSign sign);
bool prop_A2_check(const TypeDPartition& la, const PairedTestData& data, PushforwardSign sign);

/// Degenerate setting on a type C triple: φ_*(h^m) against Pf_{λ+m}(c(1), ..., c(s))
/// with c(k) from the Schubert Chern data, and against the vexillary polynomial at m = 0.
bool gysin_type_c_check(const Triple& t, const std::vector<int>& m, PushforwardSign sign);

}  // namespace vex
