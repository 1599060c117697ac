#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "vex/gamma.hpp"
#include "vex/triples.hpp"
#include "vex/weyl.hpp"

namespace vex {

/// A double Schubert polynomial together with its index.
/// Type A values live in the scalar part (no Q terms).
struct SchubertPolynomial {
  WeylType type = WeylType::C;
  SignedPermutation w;
  int n = 0;
  GammaElement value;

  const Polynomial& polynomial() const;
  int degree() const { return value.degree(); }
};

/// ∂_g on Γ[x, y] for generator g (kHatOne, 0, 1, 2, ...), acting on the x or the y variables.
GammaElement divided_difference(int g, const GammaElement& e, WeylType type, Family side = Family::x);
Polynomial divided_difference(int g, const Polynomial& p, Family side = Family::x);

/// Triple whose polynomial is the top class of W_n; d_zero picks the type D
/// variant with λ ending in 0.
Triple top_triple(int n, WeylType type, bool d_zero = false);
SchubertPolynomial top_class(int n, WeylType type, bool d_zero = false);
/// Longest element reached by top_class (for type D, depends on d_zero).
SignedPermutation top_element(int n, WeylType type, bool d_zero = false);
/// For type D: whether w descends from the d_zero top.
bool uses_d_zero_top(const SignedPermutation& w, int n);

/// Schubert polynomial of w ∈ W_n by divided differences from the top class,
/// following the leftmost-descent word.
SchubertPolynomial schubert(const SignedPermutation& w, WeylType type, int n);
/// Same, along a given reduced word a_1..a_l of top^-1 w (∂_{a_1} applied first).
SchubertPolynomial schubert_along(const SignedPermutation& w, WeylType type, int n, const std::vector<int>& word);
/// A reduced word of top^-1 w built from random descents.
std::vector<int> random_descent_word(const SignedPermutation& w, WeylType type, int n, std::mt19937& rng);

/// Every Schubert polynomial of W_n (plus the odd coset for type D), computed
/// once by walking down from the top. Cached per (type, n).
const std::map<SignedPermutation, GammaElement>& schubert_table(WeylType type, int n, int threads = 1);

/// 𝐐_τ / 𝐏_τ / 𝐑_τ / type A determinant.
SchubertPolynomial vexillary_polynomial(const Triple& t);

/// Basis coefficients of e.
GammaElement::Combo expand_coeffs(const GammaElement& e, Basis basis);
/// Terms Q_λ with |λ| == d.
GammaElement top_term(const GammaElement& e, int d);

/// x_i <-> y_i; w becomes w^-1.
SchubertPolynomial swap_xy(const SchubertPolynomial& s);
GammaElement swap_xy(const GammaElement& e);

/// Formal Chern data of the degeneracy setting. total is c(V - E - F) (or
/// the formal Q when absent); quotient_e[p] and quotient_f[q] are c(E/E_p) and c(F/F_q).
struct ChernData {
  std::optional<Polynomial> total;
  std::map<int, Polynomial> quotient_e;
  std::map<int, Polynomial> quotient_f;
};

/// The Pfaffian/determinant of the triple with the Chern data substituted.
GammaElement degeneracy_formula(const Triple& t, const ChernData& chern);
/// Chern data reproducing the Schubert variables: x for E, y for F.
ChernData schubert_chern_data(const Triple& t);

/// Row operations taking the type A determinant of a redundant triple to that
/// of its reduction: row i of the first equals row i of the second plus
/// sum_k ops[i-1][k] * row k (k > i), checked entry by entry. Unitriangular,
/// so the two determinants agree.
struct ReductionCertificate {
  Triple reduced;
  std::vector<std::map<int, Polynomial>> ops;
};
std::optional<ReductionCertificate> type_a_reduction_certificate(const Triple& t);

/// c_{uv}^w in ℭ_u ℭ_v = sum_w c_{uv}^w ℭ_w over w ∈ W_n; empty when the span
/// of W_n is too small (products from W_m may need rank 2m). Throws DomainError on a non-integral solution.
std::optional<std::map<SignedPermutation, Polynomial>> product_coefficients(const SignedPermutation& u,
                                                                            const SignedPermutation& v,
                                                                            WeylType type, int n);

}  // namespace vex
