#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "vex/partition.hpp"
#include "vex/polynomial.hpp"

namespace vex {

enum class Basis { Q, P };

/// Display hint: elements of the Q-ring or of its P-extension. Arithmetic is
/// shared; P_λ is stored as 2^-len(λ) Q_λ.
enum class GammaView { Gamma, GammaPrime };

/// Finite combination sum_λ c_λ Q_λ with polynomial coefficients c_λ.
class GammaElement {
 public:
  using Combo = std::map<StrictPartition, Polynomial>;

  GammaElement() = default;
  GammaElement(Polynomial scalar);  // NOLINT(google-explicit-constructor)
  GammaElement(long long c) : GammaElement(Polynomial(c)) {}  // NOLINT(google-explicit-constructor)

  /// Q_λ.
  static GammaElement q_basis(const StrictPartition& la);
  /// P_λ = 2^-len(λ) Q_λ.
  static GammaElement p_basis(const StrictPartition& la);
  static GammaElement from_combo(Combo combo, GammaView view = GammaView::Gamma);

  const Combo& combo() const { return combo_; }
  GammaView view() const { return view_; }
  GammaElement with_view(GammaView v) const;
  bool is_zero() const { return combo_.empty(); }
  std::size_t size() const { return combo_.size(); }

  /// Coefficient of Q_λ (Basis::Q) or of P_λ (Basis::P).
  Polynomial coefficient(const StrictPartition& la, Basis basis = Basis::Q) const;
  /// Coefficients in the chosen basis (zero coefficients omitted).
  Combo expand(Basis basis) const;
  /// Scalar part (coefficient of Q_()).
  Polynomial scalar_part() const { return coefficient(StrictPartition()); }

  /// Max of |λ| + deg(c_λ); -1 for zero.
  int degree() const;
  bool is_homogeneous(int d) const;
  /// Sum of terms with |λ| + deg == d (term-wise on coefficients).
  GammaElement homogeneous_part(int d) const;
  /// Terms with |λ| == d.
  GammaElement basis_degree_part(int d) const;

  GammaElement operator-() const;
  GammaElement& operator+=(const GammaElement& o);
  GammaElement& operator-=(const GammaElement& o);
  GammaElement& operator*=(const Polynomial& c);
  friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
  friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
  friend GammaElement operator*(GammaElement a, const Polynomial& c) { return a *= c; }
  friend GammaElement operator*(const Polynomial& c, GammaElement a) { return a *= c; }
  friend GammaElement operator*(const GammaElement& a, const GammaElement& b);
  /// Equality of mathematical value; the view flag is not compared.
  friend bool operator==(const GammaElement& a, const GammaElement& b) { return a.combo_ == b.combo_; }
  friend bool operator!=(const GammaElement& a, const GammaElement& b) { return !(a == b); }

  /// Applies fn to each coefficient.
  GammaElement map_coefficients(const std::function<Polynomial(const Polynomial&)>& fn) const;
  /// Unstraightened form: Q_λ replaced by its Pfaffian in the generators q_k.
  Polynomial to_generator_form() const;

  std::string to_string(Basis basis = Basis::Q) const;

 private:
  void add_term(const StrictPartition& la, const Polynomial& c);

  Combo combo_;
  GammaView view_ = GammaView::Gamma;
};

std::ostream& operator<<(std::ostream& os, const GammaElement& e);

/// Formal series (Q·)g with g a finite polynomial of constant term 1.
struct GeneratorSeries {
  bool has_q = true;
  Polynomial multiplier = Polynomial(1);

  GeneratorSeries() = default;
  GeneratorSeries(bool with_q, Polynomial g);

  static GeneratorSeries q_times(Polynomial g) { return {true, std::move(g)}; }
  static GeneratorSeries plain(Polynomial g) { return {false, std::move(g)}; }
};

/// Generator variable q_k as a gen-form polynomial (q_0 = 1, q_k = 0 for k < 0).
Polynomial gen(int k);

/// Pfaffian of (Q_{λ_i λ_j}) written in the generators q_k.
const Polynomial& pf_expansion(const StrictPartition& la);

/// Rewrites a gen-form polynomial in the Q_λ basis.
GammaElement straighten(const Polynomial& gen_form);
/// Q_{a_1}···Q_{a_m} in the Q_λ basis (any order, zeros allowed).
const GammaElement& straighten_generators(std::vector<int> parts);

/// Degree-m coefficient of a series as an element of Γ.
GammaElement series_coeff(const GeneratorSeries& c, int m);
/// Same, unstraightened.
Polynomial series_coeff_gen(const GeneratorSeries& c, int m);

/// c(k)_k c(l)_l + 2 sum_{j=1}^{l} (-1)^j c(k)_{k+j} c(l)_{l-j}.
GammaElement q_pair(int k, int l, const GeneratorSeries& ck, const GeneratorSeries& cl);

GammaElement q_lambda(const StrictPartition& la);
GammaElement p_lambda(const StrictPartition& la);

/// Ring symmetries of Γ[x, y].
struct Symmetry {
  enum class Kind { Transposition, SignChange, HatOne };
  Kind kind;
  Family family = Family::x;
  int index = 1;  // for Transposition: swaps index, index+1

  static Symmetry s(int i, Family f = Family::x) { return {Kind::Transposition, f, i}; }
  static Symmetry s0(Family f = Family::x) { return {Kind::SignChange, f, 1}; }
  static Symmetry s1hat(Family f = Family::x) { return {Kind::HatOne, f, 1}; }
};

/// Action on coefficients only (no Q-part change).
Polynomial apply_to_scalars(const Symmetry& op, const Polynomial& p);
/// Image of a single basis element Q_λ.
const GammaElement& symmetry_image(const Symmetry& op, const StrictPartition& la);
GammaElement apply_symmetry(const Symmetry& op, const GammaElement& e);

/// Specialization targets for the oracle.
struct SymFun {
  int n_vars;
  int max_degree;
};
struct NegT {
  std::vector<int> nu;
};
using SpecializationMode = std::variant<SymFun, NegT>;

/// Ring homomorphism Q ↦ A for the series A of the chosen mode, evaluated on
/// the Pfaffian definition of each Q_λ (independent of straightening).
Polynomial specialize_oracle(const GammaElement& e, const SpecializationMode& mode);

}  // namespace vex
