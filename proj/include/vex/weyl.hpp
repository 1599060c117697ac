#pragma once

#include <compare>
#include <string>
#include <vector>

namespace vex {

enum class WeylType { A, B, C, D };

char type_char(WeylType t);
/// Parses "A", "B", "C" or "D"; throws ParseError.
WeylType parse_type(const std::string& s);

/// Generator index: 1, 2, ... are the transpositions s_i; 0 is the sign change
/// s_0 (types B, C); kHatOne is the type D generator.
inline constexpr int kHatOne = -1;

/// Signed permutation in one-line notation; a negative entry is a barred value.
/// Type A elements are the ones without bars.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws std::invalid_argument unless |values| is a permutation of 1..n.
  explicit SignedPermutation(std::vector<int> values);
  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(v_.size()); }
  /// w(i) for i >= 1; positions beyond size are fixed.
  int operator()(int i) const { return i <= size() ? v_[static_cast<std::size_t>(i - 1)] : i; }
  const std::vector<int>& values() const { return v_; }

  int bar_count() const;
  bool is_unsigned() const { return bar_count() == 0; }
  /// Stable embedding into rank n >= size().
  SignedPermutation embedded(int n) const;
  /// Drops trailing fixed points.
  SignedPermutation trimmed() const;

  SignedPermutation inverse() const;
  /// w·g for a generator index g.
  SignedPermutation times_generator(int g) const;

  /// "1 -9 -8 ..."
  std::string to_string() const;
  /// LaTeX one-line form with bars.
  std::string to_latex() const;

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> v_;
};

/// Parses one-line notation; throws ParseError.
SignedPermutation parse_word(const std::string& s);

/// (w∘v)(i) = w(v(i)); throws SizeMismatch when sizes differ.
SignedPermutation compose(const SignedPermutation& w, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);

/// Coxeter length by closed form.
int length(const SignedPermutation& w, WeylType type);
/// Generators of the rank-n group, in the order used for the leftmost-descent rule.
std::vector<int> generators(int n, WeylType type);
/// Right descents: generators g with length(w·g) < length(w).
std::vector<int> right_descents(const SignedPermutation& w, WeylType type, int n);
/// Reduced word a_1 ... a_l with w = s_{a_1} ··· s_{a_l}.
std::vector<int> reduced_word(const SignedPermutation& w, WeylType type);
/// Product of generators as a signed permutation of rank n.
SignedPermutation word_product(const std::vector<int>& word, int n);
SignedPermutation longest_element(int n, WeylType type);

/// Number of positions a with w(a) = -b where (weak) a >= p, b >= q, or (strict) a > p, b > q.
int rank_function(const SignedPermutation& w, int p, int q, bool strict);

/// All elements of the rank-n group. For type D, odd_coset also includes the
/// elements with an odd number of bars.
std::vector<SignedPermutation> enumerate_group(int n, WeylType type, bool odd_coset = false);

}  // namespace vex
