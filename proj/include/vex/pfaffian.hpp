#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vex/errors.hpp"

namespace vex {

/// Skew-symmetric matrix given by its strict upper triangle, plus the border
/// column used when the size is odd. Indices are 0-based.
template <class T>
class SkewOddMatrix {
 public:
  explicit SkewOddMatrix(int size) : size_(size), upper_(static_cast<std::size_t>(size * size)) {}

  int size() const { return size_; }
  void set(int i, int j, T v) { upper_[idx(i, j)] = std::move(v); }
  const T& at(int i, int j) const { return *upper_[idx(i, j)]; }
  bool has(int i, int j) const { return upper_[idx(i, j)].has_value(); }

  void set_border(int k, T v) {
    if (border_.empty()) border_.resize(static_cast<std::size_t>(size_));
    border_[static_cast<std::size_t>(k)] = std::move(v);
  }
  bool has_border() const { return !border_.empty(); }
  const T& border(int k) const { return *border_[static_cast<std::size_t>(k)]; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * size_ + j); }

  int size_;
  std::vector<std::optional<T>> upper_;
  std::vector<std::optional<T>> border_;
};

/// Pfaffian by Laplace expansion along the smallest index, memoized over index
/// subsets. For odd size the matrix is bordered by a virtual index placed
/// before all others, whose entries are border(k).
///
/// entry(i, j) is queried only for i < j, and each pair at most once.
template <class T>
T pfaffian(int r, const std::function<T(int, int)>& entry, const std::function<T(int)>& border, const T& zero,
           const T& one) {
  if (r == 0) return one;
  const bool odd = r % 2 != 0;
  const int n = odd ? r + 1 : r;  // index 0 is the virtual one when odd
  if (n > 30) throw BoundExceeded("pfaffian size too large");
  std::vector<std::optional<T>> cache(static_cast<std::size_t>(n * n));
  auto m = [&](int i, int j) -> const T& {
    auto& slot = cache[static_cast<std::size_t>(i * n + j)];
    if (!slot) {
      if (odd) {
        slot = i == 0 ? border(j - 1) : entry(i - 1, j - 1);
      } else {
        slot = entry(i, j);
      }
    }
    return *slot;
  };
  std::unordered_map<std::uint32_t, T> memo;
  std::function<T(std::uint32_t)> rec = [&](std::uint32_t set) -> T {
    if (set == 0) return one;
    if (auto it = memo.find(set); it != memo.end()) return it->second;
    const int first = __builtin_ctz(set);
    const std::uint32_t rest = set & ~(1u << first);
    T total = zero;
    int t = 0;
    for (int j = first + 1; j < n; ++j) {
      if (!(rest & (1u << j))) continue;
      ++t;
      T term = m(first, j) * rec(rest & ~(1u << j));
      if (t % 2 == 1) {
        total = total + term;
      } else {
        total = total - term;
      }
    }
    memo.emplace(set, total);
    return total;
  };
  return rec((n == 32 ? 0u : (1u << n)) - 1u);
}

/// Pfaffian of a stored matrix; odd size requires a border.
template <class T>
T pfaffian(const SkewOddMatrix<T>& mat, const T& zero, const T& one) {
  if (mat.size() % 2 != 0 && !mat.has_border()) throw MissingBorder("odd-size Pfaffian needs a border column");
  return pfaffian<T>(
      mat.size(), [&](int i, int j) { return mat.at(i, j); }, [&](int k) { return mat.border(k); }, zero, one);
}

/// Determinant by Laplace expansion along the first row with column-subset memo.
template <class T>
T determinant(int r, const std::function<T(int, int)>& entry, const T& zero, const T& one) {
  if (r == 0) return one;
  std::vector<std::optional<T>> cache(static_cast<std::size_t>(r * r));
  auto m = [&](int i, int j) -> const T& {
    auto& slot = cache[static_cast<std::size_t>(i * r + j)];
    if (!slot) slot = entry(i, j);
    return *slot;
  };
  std::unordered_map<std::uint32_t, T> memo;
  // rec(cols): determinant of rows [r - popcount(cols), r) restricted to cols.
  std::function<T(std::uint32_t)> rec = [&](std::uint32_t cols) -> T {
    if (cols == 0) return one;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const int row = r - __builtin_popcount(cols);
    T total = zero;
    int t = 0;
    for (int j = 0; j < r; ++j) {
      if (!(cols & (1u << j))) continue;
      T term = m(row, j) * rec(cols & ~(1u << j));
      total = (t % 2 == 0) ? total + term : total - term;
      ++t;
    }
    memo.emplace(cols, total);
    return total;
  };
  return rec((1u << r) - 1u);
}

}  // namespace vex
