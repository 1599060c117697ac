#pragma once

#include <compare>
#include <string>
#include <vector>

namespace vex {

/// Strictly decreasing list of positive integers.
class StrictPartition {
 public:
  StrictPartition() = default;
  /// Throws std::invalid_argument unless parts are strictly decreasing and positive.
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // |λ|
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  std::string to_string() const;  // "(3,2,1)"

  auto operator<=>(const StrictPartition&) const = default;
  bool operator==(const StrictPartition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing nonnegative integers; only the last part may be 0.
class TypeDPartition {
 public:
  TypeDPartition() = default;
  explicit TypeDPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool ends_in_zero() const { return !parts_.empty() && parts_.back() == 0; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  /// Every part plus one.
  StrictPartition plus() const;
  /// Drops a trailing zero.
  StrictPartition positive_parts() const;

  std::string to_string() const;

  auto operator<=>(const TypeDPartition&) const = default;
  bool operator==(const TypeDPartition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All strict partitions of n, in lexicographically decreasing order.
std::vector<StrictPartition> strict_partitions_of(int n);
/// All strict partitions with largest part at most max_part.
std::vector<StrictPartition> strict_partitions_bounded(int max_part);
/// All type-D partitions with largest part at most max_part (including the empty one).
std::vector<TypeDPartition> typed_partitions_bounded(int max_part);

}  // namespace vex
