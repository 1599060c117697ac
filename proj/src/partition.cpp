#include "vex/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace vex {

namespace {

std::string join_parts(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

bool strictly_decreasing(const std::vector<int>& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] >= p[i - 1]) return false;
  return true;
}

void strict_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int a = std::min(remaining, max_part); a >= 1; --a) {
    cur.push_back(a);
    strict_rec(remaining - a, a - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!strictly_decreasing(parts_) || (!parts_.empty() && parts_.back() <= 0))
    throw std::invalid_argument("not a strict partition: " + join_parts(parts_));
}

int StrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string StrictPartition::to_string() const { return join_parts(parts_); }

TypeDPartition::TypeDPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!strictly_decreasing(parts_) || (!parts_.empty() && parts_.back() < 0))
    throw std::invalid_argument("not a type-D partition: " + join_parts(parts_));
}

int TypeDPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

StrictPartition TypeDPartition::plus() const {
  std::vector<int> p = parts_;
  for (int& x : p) ++x;
  return StrictPartition(std::move(p));
}

StrictPartition TypeDPartition::positive_parts() const {
  std::vector<int> p = parts_;
  if (!p.empty() && p.back() == 0) p.pop_back();
  return StrictPartition(std::move(p));
}

std::string TypeDPartition::to_string() const { return join_parts(parts_); }

std::vector<StrictPartition> strict_partitions_of(int n) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  strict_rec(n, n, cur, out);
  return out;
}

std::vector<StrictPartition> strict_partitions_bounded(int max_part) {
  std::vector<StrictPartition> out;
  const int top = max_part * (max_part + 1) / 2;
  for (int n = 0; n <= top; ++n) {
    std::vector<int> cur;
    std::vector<StrictPartition> level;
    strict_rec(n, max_part, cur, level);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<TypeDPartition> typed_partitions_bounded(int max_part) {
  std::vector<TypeDPartition> out;
  for (const auto& p : strict_partitions_bounded(max_part)) {
    out.emplace_back(p.parts());
    std::vector<int> z = p.parts();
    z.push_back(0);
    out.emplace_back(std::move(z));
  }
  return out;
}

}  // namespace vex
