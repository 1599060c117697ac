#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vex/partition.hpp"
#include "vex/weyl.hpp"

namespace vex {

/// Intersection data (k, p, q). Type B and C triples share all combinatorics.
struct Triple {
  std::vector<int> k;
  std::vector<int> p;
  std::vector<int> q;
  WeylType type = WeylType::C;

  int length() const { return static_cast<int>(k.size()); }
  bool empty() const { return k.empty(); }
  /// Largest k (the rank r of λ), 0 when empty.
  int rank() const { return k.empty() ? 0 : k.back(); }
  /// Type A only: l_i = p_i - q_i + k_i.
  std::vector<int> l_values() const;

  std::string to_string() const;  // "k=2,3;p=8,6;q=6,5;type=C"
  bool operator==(const Triple&) const = default;
};

/// Parses the text form; throws ParseError.
Triple parse_triple(const std::string& s);

enum class Validity { Strict, Redundant, Invalid };

Validity validate(const Triple& t);
/// Drops the terms with equality in the defining inequality; throws InvalidTriple.
Triple reduce_redundant(const Triple& t);

/// Weakly decreasing partition for type A; strict for B/C; type D may end in 0.
std::vector<int> lambda_parts(const Triple& t);
StrictPartition lambda_of(const Triple& t);
TypeDPartition lambda_of_d(const Triple& t);

/// The signed permutation of the triple (unsigned for type A); throws InvalidTriple.
SignedPermutation w_of_triple(const Triple& t);

/// The unique strict triple with w_of_triple(t) = w, or nullopt when w is not vexillary.
std::optional<Triple> triple_of_w(const SignedPermutation& w, WeylType type);

/// Type A duality; throws WrongType.
Triple dual(const Triple& t);
/// Type D to type C shift of p and q by one; throws WrongType.
Triple plus_map(const Triple& t);

/// All strict triples of the given type with k_s <= max_k, p_1 <= max_p, q_1 <= max_q
/// (for type A, q_s <= max_q). With redundant set, only the redundant ones instead.
std::vector<Triple> enumerate_triples(WeylType type, int max_k, int max_p, int max_q, bool redundant = false);

}  // namespace vex
