#pragma once

#include <cstdint>
#include <vector>

#include "cubecover/rational.hpp"

namespace cubecover {

/// Exact tail sum  sum_{i=k}^{n} C(n,i) / 2^i.
Rational density_tail_A(std::uint32_t n, std::uint32_t k);

/// Exact single value  C(n,m) / 2^m.
Rational density_value_B(std::uint32_t n, std::uint32_t m);

/// Largest k in [1, n] whose tail sum clears 1 under the given mode, else 0.
/// Upper bound on the minimum term size of a distinct DNF tautology: each
/// support of size i is usable at most once and covers 2^(n-i) vertices.
std::uint32_t density_bound_A(std::uint32_t n,
                              ComparisonMode mode = ComparisonMode::Weak);

/// Largest m in [1, n] with C(n,m)/2^m clearing 1 under the given mode, else
/// 0. Upper bound for distinct tautologies whose terms all have size m.
std::uint32_t density_bound_B(std::uint32_t n,
                              ComparisonMode mode = ComparisonMode::Weak);

enum class BoundKind { A, B };

/// Bound values for n = 1..max_n (values[i] is the bound at n = i+1),
/// together with the exact witness value at the returned bound.
struct BoundTable {
  BoundKind kind = BoundKind::A;
  ComparisonMode mode = ComparisonMode::Weak;
  std::vector<std::uint32_t> values;
  std::vector<Rational> witness_values;
};

BoundTable bound_table(BoundKind kind, std::uint32_t max_n, ComparisonMode mode);

}  // namespace cubecover
