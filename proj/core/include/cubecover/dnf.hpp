#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cubecover/pointset.hpp"

namespace cubecover {

/// A conjunction of literals over n Boolean variables, stored as a pair of
/// bitmasks: `support` marks the variables that participate (variable k is
/// bit k-1) and `signs` holds the required value for each of them (subset of
/// support; set bit = positive literal). A term of size t is the subcube of
/// dimension n-t whose vertices agree with `signs` on `support`.
class Term {
 public:
  Term(std::uint32_t n, std::uint32_t support, std::uint32_t signs);

  /// The full-support term whose only point is `vertex`.
  static Term full(std::uint32_t n, std::uint64_t vertex);

  std::uint32_t dimensions() const { return n_; }
  std::uint32_t support() const { return support_; }
  std::uint32_t signs() const { return signs_; }
  std::uint32_t size() const {
    return static_cast<std::uint32_t>(std::popcount(support_));
  }

  bool covers(std::uint64_t vertex) const {
    return (vertex & support_) == signs_;
  }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t support_;
  std::uint32_t signs_;
};

/// Canonical term order: size, then support read as an ascending variable
/// list compared lexicographically, then signs compared variable by variable
/// in ascending order with a negated literal before a positive one.
bool term_less(const Term& a, const Term& b);

struct DnfExpression {
  std::uint32_t n = 0;
  std::vector<Term> terms;
};

/// The subcube of a term as a point set; exactly 2^(n-t) members.
PointSet term_points(const Term& term);

struct Coverage {
  PointSet cover;
  std::uint64_t uncovered_count = 0;
};

/// Union of the terms' subcubes over the whole cube.
Coverage dnf_coverage(const DnfExpression& dnf);

/// Covers every vertex?
bool is_tautology(const DnfExpression& dnf);
/// Terms cover pairwise-disjoint subcubes?
bool is_exact_dnf(const DnfExpression& dnf);
/// Supports pairwise different as sets?
bool is_distinct_dnf(const DnfExpression& dnf);

/// One full-support term per member vertex, in canonical order. Coverage
/// reproduces truth_set exactly, and the result is exact.
DnfExpression canonical_dnf(const PointSet& truth_set);

/// The tautology built from all positive conjunctions over t-subsets and all
/// negated conjunctions over (n-t)-subsets: every 0-1 vector of length n has
/// at least t ones or at least n-t zeros. Distinct, with C(n,t) + C(n,n-t)
/// terms of minimum size min(t, n-t). Requires 1 <= t <= n and t != n/2
/// (at t = n/2 the two families would collide on supports).
DnfExpression pigeonhole_tautology(std::uint32_t n, std::uint32_t t);

/// Largest-size multiplicity check on an exact tautology: the maximal term
/// size must occur at least twice. A single-term tautology has no mate to
/// compare against and is reported as vacuously holding with the degenerate
/// flag set, mirroring the congruence-side convention.
struct DnfMndrReport {
  std::uint32_t max_size = 0;
  std::uint64_t multiplicity = 0;
  bool holds = false;
  bool degenerate = false;
};

/// Requires an exact tautology (checked; ContractError otherwise).
DnfMndrReport boolean_mndr_check(const DnfExpression& dnf);

/// Complete list of exact DNF tautologies on n <= 3 variables, i.e. all
/// partitions of the cube into subcubes. Terms inside each expression are in
/// canonical ascending order, no duplicates across the list.
std::vector<DnfExpression> enumerate_exact_tautologies(std::uint32_t n);

}  // namespace cubecover
