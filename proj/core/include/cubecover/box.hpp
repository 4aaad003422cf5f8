#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubecover/rational.hpp"

namespace cubecover {

/// A mixed-radix discrete box [0,a_1-1] x ... x [0,a_n-1], all radices >= 2.
/// Coordinates are stored 0-based. Points are indexed little-endian:
/// index = x_1 + a_1*(x_2 + a_2*(...)), so coordinate 1 varies fastest and a
/// radix-2 box indexes its points exactly like the Boolean cube.
class Box {
 public:
  explicit Box(std::vector<std::uint32_t> radices);

  const std::vector<std::uint32_t>& radices() const { return radices_; }
  std::size_t dimensions() const { return radices_.size(); }
  std::uint64_t point_count() const { return points_; }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<std::uint32_t> radices_;
  std::uint64_t points_ = 1;
};

/// An axis-aligned sub-box: a subset S of coordinates frozen to values, the
/// rest free. Dimension n - |S|. The fixed assignments are kept sorted by
/// coordinate index (0-based).
class SubBox {
 public:
  SubBox(const Box& box,
         std::vector<std::pair<std::uint32_t, std::uint32_t>> fixed);

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& fixed() const {
    return fixed_;
  }
  std::uint32_t support_size() const {
    return static_cast<std::uint32_t>(fixed_.size());
  }
  /// Bitmask of fixed coordinate indices. Two sub-boxes with equal masks are
  /// parallel.
  std::uint32_t support_mask() const { return support_mask_; }

  /// Number of points, relative to the box it was built against.
  std::uint64_t point_count(const Box& box) const;

  friend bool operator==(const SubBox&, const SubBox&) = default;

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fixed_;
  std::uint32_t support_mask_ = 0;
};

struct BoxCoverReport {
  bool is_cover = false;
  std::uint64_t uncovered_count = 0;
  /// Pairs (i, j), i < j, of sub-boxes fixing the same coordinate set.
  std::vector<std::pair<std::size_t, std::size_t>> parallel_violations;
  /// Smallest |S| over the sub-boxes; 0 when there are none.
  std::uint32_t min_fixed = 0;
};

/// Marks every point of every sub-box and reports coverage of the box.
BoxCoverReport box_cover_check(const Box& box,
                               const std::vector<SubBox>& subboxes);

struct TailReport {
  Rational value;
  bool feasible = false;
};

/// Exact density budget for non-parallel covers of codimension >= m:
/// sum_{j=m}^{n} e_j(1/a_1, ..., 1/a_n), with e_j the j-th elementary
/// symmetric polynomial. Each coordinate set S is usable at most once and
/// covers prod_{i not in S} a_i points, so a cover with every |S| >= m needs
/// this tail to clear 1. Computed by exact-rational DP, never floating point.
TailReport symmetric_tail(const Box& box, std::uint32_t m, ComparisonMode mode);

/// Largest m whose symmetric tail is feasible. With all radices 2 this
/// specializes to the binomial bound on minimum term size.
std::uint32_t max_feasible_codimension(const Box& box, ComparisonMode mode);

struct ReciprocalDiagnostics {
  Rational sum;      // sum 1/a_i
  Rational product;  // prod (1 + 1/a_i)
};

/// Exact partial sum and product for a finite prefix of a radix sequence.
/// When the reciprocal sum of the full sequence converges, tails of the
/// product drop below 1 and deep non-parallel covers are impossible.
ReciprocalDiagnostics reciprocal_diagnostics(
    const std::vector<std::uint32_t>& radices);

}  // namespace cubecover
