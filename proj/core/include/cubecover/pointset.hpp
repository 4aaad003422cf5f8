#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cubecover/capacity.hpp"
#include "cubecover/errors.hpp"

namespace cubecover {

/// Membership set over the 2^n vertices of {0,1}^n, packed 64 per word.
/// Vertex index = binary encoding of the assignment with variable 1 in the
/// least significant position. That convention is fixed; serialized sets
/// and term/subbox translations depend on it.
class PointSet {
 public:
  explicit PointSet(std::uint32_t n) : n_(n) {
    if (n > 63 || (std::uint64_t{1} << n) > point_cap()) {
      throw CapacityError("cube dimension " + std::to_string(n) +
                          " exceeds the point cap of " +
                          std::to_string(point_cap()) + " points");
    }
    bits_.resize(((std::uint64_t{1} << n) + 63) / 64, 0);
  }

  std::uint32_t dimensions() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool test(std::uint64_t v) const {
    return (bits_[v >> 6] >> (v & 63)) & 1u;
  }
  void set(std::uint64_t v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::uint64_t v) {
    bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
  }

  bool all() const { return count() == size(); }
  bool none() const {
    for (std::uint64_t w : bits_) {
      if (w != 0) return false;
    }
    return true;
  }

  PointSet& operator|=(const PointSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    return *this;
  }

  bool intersects(const PointSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & other.bits_[i]) return true;
    }
    return false;
  }

  /// Ascending list of vertices NOT in the set, at most `limit` of them.
  std::vector<std::uint64_t> first_unset(std::size_t limit) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v < size() && out.size() < limit; ++v) {
      if (!test(v)) out.push_back(v);
    }
    return out;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace cubecover
