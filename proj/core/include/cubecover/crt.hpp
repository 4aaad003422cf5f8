#pragma once

#include <cstdint>
#include <vector>

#include "cubecover/box.hpp"
#include "cubecover/congruence.hpp"

namespace cubecover {

/// M = p_1^{r_1} ... p_k^{r_k} with ascending primes. M = 1 is the empty
/// factorization.
struct PrimeFactorization {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint32_t> exponents;

  std::size_t prime_count() const { return primes.size(); }
  bool square_free() const;
  std::uint64_t value() const;
};

/// Trial division. Fine at desk scale; inputs come from capped lcms anyway.
PrimeFactorization factorize(std::uint64_t m);

/// A point of the box [0,p_1-1] x ... x [0,p_k-1], coordinates in ascending
/// prime order.
struct DiscretePoint {
  std::vector<std::uint32_t> coords;
  friend bool operator==(const DiscretePoint&, const DiscretePoint&) = default;
};

// The remainder map x -> [x mod p_1, ..., x mod p_k] is a bijection between
// [0, M-1] and the box of the prime radices when M is square-free. A residue
// class a (mod m) with m | M then corresponds to the sub-box that freezes
// exactly the coordinates of the primes dividing m, which is what makes a
// covering system a sub-box cover of the box. Non-square-free M is rejected:
// a class modulo p^s with s below the full exponent constrains a coordinate
// without freezing it, which is not a sub-box in this model.

/// Requires 0 <= x < M and square-free M.
DiscretePoint crt_map(std::uint64_t x, const PrimeFactorization& f);

/// Unique x in [0, M) with x = coords_i (mod p_i); inverse of crt_map.
std::uint64_t crt_inverse(const DiscretePoint& point,
                          const PrimeFactorization& f);

/// The box with one coordinate per prime, radices in ascending prime order.
Box crt_box(const PrimeFactorization& f);

/// Sub-box of crt_box(f) matching the congruence class. Requires m | M and
/// square-free M.
SubBox class_to_subbox(const CongruenceClass& cls, const PrimeFactorization& f);

/// Inverse direction: a (mod m) with m the product of the fixed primes and a
/// the lift of the fixed values. Round-trips with class_to_subbox.
CongruenceClass subbox_to_class(const SubBox& subbox,
                                const PrimeFactorization& f);

/// Self-test of the construction: maps the system onto sub-boxes of the lcm
/// box and reports whether the window verifier and the box-cover check agree
/// on coverage. True on every valid input. Requires square-free lcm.
bool system_cover_equivalence(const CongruenceSystem& system);

}  // namespace cubecover
