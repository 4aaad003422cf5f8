#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace cubecover {

/// One residue class a (mod m). The residue is reduced at construction, so
/// 0 <= residue() < modulus() always holds.
class CongruenceClass {
 public:
  CongruenceClass(std::uint64_t residue, std::uint64_t modulus);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  bool contains(std::uint64_t x) const { return x % modulus_ == residue_; }

  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;

 private:
  std::uint64_t residue_;
  std::uint64_t modulus_;
};

/// Default cap on the least common multiple of the moduli. Verification
/// scans the whole window [0, lcm), so the cap makes that cost explicit.
inline constexpr std::uint64_t kDefaultLcmCap = std::uint64_t{1} << 32;

/// A finite list of residue classes. Immutable after construction; the lcm
/// of the moduli is computed eagerly and rejected if it exceeds the cap.
class CongruenceSystem {
 public:
  explicit CongruenceSystem(std::vector<CongruenceClass> classes,
                            std::uint64_t lcm_cap = kDefaultLcmCap);

  const std::vector<CongruenceClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  std::uint64_t lcm() const { return lcm_; }
  std::uint64_t lcm_cap() const { return lcm_cap_; }
  /// True when two classes are byte-identical. Permitted but flagged.
  bool has_duplicate_classes() const { return has_duplicates_; }

 private:
  std::vector<CongruenceClass> classes_;
  std::uint64_t lcm_ = 1;
  std::uint64_t lcm_cap_;
  bool has_duplicates_ = false;
};

/// Residues kept verbatim in CoverReport::uncovered; the rest is counted in
/// uncovered_total so reports stay small even for huge windows.
inline constexpr std::size_t kUncoveredKeep = 1000;

struct CoverReport {
  bool is_cover = false;
  std::uint64_t lcm = 1;
  /// First kUncoveredKeep uncovered residues of [0, lcm), ascending.
  std::vector<std::uint64_t> uncovered;
  std::uint64_t uncovered_total = 0;
  /// hit count -> number of residues in [0, lcm) hit that many times.
  /// The 0 bucket (when present) equals uncovered_total, so the buckets
  /// partition the window.
  std::map<std::uint64_t, std::uint64_t> multiplicity_histogram;
  bool duplicate_classes = false;
};

/// Scans the window [0, lcm) and reports coverage. The system covers all
/// non-negative integers iff it covers this window.
CoverReport verify_cover(const CongruenceSystem& system);

/// True iff all pairs of classes are disjoint as subsets of the integers.
bool is_exact(const CongruenceSystem& system);

/// True iff the moduli are pairwise different.
bool is_distinct(const CongruenceSystem& system);

/// Replaces class a (mod m) at class_index by the p classes a + j*m (mod p*m),
/// j = 0..p-1. The returned system covers exactly the same integers, and
/// exactness is preserved. p >= 2.
CongruenceSystem split_refine(const CongruenceSystem& system,
                              std::size_t class_index, std::uint64_t p);

/// Result of the two-top-moduli check on an exact covering system: with the
/// moduli sorted non-decreasingly, the two largest are equal. A single-class
/// system has no pair; it is reported as vacuously holding with the
/// degenerate flag set.
struct TopModuliReport {
  bool holds = false;
  bool degenerate = false;
  std::uint64_t top_modulus = 1;
};

/// Requires an exact covering system (checked; ContractError otherwise).
TopModuliReport top_moduli_check(const CongruenceSystem& system);

/// Result of the multiplicity check on an exact covering system: the largest
/// modulus appears at least p times, where p is the smallest prime factor of
/// the lcm. When the lcm is 1 there is no prime factor; the check is
/// reported as vacuously holding with the degenerate flag set and
/// smallest_prime = 0.
struct ZnamReport {
  std::uint64_t smallest_prime = 0;
  std::uint64_t multiplicity = 0;
  bool holds = false;
  bool degenerate = false;
};

/// Requires an exact covering system (checked; ContractError otherwise).
ZnamReport znam_multiplicity_check(const CongruenceSystem& system);

}  // namespace cubecover
