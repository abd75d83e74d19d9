#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wss/subgroup.hpp"

namespace wss {

/// Isomorphism invariants of a group. Equal groups give equal records; the
/// converse only holds where the recognition table says so.
struct Fingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  /// Invariants of A/A' as prime powers, ascending. For abelian A these are
  /// the abelian invariants of A itself.
  std::vector<std::uint64_t> abelianization;
  std::map<std::uint64_t, std::uint64_t> order_histogram;  // element order -> count
  std::vector<std::uint64_t> derived_series_orders;        // |A|, |A'|, |A''|, ... down to the fixed point
  std::map<std::uint64_t, bool> sylow_normal;              // prime -> Sylow subgroup normal
  std::uint64_t center_order = 0;
  bool nilpotent = false;
  bool solvable = false;
  bool supersolvable = false;

  /// Name from the recognition table ("S3", "A4", "C2^2xC3", ...) or "unrecognized".
  std::string name;

  bool same_invariants(const Fingerprint& o) const;
};

/// Recognition covers every group of order at most this.
inline constexpr std::uint64_t kRecognitionMaxOrder = 24;

Fingerprint fingerprint(const Subgroup& a);
Fingerprint fingerprint(const Group& g);

/// Name for the invariants. Abelian groups are named from their invariants at
/// any order; nonabelian ones above kRecognitionMaxOrder are "unrecognized".
std::string recognize(const Fingerprint& f);
/// The recognition-table lookup key for the invariants.
std::string fingerprint_key(const Fingerprint& f);

}  // namespace wss
