#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wss/group.hpp"
#include "wss/subgroup.hpp"

namespace wss {

inline constexpr std::size_t kDefaultLatticeCap = 400;

/// Every subgroup of a group, sorted by order and then by member bitset.
///
/// Entry 0 is the trivial subgroup and the last entry is the whole group.
/// Besides inclusion, each entry carries its maximal subgroups, its
/// conjugacy class and normality flags. Immutable once built.
class SubgroupLattice {
 public:
  const Group& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Subgroup& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Subgroup>& entries() const noexcept { return entries_; }
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return entries_.size() - 1; }

  std::optional<std::size_t> find(const ElementSet& members) const;
  /// Throws std::invalid_argument for a foreign subgroup.
  std::size_t index_of(const Subgroup& h) const;

  /// Lattice indices of all subgroups of entry i (including i), as a bitset.
  const ElementSet& below(std::size_t i) const { return below_[i]; }
  bool contains(std::size_t outer, std::size_t inner) const { return below_[outer].test(inner); }
  /// Maximal subgroups of entry i, ascending.
  const std::vector<std::size_t>& maximal_of(std::size_t i) const { return maximal_[i]; }

  std::size_t class_id(std::size_t i) const { return class_of_[i]; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  /// Members of conjugacy class c, ascending.
  const std::vector<std::size_t>& conjugacy_class(std::size_t c) const { return classes_[c]; }

  bool is_normal(std::size_t i) const { return classes_[class_of_[i]].size() == 1; }
  bool is_maximal(std::size_t i) const { return maximal_flags_[i]; }
  bool is_minimal_normal(std::size_t i) const { return minimal_normal_flags_[i]; }
  std::vector<std::size_t> normal_subgroups() const;

  /// Index of the conjugate of entry i by a group element.
  std::size_t conjugate_index(std::size_t i, Elem g) const;

  friend SubgroupLattice enumerate_subgroups(const Group& g, std::size_t cap);

 private:
  Group group_;
  std::vector<Subgroup> entries_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<ElementSet> below_;
  std::vector<std::vector<std::size_t>> maximal_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<bool> maximal_flags_;
  std::vector<bool> minimal_normal_flags_;
};

/// Seeds with the cyclic subgroups of prime-power order and joins entries
/// with them until nothing new appears. Throws CapExceeded when |G| > cap.
SubgroupLattice enumerate_subgroups(const Group& g, std::size_t cap = kDefaultLatticeCap);

/// Maximal subgroups of the whole group (lattice indices).
std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& l);
std::vector<std::size_t> minimal_normal_subgroups(const SubgroupLattice& l);
/// Intersection of the maximal subgroups of entry i (default: the whole group).
Subgroup frattini(const SubgroupLattice& l, std::optional<std::size_t> i = std::nullopt);
/// Join of the minimal normal subgroups.
Subgroup socle(const SubgroupLattice& l);

struct SylowSubgroups {
  Subgroup representative;
  std::vector<std::size_t> conjugates;  // lattice indices, ascending
};
/// Sylow p-subgroups of entry `ambient` (default: the whole group). When p
/// does not divide the order the unique Sylow subgroup is trivial.
SylowSubgroups sylow(const SubgroupLattice& l, std::uint64_t p, std::optional<std::size_t> ambient = std::nullopt);
std::vector<std::size_t> sylow_indices(const SubgroupLattice& l, std::uint64_t p, std::size_t ambient);

/// All T <= ambient with HT = ambient and H n T = 1, ascending.
std::vector<std::size_t> complements(const SubgroupLattice& l, std::size_t h, std::optional<std::size_t> ambient = std::nullopt);

}  // namespace wss
