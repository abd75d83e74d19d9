#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wss/lattice.hpp"

namespace wss {

enum class Embedding {
  weakly_s_supplemented,
  weakly_s_permutable,
  c_normal,
  supersolvable_supplement,
  complemented,
};

std::string_view to_string(Embedding e);

/// A supplement T of H in the ambient group A together with the subgroup
/// that H n T was compared against (H_sA, the core of H, or 1).
struct SupplementWitness {
  Embedding property;
  std::size_t t;             // lattice index
  Subgroup intersection;     // H n T
  Subgroup bound;
};

/// Embedding predicates over a fixed lattice, memoized per (ambient, H).
///
/// All arguments are lattice indices. `ambient` is the group in which the
/// property is evaluated; it defaults to the whole group, and any lattice
/// entry containing H may stand in for it. Existential searches walk the
/// subgroups of the ambient group from the top of the lattice down and
/// return the first witness, so results are reproducible.
///
/// Not thread-safe: use one oracle per thread.
class EmbeddingOracle {
 public:
  explicit EmbeddingOracle(const SubgroupLattice& l);

  const SubgroupLattice& lattice() const noexcept { return *lattice_; }

  bool is_normal(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  bool is_subnormal(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  /// Sylow p-subgroups of the ambient group, ascending.
  const std::vector<std::size_t>& sylows(std::uint64_t p, std::optional<std::size_t> ambient = std::nullopt);
  /// H permutes with every Sylow subgroup of the ambient group.
  bool is_s_permutable(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  /// H permutes with every subgroup of the ambient group.
  bool is_permutable(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  /// Join of the subgroups of H that are s-permutable in the ambient group.
  std::size_t h_sG(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  /// Largest normal subgroup of the ambient group inside H.
  std::size_t core(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);

  /// All T in the ambient group with HT equal to it, in descending lattice order.
  std::vector<std::size_t> supplements(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);

  std::optional<SupplementWitness> weakly_s_supplemented(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  std::optional<SupplementWitness> weakly_s_permutable(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  std::optional<SupplementWitness> c_normal(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);
  std::optional<SupplementWitness> supersolvable_supplement(std::size_t h,
                                                            std::optional<std::size_t> ambient = std::nullopt);
  std::optional<SupplementWitness> complemented(std::size_t h, std::optional<std::size_t> ambient = std::nullopt);

  bool is_supersolvable(std::size_t t);

 private:
  using Key = std::uint64_t;
  Key key(std::size_t ambient, std::size_t h) const { return static_cast<Key>(ambient) * lattice_->size() + h; }
  std::size_t amb(std::optional<std::size_t> a) const { return a.value_or(lattice_->top()); }

  template <class Accept>
  std::optional<std::size_t> first_supplement(std::size_t h, std::size_t a, Accept accept);
  std::optional<SupplementWitness> cached(std::unordered_map<Key, std::optional<SupplementWitness>>& memo,
                                          Embedding what, std::size_t h, std::size_t a);

  const SubgroupLattice* lattice_;
  std::unordered_map<Key, bool> normal_, subnormal_, s_permutable_, permutable_;
  std::unordered_map<Key, std::size_t> h_sg_, core_;
  std::unordered_map<Key, std::vector<std::size_t>> sylows_;
  std::unordered_map<Key, std::optional<SupplementWitness>> wss_, wsp_, c_normal_, ssupp_, complemented_;
  std::vector<signed char> supersolvable_;
};

// Whole-group wrappers for one-off queries. Each builds a fresh oracle, so
// loops should hold an EmbeddingOracle instead.
bool is_s_permutable(const SubgroupLattice& l, std::size_t h);
Subgroup h_sG(const SubgroupLattice& l, std::size_t h);
std::vector<std::size_t> supplements(const SubgroupLattice& l, std::size_t h);
std::optional<SupplementWitness> is_weakly_s_supplemented(const SubgroupLattice& l, std::size_t h);
std::optional<SupplementWitness> is_weakly_s_permutable(const SubgroupLattice& l, std::size_t h);
bool is_c_normal(const SubgroupLattice& l, std::size_t h);
std::optional<SupplementWitness> has_supersolvable_supplement(const SubgroupLattice& l, std::size_t h);
bool is_complemented(const SubgroupLattice& l, std::size_t h);

}  // namespace wss
