#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wss/element_set.hpp"
#include "wss/group.hpp"

namespace wss {

/// A subgroup of a parent Group: a membership bitset plus a generating set.
///
/// Every structural routine takes Subgroups, so "the group A" is simply the
/// subgroup A of some parent; Subgroup::whole(G) stands for G itself.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);
  /// <gens> inside g.
  static Subgroup generated(const Group& g, std::span<const Elem> gens);
  /// Wraps a set already known to be closed; picks a small generating set.
  /// Throws std::invalid_argument if `members` is not a subgroup.
  static Subgroup from_set(const Group& g, const ElementSet& members);

  const Group& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  const std::vector<Elem>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return elements_.size(); }

  bool contains(Elem e) const noexcept { return members_.test(e); }
  bool contains(const Subgroup& h) const noexcept { return h.members_.is_subset_of(members_); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  /// The subgroup as a standalone permutation group on the parent's points.
  Group as_group(std::size_t cap = kDefaultGroupCap) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  Subgroup(Group parent, ElementSet members, std::vector<Elem> elements, std::vector<Elem> gens);
  friend Subgroup extend(const Subgroup& h, Elem x);

  Group parent_;
  ElementSet members_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

/// <h, x>, built by adjoining right cosets of h (Dimino's method).
Subgroup extend(const Subgroup& h, Elem x);

Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup intersect(const Subgroup& h, const Subgroup& k);
/// h^g = g^-1 h g
Subgroup conjugate(const Subgroup& h, Elem g);
ElementSet conjugate_set(const Group& g, const ElementSet& s, Elem by);

/// h normal in a (h <= a is assumed).
bool is_normal(const Subgroup& a, const Subgroup& h);
/// Smallest normal subgroup of a containing h.
Subgroup normal_closure(const Subgroup& a, const Subgroup& h);
Subgroup normalizer(const Subgroup& a, const Subgroup& h);
Subgroup centralizer(const Subgroup& a, const Subgroup& h);
/// Largest normal subgroup of a contained in h.
Subgroup core(const Subgroup& a, const Subgroup& h);
/// True iff the chain a >= h^a >= h^(h^a) >= ... of normal closures ends at h.
bool is_subnormal(const Subgroup& a, const Subgroup& h);

struct ProductSet {
  std::uint64_t size;
  bool is_group;
  ElementSet set;
};
/// HK = {hk}. is_group holds iff HK = KH.
ProductSet product_set(const Subgroup& h, const Subgroup& k);
/// Size of HK from |H||K|/|H n K| without materializing it.
std::uint64_t product_size(const Subgroup& h, const Subgroup& k);
bool permutes(const Subgroup& h, const Subgroup& k);

/// [h, k] = <[x, y] : x in h, y in k>.
Subgroup commutator(const Subgroup& h, const Subgroup& k);
/// O^p(a): generated by the elements of a whose order is coprime to p.
Subgroup upper_p(const Subgroup& a, std::uint64_t p);

void require_same_parent(const Subgroup& h, const Subgroup& k);

}  // namespace wss
