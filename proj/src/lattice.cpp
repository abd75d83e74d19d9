#include "wss/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wss/errors.hpp"

namespace wss {

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = lookup_.find(members);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::index_of(const Subgroup& h) const {
  if (!h.parent().same_as(group_)) throw std::invalid_argument("subgroup belongs to a different group");
  auto i = find(h.members());
  if (!i) throw std::logic_error("subgroup missing from lattice");
  return *i;
}

std::vector<std::size_t> SubgroupLattice::normal_subgroups() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (is_normal(i)) out.push_back(i);
  }
  return out;
}

std::size_t SubgroupLattice::conjugate_index(std::size_t i, Elem g) const {
  return lookup_.at(conjugate_set(group_, entries_[i].members(), g));
}

SubgroupLattice enumerate_subgroups(const Group& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("lattice group order", cap, g.order());
  SubgroupLattice l;
  l.group_ = g;

  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](Subgroup s) {
    if (seen.emplace(s.members(), found.size()).second) found.push_back(std::move(s));
  };
  add(Subgroup::trivial(g));
  std::vector<Elem> seeds;
  for (Elem x = 1; x < g.order(); ++x) {
    auto ord = g.element_order(x);
    if (factorize(ord).size() != 1) continue;
    Subgroup c = Subgroup::generated(g, std::vector<Elem>{x});
    if (!seen.count(c.members())) {
      seeds.push_back(x);
      add(std::move(c));
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x : seeds) {
      if (found[i].contains(x)) continue;
      Subgroup k = extend(found[i], x);
      if (!seen.count(k.members())) add(std::move(k));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  const std::size_t n = found.size();
  l.entries_ = std::move(found);
  for (std::size_t i = 0; i < n; ++i) l.lookup_.emplace(l.entries_[i].members(), i);

  l.below_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& big = l.entries_[i];
    l.below_[i].set(i);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& small = l.entries_[j];
      if (small.order() < big.order() && big.order() % small.order() == 0 &&
          small.members().is_subset_of(big.members())) {
        l.below_[i].set(j);
      }
    }
  }

  l.maximal_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    // Descending: a proper subgroup is maximal iff no maximal one found so
    // far contains it.
    std::vector<Elem> cands = l.below_[i].elements();
    std::vector<std::size_t> maxes;
    for (auto it = cands.rbegin(); it != cands.rend(); ++it) {
      std::size_t j = *it;
      if (j == i) continue;
      bool inside = false;
      for (std::size_t m : maxes) {
        if (l.below_[m].test(j)) {
          inside = true;
          break;
        }
      }
      if (!inside) maxes.push_back(j);
    }
    std::sort(maxes.begin(), maxes.end());
    l.maximal_[i] = std::move(maxes);
  }

  // Conjugacy classes via union-find over conjugation by the generators.
  std::vector<std::size_t> uf(n);
  std::iota(uf.begin(), uf.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (Elem s : g.generator_indices()) {
      std::size_t j = l.conjugate_index(i, s);
      std::size_t a = root(i), b = root(j);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  }
  l.class_of_.assign(n, 0);
  std::vector<std::size_t> class_for_root(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = root(i);
    if (class_for_root[r] == static_cast<std::size_t>(-1)) {
      class_for_root[r] = l.classes_.size();
      l.classes_.emplace_back();
    }
    l.class_of_[i] = class_for_root[r];
    l.classes_[class_for_root[r]].push_back(i);
  }

  l.maximal_flags_.assign(n, false);
  for (std::size_t m : l.maximal_[n - 1]) l.maximal_flags_[m] = true;
  l.minimal_normal_flags_.assign(n, false);
  for (std::size_t i = 1; i < n; ++i) {
    if (!l.is_normal(i)) continue;
    bool minimal = true;
    l.below_[i].for_each([&](Elem j) {
      if (j != 0 && j != i && l.is_normal(j)) minimal = false;
    });
    l.minimal_normal_flags_[i] = minimal;
  }
  return l;
}

std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& l) { return l.maximal_of(l.top()); }

std::vector<std::size_t> minimal_normal_subgroups(const SubgroupLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l.is_minimal_normal(i)) out.push_back(i);
  }
  return out;
}

Subgroup frattini(const SubgroupLattice& l, std::optional<std::size_t> i) {
  std::size_t a = i.value_or(l.top());
  const auto& maxes = l.maximal_of(a);
  if (maxes.empty()) return l[a];
  ElementSet s = l[maxes.front()].members();
  for (std::size_t m : maxes) s &= l[m].members();
  return l[*l.find(s)];
}

Subgroup socle(const SubgroupLattice& l) {
  Subgroup s = l[l.bottom()];
  for (std::size_t m : minimal_normal_subgroups(l)) s = join(s, l[m]);
  return s;
}

std::vector<std::size_t> sylow_indices(const SubgroupLattice& l, std::uint64_t p, std::size_t ambient) {
  const std::uint64_t target = p_part(l[ambient].order(), p);
  std::vector<std::size_t> out;
  l.below(ambient).for_each([&](Elem j) {
    if (l[j].order() == target) out.push_back(j);
  });
  return out;
}

SylowSubgroups sylow(const SubgroupLattice& l, std::uint64_t p, std::optional<std::size_t> ambient) {
  std::size_t a = ambient.value_or(l.top());
  auto idx = sylow_indices(l, p, a);
  const std::uint64_t count = idx.size();
  const std::uint64_t order = l[a].order();
  if (count % p != 1 % p || order % count != 0) {
    throw std::logic_error("Sylow count violates Sylow's theorem");
  }
  return {l[idx.front()], std::move(idx)};
}

std::vector<std::size_t> complements(const SubgroupLattice& l, std::size_t h, std::optional<std::size_t> ambient) {
  std::size_t a = ambient.value_or(l.top());
  const std::uint64_t target = l[a].order() / l[h].order();
  std::vector<std::size_t> out;
  l.below(a).for_each([&](Elem t) {
    if (l[t].order() == target && l[t].members().intersection_count(l[h].members()) == 1) out.push_back(t);
  });
  return out;
}

}  // namespace wss
