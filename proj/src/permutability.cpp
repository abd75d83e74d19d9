#include "wss/permutability.hpp"

#include "wss/structure.hpp"

namespace wss {

std::string_view to_string(Embedding e) {
  switch (e) {
    case Embedding::weakly_s_supplemented: return "weakly_s_supplemented";
    case Embedding::weakly_s_permutable: return "weakly_s_permutable";
    case Embedding::c_normal: return "c_normal";
    case Embedding::supersolvable_supplement: return "supersolvable_supplement";
    case Embedding::complemented: return "complemented";
  }
  return "?";
}

EmbeddingOracle::EmbeddingOracle(const SubgroupLattice& l)
    : lattice_(&l), supersolvable_(l.size(), -1) {}

bool EmbeddingOracle::is_normal(std::size_t h, std::optional<std::size_t> ambient) {
  const std::size_t a = amb(ambient);
  if (a == lattice_->top()) return lattice_->is_normal(h);
  auto [it, fresh] = normal_.try_emplace(key(a, h), false);
  if (fresh) it->second = wss::is_normal((*lattice_)[a], (*lattice_)[h]);
  return it->second;
}

bool EmbeddingOracle::is_subnormal(std::size_t h, std::optional<std::size_t> ambient) {
  const std::size_t a = amb(ambient);
  auto [it, fresh] = subnormal_.try_emplace(key(a, h), false);
  if (fresh) it->second = is_normal(h, a) || wss::is_subnormal((*lattice_)[a], (*lattice_)[h]);
  return it->second;
}

const std::vector<std::size_t>& EmbeddingOracle::sylows(std::uint64_t p, std::optional<std::size_t> ambient) {
  const std::size_t a = amb(ambient);
  auto [it, fresh] = sylows_.try_emplace(static_cast<Key>(a) * 4096 + p);
  if (fresh) it->second = sylow_indices(*lattice_, p, a);
  return it->second;
}

bool EmbeddingOracle::is_s_permutable(std::size_t h, std::optional<std::size_t> ambient) {
  const std::size_t a = amb(ambient);
  auto [it, fresh] = s_permutable_.try_emplace(key(a, h), true);
  if (!fresh) return it->second;
  bool ok = is_normal(h, a);
  if (!ok) {
    ok = true;
    const Subgroup& hs = (*lattice_)[h];
    for (std::uint64_t p : prime_divisors((*lattice_)[a].order())) {
      for (std::size_t s : sylows(p, a)) {
        if (!permutes(hs, (*lattice_)[s])) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
  }
  s_permutable_[key(a, h)] = ok;
  return ok;
}

bool EmbeddingOracle::is_permutable(std::size_t h, std::optional<std::size_t> ambient) {
  const std::size_t a = amb(ambient);
  auto [it, fresh] = permutable_.try_emplace(key(a, h), true);
  if (!fresh) return it->second;
  bool ok = is_normal(h, a);
  if (!ok) {
    const Subgroup& hs = (*lattice_)[h];
    lattice_->below(a).for_each([&](Elem k) {
      if (ok && !permutes(hs, (*lattice_)[k])) ok = false;
    });
  }
  permutable_[key(a, h)] = ok;
  return ok;
}

std::size_t EmbeddingOracle::h_sG(std::size_t h, std::optional<std::size_t> ambient) {
  const std::size_t a = amb(ambient);
  if (auto it = h_sg_.find(key(a, h)); it != h_sg_.end()) return it->second;
  Subgroup j = Subgroup::trivial(lattice_->group());
  lattice_->below(h).for_each([&](Elem k) {
    if (!j.contains((*lattice_)[k]) && is_s_permutable(k, a)) j = join(j, (*lattice_)[k]);
  });
  const std::size_t r = lattice_->index_of(j);
  h_sg_[key(a, h)] = r;
  return r;
}

std::size_t EmbeddingOracle::core(std::size_t h, std::optional<std::size_t> ambient) {
  const std::size_t a = amb(ambient);
  if (auto it = core_.find(key(a, h)); it != core_.end()) return it->second;
  const std::size_t r = lattice_->index_of(wss::core((*lattice_)[a], (*lattice_)[h]));
  core_[key(a, h)] = r;
  return r;
}

template <class Accept>
std::optional<std::size_t> EmbeddingOracle::first_supplement(std::size_t h, std::size_t a, Accept accept) {
  const SubgroupLattice& l = *lattice_;
  const std::uint64_t target = l[a].order();
  const std::uint64_t ho = l[h].order();
  const ElementSet& hm = l[h].members();
  for (std::size_t t = a + 1; t-- > 0;) {
    if (!l.contains(a, t)) continue;
    const std::uint64_t to = l[t].order();
    if (to * ho < target) break;  // sorted by order, so nothing smaller can supplement
    if (ho * to / hm.intersection_count(l[t].members()) != target) continue;
    if (accept(t)) return t;
  }
  return std::nullopt;
}

std::vector<std::size_t> EmbeddingOracle::supplements(std::size_t h, std::optional<std::size_t> ambient) {
  std::vector<std::size_t> out;
  first_supplement(h, amb(ambient), [&](std::size_t t) {
    out.push_back(t);
    return false;
  });
  return out;
}

std::optional<SupplementWitness> EmbeddingOracle::cached(
    std::unordered_map<Key, std::optional<SupplementWitness>>& memo, Embedding what, std::size_t h, std::size_t a) {
  if (auto it = memo.find(key(a, h)); it != memo.end()) return it->second;
  const SubgroupLattice& l = *lattice_;
  const Subgroup& hs = l[h];
  std::size_t bound = l.bottom();
  switch (what) {
    case Embedding::weakly_s_supplemented:
    case Embedding::weakly_s_permutable:
      bound = h_sG(h, a);
      break;
    case Embedding::c_normal:
      bound = core(h, a);
      break;
    default:
      break;
  }
  const ElementSet& bm = l[bound].members();
  auto meets_bound = [&](std::size_t t) {
    ElementSet x = hs.members();
    x &= l[t].members();
    return x.is_subset_of(bm);
  };
  auto accept = [&](std::size_t t) {
    switch (what) {
      case Embedding::weakly_s_supplemented: return meets_bound(t);
      case Embedding::weakly_s_permutable: return meets_bound(t) && is_subnormal(t, a);
      case Embedding::c_normal: return is_normal(t, a) && meets_bound(t);
      case Embedding::supersolvable_supplement: return is_supersolvable(t);
      case Embedding::complemented: return hs.members().intersection_count(l[t].members()) == 1;
    }
    return false;
  };
  std::optional<SupplementWitness> r;
  if (auto t = first_supplement(h, a, accept)) {
    r = SupplementWitness{what, *t, intersect(hs, l[*t]), l[bound]};
  }
  memo.emplace(key(a, h), r);
  return r;
}

std::optional<SupplementWitness> EmbeddingOracle::weakly_s_supplemented(std::size_t h,
                                                                        std::optional<std::size_t> ambient) {
  return cached(wss_, Embedding::weakly_s_supplemented, h, amb(ambient));
}

std::optional<SupplementWitness> EmbeddingOracle::weakly_s_permutable(std::size_t h,
                                                                      std::optional<std::size_t> ambient) {
  return cached(wsp_, Embedding::weakly_s_permutable, h, amb(ambient));
}

std::optional<SupplementWitness> EmbeddingOracle::c_normal(std::size_t h, std::optional<std::size_t> ambient) {
  return cached(c_normal_, Embedding::c_normal, h, amb(ambient));
}

std::optional<SupplementWitness> EmbeddingOracle::supersolvable_supplement(std::size_t h,
                                                                           std::optional<std::size_t> ambient) {
  return cached(ssupp_, Embedding::supersolvable_supplement, h, amb(ambient));
}

std::optional<SupplementWitness> EmbeddingOracle::complemented(std::size_t h, std::optional<std::size_t> ambient) {
  return cached(complemented_, Embedding::complemented, h, amb(ambient));
}

bool EmbeddingOracle::is_supersolvable(std::size_t t) {
  if (supersolvable_[t] < 0) supersolvable_[t] = wss::is_supersolvable((*lattice_)[t]) ? 1 : 0;
  return supersolvable_[t] == 1;
}

bool is_s_permutable(const SubgroupLattice& l, std::size_t h) { return EmbeddingOracle(l).is_s_permutable(h); }

Subgroup h_sG(const SubgroupLattice& l, std::size_t h) { return l[EmbeddingOracle(l).h_sG(h)]; }

std::vector<std::size_t> supplements(const SubgroupLattice& l, std::size_t h) {
  return EmbeddingOracle(l).supplements(h);
}

std::optional<SupplementWitness> is_weakly_s_supplemented(const SubgroupLattice& l, std::size_t h) {
  return EmbeddingOracle(l).weakly_s_supplemented(h);
}

std::optional<SupplementWitness> is_weakly_s_permutable(const SubgroupLattice& l, std::size_t h) {
  return EmbeddingOracle(l).weakly_s_permutable(h);
}

bool is_c_normal(const SubgroupLattice& l, std::size_t h) { return EmbeddingOracle(l).c_normal(h).has_value(); }

std::optional<SupplementWitness> has_supersolvable_supplement(const SubgroupLattice& l, std::size_t h) {
  return EmbeddingOracle(l).supersolvable_supplement(h);
}

bool is_complemented(const SubgroupLattice& l, std::size_t h) { return EmbeddingOracle(l).complemented(h).has_value(); }

}  // namespace wss
