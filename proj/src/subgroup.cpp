#include "wss/subgroup.hpp"

#include <numeric>
#include <stdexcept>

namespace wss {

Subgroup::Subgroup(Group parent, ElementSet members, std::vector<Elem> elements, std::vector<Elem> gens)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      elements_(std::move(elements)),
      generators_(std::move(gens)) {
  if (parent_.order() % elements_.size() != 0) {
    throw std::logic_error("subgroup order does not divide the group order");
  }
}

Subgroup Subgroup::whole(const Group& g) {
  std::vector<Elem> elems(g.order());
  std::iota(elems.begin(), elems.end(), Elem{0});
  return Subgroup(g, ElementSet::full(g.order()), std::move(elems), g.generator_indices());
}

Subgroup Subgroup::trivial(const Group& g) {
  ElementSet s(g.order());
  s.set(Group::identity());
  return Subgroup(g, std::move(s), {Group::identity()}, {});
}

Subgroup Subgroup::generated(const Group& g, std::span<const Elem> gens) {
  Subgroup h = trivial(g);
  for (Elem x : gens) {
    if (!h.contains(x)) h = extend(h, x);
  }
  return h;
}

Subgroup Subgroup::from_set(const Group& g, const ElementSet& members) {
  Subgroup h = trivial(g);
  bool ok = true;
  members.for_each([&](Elem x) {
    if (ok && !h.contains(x)) {
      h = extend(h, x);
      if (!h.members_.is_subset_of(members)) ok = false;
    }
  });
  if (!ok || h.members_ != members) throw std::invalid_argument("element set is not a subgroup");
  return h;
}

Group Subgroup::as_group(std::size_t cap) const {
  std::vector<Perm> gens;
  for (Elem x : generators_) gens.push_back(parent_.element(x));
  return close_generators(parent_.degree(), std::move(gens), cap);
}

Subgroup extend(const Subgroup& h, Elem x) {
  const Group& g = h.parent();
  if (h.contains(x)) return h;
  ElementSet members = h.members();
  std::vector<Elem> elements = h.elements();
  std::vector<Elem> gens = h.generators();
  gens.push_back(x);
  const std::vector<Elem>& base = h.elements();
  std::vector<Elem> reps{Group::identity()};
  auto add_coset = [&](Elem r) {
    reps.push_back(r);
    for (Elem b : base) {
      Elem y = g.mul(b, r);
      members.set(y);
      elements.push_back(y);
    }
  };
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(reps[i], s);
      if (!members.test(y)) add_coset(y);
    }
  }
  return Subgroup(g, std::move(members), std::move(elements), std::move(gens));
}

void require_same_parent(const Subgroup& h, const Subgroup& k) {
  if (!h.parent().same_as(k.parent())) throw std::invalid_argument("subgroups have different parents");
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (h.contains(k)) return h;
  if (k.contains(h)) return k;
  Subgroup r = h.order() >= k.order() ? h : k;
  const Subgroup& other = h.order() >= k.order() ? k : h;
  for (Elem x : other.generators()) {
    if (!r.contains(x)) r = extend(r, x);
  }
  return r;
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (h.contains(k)) return k;
  if (k.contains(h)) return h;
  return Subgroup::from_set(h.parent(), h.members() & k.members());
}

ElementSet conjugate_set(const Group& g, const ElementSet& s, Elem by) {
  ElementSet out(g.order());
  Elem inv = g.inv(by);
  s.for_each([&](Elem x) { out.set(g.mul(g.mul(inv, x), by)); });
  return out;
}

Subgroup conjugate(const Subgroup& h, Elem g) {
  const Group& G = h.parent();
  std::vector<Elem> gens;
  for (Elem x : h.generators()) gens.push_back(G.conj(x, g));
  return Subgroup::generated(G, gens);
}

bool is_normal(const Subgroup& a, const Subgroup& h) {
  const Group& g = a.parent();
  for (Elem s : a.generators()) {
    for (Elem x : h.generators()) {
      if (!h.contains(g.conj(x, s))) return false;
    }
  }
  return true;
}

Subgroup normal_closure(const Subgroup& a, const Subgroup& h) {
  require_same_parent(a, h);
  const Group& g = a.parent();
  Subgroup n = h;
  // Invariant: every generator of n at index < i has all its conjugates
  // by generators of a inside n.
  for (std::size_t i = 0; i < n.generators().size(); ++i) {
    Elem x = n.generators()[i];
    for (Elem s : a.generators()) {
      Elem y = g.conj(x, s);
      if (!n.contains(y)) n = extend(n, y);
    }
  }
  return n;
}

Subgroup normalizer(const Subgroup& a, const Subgroup& h) {
  require_same_parent(a, h);
  const Group& g = a.parent();
  ElementSet keep(g.order());
  for (Elem x : a.elements()) {
    bool ok = true;
    for (Elem y : h.generators()) {
      if (!h.contains(g.conj(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) keep.set(x);
  }
  return Subgroup::from_set(g, keep);
}

Subgroup centralizer(const Subgroup& a, const Subgroup& h) {
  require_same_parent(a, h);
  const Group& g = a.parent();
  ElementSet keep(g.order());
  for (Elem x : a.elements()) {
    bool ok = true;
    for (Elem y : h.generators()) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) keep.set(x);
  }
  return Subgroup::from_set(g, keep);
}

Subgroup core(const Subgroup& a, const Subgroup& h) {
  require_same_parent(a, h);
  const Group& g = a.parent();
  ElementSet c = h.members();
  for (Elem x : a.elements()) {
    c &= conjugate_set(g, h.members(), x);
  }
  return Subgroup::from_set(g, c);
}

bool is_subnormal(const Subgroup& a, const Subgroup& h) {
  Subgroup current = a;
  for (;;) {
    if (current == h) return true;
    Subgroup next = normal_closure(current, h);
    if (next == current) return false;
    current = std::move(next);
  }
}

ProductSet product_set(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& g = h.parent();
  ElementSet s(g.order());
  for (Elem y : k.elements()) {
    if (s.test(y)) continue;  // coset H*y already present
    for (Elem x : h.elements()) s.set(g.mul(x, y));
  }
  std::uint64_t size = s.count();
  // HK is a group iff it is closed under right multiplication by H.
  bool closed = true;
  s.for_each([&](Elem z) {
    if (!closed) return;
    for (Elem x : h.generators()) {
      if (!s.test(g.mul(z, x))) {
        closed = false;
        return;
      }
    }
  });
  return {size, closed, std::move(s)};
}

std::uint64_t product_size(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  return h.order() * k.order() / h.members().intersection_count(k.members());
}

bool permutes(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  if (h.contains(k) || k.contains(h)) return true;
  return product_set(h, k).is_group;
}

Subgroup commutator(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const Group& g = h.parent();
  std::vector<Elem> comms;
  for (Elem x : h.generators()) {
    for (Elem y : k.generators()) {
      Elem c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (c != Group::identity()) comms.push_back(c);
    }
  }
  // [H,K] is normalized by H and K, so closing under both gives the group
  // generated by all commutators.
  Subgroup c = Subgroup::generated(g, comms);
  Subgroup hk = join(h, k);
  return normal_closure(hk, c);
}

Subgroup upper_p(const Subgroup& a, std::uint64_t p) {
  const Group& g = a.parent();
  Subgroup r = Subgroup::trivial(g);
  for (Elem x : a.elements()) {
    if (g.element_order(x) % p != 0 && !r.contains(x)) r = extend(r, x);
  }
  return r;
}

}  // namespace wss
