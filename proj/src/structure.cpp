#include "wss/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wss {

namespace {

// Distinct normal closures <floor, x^a> for x in `within` \ floor. Elements
// that generate the same cyclic subgroup, or are conjugate in a, share a
// closure and are computed once.
struct ElementClosures {
  std::vector<Subgroup> closures;
  std::vector<int> of_element;  // -1 for elements outside within \ floor
};

ElementClosures element_closures(const Subgroup& a, const Subgroup& floor, const Subgroup& within) {
  const Group& g = a.parent();
  ElementClosures out;
  out.of_element.assign(g.order(), -1);
  std::vector<char> done(g.order(), 0);
  std::vector<Elem> orbit;
  for (Elem x : within.elements()) {
    if (done[x] || floor.contains(x)) continue;
    Subgroup k = normal_closure(a, extend(floor, x));
    int id = -1;
    for (std::size_t i = 0; i < out.closures.size(); ++i) {
      if (out.closures[i] == k) {
        id = static_cast<int>(i);
        break;
      }
    }
    if (id < 0) {
      id = static_cast<int>(out.closures.size());
      out.closures.push_back(std::move(k));
    }
    orbit.assign(1, x);
    done[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : a.generators()) {
        Elem y = g.conj(orbit[i], s);
        if (!done[y]) {
          done[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    for (Elem y : orbit) {
      const std::uint64_t o = g.element_order(y);
      Elem pw = y;
      for (std::uint64_t e = 1; e < o; ++e, pw = g.mul(pw, y)) {
        if (std::gcd(e, o) == 1) {
          done[pw] = 1;
          out.of_element[pw] = id;
        }
      }
      out.of_element[y] = id;
    }
  }
  return out;
}

bool less_canonical(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

Subgroup require_p_group(const Subgroup& p, std::uint64_t* prime) {
  auto q = p_group_prime(p);
  if (!q && !p.is_trivial()) throw std::invalid_argument("not a p-group");
  *prime = q.value_or(0);
  return p;
}

}  // namespace

Subgroup derived_subgroup(const Subgroup& a) { return commutator(a, a); }

Subgroup center(const Subgroup& a) { return centralizer(a, a); }

bool is_abelian(const Subgroup& a) {
  const Group& g = a.parent();
  const auto& gens = a.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_cyclic(const Subgroup& a) {
  for (Elem x : a.elements()) {
    if (a.parent().element_order(x) == a.order()) return true;
  }
  return false;
}

std::uint64_t count_p_elements(const Subgroup& a, std::uint64_t p) {
  std::uint64_t c = 0;
  for (Elem x : a.elements()) {
    if (is_power_of(a.parent().element_order(x), p)) ++c;
  }
  return c;
}

bool is_p_group(const Subgroup& a, std::uint64_t p) { return is_power_of(a.order(), p); }

std::optional<std::uint64_t> p_group_prime(const Subgroup& a) {
  auto f = factorize(a.order());
  if (f.size() != 1) return std::nullopt;
  return f.front().prime;
}

bool is_solvable(const Subgroup& a) {
  Subgroup cur = a;
  while (!cur.is_trivial()) {
    Subgroup next = derived_subgroup(cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_nilpotent(const Subgroup& a) {
  for (const auto& pp : factorize(a.order())) {
    if (count_p_elements(a, pp.prime) != p_part(a.order(), pp.prime)) return false;
  }
  return true;
}

std::vector<Subgroup> minimal_normal_above(const Subgroup& a, const Subgroup& floor, const Subgroup& within) {
  auto ec = element_closures(a, floor, within);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < ec.closures.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < ec.closures.size() && minimal; ++j) {
      if (j != i && ec.closures[j].order() < ec.closures[i].order() && ec.closures[i].contains(ec.closures[j])) {
        minimal = false;
      }
    }
    if (minimal) out.push_back(ec.closures[i]);
  }
  std::sort(out.begin(), out.end(), less_canonical);
  return out;
}

ChiefSeries chief_series_between(const Subgroup& a, const Subgroup& from, const Subgroup& to, ChiefChoice choice) {
  ChiefSeries cs;
  cs.chain.push_back(from);
  Subgroup cur = from;
  while (cur.order() < to.order()) {
    auto mins = minimal_normal_above(a, cur, to);
    Subgroup next = choice == ChiefChoice::lowest ? mins.front() : mins.back();
    const std::uint64_t ord = next.order() / cur.order();
    auto f = factorize(ord);
    ChiefFactor factor;
    factor.order = ord;
    factor.is_prime_order = is_prime(ord);
    factor.prime = f.size() == 1 ? f.front().prime : 0;
    factor.is_abelian = cur.contains(commutator(next, next));
    cs.factors.push_back(factor);
    cs.chain.push_back(next);
    cur = std::move(next);
  }
  return cs;
}

ChiefSeries chief_series(const Subgroup& a, ChiefChoice choice) {
  return chief_series_between(a, Subgroup::trivial(a.parent()), a, choice);
}

bool is_supersolvable_section(const Subgroup& a, const Subgroup& floor) {
  auto cs = chief_series_between(a, floor, a);
  return std::all_of(cs.factors.begin(), cs.factors.end(), [](const ChiefFactor& f) { return f.is_prime_order; });
}

bool is_supersolvable(const Subgroup& a) {
  if (factorize(a.order()).size() <= 1) return true;
  if (is_nilpotent(a)) return true;
  if (!is_solvable(a)) return false;
  return is_supersolvable_section(a, Subgroup::trivial(a.parent()));
}

namespace {

template <class Pred>
Subgroup collect_above(const Subgroup& a, const Subgroup& floor, Pred keep_index) {
  auto ec = element_closures(a, floor, a);
  ElementSet s = floor.members();
  for (Elem x : a.elements()) {
    int id = ec.of_element[x];
    if (id >= 0 && keep_index(ec.closures[static_cast<std::size_t>(id)].order() / floor.order())) s.set(x);
  }
  return Subgroup::from_set(a.parent(), s);
}

}  // namespace

Subgroup o_p_above(const Subgroup& a, const Subgroup& floor, std::uint64_t p) {
  return collect_above(a, floor, [p](std::uint64_t idx) { return is_power_of(idx, p); });
}

Subgroup o_p_prime_above(const Subgroup& a, const Subgroup& floor, std::uint64_t p) {
  return collect_above(a, floor, [p](std::uint64_t idx) { return idx % p != 0; });
}

Subgroup o_p(const Subgroup& a, std::uint64_t p) { return o_p_above(a, Subgroup::trivial(a.parent()), p); }

Subgroup o_p_prime(const Subgroup& a, std::uint64_t p) {
  return o_p_prime_above(a, Subgroup::trivial(a.parent()), p);
}

Subgroup fitting_subgroup(const Subgroup& a) {
  Subgroup f = Subgroup::trivial(a.parent());
  for (const auto& pp : factorize(a.order())) f = join(f, o_p(a, pp.prime));
  return f;
}

bool is_p_nilpotent(const Subgroup& a, std::uint64_t p) {
  return o_p_prime(a, p).order() == a.order() / p_part(a.order(), p);
}

bool is_p_solvable(const Subgroup& a, std::uint64_t p) {
  auto cs = chief_series(a);
  return std::all_of(cs.factors.begin(), cs.factors.end(),
                     [p](const ChiefFactor& f) { return f.order % p != 0 || f.prime == p; });
}

PLengthResult p_length(const Subgroup& a, std::uint64_t p) {
  PLengthResult r;
  r.p = p;
  Subgroup cur = Subgroup::trivial(a.parent());
  r.upper_p_series.push_back(cur);
  unsigned layers = 0;
  for (;;) {
    Subgroup q = o_p_prime_above(a, cur, p);
    r.upper_p_series.push_back(q);
    if (q.order() == a.order()) {
      r.is_p_solvable = true;
      r.p_length = layers;
      return r;
    }
    Subgroup pl = o_p_above(a, q, p);
    r.upper_p_series.push_back(pl);
    if (pl.order() == q.order()) {
      r.is_p_solvable = false;
      return r;
    }
    ++layers;
    if (pl.order() == a.order()) {
      r.is_p_solvable = true;
      r.p_length = layers;
      return r;
    }
    cur = std::move(pl);
  }
}

Subgroup u_hypercenter_above(const Subgroup& a, const Subgroup& floor) {
  Subgroup z = floor;
  for (;;) {
    auto ec = element_closures(a, z, a);
    Subgroup next = z;
    for (const auto& k : ec.closures) {
      if (is_prime(k.order() / z.order())) next = join(next, k);
    }
    if (next == z) return z;
    z = std::move(next);
  }
}

Subgroup u_hypercenter(const Subgroup& a) { return u_hypercenter_above(a, Subgroup::trivial(a.parent())); }

Subgroup hypercenter(const Subgroup& a) {
  const Group& g = a.parent();
  Subgroup z = Subgroup::trivial(g);
  for (;;) {
    ElementSet s(g.order());
    for (Elem x : a.elements()) {
      bool central = true;
      for (Elem y : a.generators()) {
        Elem c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
        if (!z.contains(c)) {
          central = false;
          break;
        }
      }
      if (central) s.set(x);
    }
    if (s == z.members()) return z;
    z = Subgroup::from_set(g, s);
  }
}

std::uint64_t exponent(const Subgroup& p) {
  std::uint64_t prime;
  require_p_group(p, &prime);
  std::uint64_t e = 1;
  for (Elem x : p.elements()) e = std::max(e, p.parent().element_order(x));
  return e;
}

Subgroup omega1(const Subgroup& p) {
  std::uint64_t prime;
  require_p_group(p, &prime);
  const Group& g = p.parent();
  Subgroup r = Subgroup::trivial(g);
  for (Elem x : p.elements()) {
    if (g.element_order(x) == prime && !r.contains(x)) r = extend(r, x);
  }
  return r;
}

Subgroup agemo1(const Subgroup& p) {
  std::uint64_t prime;
  require_p_group(p, &prime);
  const Group& g = p.parent();
  Subgroup r = Subgroup::trivial(g);
  if (p.is_trivial()) return r;
  for (Elem x : p.elements()) {
    Elem y = g.power(x, prime);
    if (!r.contains(y)) r = extend(r, y);
  }
  return r;
}

Subgroup phi_p_group(const Subgroup& p) { return join(derived_subgroup(p), agemo1(p)); }

unsigned iota(std::uint64_t m, std::uint64_t p) {
  if (!is_prime(p) || !is_power_of(m, p)) {
    throw std::invalid_argument(std::to_string(m) + " is not a power of " + std::to_string(p));
  }
  unsigned k = 0;
  while (m > 1) {
    m /= p;
    ++k;
  }
  return k;
}

unsigned iota_group(const Subgroup& p) {
  if (p.is_trivial()) return 0;
  auto q = p_group_prime(p);
  if (!q) throw std::invalid_argument("not a p-group");
  return iota(p.order(), *q);
}

bool has_sylow_tower(const Subgroup& a) {
  const Group& g = a.parent();
  ElementSet floor(g.order());
  floor.set(Group::identity());
  std::uint64_t floor_order = 1;
  while (floor_order < a.order()) {
    const std::uint64_t rest = a.order() / floor_order;
    const std::uint64_t p = prime_divisors(rest).back();
    const std::uint64_t pp = p_part(rest, p);
    // x has p-power order modulo the floor iff x^pp lies in the floor.
    ElementSet next(g.order());
    std::uint64_t count = 0;
    for (Elem x : a.elements()) {
      if (floor.test(g.power(x, pp))) {
        next.set(x);
        ++count;
      }
    }
    if (count != pp * floor_order) return false;
    floor = std::move(next);
    floor_order = count;
  }
  return true;
}

Subgroup supersolvable_residual(const SubgroupLattice& l) {
  Subgroup whole = l[l.top()];
  Subgroup r = whole;
  for (std::size_t n : l.normal_subgroups()) {
    if (is_supersolvable_section(whole, l[n])) r = intersect(r, l[n]);
  }
  return r;
}

}  // namespace wss
