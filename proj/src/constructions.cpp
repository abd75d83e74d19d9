#include "wss/constructions.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "wss/errors.hpp"

namespace wss {

void validate_cayley_table(const CayleyTable& t) {
  const std::size_t n = t.order;
  if (t.table.size() != n * n) throw std::invalid_argument("Cayley table has the wrong size");
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      Elem c = t(static_cast<Elem>(a), static_cast<Elem>(b));
      if (c >= n || seen[c]) throw std::invalid_argument("Cayley table row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      Elem c = t(static_cast<Elem>(a), static_cast<Elem>(b));
      if (seen[c]) throw std::invalid_argument("Cayley table column " + std::to_string(b) + " is not a permutation");
      seen[c] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t(static_cast<Elem>(a), t.identity_index) != a || t(t.identity_index, static_cast<Elem>(a)) != a) {
      throw std::invalid_argument("Cayley table identity is wrong");
    }
  }
  auto check = [&](Elem a, Elem b, Elem c) {
    if (t(t(a, b), c) != t(a, t(b, c))) {
      throw std::invalid_argument("Cayley table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (n <= kAssociativityCheckCap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < 10 * n * n; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

Group from_cayley_table(const CayleyTable& t, const std::vector<Elem>& generators, std::size_t cap) {
  if (t.order > cap) throw CapExceeded("group order", cap, t.order);
  std::vector<Perm> gens;
  for (Elem g : generators) {
    std::vector<Point> images(t.order);
    for (std::size_t x = 0; x < t.order; ++x) images[x] = t(static_cast<Elem>(x), g);
    gens.emplace_back(std::move(images));
  }
  return close_generators(t.order, std::move(gens), cap);
}

namespace {

Perm shift_perm(const Perm& p, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t x = 0; x < p.degree(); ++x) images[x + offset] = static_cast<Point>(p(static_cast<Point>(x)) + offset);
  return Perm(std::move(images));
}

// Extends generator images to a map on all elements, verifying that it is a
// bijective homomorphism n -> n.
std::vector<Elem> extend_automorphism(const Group& n, const std::vector<Perm>& images) {
  const auto& gens = n.generator_indices();
  if (images.size() != gens.size()) throw std::invalid_argument("action: wrong number of generator images");
  std::vector<Elem> img_idx;
  for (const auto& p : images) {
    auto idx = n.index_of(p);
    if (!idx) throw std::invalid_argument("action: generator image " + p.to_cycles() + " is not in N");
    img_idx.push_back(*idx);
  }
  const std::size_t order = n.order();
  std::vector<Elem> phi(order, 0);
  std::vector<bool> done(order, false);
  std::vector<Elem> queue{Group::identity()};
  done[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Elem y = n.mul(x, gens[s]);
      if (!done[y]) {
        done[y] = true;
        phi[y] = n.mul(phi[x], img_idx[s]);
        queue.push_back(y);
      }
    }
  }
  for (Elem x = 0; x < order; ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (phi[n.mul(x, gens[s])] != n.mul(phi[x], img_idx[s])) {
        throw std::invalid_argument("action: generator images do not define a homomorphism");
      }
    }
  }
  std::vector<bool> hit(order, false);
  for (Elem y : phi) hit[y] = true;
  for (bool b : hit) {
    if (!b) throw std::invalid_argument("action: generator images do not define an automorphism");
  }
  return phi;
}

}  // namespace

Group direct_product(const Group& g, const Group& h, std::size_t cap) {
  if (g.order() * h.order() > cap) throw CapExceeded("group order", cap, g.order() * h.order());
  const std::size_t degree = g.degree() + h.degree();
  std::vector<Perm> gens;
  for (const auto& p : g.generators()) gens.push_back(shift_perm(p, 0, degree));
  for (const auto& p : h.generators()) gens.push_back(shift_perm(p, g.degree(), degree));
  return close_generators(degree, std::move(gens), cap);
}

Group semidirect_product(const Group& n, const Group& h, const std::vector<std::vector<Perm>>& action,
                         std::size_t cap) {
  const std::size_t nn = n.order(), nh = h.order();
  if (nn * nh > cap) throw CapExceeded("group order", cap, nn * nh);
  const auto& hgens = h.generator_indices();
  if (action.size() != hgens.size()) throw std::invalid_argument("action: one image list per generator of H required");

  std::vector<std::vector<Elem>> gen_auts;
  for (const auto& imgs : action) gen_auts.push_back(extend_automorphism(n, imgs));

  // phi_{x t} = phi_x o phi_t, i.e. phi_{xt}(m) = phi_x(phi_t(m)).
  std::vector<std::vector<Elem>> phi(nh);
  phi[0].resize(nn);
  std::iota(phi[0].begin(), phi[0].end(), Elem{0});
  std::vector<Elem> queue{Group::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t s = 0; s < hgens.size(); ++s) {
      Elem y = h.mul(x, hgens[s]);
      if (phi[y].empty()) {
        phi[y].resize(nn);
        for (Elem m = 0; m < nn; ++m) phi[y][m] = phi[x][gen_auts[s][m]];
        queue.push_back(y);
      }
    }
  }
  for (Elem x = 0; x < nh; ++x) {
    for (std::size_t s = 0; s < hgens.size(); ++s) {
      const auto& lhs = phi[h.mul(x, hgens[s])];
      for (Elem m = 0; m < nn; ++m) {
        if (lhs[m] != phi[x][gen_auts[s][m]]) {
          throw std::invalid_argument("action does not respect the relations of H");
        }
      }
    }
  }

  CayleyTable t;
  t.order = nn * nh;
  t.table.resize(t.order * t.order);
  for (Elem n1 = 0; n1 < nn; ++n1)
    for (Elem h1 = 0; h1 < nh; ++h1)
      for (Elem n2 = 0; n2 < nn; ++n2)
        for (Elem h2 = 0; h2 < nh; ++h2) {
          Elem a = n1 * static_cast<Elem>(nh) + h1;
          Elem b = n2 * static_cast<Elem>(nh) + h2;
          Elem nc = n.mul(n1, phi[h1][n2]);
          Elem hc = h.mul(h1, h2);
          t.table[static_cast<std::size_t>(a) * t.order + b] = nc * static_cast<Elem>(nh) + hc;
        }
  validate_cayley_table(t);

  std::vector<Elem> gens;
  for (Elem g : n.generator_indices()) gens.push_back(g * static_cast<Elem>(nh));
  for (Elem g : hgens) gens.push_back(g);
  return from_cayley_table(t, gens, cap);
}

Group wreath_regular(const Group& a, unsigned k, std::size_t cap) {
  if (k == 0) throw std::invalid_argument("wreath_regular: k must be at least 1");
  std::size_t needed = k;
  for (unsigned i = 0; i < k; ++i) {
    needed *= a.order();
    if (needed > cap) throw CapExceeded("group order", cap, needed);
  }
  Group base = a;
  for (unsigned i = 1; i < k; ++i) base = direct_product(base, a, cap);
  Group top = cyclic_group(k);
  std::vector<std::vector<Perm>> action;
  if (k > 1) {
    const std::size_t per = a.generators().size();
    const auto& gens = base.generators();
    std::vector<Perm> images;
    for (unsigned i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < per; ++j) images.push_back(gens[((i + 1) % k) * per + j]);
    }
    action.push_back(std::move(images));
  }
  return semidirect_product(base, top, action, cap);
}

Subgroup Quotient::image(const Subgroup& h) const {
  ElementSet s(group.order());
  for (Elem x : h.elements()) {
    if (projection[x] == kNotInSection) throw std::invalid_argument("subgroup is not inside the numerator");
    s.set(projection[x]);
  }
  return Subgroup::from_set(group, s);
}

ElementSet Quotient::preimage(const Subgroup& q) const {
  ElementSet s(projection.size());
  for (std::size_t x = 0; x < projection.size(); ++x) {
    if (projection[x] != kNotInSection && q.contains(projection[x])) s.set(x);
  }
  return s;
}

Quotient quotient(const Subgroup& a, const Subgroup& n, std::size_t cap) {
  require_same_parent(a, n);
  if (!a.contains(n) || !is_normal(a, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  const Group& g = a.parent();
  std::vector<Elem> coset_of(g.order(), Quotient::kNotInSection);
  std::vector<Elem> reps;
  for (Elem x : a.elements()) {
    if (coset_of[x] != Quotient::kNotInSection) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : n.elements()) coset_of[g.mul(m, x)] = id;
  }
  const std::size_t index = reps.size();
  auto action_of = [&](Elem x) {
    std::vector<Point> images(index);
    for (std::size_t i = 0; i < index; ++i) images[i] = coset_of[g.mul(reps[i], x)];
    return Perm(std::move(images));
  };
  std::vector<Perm> gens;
  for (Elem x : a.generators()) gens.push_back(action_of(x));
  Quotient q;
  q.group = close_generators(index, std::move(gens), cap);
  q.projection.assign(g.order(), Quotient::kNotInSection);
  // Elements in the same coset share an image; compute once per coset.
  std::vector<Elem> image_of_coset(index, Quotient::kNotInSection);
  for (Elem x : a.elements()) {
    Elem c = coset_of[x];
    if (image_of_coset[c] == Quotient::kNotInSection) image_of_coset[c] = *q.group.index_of(action_of(x));
    q.projection[x] = image_of_coset[c];
  }
  return q;
}

Quotient quotient(const Group& g, const Subgroup& n, std::size_t cap) {
  return quotient(Subgroup::whole(g), n, cap);
}

Group cyclic_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  std::vector<Point> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = (i + 1) % n;
  std::vector<Perm> gens;
  if (n > 1) gens.emplace_back(std::move(images));
  return close_generators(n, std::move(gens));
}

Group dihedral_group(unsigned order) {
  if (order < 2 || order % 2) throw std::invalid_argument("dihedral_group: order must be even");
  const unsigned m = order / 2;
  if (m == 1) return cyclic_group(2);
  if (m == 2) return close_generators(4, {Perm::from_cycles(4, "(1 2)"), Perm::from_cycles(4, "(3 4)")});
  std::vector<Point> rot(m), refl(m);
  for (unsigned i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    refl[i] = (m - i) % m;
  }
  return close_generators(m, {Perm(std::move(rot)), Perm(std::move(refl))});
}

Group symmetric_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("symmetric_group: n must be positive");
  if (n == 1) return close_generators(1, {});
  std::vector<Point> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return close_generators(n, {Perm::from_cycles(n, "(1 2)"), Perm(std::move(cyc))});
}

Group alternating_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("alternating_group: n must be positive");
  std::vector<Perm> gens;
  for (unsigned k = 3; k <= n; ++k) {
    gens.push_back(Perm::from_cycles(n, "(1 2 " + std::to_string(k) + ")"));
  }
  return close_generators(n, std::move(gens));
}

Group dicyclic_group(unsigned order) {
  if (order < 8 || order % 4) throw std::invalid_argument("dicyclic_group: order must be 4m with m >= 2");
  const unsigned m = order / 4, two_m = 2 * m;
  // Element a^i b^j encoded as i + two_m * j.
  CayleyTable t;
  t.order = order;
  t.table.resize(static_cast<std::size_t>(order) * order);
  for (unsigned i = 0; i < two_m; ++i)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned k = 0; k < two_m; ++k)
        for (unsigned l = 0; l < 2; ++l) {
          unsigned ri, rj;
          if (j == 0) {
            ri = (i + k) % two_m;
            rj = l;
          } else if (l == 0) {
            ri = (i + two_m - k) % two_m;
            rj = 1;
          } else {
            ri = (i + two_m - k + m) % two_m;
            rj = 0;
          }
          t.table[static_cast<std::size_t>(i + two_m * j) * order + (k + two_m * l)] = ri + two_m * rj;
        }
  validate_cayley_table(t);
  return from_cayley_table(t, {1, two_m});
}

Group elementary_abelian(unsigned p, unsigned rank) {
  Group g = cyclic_group(p);
  for (unsigned i = 1; i < rank; ++i) g = direct_product(g, cyclic_group(p));
  return g;
}

Group metacyclic(unsigned m, unsigned n, unsigned r) {
  Group base = cyclic_group(m);
  Group top = cyclic_group(n);
  std::vector<std::vector<Perm>> action;
  if (n > 1) {
    const Perm& a = base.generators().at(0);
    Perm img(m);
    for (unsigned i = 0; i < r; ++i) img = compose(img, a);
    action.push_back({img});
  }
  return semidirect_product(base, top, action);
}

Group psl2(unsigned q) {
  if (!is_prime(q) || q == 2) throw std::invalid_argument("psl2: q must be an odd prime");
  // Points 0..q-1 of F_q plus infinity = q.
  const unsigned inf = q;
  std::vector<Point> translate(q + 1), invert(q + 1);
  for (unsigned x = 0; x < q; ++x) translate[x] = (x + 1) % q;
  translate[inf] = inf;
  auto inv_mod = [q](unsigned x) {
    for (unsigned y = 1; y < q; ++y) {
      if ((x * y) % q == 1) return y;
    }
    return 0u;
  };
  invert[0] = inf;
  invert[inf] = 0;
  for (unsigned x = 1; x < q; ++x) invert[x] = (q - inv_mod(x)) % q;
  return close_generators(q + 1, {Perm(std::move(translate)), Perm(std::move(invert))});
}

}  // namespace wss
