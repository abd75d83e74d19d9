#include "wss/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "wss/errors.hpp"

namespace wss {

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::optional<Elem> Group::index_of(const Perm& p) const {
  auto it = d_->lookup.find(p);
  if (it == d_->lookup.end()) return std::nullopt;
  return it->second;
}

Elem Group::power(Elem a, std::uint64_t k) const noexcept {
  Elem result = identity();
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Group close_generators(std::size_t degree, std::vector<Perm> gens, std::size_t cap) {
  if (degree == 0) throw std::invalid_argument("degree must be at least 1");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator " + g.to_cycles() + " has degree " +
                                  std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }

  // Breadth-first closure under right multiplication by the generators.
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> found;
  Perm id(degree);
  seen.insert(id);
  found.push_back(id);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = compose(found[i], g);
      if (seen.insert(next).second) {
        if (found.size() >= cap) throw CapExceeded("group order", cap, found.size() + 1);
        found.push_back(std::move(next));
      }
    }
  }

  auto data = std::make_shared<Group::Data>();
  data->degree = degree;
  data->elements = std::move(found);
  std::sort(data->elements.begin(), data->elements.end());
  const std::size_t n = data->elements.size();
  data->lookup.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) data->lookup.emplace(data->elements[i], static_cast<Elem>(i));

  for (const auto& g : gens) data->generator_indices.push_back(data->lookup.at(g));
  data->generators = std::move(gens);

  // Right multiplication by each generator, then the full table from a
  // spanning tree of the Cayley graph: x*(y s) = (x*y) s.
  const std::size_t ng = data->generators.size();
  std::vector<std::vector<Elem>> right(ng, std::vector<Elem>(n));
  for (std::size_t s = 0; s < ng; ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      right[s][x] = data->lookup.at(compose(data->elements[x], data->generators[s]));
    }
  }
  std::vector<Elem> parent(n, 0), via(n, 0), bfs_order;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  bfs_order.push_back(0);
  for (std::size_t i = 0; i < bfs_order.size(); ++i) {
    Elem y = bfs_order[i];
    for (std::size_t s = 0; s < ng; ++s) {
      Elem z = right[s][y];
      if (!reached[z]) {
        reached[z] = true;
        parent[z] = y;
        via[z] = static_cast<Elem>(s);
        bfs_order.push_back(z);
      }
    }
  }
  data->table.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) data->table[x * n] = static_cast<Elem>(x);
  for (std::size_t i = 1; i < bfs_order.size(); ++i) {
    Elem y = bfs_order[i];
    const auto& r = right[via[y]];
    for (std::size_t x = 0; x < n; ++x) {
      data->table[x * n + y] = r[data->table[x * n + parent[y]]];
    }
  }

  data->inverses.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (data->table[x * n + y] == 0) {
        data->inverses[x] = static_cast<Elem>(y);
        break;
      }
    }
  }
  data->orders.assign(n, 1);
  for (std::size_t x = 1; x < n; ++x) {
    std::uint64_t k = 1;
    Elem cur = static_cast<Elem>(x);
    while (cur != 0) {
      cur = data->table[cur * n + x];
      ++k;
    }
    data->orders[x] = k;
  }
  data->factorization = factorize(n);

  Group g;
  g.d_ = std::move(data);
  return g;
}

}  // namespace wss
