#include "wss/fingerprint.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "wss/structure.hpp"

namespace wss {

namespace {

std::string table_key(const Fingerprint& f) {
  std::ostringstream os;
  os << f.order << '|';
  for (const auto& [o, c] : f.order_histogram) os << o << ':' << c << ',';
  os << '|';
  for (auto q : f.abelianization) os << q << ',';
  os << "|z" << f.center_order;
  return os.str();
}

// Nonabelian groups of order <= 24 keyed by (order, element-order histogram,
// abelianization, center order). Every key below is unique among the groups
// of its order, which the test suite checks against explicit constructions.
const std::unordered_map<std::string, std::string>& nonabelian_table() {
  static const std::unordered_map<std::string, std::string> table = {
#include "recognition_table.inc"
  };
  return table;
}

std::string abelian_name(const std::vector<std::uint64_t>& inv) {
  if (inv.empty()) return "C1";
  // Cyclic iff the prime powers are pairwise coprime.
  std::vector<std::uint64_t> primes;
  for (auto q : inv) primes.push_back(factorize(q).front().prime);
  if (std::adjacent_find(primes.begin(), primes.end()) == primes.end()) {
    std::uint64_t n = 1;
    for (auto q : inv) n *= q;
    return "C" + std::to_string(n);
  }
  std::string out;
  for (std::size_t i = 0; i < inv.size();) {
    std::size_t j = i;
    while (j < inv.size() && inv[j] == inv[i]) ++j;
    if (!out.empty()) out += 'x';
    out += "C" + std::to_string(inv[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<std::uint64_t> abelianization_invariants(const Subgroup& a, const Subgroup& derived) {
  const Group& g = a.parent();
  const std::uint64_t index = a.order() / derived.order();
  std::vector<std::uint64_t> inv;
  for (const auto& pp : factorize(index)) {
    const std::uint64_t p = pp.prime;
    std::vector<unsigned> rank_at_least;  // r_k for k = 1, 2, ...
    unsigned prev = 0;
    std::uint64_t pk = 1;
    for (unsigned k = 1;; ++k) {
      pk *= p;
      std::uint64_t c = 0;
      for (Elem x : a.elements()) {
        if (derived.contains(g.power(x, pk))) ++c;
      }
      const unsigned n = iota(c / derived.order(), p);
      rank_at_least.push_back(n - prev);
      prev = n;
      if (n == pp.exponent) break;
    }
    rank_at_least.push_back(0);
    std::uint64_t q = 1;
    for (std::size_t k = 0; k + 1 < rank_at_least.size(); ++k) {
      q *= p;
      for (unsigned i = rank_at_least[k + 1]; i < rank_at_least[k]; ++i) inv.push_back(q);
    }
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace

bool Fingerprint::same_invariants(const Fingerprint& o) const {
  return order == o.order && abelian == o.abelian && abelianization == o.abelianization &&
         order_histogram == o.order_histogram && derived_series_orders == o.derived_series_orders &&
         sylow_normal == o.sylow_normal && center_order == o.center_order && nilpotent == o.nilpotent &&
         solvable == o.solvable && supersolvable == o.supersolvable;
}

Fingerprint fingerprint(const Subgroup& a) {
  const Group& g = a.parent();
  Fingerprint f;
  f.order = a.order();
  f.abelian = is_abelian(a);
  for (Elem x : a.elements()) ++f.order_histogram[g.element_order(x)];

  Subgroup cur = a;
  f.derived_series_orders.push_back(cur.order());
  Subgroup d1 = derived_subgroup(a);
  for (Subgroup next = d1; next.order() < cur.order(); next = derived_subgroup(cur)) {
    f.derived_series_orders.push_back(next.order());
    cur = next;
  }
  f.abelianization = abelianization_invariants(a, d1);

  for (const auto& pp : factorize(f.order)) {
    f.sylow_normal[pp.prime] = count_p_elements(a, pp.prime) == p_part(f.order, pp.prime);
  }
  f.center_order = center(a).order();
  f.solvable = cur.is_trivial();
  f.nilpotent = std::all_of(f.sylow_normal.begin(), f.sylow_normal.end(), [](const auto& kv) { return kv.second; });
  f.supersolvable = f.solvable && is_supersolvable(a);
  f.name = recognize(f);
  return f;
}

Fingerprint fingerprint(const Group& g) { return fingerprint(Subgroup::whole(g)); }

std::string recognize(const Fingerprint& f) {
  if (f.abelian) return abelian_name(f.abelianization);
  if (f.order > kRecognitionMaxOrder) return "unrecognized";
  const auto& t = nonabelian_table();
  auto it = t.find(table_key(f));
  return it == t.end() ? "unrecognized" : it->second;
}

std::string fingerprint_key(const Fingerprint& f) { return table_key(f); }

}  // namespace wss
