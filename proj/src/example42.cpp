#include "wss/example42.hpp"

#include <algorithm>

#include "wss/constructions.hpp"
#include "wss/fingerprint.hpp"
#include "wss/structure.hpp"

namespace wss {

bool Example42Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Example42Check& c) { return c.passed; });
}

Group example42_wreath(std::size_t cap) { return wreath_regular(symmetric_group(3), 3, cap); }

Group example42_group(std::size_t cap) {
  const Group b = example42_wreath(cap);
  return upper_p(Subgroup::whole(b), 2).as_group(cap);
}

Example42Report build_example42(std::size_t group_cap, std::size_t lattice_cap) {
  Example42Report r;
  auto check = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const Group b = example42_wreath(group_cap);
  r.b_order = b.order();
  check("|B| = 648", r.b_order == 648, std::to_string(r.b_order));

  const Subgroup o2 = upper_p(Subgroup::whole(b), 2);
  r.g_order = o2.order();
  check("|G| = 324", r.g_order == 324, std::to_string(r.g_order));

  // O^2(B) as the smallest normal subgroup of 2-power index must agree with
  // the subgroup generated by the elements of odd order.
  std::vector<Elem> threes;
  for (Elem x = 0; x < b.order(); ++x) {
    if (b.element_order(x) == 3) threes.push_back(x);
  }
  const Subgroup by_threes = Subgroup::generated(b, threes);
  r.generated_by_3_elements = by_threes == o2;
  check("G generated by elements of order 3", r.generated_by_3_elements, std::to_string(by_threes.order()));

  auto ctx = make_context("G(324)", o2.as_group(group_cap), lattice_cap);
  const Subgroup g = ctx->whole();

  const Subgroup o3 = o_p(g, 3);
  r.o3_order = o3.order();
  r.o3_elementary_abelian = is_abelian(o3) && is_p_group(o3, 3) && exponent(o3) == 3;
  check("O_3(G) elementary abelian of order 27", r.o3_order == 27 && r.o3_elementary_abelian,
        "order " + std::to_string(r.o3_order));

  const Quotient q = quotient(ctx->group, o3, group_cap);
  r.quotient_name = fingerprint(q.group).name;
  check("G/O_3(G) has the A4 fingerprint", r.quotient_name == "A4", r.quotient_name);

  const std::size_t ps = ctx->oracle.sylows(3).front();
  r.sylow3_order = ctx->lattice[ps].order();
  check("|P| = 81", r.sylow3_order == 81, std::to_string(r.sylow3_order));

  const auto& maxes = ctx->lattice.maximal_of(ps);
  r.sylow3_maximal_count = maxes.size();
  for (std::size_t h : maxes) {
    if (ctx->oracle.complemented(h)) ++r.complemented_count;
    if (ctx->oracle.weakly_s_supplemented(h)) ++r.wss_count;
  }
  check("every maximal subgroup of P is complemented", r.complemented_count == maxes.size() && !maxes.empty(),
        std::to_string(r.complemented_count) + "/" + std::to_string(maxes.size()));
  check("every maximal subgroup of P is weakly s-supplemented", r.wss_count == maxes.size() && !maxes.empty(),
        std::to_string(r.wss_count) + "/" + std::to_string(maxes.size()));

  const PLengthResult pl = p_length(g, 3);
  r.p_length = pl.p_length;
  check("3-length of G is 2", pl.p_length == 2u,
        pl.p_length ? std::to_string(*pl.p_length) : std::string("undefined"));
  return r;
}

}  // namespace wss
