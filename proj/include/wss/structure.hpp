#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wss/lattice.hpp"
#include "wss/subgroup.hpp"

namespace wss {

// Structural predicates and series. Every function treats its Subgroup
// argument `a` as a group in its own right; pass Subgroup::whole(G) for G.
// Several take a `floor` N, normal in a, and then describe the section a/N
// through preimages in a.

Subgroup derived_subgroup(const Subgroup& a);
Subgroup center(const Subgroup& a);
bool is_abelian(const Subgroup& a);
bool is_cyclic(const Subgroup& a);
/// Number of elements of a whose order is a power of p (identity included).
std::uint64_t count_p_elements(const Subgroup& a, std::uint64_t p);
/// a is a p-group (trivial counts).
bool is_p_group(const Subgroup& a, std::uint64_t p);
/// The prime p when a is a nontrivial p-group, otherwise nullopt.
std::optional<std::uint64_t> p_group_prime(const Subgroup& a);

bool is_solvable(const Subgroup& a);
/// Every Sylow subgroup normal.
bool is_nilpotent(const Subgroup& a);
/// Solvable with every chief factor of prime order.
bool is_supersolvable(const Subgroup& a);
/// a/floor is supersolvable.
bool is_supersolvable_section(const Subgroup& a, const Subgroup& floor);

struct ChiefFactor {
  std::uint64_t order;
  bool is_prime_order;
  bool is_abelian;
  std::uint64_t prime;  // the prime when order is a prime power, else 0
};

struct ChiefSeries {
  std::vector<Subgroup> chain;  // chain.front() = lower end, chain.back() = upper end
  std::vector<ChiefFactor> factors;
};

/// Which minimal normal subgroup to take at each step. Both choices give a
/// valid chief series; comparing them exercises Jordan-Hoelder.
enum class ChiefChoice { lowest, highest };

/// Minimal normal subgroups of a/floor contained in within/floor, as
/// preimages, sorted by (order, members).
std::vector<Subgroup> minimal_normal_above(const Subgroup& a, const Subgroup& floor, const Subgroup& within);

ChiefSeries chief_series(const Subgroup& a, ChiefChoice choice = ChiefChoice::lowest);
/// Chief series of a running from `from` up to `to` (both normal in a).
ChiefSeries chief_series_between(const Subgroup& a, const Subgroup& from, const Subgroup& to,
                                 ChiefChoice choice = ChiefChoice::lowest);

/// Largest normal p-subgroup.
Subgroup o_p(const Subgroup& a, std::uint64_t p);
/// Largest normal p'-subgroup.
Subgroup o_p_prime(const Subgroup& a, std::uint64_t p);
/// Preimages of O_p(a/floor) and O_p'(a/floor).
Subgroup o_p_above(const Subgroup& a, const Subgroup& floor, std::uint64_t p);
Subgroup o_p_prime_above(const Subgroup& a, const Subgroup& floor, std::uint64_t p);
/// Product of O_p(a) over all primes.
Subgroup fitting_subgroup(const Subgroup& a);

/// Has a normal p-complement: |O_p'(a)| = |a|_p'.
bool is_p_nilpotent(const Subgroup& a, std::uint64_t p);
/// Every chief factor is a p-group or a p'-group.
bool is_p_solvable(const Subgroup& a, std::uint64_t p);

struct PLengthResult {
  std::uint64_t p;
  bool is_p_solvable;
  /// Unset when a is not p-solvable.
  std::optional<unsigned> p_length;
  /// 1 = N0 <= N1 = O_p'(a) <= N2 <= ... alternating p'- and p-layers.
  std::vector<Subgroup> upper_p_series;
};
PLengthResult p_length(const Subgroup& a, std::uint64_t p);

/// Largest normal subgroup all of whose a-chief factors have prime order.
Subgroup u_hypercenter(const Subgroup& a);
/// Preimage of the U-hypercenter of a/floor.
Subgroup u_hypercenter_above(const Subgroup& a, const Subgroup& floor);
/// Terminal member of the upper central series.
Subgroup hypercenter(const Subgroup& a);

// p-group operators; each throws std::invalid_argument unless `p` is a p-group.
std::uint64_t exponent(const Subgroup& p);
Subgroup omega1(const Subgroup& p);
Subgroup agemo1(const Subgroup& p);
/// P' * agemo1(P), which equals the Frattini subgroup of a p-group.
Subgroup phi_p_group(const Subgroup& p);

/// The alpha with m = p^alpha; throws std::invalid_argument otherwise.
unsigned iota(std::uint64_t m, std::uint64_t p);
/// iota(|P|) for a p-group P (0 for the trivial group).
unsigned iota_group(const Subgroup& p);

/// Sylow tower of supersolvable type: peel off a normal Sylow subgroup for
/// the largest remaining prime until nothing is left.
bool has_sylow_tower(const Subgroup& a);

/// Smallest normal subgroup with supersolvable quotient.
Subgroup supersolvable_residual(const SubgroupLattice& l);

// Whole-group conveniences.
inline bool is_solvable(const Group& g) { return is_solvable(Subgroup::whole(g)); }
inline bool is_nilpotent(const Group& g) { return is_nilpotent(Subgroup::whole(g)); }
inline bool is_supersolvable(const Group& g) { return is_supersolvable(Subgroup::whole(g)); }
inline bool is_abelian(const Group& g) { return is_abelian(Subgroup::whole(g)); }

}  // namespace wss
