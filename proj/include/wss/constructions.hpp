#pragma once

#include <cstdint>
#include <vector>

#include "wss/group.hpp"
#include "wss/subgroup.hpp"

namespace wss {

/// Multiplication table of an abstract group on {0..order-1}.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<Elem> table;  // row-major, table[a * order + b] = a*b
  Elem identity_index = 0;

  Elem operator()(Elem a, Elem b) const { return table[static_cast<std::size_t>(a) * order + b]; }
};

/// Full associativity check up to this order, sampled (10 n^2 triples) above.
inline constexpr std::size_t kAssociativityCheckCap = 729;

/// Checks the Latin-square property and associativity; throws
/// std::invalid_argument naming the first failure.
void validate_cayley_table(const CayleyTable& t);

/// Right regular representation x -> x*g; degree = order.
Group from_cayley_table(const CayleyTable& t, const std::vector<Elem>& generators,
                        std::size_t cap = kDefaultGroupCap);

/// Permutation group on degree(g)+degree(h) points.
Group direct_product(const Group& g, const Group& h, std::size_t cap = kDefaultGroupCap);

/// N x| H. action[i][j] is the image of n.generators()[j] under the
/// automorphism attached to h.generators()[i]; the action must extend to a
/// homomorphism H -> Aut(N). Elements multiply as
/// (n1,h1)(n2,h2) = (n1 * phi_h1(n2), h1 h2).
Group semidirect_product(const Group& n, const Group& h, const std::vector<std::vector<Perm>>& action,
                         std::size_t cap = kDefaultGroupCap);

/// A wr C_k with the regular action of C_k on k coordinates.
Group wreath_regular(const Group& a, unsigned k, std::size_t cap = kDefaultGroupCap);

struct Quotient {
  Group group;
  /// projection[x] for each parent element x of the numerator; kNotInSection
  /// for parent elements outside it.
  std::vector<Elem> projection;
  static constexpr Elem kNotInSection = static_cast<Elem>(-1);

  /// Image of a subgroup h with n <= h <= a.
  Subgroup image(const Subgroup& h) const;
  /// Preimage (in the parent of a) of a subgroup of the quotient.
  ElementSet preimage(const Subgroup& q) const;
};

/// A/N as the permutation group of A on the right cosets of N, degree |A:N|.
/// Throws std::invalid_argument unless N is normal in A.
Quotient quotient(const Subgroup& a, const Subgroup& n, std::size_t cap = kDefaultGroupCap);
Quotient quotient(const Group& g, const Subgroup& n, std::size_t cap = kDefaultGroupCap);

// Standard families.
Group cyclic_group(unsigned n);
/// Dihedral group of the given order (2m): symmetries of an m-gon.
Group dihedral_group(unsigned order);
Group symmetric_group(unsigned n);
Group alternating_group(unsigned n);
/// Dicyclic group of order 4m: <a, b | a^2m, b^2 = a^m, b^-1 a b = a^-1>.
/// Order 8 is Q8, order 16 is Q16, order 12 is C3 x| C4.
Group dicyclic_group(unsigned order);
Group elementary_abelian(unsigned p, unsigned rank);
/// C_m x| C_n with the generator of C_n acting as x -> x^r.
Group metacyclic(unsigned m, unsigned n, unsigned r);
/// PSL(2, q) on the projective line, q an odd prime.
Group psl2(unsigned q);

}  // namespace wss
