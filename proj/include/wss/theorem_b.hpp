#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wss/context.hpp"
#include "wss/verdict.hpp"

namespace wss {

/// What the subgroups H of order |D| (and 2|D|) must satisfy.
enum class ClauseMode {
  supplemented,  // supersolvable supplement, or weakly s-supplemented
  permutable,    // supersolvable supplement, or weakly s-permutable
  question13,    // weakly s-supplemented, no escape clause
};

std::string_view to_string(ClauseMode m);

struct DOrderCheck {
  std::uint64_t d;
  bool two_d_rule_applied;  // P a nonabelian 2-group and |P:D| > 2
  bool holds;
  std::optional<std::size_t> failing_h;  // first H violating the clause
  std::string failing_description;
  bool cond_ii;                          // |D| <= |P'|
  bool cond_iii;                         // |P'| < |D| and one of the two gcd conditions
};

struct PrimeReport {
  std::uint64_t p;
  std::size_t sylow;  // lattice index of the Sylow p-subgroup of E examined
  std::uint64_t sylow_order;
  bool sylow_cyclic;
  bool cond_i;  // Phi(P) != P'
  std::uint64_t derived_order;
  std::vector<DOrderCheck> d_orders;

  /// Some admissible |D| satisfies the clause.
  bool clause_holds() const;
  /// Some admissible |D| satisfies the clause together with (i), (ii) or (iii).
  bool clause_holds_with_conditions() const;
};

struct HypothesisReport {
  std::size_t e;
  ClauseMode mode;
  bool quotient_in_formation;  // G/E in F
  std::vector<PrimeReport> per_prime;

  /// G/E in F and every non-cyclic Sylow subgroup of E has a good |D|.
  bool holds() const;
  /// As holds(), with the good |D| also meeting (i), (ii) or (iii).
  bool holds_with_conditions() const;
};

/// Formation membership of the section a/floor. The default is supersolvability.
using FormationPredicate = std::function<bool(const Subgroup& a, const Subgroup& floor)>;

/// Throws std::invalid_argument unless e is normal in G.
HypothesisReport thmB_hypothesis(AnalysisContext& ctx, std::size_t e, ClauseMode mode,
                                 const FormationPredicate& formation = {});

Verdict check_thmB(AnalysisContext& ctx, std::size_t e, const FormationPredicate& formation = {});
Verdict check_thm12(AnalysisContext& ctx, std::size_t e, const FormationPredicate& formation = {});

/// Evaluates the hypothesis without (i)-(iii). The verdict is flagged (a
/// counterexample candidate) when the hypothesis holds and G is not
/// supersolvable; it is inconsistent only if a flagged pair would also
/// satisfy the thmB hypothesis with its conditions.
struct Q13Result {
  Verdict verdict;
  bool flagged;
};
Q13Result check_question13(AnalysisContext& ctx, std::size_t e);

/// Normal subgroups E to pair with G, largest first (G itself first), at
/// most `budget` of them. `truncated` reports whether any were dropped.
std::vector<std::size_t> normal_pairs(const SubgroupLattice& l, std::size_t budget, bool* truncated = nullptr);

/// The gcd conditions of (iii) for orders |P| = p^a, |P'| = p^c, |D| = p^b.
bool condition_iii(unsigned iota_p, unsigned iota_derived, unsigned iota_d);

}  // namespace wss
