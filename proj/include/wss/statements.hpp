#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wss/context.hpp"
#include "wss/verdict.hpp"

namespace wss {

struct StatementInfo {
  std::string id;
  std::string summary;
  /// Largest group order the statement is checked on (0 = no restriction
  /// beyond the run's own limit).
  std::uint64_t max_order;
  std::string restriction;  // why max_order is set, empty otherwise
};

/// Every checkable statement in report order.
const std::vector<StatementInfo>& statement_catalog();
const StatementInfo& statement_info(const std::string& id);

/// Expands a selector ("all", "L2.1", "C4.x", "L2.x", "L3.x", or an exact
/// id) into catalog ids. Throws std::invalid_argument for unknown names.
std::vector<std::string> expand_statements(const std::string& selector);

struct StatementOptions {
  std::size_t normal_budget = 20;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  /// Restricts prime-indexed statements to this prime.
  std::optional<std::uint64_t> p;
};

struct StatementResult {
  std::vector<Verdict> verdicts;
  std::vector<Verdict> flags;     // Q1.3 counterexample candidates
  bool normal_truncated = false;  // E-pairs dropped because of the budget
};

/// Checks one catalog statement on one group. Statements that do not apply
/// to the group (L2.6 on a non-simple group) yield no verdicts.
StatementResult verify_statement(const std::string& id, AnalysisContext& ctx, const StatementOptions& opt = {});

/// Prime-power-index subgroups of a nonabelian simple group, grouped by index.
struct PrimePowerIndexClass {
  std::uint64_t index;
  std::vector<std::size_t> subgroups;
  std::string fingerprint_name;  // of the first subgroup
};
std::vector<PrimePowerIndexClass> prime_power_index_subgroups(AnalysisContext& ctx);
bool is_nonabelian_simple(const SubgroupLattice& l);

}  // namespace wss
