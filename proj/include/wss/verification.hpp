#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wss/corpus.hpp"
#include "wss/lattice.hpp"
#include "wss/verdict.hpp"

namespace wss {

struct VerifyOptions {
  std::vector<std::string> statements;  // catalog ids
  std::uint64_t max_order = 200;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::size_t normal_budget = 20;
  unsigned jobs = 1;
  std::string corpus_label = "builtin";
};

struct GroupNote {
  std::string group;
  std::uint64_t order;
  std::string reason;
};

struct Restriction {
  std::string statement;
  std::uint64_t max_order;
  std::string reason;
};

struct VerificationRun {
  VerifyOptions options;
  std::size_t corpus_size = 0;
  std::size_t groups_examined = 0;
  std::vector<Verdict> verdicts;  // corpus order, then catalog order
  std::vector<Verdict> flags;
  std::vector<GroupNote> truncated;   // normal-subgroup budget hit
  std::vector<GroupNote> skipped;     // above max-order
  std::vector<GroupNote> cap_errors;  // construction or lattice cap exceeded
  std::vector<Restriction> restrictions;
  std::map<std::string, double> seconds;  // wall time per statement, summed over groups

  std::size_t inconsistent_count() const;
  bool consistent() const { return inconsistent_count() == 0; }
};

using ProgressFn = std::function<void(const std::string& group, std::size_t done, std::size_t total)>;

/// Checks every selected statement on every corpus member within the order
/// limits. Members are processed by `jobs` workers; the merged result does
/// not depend on scheduling.
VerificationRun run_verification(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt,
                                 const ProgressFn& progress = {});

}  // namespace wss
