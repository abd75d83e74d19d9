#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wss {

struct HypothesisReport;

/// Outcome of checking one statement on one group (or one (G, E) pair).
///
/// Quantified statements are aggregated: `instances` counts the concrete
/// instantiations examined and `hypothesis_instances` those whose hypothesis
/// held. `consistent` is false as soon as one instance has a true hypothesis
/// and a false conclusion; the offending instances are listed in witnesses.
struct Verdict {
  std::string group;
  std::uint64_t order = 0;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> params;
  bool hypothesis_satisfied = false;
  std::optional<bool> conclusion_holds;
  bool consistent = true;
  std::uint64_t instances = 0;
  std::uint64_t hypothesis_instances = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  /// Present for thmB, thm12 and Q1.3.
  std::shared_ptr<const HypothesisReport> hypothesis;

  /// Records one instantiation.
  void record(bool hypothesis_holds, bool conclusion, const std::string& what) {
    ++instances;
    if (!hypothesis_holds) return;
    ++hypothesis_instances;
    hypothesis_satisfied = true;
    conclusion_holds = conclusion_holds.value_or(true) && conclusion;
    if (!conclusion) {
      consistent = false;
      witnesses.push_back(what);
    }
  }
};

}  // namespace wss
