#pragma once

#include <memory>
#include <string>

#include "wss/lattice.hpp"
#include "wss/permutability.hpp"

namespace wss {

/// A named group with its lattice and embedding oracle. The oracle points
/// into the lattice, so contexts are pinned in memory; hold them through
/// std::unique_ptr.
struct AnalysisContext {
  AnalysisContext(std::string name, Group g, std::size_t lattice_cap = kDefaultLatticeCap);
  AnalysisContext(const AnalysisContext&) = delete;
  AnalysisContext& operator=(const AnalysisContext&) = delete;

  std::string name;
  Group group;
  SubgroupLattice lattice;
  EmbeddingOracle oracle;

  Subgroup whole() const { return lattice[lattice.top()]; }
  /// "#12" style handle used in reports.
  std::string label(std::size_t i) const;
  /// Lattice handle, order and generators in cycle notation.
  std::string describe(std::size_t i) const;
  std::string describe(const Subgroup& h) const;
};

std::unique_ptr<AnalysisContext> make_context(std::string name, Group g, std::size_t lattice_cap = kDefaultLatticeCap);

}  // namespace wss
