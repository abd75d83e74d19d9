#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wss/context.hpp"

namespace wss {

/// B = S3 wr C3 (regular) and G = O^2(B).
Group example42_wreath(std::size_t cap = kDefaultGroupCap);
Group example42_group(std::size_t cap = kDefaultGroupCap);

struct Example42Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct Example42Report {
  std::uint64_t b_order = 0;
  std::uint64_t g_order = 0;
  bool generated_by_3_elements = false;
  std::uint64_t o3_order = 0;
  bool o3_elementary_abelian = false;
  std::string quotient_name;
  std::uint64_t sylow3_order = 0;
  std::size_t sylow3_maximal_count = 0;
  std::size_t complemented_count = 0;
  std::size_t wss_count = 0;
  std::optional<unsigned> p_length;
  std::vector<Example42Check> checks;

  bool passed() const;
};

/// Rebuilds the example and evaluates every claim about it. Failed claims
/// are reported in `checks`, not thrown.
Example42Report build_example42(std::size_t group_cap = kDefaultGroupCap,
                                std::size_t lattice_cap = kDefaultLatticeCap);

}  // namespace wss
