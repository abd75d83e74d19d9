#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wss/group.hpp"

namespace wss {

/// A corpus member. Groups are built on demand so that listing the corpus,
/// or filtering it by order, costs nothing.
struct CorpusEntry {
  std::string name;
  std::uint64_t order;
  std::function<Group(std::size_t cap)> build;
};

struct CorpusOptions {
  /// Direct products of small members added on top of the fixed list.
  std::size_t product_budget = 100;
  std::uint64_t product_max_order = 199;
};

std::vector<CorpusEntry> builtin_corpus(const CorpusOptions& opt = {});
std::optional<CorpusEntry> builtin_group(const std::string& name);

/// Text form of a permutation group:
///
///   # comment
///   name: S4
///   degree: 4
///   gens: (1 2), (1 2 3 4)
///   expected_order: 24
struct GroupSpecFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> gens;
  std::optional<std::uint64_t> expected_order;
};

/// Throws ParseError with 1-based line and column.
GroupSpecFile parse_group_spec(const std::string& text);
GroupSpecFile parse_group_file(const std::filesystem::path& path);
/// Closes the generators. Throws ParseError on a bad cycle and
/// std::runtime_error when expected_order does not match.
Group load_group(const GroupSpecFile& spec, std::size_t cap = kDefaultGroupCap);
std::string serialize_group(const std::string& name, const Group& g);

/// Every *.grp file of a directory, sorted by file name. Files are parsed
/// and closed up front so that errors surface before any work starts.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir);

/// A builtin name, or else a path to a group file.
Group resolve_group(const std::string& name_or_path, std::string* display_name = nullptr,
                    std::size_t cap = kDefaultGroupCap);

}  // namespace wss
