#include "wss/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "wss/constructions.hpp"
#include "wss/errors.hpp"
#include "wss/example42.hpp"

namespace wss {

namespace {

using Factory = std::function<Group(std::size_t)>;

Factory fixed(std::function<Group()> f) {
  return [f = std::move(f)](std::size_t cap) {
    Group g = f();
    if (g.order() > cap) throw CapExceeded("group order", cap, g.order());
    return g;
  };
}

Group perms(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> ps;
  for (const char* s : gens) ps.push_back(Perm::from_cycles(degree, s));
  return close_generators(degree, std::move(ps));
}

Group quaternion8() { return dicyclic_group(8); }

Group sl23() {
  const Group q8 = quaternion8();
  const Perm& i = q8.generators()[0];
  const Perm& j = q8.generators()[1];
  // An automorphism of order 3 cycling i -> j -> ij.
  return semidirect_product(q8, cyclic_group(3), {{j, i * j}});
}

struct Factor {
  std::string name;
  std::uint64_t order;
  std::function<Group()> make;
};

const std::vector<Factor>& product_factors() {
  static const std::vector<Factor> f = {
      {"C2", 2, [] { return cyclic_group(2); }},
      {"C3", 3, [] { return cyclic_group(3); }},
      {"C4", 4, [] { return cyclic_group(4); }},
      {"C5", 5, [] { return cyclic_group(5); }},
      {"S3", 6, [] { return symmetric_group(3); }},
      {"C7", 7, [] { return cyclic_group(7); }},
      {"D8", 8, [] { return dihedral_group(8); }},
      {"Q8", 8, quaternion8},
      {"D10", 10, [] { return dihedral_group(10); }},
      {"A4", 12, [] { return alternating_group(4); }},
      {"C3:C4", 12, [] { return dicyclic_group(12); }},
      {"C7:C3", 21, [] { return metacyclic(7, 3, 2); }},
      {"S4", 24, [] { return symmetric_group(4); }},
      {"SL(2,3)", 24, sl23},
      {"A5", 60, [] { return alternating_group(5); }},
  };
  return f;
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus(const CorpusOptions& opt) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::uint64_t order, std::function<Group()> f) {
    out.push_back({std::move(name), order, fixed(std::move(f))});
  };
  for (unsigned n = 2; n <= 24; ++n) add("C" + std::to_string(n), n, [n] { return cyclic_group(n); });
  for (unsigned n = 6; n <= 24; n += 2) add("D" + std::to_string(n), n, [n] { return dihedral_group(n); });
  add("Q8", 8, quaternion8);
  add("Q16", 16, [] { return dicyclic_group(16); });
  add("C2^3", 8, [] { return elementary_abelian(2, 3); });
  add("C3^3", 27, [] { return elementary_abelian(3, 3); });
  add("S3", 6, [] { return symmetric_group(3); });
  add("S4", 24, [] { return symmetric_group(4); });
  add("A4", 12, [] { return alternating_group(4); });
  add("A5", 60, [] { return alternating_group(5); });
  add("A6", 360, [] { return alternating_group(6); });
  add("PSL(2,7)", 168, [] { return psl2(7); });
  add("D8xC3", 24, [] { return direct_product(dihedral_group(8), cyclic_group(3)); });
  add("Q8xC3", 24, [] { return direct_product(quaternion8(), cyclic_group(3)); });
  add("S3xS3", 36, [] { return direct_product(symmetric_group(3), symmetric_group(3)); });
  add("C3:C4", 12, [] { return dicyclic_group(12); });
  add("SL(2,3)", 24, sl23);
  add("C7:C3", 21, [] { return metacyclic(7, 3, 2); });
  add("C5:C4", 20, [] { return metacyclic(5, 4, 2); });
  add("C2^4", 16, [] { return elementary_abelian(2, 4); });
  add("C3^2", 9, [] { return elementary_abelian(3, 2); });
  add("C5^2", 25, [] { return elementary_abelian(5, 2); });
  add("C3^2:C2", 18, [] { return perms(6, {"(1 2 3)", "(4 5 6)", "(2 3)(5 6)"}); });
  add("C3^2:C4", 36, [] { return perms(6, {"(1 2 3)", "(4 5 6)", "(1 4)(2 6 3 5)"}); });
  add("C3^2:Q8", 72, [] { return perms(9, {"(1 2 3)(4 5 6)(7 8 9)", "(1 4 7)(2 5 8)(3 6 9)",
                                           "(2 4 3 7)(5 6 9 8)", "(2 5 3 9)(4 8 7 6)"}); });
  add("AGL(1,8)", 56, [] { return perms(8, {"(1 2 3 4 5 6 7)", "(1 8)(2 4)(3 7)(5 6)"}); });
  add("S5", 120, [] { return symmetric_group(5); });
  add("B(648)", 648, [] { return example42_wreath(); });
  add("G(324)", 324, [] { return example42_group(); });

  std::set<std::string> names;
  for (const auto& e : out) names.insert(e.name);
  struct Candidate {
    std::uint64_t order;
    std::size_t i, j;
  };
  const auto& f = product_factors();
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      const std::uint64_t n = f[i].order * f[j].order;
      if (n > opt.product_max_order) continue;
      // Cyclic factors of coprime order give nothing new.
      if (f[i].name[0] == 'C' && f[j].name[0] == 'C' && f[i].name.find(':') == std::string::npos &&
          f[j].name.find(':') == std::string::npos)
        continue;
      cands.push_back({n, i, j});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.order < b.order; });
  std::size_t added = 0;
  for (const auto& c : cands) {
    if (added == opt.product_budget) break;
    // Larger factor first, matching the fixed names such as D8xC3.
    const Factor& a = f[c.j];
    const Factor& b = f[c.i];
    std::string name = a.name + "x" + b.name;
    if (!names.insert(name).second) continue;
    add(name, c.order, [ma = a.make, mb = b.make] { return direct_product(ma(), mb()); });
    ++added;
  }
  return out;
}

std::optional<CorpusEntry> builtin_group(const std::string& name) {
  for (auto& e : builtin_corpus()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = b;
  return s.substr(b, e - b);
}

std::uint64_t parse_number(const std::string& s, std::size_t line, std::size_t col) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected a non-negative integer, got '" + s + "'", line, col);
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range", line, col);
  }
}

}  // namespace

GroupSpecFile parse_group_spec(const std::string& text) {
  GroupSpecFile spec;
  std::set<std::string> seen;
  std::optional<std::pair<std::size_t, std::size_t>> gens_at;  // line, column of the gens value
  std::string gens_value;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t lead = 0;
    const std::string body = trim(raw, &lead);
    if (body.empty()) continue;
    const auto colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line, lead + 1);
    const std::string key = trim(raw.substr(0, colon));
    std::size_t vlead = 0;
    const std::string value = trim(raw.substr(colon + 1), &vlead);
    const std::size_t vcol = colon + 2 + vlead;
    if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line, lead + 1);
    if (key == "name") {
      spec.name = value;
    } else if (key == "degree") {
      spec.degree = parse_number(value, line, vcol);
      if (spec.degree == 0) throw ParseError("degree must be at least 1", line, vcol);
    } else if (key == "gens") {
      gens_at = {line, vcol};
      gens_value = value;
    } else if (key == "expected_order") {
      spec.expected_order = parse_number(value, line, vcol);
    } else {
      throw ParseError("unknown key '" + key + "'", line, lead + 1);
    }
  }
  if (!seen.count("degree")) throw ParseError("missing 'degree:' line", line + 1, 1);
  if (!gens_at) throw ParseError("missing 'gens:' line", line + 1, 1);
  if (spec.name.empty()) spec.name = "unnamed";

  // Split at commas outside parentheses; validate each product right away so
  // errors point into the file.
  const auto [gline, gcol] = *gens_at;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::size_t lead = 0;
    const std::string item = trim(gens_value.substr(start, end - start), &lead);
    const std::size_t col = gcol + start + lead;
    if (item.empty()) {
      if (end < gens_value.size()) throw ParseError("empty generator", gline, col);
      return;
    }
    try {
      (void)Perm::from_cycles(spec.degree, item);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(msg.find(": ") + 2);
      throw ParseError(msg, gline, col + e.column() - 1);
    }
    spec.gens.push_back(item);
  };
  for (std::size_t i = 0; i < gens_value.size(); ++i) {
    const char c = gens_value[i];
    if (c == '(') {
      if (++depth > 1) throw ParseError("nested parenthesis", gline, gcol + i);
    } else if (c == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')'", gline, gcol + i);
    } else if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('", gline, gcol + gens_value.size());
  flush(gens_value.size());
  return spec;
}

GroupSpecFile parse_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_group_spec(ss.str());
  } catch (const ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw ParseError(path.string() + ": " + msg, e.line(), e.column());
  }
}

Group load_group(const GroupSpecFile& spec, std::size_t cap) {
  std::vector<Perm> gens;
  for (const auto& s : spec.gens) gens.push_back(Perm::from_cycles(spec.degree, s));
  Group g = close_generators(spec.degree, std::move(gens), cap);
  if (spec.expected_order && *spec.expected_order != g.order()) {
    throw std::runtime_error(spec.name + ": expected order " + std::to_string(*spec.expected_order) + ", closure has " +
                             std::to_string(g.order()));
  }
  return g;
}

std::string serialize_group(const std::string& name, const Group& g) {
  std::ostringstream out;
  out << "name: " << name << "\n";
  out << "degree: " << g.degree() << "\n";
  out << "gens:";
  bool first = true;
  for (const auto& p : g.generators()) {
    out << (first ? " " : ", ") << p.to_cycles();
    first = false;
  }
  out << "\n";
  out << "expected_order: " << g.order() << "\n";
  return out.str();
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".grp") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    GroupSpecFile spec = parse_group_file(f);
    Group g = load_group(spec);
    out.push_back({spec.name, g.order(), [g](std::size_t cap) {
                     if (g.order() > cap) throw CapExceeded("group order", cap, g.order());
                     return g;
                   }});
  }
  return out;
}

Group resolve_group(const std::string& name_or_path, std::string* display_name, std::size_t cap) {
  if (auto e = builtin_group(name_or_path)) {
    if (display_name) *display_name = e->name;
    return e->build(cap);
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw std::invalid_argument("'" + name_or_path + "' is neither a builtin group nor a readable file");
  }
  GroupSpecFile spec = parse_group_file(name_or_path);
  if (display_name) *display_name = spec.name;
  return load_group(spec, cap);
}

}  // namespace wss
