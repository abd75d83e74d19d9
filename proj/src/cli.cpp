#include "wss/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wss/constructions.hpp"
#include "wss/context.hpp"
#include "wss/corpus.hpp"
#include "wss/errors.hpp"
#include "wss/example42.hpp"
#include "wss/fingerprint.hpp"
#include "wss/report.hpp"
#include "wss/statements.hpp"
#include "wss/structure.hpp"
#include "wss/verification.hpp"

namespace wss {

namespace {

struct Caps {
  std::size_t group = kDefaultGroupCap;
  std::size_t lattice = kDefaultLatticeCap;
  std::size_t normal = 20;
};

std::string join_strings(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string series_orders(const std::vector<Subgroup>& chain) {
  std::vector<std::string> xs;
  for (const auto& s : chain) xs.push_back(std::to_string(s.order()));
  return join_strings(xs, " < ");
}

// ---------------------------------------------------------------- analyze

const std::vector<std::string> kProps = {"fingerprint", "flags",  "subgroups", "series", "sylow",
                                         "hypercenters", "plength"};

int cmd_analyze(const std::string& name_or_path, std::vector<std::string> props, const Caps& caps,
                std::ostream& out) {
  if (props.empty()) props = kProps;
  for (const auto& p : props) {
    if (std::find(kProps.begin(), kProps.end(), p) == kProps.end())
      throw std::invalid_argument("unknown property '" + p + "' (known: " + join_strings(kProps, ", ") + ")");
  }
  std::string name;
  Group g = resolve_group(name_or_path, &name, caps.group);
  out << std::boolalpha << name << ": order " << g.order() << ", degree " << g.degree() << "\n";
  auto want = [&](const char* p) { return std::find(props.begin(), props.end(), p) != props.end(); };
  const Subgroup whole = Subgroup::whole(g);
  if (want("fingerprint")) {
    const Fingerprint f = fingerprint(g);
    out << "fingerprint: " << f.name << "\n";
    std::vector<std::string> hist;
    for (auto [o, c] : f.order_histogram) hist.push_back(std::to_string(o) + ":" + std::to_string(c));
    out << "  element orders " << join_strings(hist, " ") << "\n";
    out << "  center order " << f.center_order << "\n";
  }
  if (want("flags")) {
    out << "abelian " << is_abelian(whole) << ", nilpotent " << is_nilpotent(whole) << ", supersolvable "
        << is_supersolvable(whole) << ", solvable " << is_solvable(whole) << ", sylow tower "
        << has_sylow_tower(whole) << "\n";
  }
  const bool need_lattice = want("subgroups") || want("sylow") || want("series");
  std::unique_ptr<AnalysisContext> ctx;
  if (need_lattice) ctx = make_context(name, g, caps.lattice);
  if (want("subgroups")) {
    const auto& l = ctx->lattice;
    out << "subgroups " << l.size() << ", conjugacy classes " << l.class_count() << ", normal "
        << l.normal_subgroups().size() << ", maximal " << maximal_subgroups(l).size() << "\n";
    out << "  frattini order " << frattini(l).order() << ", socle order " << socle(l).order() << "\n";
  }
  if (want("series")) {
    std::vector<Subgroup> derived{whole};
    while (true) {
      Subgroup d = derived_subgroup(derived.back());
      if (d == derived.back()) break;
      derived.push_back(d);
    }
    std::reverse(derived.begin(), derived.end());
    out << "derived series " << series_orders(derived) << "\n";
    const ChiefSeries cs = chief_series(whole);
    std::vector<std::string> fs;
    for (const auto& f : cs.factors) fs.push_back(std::to_string(f.order));
    out << "chief factors " << join_strings(fs, ", ") << "\n";
    out << "fitting order " << fitting_subgroup(whole).order() << "\n";
  }
  if (want("sylow")) {
    for (const auto& pp : g.prime_factorization()) {
      const auto& s = ctx->oracle.sylows(pp.prime);
      const Subgroup& p = ctx->lattice[s.front()];
      out << "sylow " << pp.prime << ": order " << p.order() << ", " << s.size() << " conjugates, "
          << (is_cyclic(p) ? "cyclic" : is_abelian(p) ? "abelian" : "nonabelian") << ", "
          << fingerprint(p).name << "\n";
    }
  }
  if (want("hypercenters")) {
    out << "hypercenter order " << hypercenter(whole).order() << ", U-hypercenter order "
        << u_hypercenter(whole).order() << "\n";
  }
  if (want("plength")) {
    for (const auto& pp : g.prime_factorization()) {
      const PLengthResult r = p_length(whole, pp.prime);
      out << pp.prime << "-length " << (r.p_length ? std::to_string(*r.p_length) : "undefined") << ", "
          << pp.prime << "-nilpotent " << is_p_nilpotent(whole, pp.prime) << "\n";
    }
  }
  return kExitOk;
}

// --------------------------------------------------------- check-subgroup

const std::vector<std::string> kPredicates = {"normal",       "subnormal",   "s-permutable",
                                              "permutable",   "wss",         "wsp",
                                              "c-normal",     "complemented", "supersolvable-supplement",
                                              "all"};

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
  return out;
}

int cmd_check_subgroup(const std::string& name_or_path, const std::string& gens, const std::string& predicate,
                       const Caps& caps, std::ostream& out) {
  if (std::find(kPredicates.begin(), kPredicates.end(), predicate) == kPredicates.end())
    throw std::invalid_argument("unknown predicate '" + predicate + "' (known: " + join_strings(kPredicates, ", ") +
                                ")");
  std::string name;
  Group g = resolve_group(name_or_path, &name, caps.group);
  std::vector<Elem> idx;
  for (const auto& s : split_generators(gens)) {
    const Perm p = Perm::from_cycles(g.degree(), s);
    auto e = g.index_of(p);
    if (!e) throw std::invalid_argument(p.to_cycles() + " is not an element of " + name);
    idx.push_back(*e);
  }
  auto ctx = make_context(name, g, caps.lattice);
  const std::size_t h = ctx->lattice.index_of(Subgroup::generated(g, idx));
  out << "H = " << ctx->describe(h) << " in " << name << " (order " << g.order() << ")\n";
  auto witness = [&](const char* label, const std::optional<SupplementWitness>& w) {
    out << label << ": " << (w ? "true" : "false");
    if (w) out << " (T = " << ctx->describe(w->t) << ", H n T order " << w->intersection.order() << ")";
    out << "\n";
  };
  auto all = predicate == "all";
  auto& o = ctx->oracle;
  if (all || predicate == "normal") out << "normal: " << (o.is_normal(h) ? "true" : "false") << "\n";
  if (all || predicate == "subnormal") out << "subnormal: " << (o.is_subnormal(h) ? "true" : "false") << "\n";
  if (all || predicate == "s-permutable")
    out << "s-permutable: " << (o.is_s_permutable(h) ? "true" : "false") << " (H_sG = " << ctx->describe(o.h_sG(h))
        << ")\n";
  if (all || predicate == "permutable") out << "permutable: " << (o.is_permutable(h) ? "true" : "false") << "\n";
  if (all || predicate == "wss") witness("weakly s-supplemented", o.weakly_s_supplemented(h));
  if (all || predicate == "wsp") witness("weakly s-permutable", o.weakly_s_permutable(h));
  if (all || predicate == "c-normal") witness("c-normal", o.c_normal(h));
  if (all || predicate == "complemented") witness("complemented", o.complemented(h));
  if (all || predicate == "supersolvable-supplement")
    witness("supersolvable supplement", o.supersolvable_supplement(h));
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string statement = "all";
  std::string corpus = "builtin";
  std::uint64_t max_order = 200;
  std::string report;
  std::string format = "json";
  unsigned jobs = 0;
  bool timing = false;
  bool quiet = false;
  std::size_t product_budget = CorpusOptions{}.product_budget;
};

int cmd_verify(const VerifyArgs& a, const Caps& caps, std::ostream& out, std::ostream& err, bool q13_listing) {
  VerifyOptions opt;
  opt.statements = expand_statements(a.statement);
  opt.max_order = a.max_order;
  opt.group_cap = caps.group;
  opt.lattice_cap = caps.lattice;
  opt.normal_budget = caps.normal;
  opt.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<CorpusEntry> corpus;
  if (a.corpus == "builtin") {
    CorpusOptions co;
    co.product_budget = a.product_budget;
    corpus = builtin_corpus(co);
  } else {
    corpus = load_corpus_dir(a.corpus);
  }
  opt.corpus_label = a.corpus;

  ProgressFn progress;
  if (!a.quiet) {
    progress = [&](const std::string& g, std::size_t d, std::size_t n) {
      err << "[" << d << "/" << n << "] " << g << "\n";
    };
  }
  const VerificationRun run = run_verification(corpus, opt, progress);

  if (!a.report.empty()) {
    std::ofstream f(a.report, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.report);
    if (a.format == "csv") {
      write_csv(f, run);
    } else {
      write_json(f, run, {a.timing});
    }
  }

  out << "statements: " << join_strings(opt.statements, ", ") << "\n";
  for (const auto& r : run.restrictions) {
    out << "restriction: " << r.statement << " checked up to order " << r.max_order << " (" << r.reason << ")\n";
  }
  std::size_t with_hyp = 0;
  for (const auto& v : run.verdicts) with_hyp += v.hypothesis_satisfied ? 1 : 0;
  out << "groups examined: " << run.groups_examined << " of " << run.corpus_size << "\n";
  out << "verdicts: " << run.verdicts.size() << ", hypothesis satisfied: " << with_hyp
      << ", inconsistent: " << run.inconsistent_count() << "\n";
  if (!run.truncated.empty()) out << "normal subgroup budget hit on " << run.truncated.size() << " checks\n";
  if (q13_listing || !run.flags.empty()) {
    out << "Q1.3 candidates: " << run.flags.size() << "\n";
    for (const auto& v : run.flags) {
      std::string e;
      for (const auto& [k, val] : v.params) e += " " + k + "=" + val;
      out << "  " << v.group << e << "\n";
    }
  }
  for (const auto& v : run.verdicts) {
    if (v.consistent) continue;
    out << "INCONSISTENT " << v.statement << " on " << v.group << ": "
        << (v.witnesses.empty() ? "" : v.witnesses.front()) << "\n";
  }
  for (const auto& c : run.cap_errors) out << "cap exceeded on " << c.group << ": " << c.reason << "\n";
  if (a.timing) {
    for (const auto& [id, s] : run.seconds) out << "time " << id << ": " << s << " s\n";
  }
  if (!run.consistent()) return kExitInconsistent;
  if (!run.cap_errors.empty()) return kExitCap;
  return kExitOk;
}

// ------------------------------------------------------------ wreath example

int cmd_example42(const Caps& caps, std::ostream& out) {
  const Example42Report r = build_example42(caps.group, caps.lattice);
  out << "|B| = " << r.b_order << "\n";
  out << "|G| = " << r.g_order << "\n";
  out << "|O_3(G)| = " << r.o3_order << (r.o3_elementary_abelian ? ", elementary abelian" : "") << "\n";
  out << "G/O_3(G): " << r.quotient_name << "\n";
  out << "|P| = " << r.sylow3_order << ", maximal subgroups " << r.sylow3_maximal_count << ", complemented "
      << r.complemented_count << ", weakly s-supplemented " << r.wss_count << "\n";
  out << "3-length " << (r.p_length ? std::to_string(*r.p_length) : "undefined") << "\n";
  for (const auto& c : r.checks) out << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << c.detail << ")\n";
  return r.passed() ? kExitOk : kExitInconsistent;
}

int cmd_lattice(const std::string& name_or_path, const std::string& dot, const Caps& caps, std::ostream& out) {
  std::string name;
  Group g = resolve_group(name_or_path, &name, caps.group);
  auto ctx = make_context(name, g, caps.lattice);
  std::ofstream f(dot);
  if (!f) throw std::runtime_error("cannot write " + dot);
  write_lattice_dot(f, ctx->lattice, name);
  out << name << ": " << ctx->lattice.size() << " subgroups in " << ctx->lattice.class_count()
      << " conjugacy classes, written to " << dot << "\n";
  return kExitOk;
}

int cmd_list(const std::string& what, std::ostream& out) {
  if (what == "statements") {
    for (const auto& s : statement_catalog()) {
      out << s.id << "\t" << s.summary;
      if (s.max_order) out << " [order <= " << s.max_order << "]";
      out << "\n";
    }
  } else if (what == "corpus") {
    for (const auto& e : builtin_corpus()) out << e.name << "\t" << e.order << "\n";
  } else {
    throw std::invalid_argument("list expects 'statements' or 'corpus'");
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup embedding properties of small permutation groups", "wss"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Caps caps;
  app.add_option("--group-cap", caps.group, "largest group order constructed")->capture_default_str();
  app.add_option("--lattice-cap", caps.lattice, "largest group order whose subgroup lattice is built")
      ->capture_default_str();
  app.add_option("--normal-budget", caps.normal, "normal subgroups E examined per group")->capture_default_str();

  std::string group, gens, predicate, dot, list_what;
  std::vector<std::string> props;

  auto* analyze = app.add_subcommand("analyze", "structural summary of a group");
  analyze->add_option("GROUP", group, "builtin name or group file")->required();
  analyze->add_option("--props", props, "comma-separated subset of: " + join_strings(kProps, ", "))->delimiter(',');

  auto* check = app.add_subcommand("check-subgroup", "embedding predicates of one subgroup");
  check->add_option("GROUP", group, "builtin name or group file")->required();
  check->add_option("--gens", gens, "generators in cycle notation, comma separated")->required();
  check->add_option("--predicate", predicate, join_strings(kPredicates, ", "))->default_val("all");

  VerifyArgs va;
  auto add_verify_options = [&](CLI::App* sub, bool with_statement) {
    if (with_statement) sub->add_option("--statement", va.statement, "statement id or group of ids")->capture_default_str();
    sub->add_option("--corpus", va.corpus, "'builtin' or a directory of .grp files")->capture_default_str();
    sub->add_option("--max-order", va.max_order, "largest group order examined")->capture_default_str();
    sub->add_option("--report", va.report, "write the report to this path");
    sub->add_option("--format", va.format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--jobs", va.jobs, "worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--product-budget", va.product_budget, "direct products added to the builtin corpus")
        ->capture_default_str();
    sub->add_flag("--timing", va.timing, "print and record wall-clock times");
    sub->add_flag("--quiet", va.quiet, "no progress output");
  };
  auto* verify = app.add_subcommand("verify", "check statements over a corpus");
  add_verify_options(verify, true);
  auto* scan = app.add_subcommand("scan-q13", "list Q1.3 counterexample candidates");
  add_verify_options(scan, false);

  auto* ex42 = app.add_subcommand("reproduce-example42", "rebuild the wreath product example");

  auto* lattice = app.add_subcommand("lattice", "export the subgroup lattice");
  lattice->add_option("GROUP", group, "builtin name or group file")->required();
  lattice->add_option("--dot", dot, "output path")->required();

  auto* list = app.add_subcommand("list", "list statements or the builtin corpus");
  list->add_option("WHAT", list_what, "statements | corpus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(group, props, caps, out);
    if (*check) return cmd_check_subgroup(group, gens, predicate, caps, out);
    if (*verify) return cmd_verify(va, caps, out, err, false);
    if (*scan) {
      va.statement = "Q1.3";
      return cmd_verify(va, caps, out, err, true);
    }
    if (*ex42) return cmd_example42(caps, out);
    if (*lattice) return cmd_lattice(group, dot, caps, out);
    if (*list) return cmd_list(list_what, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wss
