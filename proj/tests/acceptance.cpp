// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "wss/cli.hpp"
#include "wss/constructions.hpp"
#include "wss/corpus.hpp"
#include "wss/example42.hpp"
#include "wss/fingerprint.hpp"
#include "wss/statements.hpp"
#include "wss/structure.hpp"
#include "wss/theorem_b.hpp"
#include "wss/verification.hpp"

using namespace wss;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome suite(const std::vector<std::string>& ids, std::uint64_t max_order, double budget_s, std::string& info) {
  Outcome o;
  VerifyOptions opt;
  opt.statements = ids;
  opt.max_order = max_order;
  opt.jobs = jobs();
  const auto t = Clock::now();
  const VerificationRun run = run_verification(builtin_corpus(), opt);
  const double s = since(t);
  std::map<std::string, std::size_t> bad;
  std::size_t hyp = 0;
  for (const Verdict& v : run.verdicts) {
    if (!v.consistent) ++bad[v.statement];
    hyp += v.hypothesis_instances;
  }
  for (const auto& [id, n] : bad) o.require(false, id + ": " + std::to_string(n) + " inconsistent");
  o.require(run.cap_errors.empty(), std::to_string(run.cap_errors.size()) + " cap errors");
  o.require(s <= budget_s, "runtime " + fmt_seconds(s));
  o.require(!run.verdicts.empty(), "no verdicts");
  info = std::to_string(run.groups_examined) + " groups, " + std::to_string(run.verdicts.size()) + " verdicts, " +
         std::to_string(hyp) + " hypothesis instances, " + std::to_string(run.truncated.size()) +
         " budget-truncated, " + fmt_seconds(s);
  for (const auto& r : run.restrictions) info += ", " + r.statement + " limited to " + std::to_string(r.max_order);
  return o;
}

Outcome c1(std::string& info) {
  Outcome o;
  const auto t = Clock::now();
  const Example42Report r = build_example42();
  const double s = since(t);
  o.require(r.b_order == 648, "|B| = " + std::to_string(r.b_order));
  o.require(r.g_order == 324, "|G| = " + std::to_string(r.g_order));
  o.require(r.o3_order == 27 && r.o3_elementary_abelian, "O3(G)");
  o.require(r.quotient_name == "A4", "G/O3(G) is " + r.quotient_name);
  o.require(r.sylow3_order == 81, "|P| = " + std::to_string(r.sylow3_order));
  o.require(r.sylow3_maximal_count > 0 && r.complemented_count == r.sylow3_maximal_count,
            std::to_string(r.complemented_count) + "/" + std::to_string(r.sylow3_maximal_count) + " complemented");
  o.require(r.p_length && *r.p_length == 2, "3-length");
  o.require(r.passed(), "report checks");
  o.require(s <= 300, "runtime " + fmt_seconds(s));
  info = "|B| 648, |G| 324, O3 27, G/O3 " + r.quotient_name + ", " + std::to_string(r.complemented_count) + " of " +
         std::to_string(r.sylow3_maximal_count) + " maximal subgroups of P complemented, 3-length " +
         (r.p_length ? std::to_string(*r.p_length) : "-") + ", " + fmt_seconds(s);
  return o;
}

Outcome c5(std::string& info) {
  Outcome o;
  auto a5 = make_context("A5", alternating_group(5));
  auto a6 = make_context("A6", alternating_group(6));
  auto psl = make_context("PSL(2,7)", psl2(7));
  for (auto* c : {a5.get(), a6.get(), psl.get()}) {
    o.require(is_nonabelian_simple(c->lattice), c->name + " not simple");
    for (const Verdict& v : verify_statement("L2.6", *c, {}).verdicts) o.require(v.consistent, c->name + " L2.6");
  }
  const auto r5 = prime_power_index_subgroups(*a5);
  o.require(r5.size() == 1 && r5[0].index == 5 && r5[0].subgroups.size() == 5, "A5 classes");
  for (const auto& cls : r5)
    for (std::size_t h : cls.subgroups) o.require(fingerprint(a5->lattice[h]).name == "A4", "A5 index-5 not A4");
  o.require(prime_power_index_subgroups(*a6).empty(), "A6 has prime-power-index subgroups");
  o.require(a6->lattice.size() == 501, "A6 lattice size");
  const auto r7 = prime_power_index_subgroups(*psl);
  std::vector<std::uint64_t> idx;
  for (const auto& cls : r7) idx.push_back(cls.index);
  o.require(idx == std::vector<std::uint64_t>{7, 8}, "PSL(2,7) indices");
  info = "A5: 5 of index 5 (A4); A6: none of 501; PSL(2,7): indices";
  for (const auto& cls : r7) info += " " + std::to_string(cls.index) + "x" + std::to_string(cls.subgroups.size());
  return o;
}

Outcome c7(std::string& info) {
  Outcome o;
  std::size_t lattices = 0, chiefs = 0, uhyper = 0;
  for (const auto& e : builtin_corpus()) {
    if (e.order > 200) continue;
    const Group g = e.build(kDefaultGroupCap);
    const SubgroupLattice l = enumerate_subgroups(g);
    if (e.order <= 48) {
      const oracle::Table t(g);
      const std::set<oracle::Set> want = oracle::all_subgroups(t);
      std::set<oracle::Set> got;
      for (const Subgroup& s : l.entries()) {
        oracle::Set m(t.size(), 0);
        for (Elem x : s.elements()) m[t.index.at(g.element(x))] = 1;
        got.insert(m);
      }
      o.require(got == want, e.name + " lattice");
      ++lattices;
    }
    const Subgroup whole = Subgroup::whole(g);
    auto factors = [&](ChiefChoice c) {
      std::vector<std::uint64_t> f;
      for (const auto& x : chief_series(whole, c).factors) f.push_back(x.order);
      std::sort(f.begin(), f.end());
      return f;
    };
    o.require(factors(ChiefChoice::lowest) == factors(ChiefChoice::highest), e.name + " chief factors");
    ++chiefs;
    if (e.order <= 100) {
      o.require(u_hypercenter(whole) == l[oracle::prime_chain_top(l)], e.name + " U-hypercenter");
      ++uhyper;
    }
  }
  info = std::to_string(lattices) + " lattices, " + std::to_string(chiefs) + " chief-series pairs, " +
         std::to_string(uhyper) + " U-hypercenters";
  return o;
}

Outcome c8(std::string& info) {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "wss_acceptance_a.json").string();
  const std::string b = (dir / "wss_acceptance_b.json").string();
  auto verify = [&](const std::string& path, const char* j) {
    const char* argv[] = {"wss", "verify", "--statement", "all", "--max-order", "200", "--jobs", j,
                          "--quiet", "--report", path.c_str()};
    std::ostringstream out, err;
    return cli_main(static_cast<int>(std::size(argv)), argv, out, err);
  };
  o.require(verify(a, "0") == kExitOk, "first run exit code");
  o.require(verify(b, "1") == kExitOk, "second run exit code");
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::string ja = slurp(a), jb = slurp(b);
  o.require(!ja.empty() && ja == jb, "reports differ");
  info = std::to_string(ja.size()) + " bytes, identical: " + (ja == jb ? "yes" : "no");
  return o;
}

Outcome c9(std::string& info) {
  Outcome o;
  auto s4 = make_context("S4", symmetric_group(4));
  const HypothesisReport r = thmB_hypothesis(*s4, s4->lattice.top(), ClauseMode::supplemented);
  const PrimeReport* two = nullptr;
  for (const auto& pr : r.per_prime)
    if (pr.p == 2) two = &pr;
  o.require(two && two->d_orders.size() == 2, "S4 |D| range");
  std::string witness;
  if (two) {
    for (const auto& d : two->d_orders) o.require(!d.holds, "S4 |D| = " + std::to_string(d.d) + " holds");
    const DOrderCheck& d4 = two->d_orders.back();
    std::vector<Elem> want;
    for (const char* p : {"()", "(1 2)", "(3 4)", "(1 2)(3 4)"})
      want.push_back(*s4->group.index_of(Perm::from_cycles(4, p)));
    std::sort(want.begin(), want.end());
    o.require(d4.d == 4 && d4.failing_h && s4->lattice[*d4.failing_h].elements() == want, "S4 |D| = 4 witness");
    witness = d4.failing_description;
  }
  o.require(!r.holds(), "S4 hypothesis");
  auto d8c3 = make_context("D8xC3", direct_product(dihedral_group(8), cyclic_group(3)));
  const HypothesisReport q = thmB_hypothesis(*d8c3, d8c3->lattice.top(), ClauseMode::supplemented);
  bool d2 = false;
  for (const auto& pr : q.per_prime)
    for (const auto& d : pr.d_orders)
      if (pr.p == 2 && d.d == 2 && d.holds && d.cond_ii) d2 = true;
  o.require(d2 && q.holds_with_conditions(), "D8xC3 |D| = 2 with (ii)");
  o.require(is_supersolvable(d8c3->group), "D8xC3 supersolvable");
  info = "S4 witness " + witness + "; D8xC3 |D| = 2 under (ii), supersolvable";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome(std::string&)>>> criteria = {
      {"1 wreath product example", c1},
      {"2 supplemented criterion suite", [](std::string& i) { return suite({"thmB"}, 200, 900, i); }},
      {"3 permutable criterion suite", [](std::string& i) { return suite({"thm12"}, 200, 900, i); }},
      {"4 lemma suite", [](std::string& i) { return suite(expand_statements("lemmas"), 200, 3600, i); }},
      {"5 prime-power index spot check", c5},
      {"6 hierarchy suite", [](std::string& i) { return suite({"hierarchy"}, 100, 3600, i); }},
      {"7 oracle equivalences", c7},
      {"8 determinism", c8},
      {"9 negative controls", c9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    std::string info;
    Outcome o;
    try {
      o = fn(info);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << (o.pass ? info : o.detail) << std::endl;
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
