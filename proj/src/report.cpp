#include "wss/report.hpp"

#include <iomanip>
#include <set>

#include "wss/theorem_b.hpp"

namespace wss {

using json = nlohmann::ordered_json;

namespace {

json hypothesis_to_json(const HypothesisReport& h) {
  json primes = json::array();
  for (const PrimeReport& pr : h.per_prime) {
    json ds = json::array();
    for (const DOrderCheck& d : pr.d_orders) {
      json jd;
      jd["d"] = d.d;
      jd["holds"] = d.holds;
      jd["two_d_rule_applied"] = d.two_d_rule_applied;
      jd["cond_ii"] = d.cond_ii;
      jd["cond_iii"] = d.cond_iii;
      jd["failing_subgroup"] = d.failing_h ? json(d.failing_description) : json(nullptr);
      ds.push_back(std::move(jd));
    }
    json jp;
    jp["p"] = pr.p;
    jp["sylow_order"] = pr.sylow_order;
    jp["sylow_cyclic"] = pr.sylow_cyclic;
    jp["derived_order"] = pr.derived_order;
    jp["cond_i"] = pr.cond_i;
    jp["clause_holds"] = pr.clause_holds();
    jp["clause_holds_with_conditions"] = pr.clause_holds_with_conditions();
    jp["d_orders"] = std::move(ds);
    primes.push_back(std::move(jp));
  }
  json j;
  j["mode"] = std::string(to_string(h.mode));
  j["quotient_in_formation"] = h.quotient_in_formation;
  j["holds"] = h.holds();
  j["holds_with_conditions"] = h.holds_with_conditions();
  j["per_prime"] = std::move(primes);
  return j;
}

json notes_to_json(const std::vector<GroupNote>& notes) {
  json a = json::array();
  for (const auto& n : notes) a.push_back({{"group", n.group}, {"order", n.order}, {"reason", n.reason}});
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  json j;
  j["group"] = v.group;
  j["order"] = v.order;
  j["statement"] = v.statement;
  json params = json::object();
  for (const auto& [k, val] : v.params) params[k] = val;
  j["params"] = std::move(params);
  j["hypothesis_satisfied"] = v.hypothesis_satisfied;
  j["conclusion_holds"] = v.conclusion_holds ? json(*v.conclusion_holds) : json(nullptr);
  j["consistent"] = v.consistent;
  j["instances"] = v.instances;
  j["hypothesis_instances"] = v.hypothesis_instances;
  j["witnesses"] = v.witnesses;
  j["notes"] = v.notes;
  if (v.hypothesis) j["hypothesis"] = hypothesis_to_json(*v.hypothesis);
  return j;
}

json report_to_json(const VerificationRun& run, const ReportOptions& opt) {
  const VerifyOptions& o = run.options;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = {{"name", "wss"}, {"version", kToolVersion}};
  j["corpus"] = {{"source", o.corpus_label},
                 {"size", run.corpus_size},
                 {"max_order", o.max_order},
                 {"groups_examined", run.groups_examined}};
  j["caps"] = {{"group_order", o.group_cap}, {"lattice_order", o.lattice_cap}, {"normal_subgroups", o.normal_budget}};
  j["statements"] = o.statements;
  json restrictions = json::array();
  for (const auto& r : run.restrictions) {
    restrictions.push_back({{"statement", r.statement}, {"max_order", r.max_order}, {"reason", r.reason}});
  }
  j["restrictions"] = std::move(restrictions);

  std::size_t with_hyp = 0;
  for (const auto& v : run.verdicts) with_hyp += v.hypothesis_satisfied ? 1 : 0;
  j["summary"] = {{"verdicts", run.verdicts.size()},
                  {"hypothesis_satisfied", with_hyp},
                  {"inconsistent", run.inconsistent_count()},
                  {"flags", run.flags.size()},
                  {"cap_errors", run.cap_errors.size()},
                  {"consistent", run.consistent()}};

  json verdicts = json::array();
  for (const auto& v : run.verdicts) verdicts.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(verdicts);
  json flags = json::array();
  for (const auto& v : run.flags) flags.push_back(verdict_to_json(v));
  j["flags"] = std::move(flags);
  j["truncations"] = notes_to_json(run.truncated);
  j["skipped"] = notes_to_json(run.skipped);
  j["cap_errors"] = notes_to_json(run.cap_errors);
  if (opt.timing) {
    json t = json::object();
    for (const auto& [id, s] : run.seconds) t[id] = s;
    j["timing_seconds"] = std::move(t);
  }
  return j;
}

void write_json(std::ostream& out, const VerificationRun& run, const ReportOptions& opt) {
  out << report_to_json(run, opt).dump(2) << "\n";
}

void write_csv(std::ostream& out, const VerificationRun& run) {
  out << "group,order,statement,params,hypothesis_satisfied,conclusion_holds,consistent,instances,"
         "hypothesis_instances,witness\n";
  for (const auto& v : run.verdicts) {
    std::string params;
    for (const auto& [k, val] : v.params) params += (params.empty() ? "" : ";") + k + "=" + val;
    out << csv_field(v.group) << ',' << v.order << ',' << csv_field(v.statement) << ',' << csv_field(params) << ','
        << (v.hypothesis_satisfied ? "true" : "false") << ','
        << (v.conclusion_holds ? (*v.conclusion_holds ? "true" : "false") : "n/a") << ','
        << (v.consistent ? "true" : "false") << ',' << v.instances << ',' << v.hypothesis_instances << ','
        << csv_field(v.witnesses.empty() ? "" : v.witnesses.front()) << '\n';
  }
}

void write_lattice_dot(std::ostream& out, const SubgroupLattice& l, const std::string& name) {
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t c = 0; c < l.class_count(); ++c) {
    const auto& members = l.conjugacy_class(c);
    const std::size_t rep = members.front();
    out << "  c" << c << " [label=\"" << l[rep].order() << "×" << members.size() << "\""
        << (l.is_normal(rep) ? ", style=bold" : "") << "];\n";
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t m : l.maximal_of(i)) edges.insert({l.class_id(m), l.class_id(i)});
  }
  for (auto [a, b] : edges) out << "  c" << a << " -> c" << b << ";\n";
  out << "}\n";
}

}  // namespace wss
