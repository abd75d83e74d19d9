#include "wss/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "wss/context.hpp"
#include "wss/errors.hpp"
#include "wss/statements.hpp"

namespace wss {

std::size_t VerificationRun::inconsistent_count() const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.consistent; }));
}

namespace {

std::uint64_t limit_for(const StatementInfo& s, std::uint64_t run_max) {
  return s.max_order == 0 ? run_max : std::min(s.max_order, run_max);
}

struct EntryResult {
  std::vector<Verdict> verdicts;
  std::vector<Verdict> flags;
  std::vector<std::string> truncated;
  std::optional<std::string> cap_error;
  bool examined = false;
  std::map<std::string, double> seconds;
};

EntryResult run_entry(const CorpusEntry& e, const VerifyOptions& opt) {
  EntryResult r;
  std::vector<std::string> todo;
  for (const auto& id : opt.statements) {
    if (e.order <= limit_for(statement_info(id), opt.max_order)) todo.push_back(id);
  }
  if (todo.empty()) return r;
  try {
    auto ctx = make_context(e.name, e.build(opt.group_cap), opt.lattice_cap);
    r.examined = true;
    StatementOptions so;
    so.normal_budget = opt.normal_budget;
    so.group_cap = opt.group_cap;
    so.lattice_cap = opt.lattice_cap;
    for (const auto& id : todo) {
      const auto t0 = std::chrono::steady_clock::now();
      StatementResult sr = verify_statement(id, *ctx, so);
      r.seconds[id] += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (sr.normal_truncated) r.truncated.push_back(id);
      for (auto& v : sr.verdicts) r.verdicts.push_back(std::move(v));
      for (auto& v : sr.flags) r.flags.push_back(std::move(v));
    }
  } catch (const CapExceeded& ex) {
    r.cap_error = ex.what();
  }
  return r;
}

}  // namespace

VerificationRun run_verification(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt,
                                 const ProgressFn& progress) {
  VerificationRun run;
  run.options = opt;
  run.corpus_size = corpus.size();
  std::uint64_t largest_needed = 0;
  for (const auto& id : opt.statements) {
    const StatementInfo& s = statement_info(id);
    largest_needed = std::max(largest_needed, limit_for(s, opt.max_order));
    if (s.max_order != 0 && s.max_order < opt.max_order) run.restrictions.push_back({id, s.max_order, s.restriction});
  }

  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].order > largest_needed) {
      run.skipped.push_back({corpus[i].name, corpus[i].order, "order above " + std::to_string(largest_needed)});
    } else {
      work.push_back(i);
    }
  }

  std::vector<EntryResult> results(work.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < work.size();) {
      results[k] = run_entry(corpus[work[k]], opt);
      const std::size_t d = ++done;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(corpus[work[k]].name, d, work.size());
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(work.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t k = 0; k < work.size(); ++k) {
    const CorpusEntry& e = corpus[work[k]];
    EntryResult& r = results[k];
    if (r.examined) ++run.groups_examined;
    if (r.cap_error) run.cap_errors.push_back({e.name, e.order, *r.cap_error});
    for (const auto& id : r.truncated) {
      run.truncated.push_back({e.name, e.order, id + ": normal subgroup budget " + std::to_string(opt.normal_budget)});
    }
    for (auto& v : r.verdicts) run.verdicts.push_back(std::move(v));
    for (auto& v : r.flags) run.flags.push_back(std::move(v));
    for (const auto& [id, s] : r.seconds) run.seconds[id] += s;
  }
  return run;
}

}  // namespace wss
