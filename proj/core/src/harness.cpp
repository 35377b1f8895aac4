#include "semiring_lab/harness.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace semiring_lab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kVacuous:
      return "vacuous";
  }
  return "unknown";
}

ReportBuilder::ReportBuilder(std::string id) { report_.id = std::move(id); }

ReportBuilder::Instance::Instance(std::string subject) { rec_.subject = std::move(subject); }

ReportBuilder::Instance& ReportBuilder::Instance::hyp(const std::string& name, bool holds) {
  if (failed_) return *this;
  rec_.hypotheses.push_back(HypothesisRecord{name, holds});
  if (!holds) failed_ = true;
  return *this;
}

void ReportBuilder::Instance::conclude(bool ok, std::string witness) {
  concluded_ = true;
  rec_.conclusion = ok;
  rec_.witness = std::move(witness);
}

ReportBuilder::Instance ReportBuilder::instance(std::string subject) const {
  return Instance(std::move(subject));
}

void ReportBuilder::add(Instance&& instance) {
  InstanceRecord rec = std::move(instance.rec_);
  rec.hypotheses_met = !instance.failed_;
  ++report_.instances_checked;
  if (rec.hypotheses_met) {
    if (!instance.concluded_)
      throw InternalCheckFailure(report_.id + ": instance '" + rec.subject +
                                 "' met its hypotheses but reached no conclusion");
    ++report_.hypotheses_met_count;
    report_.satisfying.push_back(rec.subject);
  } else {
    report_.vacuity[rec.subject] =
        rec.hypotheses.empty() ? "(none recorded)" : rec.hypotheses.back().name;
  }
  report_.instances.push_back(std::move(rec));
}

TheoremReport ReportBuilder::finish() {
  Verdict v = Verdict::kVacuous;
  for (const InstanceRecord& rec : report_.instances) {
    if (!rec.hypotheses_met) continue;
    if (!rec.conclusion) {
      v = Verdict::kFail;
      break;
    }
    v = Verdict::kPass;
  }
  report_.verdict = v;
  return std::move(report_);
}

namespace detail {
// Implemented in registry.cpp: the per-theorem runner dispatch.
TheoremReport run_registered(const std::string& id, const Corpus& corpus);
}  // namespace detail

TheoremReport check(const std::string& id, const Corpus& corpus) {
  if (!is_registered_theorem(id)) throw UnknownTheorem("unknown theorem id '" + id + "'");
  auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  try {
    report = detail::run_registered(id, corpus);
  } catch (const std::exception& e) {
    report = TheoremReport{};
    report.id = id;
    InstanceRecord rec;
    rec.subject = "runner-error";
    rec.hypotheses_met = true;
    rec.conclusion = false;
    rec.witness = e.what();
    report.instances.push_back(std::move(rec));
    report.instances_checked = 1;
    report.hypotheses_met_count = 1;
    report.satisfying.push_back("runner-error");
  }
  Verdict v = Verdict::kVacuous;
  for (const InstanceRecord& rec : report.instances) {
    if (!rec.hypotheses_met) continue;
    if (!rec.conclusion) {
      v = Verdict::kFail;
      break;
    }
    v = Verdict::kPass;
  }
  report.verdict = v;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<TheoremReport> check_all(const Corpus& corpus, int threads) {
  const std::vector<TheoremEntry>& reg = registry();
  std::vector<TheoremReport> out(reg.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < reg.size(); ++i) out[i] = check(reg[i].id, corpus);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= reg.size()) return;
      out[i] = check(reg[i].id, corpus);
    }
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(threads, static_cast<int>(reg.size()));
  pool.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

SearchOutcome search_counterexample(const std::string& id, int max_order) {
  if (!is_registered_theorem(id)) throw UnknownTheorem("unknown theorem id '" + id + "'");
  auto start = std::chrono::steady_clock::now();
  Corpus census = census_corpus(max_order);
  TheoremReport report = check(id, census);
  SearchOutcome out;
  out.id = id;
  out.semirings = static_cast<int>(census.semirings.size());
  out.modules = static_cast<int>(census.modules.size());
  out.exhausted = report.verdict != Verdict::kFail;
  if (report.verdict == Verdict::kFail) out.failure = std::move(report);
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

}  // namespace semiring_lab
