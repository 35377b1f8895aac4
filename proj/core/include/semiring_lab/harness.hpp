#pragma once

#include <map>

#include "semiring_lab/io.hpp"
#include "semiring_lab/localization.hpp"

namespace semiring_lab {

enum class Verdict { kPass, kFail, kVacuous };

std::string to_string(Verdict v);

struct HypothesisRecord {
  std::string name;
  bool holds = false;
};

/// One quantifier instance of a theorem: a subject (structure, or
/// structure plus ideal/hom), the hypotheses evaluated on it, and —
/// when all hypotheses hold — the conclusion with witness data.
struct InstanceRecord {
  std::string subject;
  std::vector<HypothesisRecord> hypotheses;
  bool hypotheses_met = false;
  bool conclusion = false;
  std::string witness;
};

struct TheoremReport {
  std::string id;
  Verdict verdict = Verdict::kVacuous;
  std::vector<InstanceRecord> instances;
  int instances_checked = 0;
  int hypotheses_met_count = 0;
  /// Subjects whose hypotheses all held.
  std::vector<std::string> satisfying;
  /// Subject -> first unmet hypothesis (vacuity accounting).
  std::map<std::string, std::string> vacuity;
  double elapsed_ms = 0.0;
};

/// Builder used by the per-theorem runners. Hypotheses short-circuit:
/// after a false one, later hyp() calls are skipped, so guarded
/// predicates (torsionfree behind semidomain) evaluate safely.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string id);

  class Instance {
   public:
    Instance& hyp(const std::string& name, bool holds);
    template <typename F>
    Instance& hyp(const std::string& name, F&& f) {
      if (met()) hyp(name, static_cast<bool>(f()));
      return *this;
    }
    /// True while every recorded hypothesis holds.
    bool met() const { return !failed_; }
    void conclude(bool ok, std::string witness = "");

   private:
    friend class ReportBuilder;
    explicit Instance(std::string subject);
    InstanceRecord rec_;
    bool failed_ = false;
    bool concluded_ = false;
  };

  Instance instance(std::string subject) const;
  void add(Instance&& instance);
  TheoremReport finish();

 private:
  TheoremReport report_;
};

/// The fixed theorem registry: 21 entries.
struct TheoremEntry {
  std::string id;
  std::string statement;
  std::string domain;
};

const std::vector<TheoremEntry>& registry();
bool is_registered_theorem(const std::string& id);

/// Evaluates one theorem over a corpus. Throws UnknownTheorem for an
/// unregistered id. A C++ exception escaping a runner is converted to
/// a fail verdict describing the error.
TheoremReport check(const std::string& id, const Corpus& corpus);

/// Every registry entry, in registry order. `threads` <= 1 runs
/// serially; results are identical at any parallelism.
std::vector<TheoremReport> check_all(const Corpus& corpus, int threads = 1);

/// Complete enumeration of semirings of the given order (2..5), in
/// deterministic order, optionally deduplicated up to isomorphism by
/// canonical relabeling (minimum lexicographic key over permutations
/// fixing 0). Names are "s<order>-<i>".
std::vector<SemiringPtr> enumerate_semirings(int order, bool up_to_iso);

/// Complete enumeration of S-semimodules of the given order (1..6),
/// labeled (no isomorphism dedup). Names are "<S>-m<order>-<j>".
std::vector<SemimodulePtr> enumerate_semimodules(const SemiringPtr& s, int order);

/// Semirings of every order 2..max_order up to isomorphism, plus every
/// labeled semimodule of order 1..max_order over each.
Corpus census_corpus(int max_order);

struct SearchOutcome {
  std::string id;
  bool exhausted = false;
  int semirings = 0;
  int modules = 0;
  double elapsed_ms = 0.0;
  /// Present iff the census run failed (an implementation bug).
  std::optional<TheoremReport> failure;
};

/// check(id) over census_corpus(max_order). `exhausted` is the
/// expected outcome; a witness indicates a bug, not mathematics.
SearchOutcome search_counterexample(const std::string& id, int max_order);

/// Converse probes: searches that *want* a witness, used to document
/// that certain hypotheses are not implied by the conclusions.
///   mult-not-multidem : a multiplication module over a base that is
///                       not multiplicatively idempotent.
///   tp-neq-fixpoints  : a (module, maximal ideal) pair where T_p(M)
///                       differs from the fixpoint set.
struct ProbeOutcome {
  std::string id;
  std::optional<std::string> witness;
  int instances = 0;
};

const std::vector<std::string>& probe_ids();
ProbeOutcome run_probe(const std::string& id, const Corpus& corpus);

}  // namespace semiring_lab
