// semiring-lab: command-line front end for the finite semiring /
// semimodule laboratory. Subcommands validate structures, report
// algebraic properties, enumerate ideals and subsemimodules, build
// localizations and total quotients, run the theorem harness over a
// corpus, and search enumerated structures for counterexamples.
//
// Exit codes: 0 = all verdicts pass, 1 = some verdict failed,
// 2 = usage or parse error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semiring_lab/harness.hpp"

namespace sl = semiring_lab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int thread_count() {
  if (const char* env = std::getenv("SEMIRING_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

sl::Corpus load_corpus(const std::string& spec) {
  if (spec == "builtin") return sl::built_in_corpus();
  return sl::load_corpus_dir(spec);
}

json subset_json(const sl::SubsetHandle& s) {
  json arr = json::array();
  for (int e : s.elements()) arr.push_back(e);
  return arr;
}

std::vector<int> parse_csv_elements(const std::string& csv, int order) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() || v < 0 || v >= order)
      throw sl::PreconditionUnmet("element index '" + tok + "' out of range for order " +
                                  std::to_string(order));
    out.push_back(v);
  }
  if (out.empty()) throw sl::PreconditionUnmet("empty element list");
  return out;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

// ------------------------------------------------------------------ validate

int cmd_validate(const sl::Corpus& corpus, const std::string& name, json& doc,
                 std::ostream& text) {
  int exit_code = kExitPass;
  bool matched = false;
  for (const sl::SemiringPtr& s : corpus.semirings) {
    if (!name.empty() && s->name() != name) continue;
    matched = true;
    // Structures in a loaded corpus were validated at construction;
    // re-run the validator on the raw tables so this command is a
    // genuine check rather than a formality.
    sl::validate_semiring(s->tables());
    text << s->name() << ": valid semiring, order " << s->order() << "\n";
    doc["structures"].push_back(
        {{"name", s->name()}, {"kind", "semiring"}, {"order", s->order()}, {"valid", true}});
  }
  for (const sl::SemimodulePtr& m : corpus.modules) {
    if (!name.empty() && m->name() != name) continue;
    matched = true;
    sl::validate_semimodule(m->base_ptr(), m->tables());
    text << m->name() << ": valid semimodule over " << m->base().name() << ", order "
         << m->order() << "\n";
    doc["structures"].push_back({{"name", m->name()},
                                 {"kind", "semimodule"},
                                 {"base", m->base().name()},
                                 {"order", m->order()},
                                 {"valid", true}});
  }
  if (!name.empty() && !matched) {
    std::cerr << "error: no structure named '" << name << "' in the corpus\n";
    return kExitUsage;
  }
  return exit_code;
}

// ------------------------------------------------------------------ analyze

void analyze_semiring(const sl::SemiringPtr& s, json& doc, std::ostream& text) {
  std::optional<sl::SubsetHandle> local = sl::is_local(*s);
  sl::SubsetHandle mc = sl::mc_elements(*s);
  sl::SubsetHandle u = sl::units(*s);
  const std::vector<sl::IdealInfo>& ideals = sl::all_ideals(*s);
  std::vector<sl::SubsetHandle> maximals = sl::maximal_ideals(*s);

  text << "semiring " << s->name() << " (order " << s->order() << ", one=" << s->one() << ")\n"
       << "  entire=" << yn(sl::is_entire(*s)) << " yoked=" << yn(sl::is_yoked(*s))
       << " semidomain=" << yn(sl::is_semidomain(*s))
       << " mult-idempotent=" << yn(sl::is_mult_idempotent(*s)) << "\n"
       << "  local=" << (local ? "yes, maximal " + local->to_string() : std::string("no"))
       << "\n"
       << "  units=" << u.to_string() << " mc-elements=" << mc.to_string() << "\n"
       << "  ideals=" << ideals.size() << " maximal=[";
  for (std::size_t i = 0; i < maximals.size(); ++i)
    text << (i ? " " : "") << maximals[i].to_string();
  text << "]\n";

  json maxj = json::array();
  for (const sl::SubsetHandle& p : maximals) maxj.push_back(subset_json(p));
  doc["structures"].push_back({{"name", s->name()},
                               {"kind", "semiring"},
                               {"order", s->order()},
                               {"one", s->one()},
                               {"entire", sl::is_entire(*s)},
                               {"yoked", sl::is_yoked(*s)},
                               {"semidomain", sl::is_semidomain(*s)},
                               {"mult_idempotent", sl::is_mult_idempotent(*s)},
                               {"local", local.has_value()},
                               {"units", subset_json(u)},
                               {"mc_elements", subset_json(mc)},
                               {"ideal_count", ideals.size()},
                               {"maximal_ideals", maxj}});
}

void analyze_module(const sl::SemimodulePtr& m, json& doc, std::ostream& text) {
  sl::MultiplicationResult mult = sl::is_multiplication(*m);
  bool cyclic = sl::is_cyclic(*m);
  bool canc = sl::is_cancellative(*m);
  bool faithful = sl::is_faithful(*m);
  bool mc = sl::is_mc_semimodule(*m);
  std::optional<bool> torsionfree;
  if (sl::is_semidomain(m->base())) torsionfree = sl::is_torsionfree(*m);
  sl::SubsetHandle th = sl::theta(*m);
  std::vector<int> gens = sl::generating_set(*m);

  text << "semimodule " << m->name() << " over " << m->base().name() << " (order " << m->order()
       << ")\n"
       << "  multiplication=" << yn(mult.holds);
  if (!mult.holds) text << " (witness " << mult.witness->to_string() << ")";
  text << " cyclic=" << yn(cyclic) << "\n"
       << "  cancellative=" << yn(canc) << " faithful=" << yn(faithful) << " mc=" << yn(mc)
       << " torsionfree=" << (torsionfree ? yn(*torsionfree) : std::string("n/a")) << "\n"
       << "  theta=" << th.to_string() << " generators="
       << sl::SubsetHandle::of(m.get(), gens).to_string() << "\n";

  json entry = {{"name", m->name()},
                {"kind", "semimodule"},
                {"base", m->base().name()},
                {"order", m->order()},
                {"multiplication", mult.holds},
                {"cyclic", cyclic},
                {"cancellative", canc},
                {"faithful", faithful},
                {"mc", mc},
                {"theta", subset_json(th)},
                {"generators", gens}};
  if (!mult.holds) entry["multiplication_witness"] = subset_json(*mult.witness);
  if (torsionfree) entry["torsionfree"] = *torsionfree;
  doc["structures"].push_back(std::move(entry));
}

int cmd_analyze(const sl::Corpus& corpus, const std::string& name, json& doc,
                std::ostream& text) {
  bool matched = false;
  for (const sl::SemiringPtr& s : corpus.semirings) {
    if (!name.empty() && s->name() != name) continue;
    matched = true;
    analyze_semiring(s, doc, text);
  }
  for (const sl::SemimodulePtr& m : corpus.modules) {
    if (!name.empty() && m->name() != name) continue;
    matched = true;
    analyze_module(m, doc, text);
  }
  if (!name.empty() && !matched) {
    std::cerr << "error: no structure named '" << name << "' in the corpus\n";
    return kExitUsage;
  }
  return kExitPass;
}

// ------------------------------------------------------------------ ideals

int cmd_ideals(const sl::Corpus& corpus, const std::string& name, json& doc,
               std::ostream& text) {
  sl::SemiringPtr s = corpus.find_semiring(name);
  if (!s) {
    std::cerr << "error: no semiring named '" << name << "' in the corpus\n";
    return kExitUsage;
  }
  const std::vector<sl::IdealInfo>& ideals = sl::all_ideals(*s);
  text << s->name() << ": " << ideals.size() << " ideals\n";
  json list = json::array();
  for (const sl::IdealInfo& info : ideals) {
    text << "  " << info.set.to_string();
    if (info.flags.proper) text << " proper";
    if (info.flags.subtractive) text << " subtractive";
    if (info.flags.prime) text << " prime";
    if (info.flags.maximal) text << " maximal";
    text << "\n";
    list.push_back({{"set", subset_json(info.set)},
                    {"proper", info.flags.proper},
                    {"subtractive", info.flags.subtractive},
                    {"prime", info.flags.prime},
                    {"maximal", info.flags.maximal}});
  }
  doc["structures"].push_back(
      {{"name", s->name()}, {"kind", "semiring"}, {"order", s->order()}, {"ideals", list}});
  return kExitPass;
}

// ------------------------------------------------------------------ subs

int cmd_subs(const sl::Corpus& corpus, const std::string& name, json& doc, std::ostream& text) {
  sl::SemimodulePtr m = corpus.find_module(name);
  if (!m) {
    std::cerr << "error: no semimodule named '" << name << "' in the corpus\n";
    return kExitUsage;
  }
  const std::vector<sl::SubsetHandle>& subs = sl::all_subsemimodules(*m);
  text << m->name() << ": " << subs.size() << " subsemimodules\n";
  json list = json::array();
  for (const sl::SubsetHandle& n : subs) {
    bool cyc = false;
    for (int x = 0; x < m->order() && !cyc; ++x)
      if (n.contains(x) && sl::cyclic_subsemimodule(*m, x) == n) cyc = true;
    text << "  " << n.to_string() << (cyc ? " cyclic" : "") << "\n";
    list.push_back({{"set", subset_json(n)}, {"cyclic", cyc}});
  }
  doc["structures"].push_back({{"name", m->name()},
                               {"kind", "semimodule"},
                               {"order", m->order()},
                               {"subsemimodules", list}});
  return kExitPass;
}

// ------------------------------------------------------------------ localize

int cmd_localize(const sl::Corpus& corpus, const std::string& name, const std::string& prime_csv,
                 json& doc, std::ostream& text) {
  sl::SemiringPtr s = corpus.find_semiring(name);
  sl::SemimodulePtr m = s ? nullptr : corpus.find_module(name);
  if (!s && !m) {
    std::cerr << "error: no structure named '" << name << "' in the corpus\n";
    return kExitUsage;
  }
  const sl::FiniteSemiring& base = s ? *s : m->base();
  sl::SubsetHandle p =
      sl::SubsetHandle::of(&base, parse_csv_elements(prime_csv, base.order()));
  if (!sl::is_prime_ideal(base, p)) {
    std::cerr << "error: " << p.to_string() << " is not a prime ideal of " << base.name()
              << "\n";
    return kExitUsage;
  }

  if (s) {
    sl::LocalizedSemiring loc = sl::localize_at_prime(s, p);
    text << "localize " << s->name() << " at " << p.to_string() << ": order "
         << loc.result->order() << "\n";
    text << "  embedding:";
    for (int a = 0; a < s->order(); ++a) text << " " << a << "->" << loc.embedding[a];
    text << "\n" << sl::print_semiring(*loc.result);
    json emb = json::array();
    for (int a = 0; a < s->order(); ++a) emb.push_back(loc.embedding[a]);
    doc["structures"].push_back({{"name", s->name()},
                                 {"kind", "semiring"},
                                 {"prime", subset_json(p)},
                                 {"order", loc.result->order()},
                                 {"embedding", emb},
                                 {"tables", sl::print_semiring(*loc.result)}});
  } else {
    sl::LocalizedSemimodule loc = sl::localize_at_prime(m, p);
    text << "localize " << m->name() << " at " << p.to_string() << ": order "
         << loc.result->order() << " over base of order " << loc.base.result->order() << "\n";
    text << "  embedding:";
    for (int x = 0; x < m->order(); ++x) text << " " << x << "->" << loc.embedding[x];
    text << "\n" << sl::print_semimodule(*loc.result);
    json emb = json::array();
    for (int x = 0; x < m->order(); ++x) emb.push_back(loc.embedding[x]);
    doc["structures"].push_back({{"name", m->name()},
                                 {"kind", "semimodule"},
                                 {"prime", subset_json(p)},
                                 {"order", loc.result->order()},
                                 {"base_order", loc.base.result->order()},
                                 {"embedding", emb},
                                 {"tables", sl::print_semimodule(*loc.result)}});
  }
  return kExitPass;
}

// ------------------------------------------------------------------ quotient

int cmd_quotient(const sl::Corpus& corpus, const std::string& name, json& doc,
                 std::ostream& text) {
  bool matched = false;
  for (const sl::SemiringPtr& s : corpus.semirings) {
    if (!name.empty() && s->name() != name) continue;
    matched = true;
    sl::LocalizedSemiring q = sl::total_quotient(s);
    text << "Q(" << s->name() << "): order " << q.result->order()
         << ", denominators " << q.tset.members.to_string() << ", embedding injective\n";
    json emb = json::array();
    for (int a = 0; a < s->order(); ++a) emb.push_back(q.embedding[a]);
    doc["structures"].push_back({{"name", s->name()},
                                 {"kind", "semiring"},
                                 {"order", q.result->order()},
                                 {"denominators", subset_json(q.tset.members)},
                                 {"embedding", emb}});
  }
  if (!name.empty() && !matched) {
    std::cerr << "error: no semiring named '" << name << "' in the corpus\n";
    return kExitUsage;
  }
  return kExitPass;
}

// ------------------------------------------------------------------ check

json theorem_json(const sl::TheoremReport& r) {
  json entry = {{"id", r.id},
                {"verdict", sl::to_string(r.verdict)},
                {"instances", r.instances_checked},
                {"satisfied", r.hypotheses_met_count},
                {"elapsed_ms", r.elapsed_ms}};
  if (r.verdict == sl::Verdict::kFail) {
    for (const sl::InstanceRecord& inst : r.instances)
      if (inst.hypotheses_met && !inst.conclusion) {
        entry["witness"] = inst.subject + (inst.witness.empty() ? "" : ": " + inst.witness);
        break;
      }
  }
  return entry;
}

void print_theorem_text(const sl::TheoremReport& r, std::ostream& text) {
  text << r.id << ": " << sl::to_string(r.verdict) << "\n";
  if (r.verdict == sl::Verdict::kFail) {
    int shown = 0;
    for (const sl::InstanceRecord& inst : r.instances) {
      if (!inst.hypotheses_met || inst.conclusion) continue;
      text << "    " << inst.subject << (inst.witness.empty() ? "" : " — " + inst.witness)
           << "\n";
      if (++shown == 5) break;
    }
  }
}

int cmd_check(const sl::Corpus& corpus, const std::string& theorem, bool all, json& doc,
              std::ostream& text) {
  std::vector<sl::TheoremReport> reports;
  if (all) {
    reports = sl::check_all(corpus, thread_count());
  } else {
    if (!sl::is_registered_theorem(theorem)) {
      std::cerr << "error: unknown theorem id '" << theorem << "'\n";
      return kExitUsage;
    }
    reports.push_back(sl::check(theorem, corpus));
  }
  int pass = 0, fail = 0, vac = 0;
  for (const sl::TheoremReport& r : reports) {
    print_theorem_text(r, text);
    doc["theorems"].push_back(theorem_json(r));
    switch (r.verdict) {
      case sl::Verdict::kPass: ++pass; break;
      case sl::Verdict::kFail: ++fail; break;
      case sl::Verdict::kVacuous: ++vac; break;
    }
  }
  text << "checked " << reports.size() << " theorem" << (reports.size() == 1 ? "" : "s") << ": "
       << pass << " pass, " << vac << " vacuous, " << fail << " fail\n";
  return fail ? kExitFail : kExitPass;
}

// ------------------------------------------------------------------ enumerate

int cmd_enumerate(int order, bool iso, json& doc, std::ostream& text) {
  std::vector<sl::SemiringPtr> found = sl::enumerate_semirings(order, iso);
  text << "order " << order << ": " << found.size() << " semirings"
       << (iso ? " up to isomorphism" : " (labeled)") << "\n";
  for (const sl::SemiringPtr& s : found) {
    text << "  " << s->name() << " one=" << s->one() << "\n";
    doc["structures"].push_back(
        {{"name", s->name()}, {"kind", "semiring"}, {"order", s->order()}, {"one", s->one()}});
  }
  return kExitPass;
}

// ------------------------------------------------------------------ search

int cmd_search(const sl::Corpus& corpus, const std::string& theorem, bool all,
               const std::string& probe, int max_order, json& doc, std::ostream& text) {
  if (!probe.empty()) {
    sl::ProbeOutcome out = sl::run_probe(probe, corpus);
    json entry = {{"id", out.id},
                  {"verdict", out.witness ? "witness" : "none"},
                  {"instances", out.instances}};
    if (out.witness) entry["witness"] = *out.witness;
    doc["theorems"].push_back(entry);
    text << out.id << ": "
         << (out.witness ? "witness " + *out.witness : std::string("no witness found")) << " ("
         << out.instances << " instances scanned)\n";
    return out.witness ? kExitPass : kExitFail;
  }

  std::vector<std::string> ids;
  if (all) {
    for (const sl::TheoremEntry& e : sl::registry()) ids.push_back(e.id);
  } else {
    if (!sl::is_registered_theorem(theorem)) {
      std::cerr << "error: unknown theorem id '" << theorem << "'\n";
      return kExitUsage;
    }
    ids.push_back(theorem);
  }
  int failures = 0;
  for (const std::string& id : ids) {
    sl::SearchOutcome out = sl::search_counterexample(id, max_order);
    json entry = {{"id", out.id},
                  {"verdict", out.exhausted ? "exhausted" : "fail"},
                  {"semirings", out.semirings},
                  {"modules", out.modules},
                  {"elapsed_ms", out.elapsed_ms}};
    if (out.failure) {
      for (const sl::InstanceRecord& inst : out.failure->instances)
        if (inst.hypotheses_met && !inst.conclusion) {
          entry["witness"] = inst.subject + (inst.witness.empty() ? "" : ": " + inst.witness);
          break;
        }
    }
    doc["theorems"].push_back(entry);
    if (out.exhausted) {
      text << id << ": exhausted (" << out.semirings << " semirings, " << out.modules
           << " modules, " << out.elapsed_ms << " ms)\n";
    } else {
      ++failures;
      text << id << ": COUNTEREXAMPLE over enumerated structures\n";
      if (out.failure) print_theorem_text(*out.failure, text);
    }
  }
  return failures ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semiring and semimodule laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string corpus_spec = "builtin";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--corpus", corpus_spec, "corpus directory, or 'builtin'")
      ->capture_default_str();

  std::string structure_name;
  std::string prime_csv;
  std::string theorem_id;
  std::string probe_id;
  bool check_all_flag = false;
  bool iso = false;
  int order = 2;
  int max_order = 3;

  CLI::App* validate = app.add_subcommand("validate", "re-run axiom validation");
  validate->add_option("name", structure_name, "structure name (default: all)");

  CLI::App* analyze = app.add_subcommand("analyze", "report algebraic properties");
  analyze->add_option("name", structure_name, "structure name (default: all)");

  CLI::App* ideals = app.add_subcommand("ideals", "list the ideals of a semiring");
  ideals->add_option("name", structure_name, "semiring name")->required();

  CLI::App* subs = app.add_subcommand("subs", "list the subsemimodules of a semimodule");
  subs->add_option("name", structure_name, "semimodule name")->required();

  CLI::App* localize = app.add_subcommand("localize", "localize at a prime ideal");
  localize->add_option("name", structure_name, "semiring or semimodule name")->required();
  localize->add_option("--prime", prime_csv, "prime ideal as comma-separated elements")
      ->required();

  CLI::App* quotient = app.add_subcommand("quotient", "total quotient semiring Q(S)");
  quotient->add_option("name", structure_name, "semiring name (default: all)");

  CLI::App* check = app.add_subcommand("check", "run the theorem harness over the corpus");
  CLI::Option* check_theorem = check->add_option("--theorem", theorem_id, "registry id");
  check->add_flag("--all", check_all_flag, "check every registry entry");
  check_theorem->excludes("--all");

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate semirings of one order");
  enumerate->add_option("--order", order, "carrier size (2..5)")->required();
  enumerate->add_flag("--iso", iso, "deduplicate up to isomorphism");

  CLI::App* search = app.add_subcommand("search", "counterexample search over enumerated structures");
  CLI::Option* search_theorem = search->add_option("--theorem", theorem_id, "registry id");
  search->add_flag("--all", check_all_flag, "search every registry entry");
  CLI::Option* search_probe =
      search->add_option("--probe", probe_id, "probe id (wants a witness)");
  search->add_option("--max-order", max_order, "census bound (default 3)");
  search_theorem->excludes("--all")->excludes("--probe");
  search_probe->excludes("--all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  json doc = {{"command", app.get_subcommands().front()->get_name()},
              {"structures", json::array()},
              {"theorems", json::array()},
              {"timings", json::object()}};
  std::ostringstream text;
  int exit_code = kExitPass;
  auto start = std::chrono::steady_clock::now();

  try {
    if (*check && !check_all_flag && theorem_id.empty()) {
      std::cerr << "error: check requires --theorem <id> or --all\n";
      return kExitUsage;
    }
    if (*search && !check_all_flag && theorem_id.empty() && probe_id.empty()) {
      std::cerr << "error: search requires --theorem <id>, --probe <id>, or --all\n";
      return kExitUsage;
    }

    if (*enumerate) {
      exit_code = cmd_enumerate(order, iso, doc, text);
    } else {
      sl::Corpus corpus = load_corpus(corpus_spec);
      if (*validate) exit_code = cmd_validate(corpus, structure_name, doc, text);
      else if (*analyze) exit_code = cmd_analyze(corpus, structure_name, doc, text);
      else if (*ideals) exit_code = cmd_ideals(corpus, structure_name, doc, text);
      else if (*subs) exit_code = cmd_subs(corpus, structure_name, doc, text);
      else if (*localize)
        exit_code = cmd_localize(corpus, structure_name, prime_csv, doc, text);
      else if (*quotient) exit_code = cmd_quotient(corpus, structure_name, doc, text);
      else if (*check) exit_code = cmd_check(corpus, theorem_id, check_all_flag, doc, text);
      else if (*search)
        exit_code = cmd_search(corpus, theorem_id, check_all_flag, probe_id, max_order, doc,
                               text);
    }
  } catch (const sl::AxiomViolation& e) {
    // Well-formed input that fails an axiom is a failing verdict, not
    // a usage error.
    std::cerr << "invalid structure: " << e.what() << "\n";
    doc["structures"].push_back({{"valid", false}, {"error", e.what()}, {"axiom", e.axiom}});
    if (format == "json") std::cout << doc.dump(2) << "\n";
    return kExitFail;
  } catch (const sl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  double total_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  doc["timings"]["total_ms"] = total_ms;

  if (format == "json") std::cout << doc.dump(2) << "\n";
  else std::cout << text.str();
  return exit_code;
}
