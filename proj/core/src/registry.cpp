#include <algorithm>
#include <functional>
#include <map>

#include "semiring_lab/harness.hpp"

namespace semiring_lab {

namespace {

std::vector<SemimodulePtr> modules_over(const Corpus& c, const SemiringPtr& s) {
  std::vector<SemimodulePtr> out;
  for (const SemimodulePtr& m : c.modules)
    if (m->base_ptr().get() == s.get()) out.push_back(m);
  return out;
}

std::string pc_string(const PCyclicWitness& w) {
  return "(m,t,q)=(" + std::to_string(w.m) + "," + std::to_string(w.t) + "," +
         std::to_string(w.q) + ")";
}

/// All maximal ideals of the base are subtractive (the standing
/// hypothesis shared by the T4.x family).
bool maximals_subtractive(const FiniteSemiring& s) {
  for (const SubsetHandle& p : maximal_ideals(s))
    if (!is_subtractive(s, p)) return false;
  return true;
}

/// Conclusion shared by T3.4 and T4.5: a*x in pM forces a in p or
/// x in pM. Returns an offending "(a,x)" or the empty string.
std::string prime_avoidance_failure(const FiniteSemimodule& m, const SubsetHandle& p) {
  SubsetHandle pm = ideal_times_module(m, p);
  for (int a = 0; a < m.base().order(); ++a) {
    if (p.contains(a)) continue;
    for (int x = 0; x < m.order(); ++x) {
      if (pm.contains(x)) continue;
      if (pm.contains(m.act(a, x)))
        return "(a,x)=(" + std::to_string(a) + "," + std::to_string(x) + ")";
    }
  }
  return "";
}

// ---------------------------------------------------------------- T2.3

TheoremReport run_t2_3(const Corpus& c) {
  ReportBuilder b("T2.3");
  for (const SemiringPtr& s : c.semirings) {
    std::vector<SemimodulePtr> mods = modules_over(c, s);
    for (const SemimodulePtr& m : mods)
      for (const SemimodulePtr& n : mods) {
        std::vector<HomTable> homs = all_homs(*m, *n);
        for (std::size_t i = 0; i < homs.size(); ++i) {
          auto inst = b.instance(m->name() + " -> " + n->name() + " hom#" + std::to_string(i));
          inst.hyp("hom-surjective", is_surjective(homs[i]));
          inst.hyp("source-multiplication", [&] { return is_multiplication(*m).holds; });
          if (inst.met()) {
            MultiplicationResult r = is_multiplication(*n);
            inst.conclude(r.holds, r.holds ? "" : "witness " + r.witness->to_string());
          }
          b.add(std::move(inst));
        }
      }
  }
  return b.finish();
}

// ---------------------------------------------------------------- E2.2

TheoremReport run_e2_2(const Corpus& c) {
  ReportBuilder b("E2.2");
  for (const SemiringPtr& s : c.semirings)
    for (const IdealInfo& info : all_ideals(*s)) {
      auto inst = b.instance(s->name() + " ideal " + info.set.to_string());
      inst.hyp("base-mult-idempotent", is_mult_idempotent(*s));
      if (inst.met()) {
        SemimodulePtr mod = ideal_as_module(s, info.set, s->name() + "|" + info.set.to_string());
        MultiplicationResult r = is_multiplication(*mod);
        inst.conclude(r.holds, r.holds ? "" : "witness " + r.witness->to_string());
      }
      b.add(std::move(inst));
    }
  return b.finish();
}

// ---------------------------------------------------------------- T2.5

TheoremReport run_t2_5(const Corpus& c) {
  ReportBuilder b("T2.5");
  for (const SemiringPtr& s : c.semirings) {
    QuotientContext ctx = quotient_context(s);
    for (const IdealInfo& info : all_ideals(*s)) {
      auto inst = b.instance(s->name() + " ideal " + info.set.to_string());
      SemimodulePtr mod = ideal_as_module(s, info.set, s->name() + "|" + info.set.to_string());
      bool mult = is_multiplication(*mod).holds;
      bool has_mc = info.set.intersects(mc_elements(*s));
      InvertibilityResult inv = invertibility_witness(ctx, info.set);
      std::string witness = inv.invertible
                                ? "inverse " + inv.inverse->to_string()
                                : "mult=" + std::to_string(mult) + " mc=" + std::to_string(has_mc);
      inst.conclude(inv.invertible == (mult && has_mc), witness);
      b.add(std::move(inst));
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------- T2.6

TheoremReport run_t2_6(const Corpus& c) {
  ReportBuilder b("T2.6");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("tp-full-or-p-cyclic-at-every-maximal", [&] {
      for (const SubsetHandle& p : maximal_ideals(m->base()))
        if (t_p_set(*m, p) != m->carrier() && !is_p_cyclic(*m, p)) return false;
      return true;
    });
    if (inst.met()) {
      MultiplicationResult r = is_multiplication(*m);
      inst.conclude(r.holds, r.holds ? "" : "witness " + r.witness->to_string());
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T2.7

TheoremReport run_t2_7(const Corpus& c) {
  ReportBuilder b("T2.7");
  for (const SemimodulePtr& m : c.modules)
    for (const SubsetHandle& p : maximal_ideals(m->base())) {
      auto inst = b.instance(m->name() + " @ " + p.to_string());
      inst.hyp("multiplication", is_multiplication(*m).holds);
      if (inst.met()) {
        bool fix_full = fixpoint_set(*m, p).set == m->carrier();
        std::optional<PCyclicWitness> pc = is_p_cyclic(*m, p);
        inst.conclude(fix_full || pc.has_value(),
                      pc ? pc_string(*pc) : (fix_full ? "fixpoint-full" : ""));
      }
      b.add(std::move(inst));
    }
  return b.finish();
}

// ---------------------------------------------------------------- C2.8

TheoremReport run_c2_8(const Corpus& c) {
  ReportBuilder b("C2.8");
  for (const SemimodulePtr& m : c.modules) {
    std::optional<SubsetHandle> mm = is_local(m->base());
    auto inst = b.instance(m->name());
    inst.hyp("base-local", mm.has_value());
    inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
    inst.hyp("M-neq-mM", [&] { return ideal_times_module(*m, *mm) != m->carrier(); });
    if (inst.met()) {
      std::optional<int> g = cyclic_generator(*m);
      inst.conclude(g.has_value(), g ? "generator " + std::to_string(*g) : "");
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T2.10

TheoremReport run_t2_10(const Corpus& c) {
  ReportBuilder b("T2.10");
  for (const SemimodulePtr& m : c.modules)
    for (const SubsetHandle& p : maximal_ideals(m->base())) {
      auto inst = b.instance(m->name() + " @ " + p.to_string());
      inst.hyp("multiplication", is_multiplication(*m).holds);
      inst.hyp("M-neq-pM", [&] { return ideal_times_module(*m, p) != m->carrier(); });
      if (inst.met()) {
        LocalizedSemimodule lm = localize_at_prime(m, p);
        std::optional<int> g = cyclic_generator(*lm.result);
        inst.conclude(g.has_value(),
                      g ? "generator class " + std::to_string(*g) + " of order-" +
                              std::to_string(lm.result->order()) + " localization"
                        : "");
      }
      b.add(std::move(inst));
    }
  return b.finish();
}

// ---------------------------------------------------------------- T2.11

TheoremReport run_t2_11(const Corpus& c) {
  ReportBuilder b("T2.11");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("finitely-generated", true);
    inst.hyp("Mp-cyclic-at-every-maximal", [&] {
      for (const SubsetHandle& p : maximal_ideals(m->base()))
        if (!is_cyclic(*localize_at_prime(m, p).result)) return false;
      return true;
    });
    if (inst.met()) {
      MultiplicationResult r = is_multiplication(*m);
      inst.conclude(r.holds, r.holds ? "" : "witness " + r.witness->to_string());
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- L3.1

TheoremReport run_l3_1(const Corpus& c) {
  ReportBuilder b("L3.1");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("base-yoked", is_yoked(m->base()));
    inst.hyp("base-entire", is_entire(m->base()));
    inst.hyp("cancellative", is_cancellative(*m));
    inst.hyp("faithful", is_faithful(*m));
    inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
    if (inst.met()) inst.conclude(is_mc_semimodule(*m));
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T3.3

TheoremReport run_t3_3(const Corpus& c) {
  ReportBuilder b("T3.3");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("base-yoked", is_yoked(m->base()));
    inst.hyp("base-semidomain", is_semidomain(m->base()));
    inst.hyp("cancellative", is_cancellative(*m));
    inst.hyp("torsionfree", [&] { return is_torsionfree(*m); });
    if (inst.met()) inst.conclude(is_mc_semimodule(*m));
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T3.4

TheoremReport run_t3_4(const Corpus& c) {
  ReportBuilder b("T3.4");
  for (const SemimodulePtr& m : c.modules)
    for (const IdealInfo& info : all_ideals(m->base())) {
      if (!info.flags.prime) continue;
      auto inst = b.instance(m->name() + " @ " + info.set.to_string());
      inst.hyp("mc", is_mc_semimodule(*m));
      inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
      if (inst.met()) {
        std::string bad = prime_avoidance_failure(*m, info.set);
        inst.conclude(bad.empty(), bad);
      }
      b.add(std::move(inst));
    }
  return b.finish();
}

// ---------------------------------------------------------------- L3.5

TheoremReport run_l3_5(const Corpus& c) {
  ReportBuilder b("L3.5");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("multiplication", is_multiplication(*m).holds);
    if (inst.met()) {
      SubsetHandle th = theta(*m);
      inst.conclude(ideal_times_module(*m, th) == m->carrier(), "theta=" + th.to_string());
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T3.6

TheoremReport run_t3_6(const Corpus& c) {
  ReportBuilder b("T3.6");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("nonzero", m->order() > 1);
    inst.hyp("mc", [&] { return is_mc_semimodule(*m); });
    inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
    if (inst.met()) {
      const std::vector<IdealInfo>& ideals = all_ideals(m->base());
      std::vector<SubsetHandle> im;
      im.reserve(ideals.size());
      for (const IdealInfo& info : ideals) im.push_back(ideal_times_module(*m, info.set));
      bool ok = true;
      std::string w = "finitely-generated holds trivially";
      for (std::size_t i = 0; i < ideals.size() && ok; ++i)
        for (std::size_t j = 0; j < ideals.size() && ok; ++j) {
          if (im[i].subset_of(im[j]) && !ideals[i].set.subset_of(ideals[j].set)) {
            ok = false;
            w = "containment fails at I=" + ideals[i].set.to_string() +
                " J=" + ideals[j].set.to_string();
          }
          if (i != j && im[i] == im[j]) {
            ok = false;
            w = "cancellation fails at I=" + ideals[i].set.to_string() +
                " J=" + ideals[j].set.to_string();
          }
        }
      for (std::size_t i = 0; i < ideals.size() && ok; ++i)
        if (ideals[i].flags.proper && im[i] == m->carrier()) {
          ok = false;
          w = "M = IM for proper I=" + ideals[i].set.to_string();
        }
      inst.conclude(ok, w);
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T3.8

TheoremReport run_t3_8(const Corpus& c) {
  ReportBuilder b("T3.8");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("base-semidomain", is_semidomain(m->base()));
    inst.hyp("mc", is_mc_semimodule(*m));
    inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
    if (inst.met()) inst.conclude(is_torsionfree(*m));
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T3.9

TheoremReport run_t3_9(const Corpus& c) {
  ReportBuilder b("T3.9");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("mc", is_mc_semimodule(*m));
    inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
    if (inst.met()) {
      std::optional<DualBasis> basis = dual_basis_certificate(m, m->order());
      inst.conclude(basis.has_value(),
                    basis ? "dual basis with " + std::to_string(basis->pairs.size()) + " pairs"
                          : "");
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T3.11

TheoremReport run_t3_11(const Corpus& c) {
  ReportBuilder b("T3.11");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("base-semidomain", is_semidomain(m->base()));
    inst.hyp("nonzero", m->order() > 1);
    inst.hyp("mc", is_mc_semimodule(*m));
    inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
    if (inst.met()) {
      std::optional<IdealImage> img = isomorphic_ideal_image(m);
      inst.conclude(img.has_value(),
                    img ? "invertible ideal " + img->ideal.to_string() : "");
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T4.1

void t4_shared_hyps(ReportBuilder::Instance& inst, const FiniteSemimodule& m) {
  inst.hyp("base-yoked", is_yoked(m.base()));
  inst.hyp("maximal-ideals-subtractive", [&] { return maximals_subtractive(m.base()); });
  inst.hyp("cancellative", [&] { return is_cancellative(m); });
}

TheoremReport run_t4_1(const Corpus& c) {
  ReportBuilder b("T4.1");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    t4_shared_hyps(inst, *m);
    if (inst.met()) {
      bool mult = is_multiplication(*m).holds;
      bool dichotomy = true;
      for (const SubsetHandle& p : maximal_ideals(m->base()))
        if (!is_p_cyclic(*m, p) && fixpoint_set(*m, p).set != m->carrier()) {
          dichotomy = false;
          break;
        }
      inst.conclude(mult == dichotomy,
                    "mult=" + std::to_string(mult) + " dichotomy=" + std::to_string(dichotomy));
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- L4.2

TheoremReport run_l4_2(const Corpus& c) {
  ReportBuilder b("L4.2");
  for (const SemimodulePtr& m : c.modules)
    for (const SubsetHandle& p : maximal_ideals(m->base())) {
      auto inst = b.instance(m->name() + " @ " + p.to_string());
      t4_shared_hyps(inst, *m);
      if (inst.met()) {
        FixpointSet fp = fixpoint_set(*m, p);
        inst.conclude(fp.closed, "fixpoints " + fp.set.to_string());
      }
      b.add(std::move(inst));
    }
  return b.finish();
}

// ---------------------------------------------------------------- T4.3

TheoremReport run_t4_3(const Corpus& c) {
  ReportBuilder b("T4.3");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    t4_shared_hyps(inst, *m);
    if (inst.met()) {
      bool mult = is_multiplication(*m).holds;
      // Right side: every cyclic subsemimodule Sm equals IM for some
      // ideal I; the residual (Sm : M) is the canonical candidate.
      bool cyclic_form = true;
      for (int x = 0; x < m->order() && cyclic_form; ++x) {
        SubsetHandle sx = cyclic_subsemimodule(*m, x);
        if (ideal_times_module(*m, module_residual(*m, sx, m->carrier())) != sx)
          cyclic_form = false;
      }
      inst.conclude(mult == cyclic_form, "mult=" + std::to_string(mult) +
                                             " cyclic-form=" + std::to_string(cyclic_form));
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T4.4

TheoremReport run_t4_4(const Corpus& c) {
  ReportBuilder b("T4.4");
  for (const SemimodulePtr& m : c.modules) {
    auto inst = b.instance(m->name());
    inst.hyp("base-yoked", is_yoked(m->base()));
    inst.hyp("maximal-ideals-subtractive", [&] { return maximals_subtractive(m->base()); });
    inst.hyp("cancellative", [&] { return is_cancellative(*m); });
    inst.hyp("faithful", [&] { return is_faithful(*m); });
    inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
    if (inst.met()) {
      // (1) finitely generated: every finite semimodule is. The
      // equivalence then asserts (2)..(5) all hold.
      const std::vector<IdealInfo>& ideals = all_ideals(m->base());
      std::vector<SubsetHandle> im;
      im.reserve(ideals.size());
      for (const IdealInfo& info : ideals) im.push_back(ideal_times_module(*m, info.set));
      bool ok = true;
      std::string w = "(1)..(5) all hold";
      for (const SubsetHandle& p : maximal_ideals(m->base()))
        if (ok && ideal_times_module(*m, p) == m->carrier()) {
          ok = false;
          w = "(2) fails at p=" + p.to_string();
        }
      for (std::size_t i = 0; i < ideals.size() && ok; ++i)
        for (std::size_t j = 0; j < ideals.size() && ok; ++j) {
          if (im[i].subset_of(im[j]) && !ideals[i].set.subset_of(ideals[j].set)) {
            ok = false;
            w = "(3) fails at I=" + ideals[i].set.to_string() +
                " J=" + ideals[j].set.to_string();
          }
          if (i != j && im[i] == im[j]) {
            ok = false;
            w = "(4) uniqueness fails at I=" + ideals[i].set.to_string() +
                " J=" + ideals[j].set.to_string();
          }
        }
      for (std::size_t i = 0; i < ideals.size() && ok; ++i)
        if (ideals[i].flags.proper && im[i] == m->carrier()) {
          ok = false;
          w = "(5) fails at I=" + ideals[i].set.to_string();
        }
      inst.conclude(ok, w);
    }
    b.add(std::move(inst));
  }
  return b.finish();
}

// ---------------------------------------------------------------- T4.5

TheoremReport run_t4_5(const Corpus& c) {
  ReportBuilder b("T4.5");
  for (const SemimodulePtr& m : c.modules)
    for (const IdealInfo& info : all_ideals(m->base())) {
      if (!info.flags.prime) continue;
      auto inst = b.instance(m->name() + " @ " + info.set.to_string());
      t4_shared_hyps(inst, *m);
      inst.hyp("faithful", [&] { return is_faithful(*m); });
      inst.hyp("multiplication", [&] { return is_multiplication(*m).holds; });
      if (inst.met()) {
        std::string bad = prime_avoidance_failure(*m, info.set);
        inst.conclude(bad.empty(), bad);
      }
      b.add(std::move(inst));
    }
  return b.finish();
}

using Runner = TheoremReport (*)(const Corpus&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"T2.3", run_t2_3},   {"E2.2", run_e2_2}, {"T2.5", run_t2_5},   {"T2.6", run_t2_6},
      {"T2.7", run_t2_7},   {"C2.8", run_c2_8}, {"T2.10", run_t2_10}, {"T2.11", run_t2_11},
      {"L3.1", run_l3_1},   {"T3.3", run_t3_3}, {"T3.4", run_t3_4},   {"L3.5", run_l3_5},
      {"T3.6", run_t3_6},   {"T3.8", run_t3_8}, {"T3.9", run_t3_9},   {"T3.11", run_t3_11},
      {"T4.1", run_t4_1},   {"L4.2", run_l4_2}, {"T4.3", run_t4_3},   {"T4.4", run_t4_4},
      {"T4.5", run_t4_5}};
  return table;
}

}  // namespace

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries = {
      {"T2.3",
       "A surjective homomorphic image of a multiplication semimodule is a multiplication "
       "semimodule.",
       "per (source, target, hom) over a common base"},
      {"E2.2",
       "Over a multiplicatively idempotent semiring, every ideal is a multiplication "
       "semimodule.",
       "per (semiring, ideal)"},
      {"T2.5",
       "An ideal is invertible iff it is a multiplication semimodule containing a "
       "multiplicatively cancellable element.",
       "per (semiring, ideal)"},
      {"T2.6",
       "If at every maximal ideal p either T_p(M) = M or M is p-cyclic, then M is a "
       "multiplication semimodule.",
       "per semimodule"},
      {"T2.7",
       "A multiplication semimodule is, at every maximal ideal p, either p-cyclic or equal to "
       "its p-fixpoint set.",
       "per (semimodule, maximal ideal)"},
      {"C2.8",
       "Over a local semiring, a multiplication semimodule with M != mM is cyclic.",
       "per semimodule"},
      {"T2.10",
       "If M is a multiplication semimodule and p a maximal ideal with M != pM, then the "
       "localization M_p is cyclic.",
       "per (semimodule, maximal ideal)"},
      {"T2.11",
       "A finitely generated semimodule whose localization at every maximal ideal is cyclic is "
       "a multiplication semimodule.",
       "per semimodule"},
      {"L3.1",
       "Over a yoked entire semiring, a cancellative faithful multiplication semimodule is "
       "multiplicatively cancellative.",
       "per semimodule"},
      {"T3.3",
       "Over a yoked semidomain, a cancellative torsionfree semimodule is multiplicatively "
       "cancellative.",
       "per semimodule"},
      {"T3.4",
       "For an MC multiplication semimodule and a prime ideal p: ax in pM implies a in p or "
       "x in pM.",
       "per (semimodule, prime ideal)"},
      {"L3.5", "A multiplication semimodule satisfies M = theta(M)M.", "per semimodule"},
      {"T3.6",
       "For a nonzero MC multiplication semimodule: IM inside JM forces I inside J, M != IM "
       "for proper I, M is finitely generated, and ideal multiples cancel.",
       "per semimodule"},
      {"T3.8",
       "Over a semidomain, an MC multiplication semimodule is torsionfree.",
       "per semimodule"},
      {"T3.9",
       "An MC multiplication semimodule is projective: a dual basis exists with at most |M| "
       "pairs.",
       "per semimodule"},
      {"T3.11",
       "Over a semidomain, a nonzero MC multiplication semimodule is isomorphic to an "
       "invertible ideal.",
       "per semimodule"},
      {"T4.1",
       "For a cancellative semimodule over a yoked semiring with subtractive maximal ideals: "
       "M is a multiplication semimodule iff at every maximal ideal p it is p-cyclic or "
       "equal to its p-fixpoint set.",
       "per semimodule"},
      {"L4.2",
       "For a cancellative semimodule over a yoked semiring with subtractive maximal ideals, "
       "the p-fixpoint set is a subsemimodule at every maximal ideal p.",
       "per (semimodule, maximal ideal)"},
      {"T4.3",
       "For a cancellative semimodule over a yoked semiring with subtractive maximal ideals: "
       "M is a multiplication semimodule iff every cyclic subsemimodule Sm equals IM for "
       "some ideal I.",
       "per semimodule"},
      {"T4.4",
       "For a faithful cancellative multiplication semimodule over a yoked semiring with "
       "subtractive maximal ideals, the five finiteness and cancellation properties all "
       "hold.",
       "per semimodule"},
      {"T4.5",
       "For a faithful cancellative multiplication semimodule over a yoked semiring with "
       "subtractive maximal ideals and a prime p: ax in pM implies a in p or x in pM.",
       "per (semimodule, prime ideal)"}};
  return entries;
}

bool is_registered_theorem(const std::string& id) {
  return runners().find(id) != runners().end();
}

namespace detail {
TheoremReport run_registered(const std::string& id, const Corpus& corpus) {
  return runners().at(id)(corpus);
}
}  // namespace detail

const std::vector<std::string>& probe_ids() {
  static const std::vector<std::string> ids = {"mult-not-multidem", "tp-neq-fixpoints"};
  return ids;
}

ProbeOutcome run_probe(const std::string& id, const Corpus& corpus) {
  ProbeOutcome out;
  out.id = id;
  if (id == "mult-not-multidem") {
    // A multiplication semimodule over a base that is not
    // multiplicatively idempotent (the E2.2 hypothesis is not
    // necessary).
    for (const SemimodulePtr& m : corpus.modules) {
      ++out.instances;
      if (!is_mult_idempotent(m->base()) && is_multiplication(*m).holds) {
        out.witness = m->name() + " over " + m->base().name();
        break;
      }
    }
    return out;
  }
  if (id == "tp-neq-fixpoints") {
    // T_p(M) and the p-fixpoint set are different sets in general.
    for (const SemimodulePtr& m : corpus.modules) {
      for (const SubsetHandle& p : maximal_ideals(m->base())) {
        ++out.instances;
        SubsetHandle tp = t_p_set(*m, p);
        SubsetHandle fp = fixpoint_set(*m, p).set;
        if (tp != fp) {
          out.witness = m->name() + " @ " + p.to_string() + ": T_p=" + tp.to_string() +
                        " fixpoints=" + fp.to_string();
          break;
        }
      }
      if (out.witness) break;
    }
    return out;
  }
  throw UnknownTheorem("unknown probe id '" + id + "'");
}

}  // namespace semiring_lab
