#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "helpers.hpp"

using namespace semiring_lab;
namespace th = test_helpers;

namespace {

const std::vector<std::string> kRegistryOrder = {
    "T2.3", "E2.2", "T2.5", "T2.6", "T2.7", "C2.8",  "T2.10",
    "T2.11", "L3.1", "T3.3", "T3.4", "L3.5", "T3.6", "T3.8",
    "T3.9", "T3.11", "T4.1", "L4.2", "T4.3", "T4.4", "T4.5"};

}  // namespace

TEST_CASE("the registry lists exactly the contracted theorems in order") {
  const std::vector<TheoremEntry>& reg = registry();
  REQUIRE(reg.size() == 21);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].id == kRegistryOrder[i]);
    CHECK_FALSE(reg[i].statement.empty());
    CHECK_FALSE(reg[i].domain.empty());
  }
  for (const std::string& id : kRegistryOrder) CHECK(is_registered_theorem(id));
  CHECK_FALSE(is_registered_theorem("T9.9"));
  CHECK_THROWS_AS(check("T9.9", built_in_corpus()), UnknownTheorem);
}

TEST_CASE("every theorem passes or is vacuous on the built-in corpus") {
  const Corpus& c = built_in_corpus();
  std::vector<TheoremReport> reports = check_all(c, 1);
  REQUIRE(reports.size() == 21);
  for (const TheoremReport& r : reports) {
    INFO(r.id);
    CHECK(r.verdict != Verdict::kFail);
    CHECK(r.instances_checked > 0);
    CHECK(std::cmp_equal(r.instances.size(), r.instances_checked));
    // Every reported instance with satisfied hypotheses concluded true.
    for (const InstanceRecord& inst : r.instances)
      if (inst.hypotheses_met) {
        INFO(inst.subject, " ", inst.witness);
        CHECK(inst.conclusion);
      }
  }
}

TEST_CASE("parallel and serial harness runs agree") {
  const Corpus& c = built_in_corpus();
  std::vector<TheoremReport> serial = check_all(c, 1);
  std::vector<TheoremReport> parallel = check_all(c, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].id == parallel[i].id);
    CHECK(serial[i].verdict == parallel[i].verdict);
    CHECK(serial[i].instances_checked == parallel[i].instances_checked);
    CHECK(serial[i].hypotheses_met_count == parallel[i].hypotheses_met_count);
  }
}

TEST_CASE("anti-vacuity quotas") {
  const Corpus& c = built_in_corpus();
  for (const char* id : {"T2.6", "T2.7", "L3.5", "T3.6", "T4.1", "L4.2", "T4.4"}) {
    TheoremReport r = check(id, c);
    INFO(id);
    CHECK(r.verdict == Verdict::kPass);
    CHECK(r.hypotheses_met_count >= 3);
  }
}

TEST_CASE("pinned satisfying sets") {
  const Corpus& c = built_in_corpus();

  SUBCASE("L3.1 bites exactly on the z3 modules") {
    TheoremReport r = check("L3.1", c);
    CHECK(r.satisfying == std::vector<std::string>{"z3.self", "z3.ideal.0-1-2"});
  }
  SUBCASE("T3.6 bites on the four nonzero MC multiplication modules") {
    TheoremReport r = check("T3.6", c);
    CHECK(r.satisfying == std::vector<std::string>{"bool2.self", "bool2.ideal.0-1", "z3.self",
                                                   "z3.ideal.0-1-2"});
  }
  SUBCASE("T4.4 bites exactly on the faithful cancellative ring modules") {
    TheoremReport r = check("T4.4", c);
    CHECK(r.satisfying == std::vector<std::string>{"z3.self", "z3.ideal.0-1-2", "z4.self",
                                                   "z4.ideal.0-1-2-3", "z6.self",
                                                   "z6.ideal.0-1-2-3-4-5"});
  }
  SUBCASE("vacuity names the first failing hypothesis") {
    TheoremReport r = check("T3.8", c);
    auto it = r.vacuity.find("z6.self");
    REQUIRE(it != r.vacuity.end());
    CHECK(it->second == "base-semidomain");
  }
}

TEST_CASE("hypothesis short-circuiting skips guarded predicates") {
  ReportBuilder b("demo");
  int evaluated = 0;
  auto inst = b.instance("x");
  inst.hyp("first", false);
  inst.hyp("second", [&] {
    ++evaluated;
    return true;
  });
  CHECK_FALSE(inst.met());
  CHECK(evaluated == 0);
  b.add(std::move(inst));
  TheoremReport r = b.finish();
  CHECK(r.verdict == Verdict::kVacuous);
  CHECK(r.vacuity.at("x") == "first");
}

TEST_CASE("fail dominates pass in a report") {
  ReportBuilder b("demo");
  {
    auto inst = b.instance("good");
    inst.hyp("h", true);
    inst.conclude(true);
    b.add(std::move(inst));
  }
  {
    auto inst = b.instance("bad");
    inst.hyp("h", true);
    inst.conclude(false, "boom");
    b.add(std::move(inst));
  }
  TheoremReport r = b.finish();
  CHECK(r.verdict == Verdict::kFail);
  CHECK(r.hypotheses_met_count == 2);
}

TEST_CASE("probes find their documented witnesses") {
  const Corpus& c = built_in_corpus();
  REQUIRE(probe_ids() == std::vector<std::string>{"mult-not-multidem", "tp-neq-fixpoints"});

  ProbeOutcome p1 = run_probe("mult-not-multidem", c);
  REQUIRE(p1.witness.has_value());
  CHECK(th::contains(*p1.witness, "sat3.self"));

  ProbeOutcome p2 = run_probe("tp-neq-fixpoints", c);
  REQUIRE(p2.witness.has_value());
  CHECK(th::contains(*p2.witness, "chain3.self"));
  CHECK(th::contains(*p2.witness, "T_p={0}"));
  CHECK(th::contains(*p2.witness, "fixpoints={0,1}"));

  CHECK_THROWS_AS(run_probe("nope", c), UnknownTheorem);
}

TEST_CASE("semiring enumeration") {
  SUBCASE("order 2 yields exactly the Boolean semiring and Z2") {
    std::vector<SemiringPtr> labeled = enumerate_semirings(2, false);
    std::vector<SemiringPtr> iso = enumerate_semirings(2, true);
    CHECK(labeled.size() == 2);
    CHECK(iso.size() == 2);
  }
  SUBCASE("every enumerated structure validates and is canonical-form unique") {
    std::vector<SemiringPtr> labeled = enumerate_semirings(3, false);
    std::vector<SemiringPtr> iso = enumerate_semirings(3, true);
    CHECK(!labeled.empty());
    CHECK(iso.size() <= labeled.size());
    for (const SemiringPtr& s : iso) CHECK(validate_semiring(s->tables())->order() == 3);

    // Soundness of the isomorphism filter: relabeling the canonical
    // representatives regenerates every labeled table.
    std::set<std::string> labeled_keys, regenerated;
    auto key_of = [](const FiniteSemiring& s) {
      std::string k;
      k += static_cast<char>('0' + s.one());
      for (std::uint8_t v : s.tables().add) k += static_cast<char>('0' + v);
      for (std::uint8_t v : s.tables().mul) k += static_cast<char>('0' + v);
      return k;
    };
    for (const SemiringPtr& s : labeled) labeled_keys.insert(key_of(*s));
    std::vector<int> perm = {0, 1, 2};
    for (const SemiringPtr& s : iso) {
      std::sort(perm.begin() + 1, perm.end());
      do {
        RawTables t;
        t.name = "relabel";
        t.order = 3;
        t.one = perm[s->one()];
        t.add.resize(9);
        t.mul.resize(9);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            t.add[static_cast<std::size_t>(perm[a]) * 3 + perm[b]] =
                static_cast<std::uint8_t>(perm[s->add(a, b)]);
            t.mul[static_cast<std::size_t>(perm[a]) * 3 + perm[b]] =
                static_cast<std::uint8_t>(perm[s->mul(a, b)]);
          }
        regenerated.insert(key_of(*validate_semiring(t)));
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
    CHECK(regenerated == labeled_keys);
  }
  SUBCASE("bounds are enforced") {
    CHECK_THROWS_AS(enumerate_semirings(1, false), SizeBoundExceeded);
    CHECK_THROWS_AS(enumerate_semirings(6, false), SizeBoundExceeded);
  }
  SUBCASE("labeled order-3 enumeration matches a direct table scan") {
    // Independent oracle: identities and absorption force row 0 of
    // both tables and the row of `one`; scan every assignment of the
    // remaining cells and check the axioms by plain loops.
    std::set<std::string> oracle;
    auto idx = [](int a, int b) { return static_cast<std::size_t>(a) * 3 + b; };
    for (int one = 1; one <= 2; ++one) {
      std::array<int, 9> add{}, mul{};
      for (int v0 = 0; v0 < 3; ++v0)
        for (int v1 = 0; v1 < 3; ++v1)
          for (int v2 = 0; v2 < 3; ++v2)
            for (int w = 0; w < 3; ++w) {
              for (int b = 0; b < 3; ++b) {
                add[idx(0, b)] = add[idx(b, 0)] = b;  // 0 + b = b
                mul[idx(0, b)] = mul[idx(b, 0)] = 0;  // 0 * b = 0
                mul[idx(one, b)] = mul[idx(b, one)] = b;
              }
              add[idx(1, 1)] = v0;
              add[idx(1, 2)] = add[idx(2, 1)] = v1;
              add[idx(2, 2)] = v2;
              int other = one == 1 ? 2 : 1;
              mul[idx(other, other)] = w;
              bool ok = true;
              for (int a = 0; a < 3 && ok; ++a)
                for (int b = 0; b < 3 && ok; ++b)
                  for (int cc = 0; cc < 3 && ok; ++cc) {
                    if (add[idx(add[idx(a, b)], cc)] != add[idx(a, add[idx(b, cc)])]) ok = false;
                    if (mul[idx(mul[idx(a, b)], cc)] != mul[idx(a, mul[idx(b, cc)])]) ok = false;
                    if (mul[idx(a, add[idx(b, cc)])] !=
                        add[idx(mul[idx(a, b)], mul[idx(a, cc)])])
                      ok = false;
                  }
              if (!ok) continue;
              std::string key;
              key += static_cast<char>('0' + one);
              for (int v : add) key += static_cast<char>('0' + v);
              for (int v : mul) key += static_cast<char>('0' + v);
              oracle.insert(key);
            }
    }
    std::set<std::string> enumerated;
    for (const SemiringPtr& s : enumerate_semirings(3, false)) {
      std::string key;
      key += static_cast<char>('0' + s->one());
      for (std::uint8_t v : s->tables().add) key += static_cast<char>('0' + v);
      for (std::uint8_t v : s->tables().mul) key += static_cast<char>('0' + v);
      enumerated.insert(key);
    }
    CHECK(oracle.size() == 12);
    CHECK(enumerated == oracle);
  }
}

TEST_CASE("semimodule enumeration") {
  SemiringPtr bool2 = built_in_corpus().find_semiring("bool2");
  SUBCASE("the zero module is the unique order-1 module") {
    CHECK(enumerate_semimodules(bool2, 1).size() == 1);
  }
  SUBCASE("over bool2 the only order-2 module is bool2 itself") {
    std::vector<SemimodulePtr> mods = enumerate_semimodules(bool2, 2);
    REQUIRE(mods.size() == 1);
    CHECK(mods[0]->add(1, 1) == 1);
    CHECK(mods[0]->act(1, 1) == 1);
  }
  SUBCASE("every enumerated module validates") {
    SemiringPtr z3 = built_in_corpus().find_semiring("z3");
    for (const SemimodulePtr& m : enumerate_semimodules(z3, 3))
      CHECK(validate_semimodule(z3, m->tables())->order() == 3);
  }
}

TEST_CASE("census and counterexample search") {
  SUBCASE("the order-2 census holds two semirings and their modules") {
    Corpus census = census_corpus(2);
    CHECK(census.semirings.size() == 2);
    CHECK(census.modules.size() == 4);  // one order-1 and one order-2 module each
  }
  SUBCASE("a search over the small census is exhausted") {
    SearchOutcome out = search_counterexample("L3.5", 2);
    CHECK(out.exhausted);
    CHECK(out.semirings == 2);
    CHECK(out.modules == 4);
    CHECK_FALSE(out.failure.has_value());
  }
}

TEST_CASE("runner errors become failing reports, not crashes") {
  // An empty corpus cannot raise runner errors, but it must come back
  // all-vacuous rather than exploding.
  Corpus empty;
  for (const std::string& id : kRegistryOrder) {
    TheoremReport r = check(id, empty);
    CHECK(r.verdict == Verdict::kVacuous);
    CHECK(r.instances_checked == 0);
  }
}
