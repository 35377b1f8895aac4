#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace semiring_lab;
namespace th = test_helpers;

namespace {

const Corpus& corpus() { return built_in_corpus(); }

SemimodulePtr mod(const char* name) {
  SemimodulePtr m = corpus().find_module(name);
  REQUIRE(m);
  return m;
}

std::set<std::uint64_t> sub_bits(const std::vector<SubsetHandle>& subs) {
  std::set<std::uint64_t> out;
  for (const SubsetHandle& s : subs) out.insert(s.bits());
  return out;
}

}  // namespace

TEST_CASE("module axiom mutants are rejected by the right axiom") {
  SemiringPtr bool2 = corpus().find_semiring("bool2");
  SemiringPtr z6 = corpus().find_semiring("z6");

  SUBCASE("broken identity action") {
    AxiomViolation e =
        th::expect_module_axiom(bool2, th::module_mutant_action_identity(), "action-identity");
    CHECK(e.witness == std::vector<int>{1});
  }
  SUBCASE("scalar zero acting as the identity breaks absorption") {
    RawModuleTables t = th::module_mutant_action_identity();
    t.name = "bool2.sq.noabsorb";
    for (int x = 0; x < 4; ++x) {
      t.action[x] = static_cast<std::uint8_t>(x);
      t.action[4 + x] = static_cast<std::uint8_t>(x);
    }
    AxiomViolation e = th::expect_module_axiom(bool2, t, "action-absorption");
    CHECK(e.witness == std::vector<int>{0, 1});
  }
  SUBCASE("corrupting the zero-scalar row breaks compatibility first") {
    RawModuleTables t;
    t.name = "z6.mod3.bad";
    t.order = 3;
    t.add.resize(9);
    t.action.resize(18);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) t.add[static_cast<std::size_t>(x) * 3 + y] = static_cast<std::uint8_t>((x + y) % 3);
    for (int s = 0; s < 6; ++s)
      for (int x = 0; x < 3; ++x) t.action[static_cast<std::size_t>(s) * 3 + x] = static_cast<std::uint8_t>((s * x) % 3);
    t.action[1] = 1;  // act(0,1) = 1
    AxiomViolation e = th::expect_module_axiom(z6, t, "action-compatibility");
    CHECK(e.witness == std::vector<int>{0, 2, 1});
  }
  SUBCASE("malformed shapes") {
    RawModuleTables t = th::module_mutant_action_identity();
    t.order = 0;
    CHECK_THROWS_AS(validate_semimodule(bool2, t), MalformedTable);
    t = th::module_mutant_action_identity();
    t.action.pop_back();
    CHECK_THROWS_AS(validate_semimodule(bool2, t), MalformedTable);
  }
}

TEST_CASE("the zero module is legal") {
  SemimodulePtr z = mod("z6.ideal.0");
  CHECK(z->order() == 1);
  CHECK(is_cyclic(*z));
  CHECK(is_multiplication(*z).holds);
  CHECK(is_cancellative(*z));
  CHECK(is_mc_semimodule(*z));   // vacuously: no nonzero element
  CHECK_FALSE(is_faithful(*z));  // 1 kills everything
}

TEST_CASE("subsemimodule enumeration matches the exhaustive scan") {
  for (const SemimodulePtr& m : corpus().modules) {
    INFO(m->name());
    std::set<std::uint64_t> oracle = th::brute_sub_bits(*m);
    CHECK(sub_bits(all_subsemimodules(*m, EnumStrategy::kScan)) == oracle);
    CHECK(sub_bits(all_subsemimodules(*m, EnumStrategy::kClosure)) == oracle);
    const std::vector<SubsetHandle>& memo = all_subsemimodules(*m);
    CHECK(sub_bits(memo) == oracle);
    CHECK(std::is_sorted(memo.begin(), memo.end(),
                         [](const SubsetHandle& a, const SubsetHandle& b) {
                           return a.bits() < b.bits();
                         }));
  }
}

TEST_CASE("the square module over bool2 has exactly seven subsemimodules") {
  SemimodulePtr sq = mod("bool2.sq");
  std::set<std::uint64_t> expect = {0b0001, 0b0011, 0b0101, 0b1001, 0b1011, 0b1101, 0b1111};
  CHECK(sub_bits(all_subsemimodules(*sq)) == expect);
}

TEST_CASE("multiplication property over the corpus") {
  SUBCASE("every semiring over itself is a multiplication semimodule") {
    for (const SemiringPtr& s : corpus().semirings) {
      SemimodulePtr self = corpus().find_module(s->name() + ".self");
      REQUIRE(self);
      CHECK(is_multiplication(*self).holds);
    }
  }
  SUBCASE("the square module is not, with the axis as first witness") {
    MultiplicationResult r = is_multiplication(*mod("bool2.sq"));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->bits() == 0b0011);  // the axis B x 0
  }
  SUBCASE("the mod-3 module over z6 is a multiplication semimodule") {
    CHECK(is_multiplication(*mod("z6.mod3")).holds);
  }
  SUBCASE("residual criterion agrees with the existential oracle") {
    for (const SemimodulePtr& m : corpus().modules)
      for (const SubsetHandle& n : all_subsemimodules(*m)) {
        SubsetHandle r = module_residual(*m, n, m->carrier());
        bool residual_form = ideal_times_module(*m, r) == n;
        CHECK(residual_form == th::brute_exists_ideal_product(*m, n.bits()));
      }
  }
}

TEST_CASE("pinned residuals and ideal actions") {
  SemimodulePtr sq = mod("bool2.sq");
  SemiringPtr bool2 = corpus().find_semiring("bool2");
  CHECK(module_residual(*sq, sq->subset(0b0011), sq->carrier()) == bool2->subset(0b01));
  CHECK(ideal_times_module(*sq, bool2->subset(0b01)) == sq->subset(0b0001));
  CHECK(ideal_times_module(*sq, bool2->subset(0b11)) == sq->carrier());

  SemimodulePtr z6self = mod("z6.self");
  SemiringPtr z6 = corpus().find_semiring("z6");
  CHECK(ideal_times_module(*z6self, z6->subset(0b010101)) == z6self->subset(0b010101));
}

TEST_CASE("cyclicity and generating sets") {
  SemimodulePtr sq = mod("bool2.sq");
  CHECK_FALSE(is_cyclic(*sq));
  CHECK_FALSE(cyclic_generator(*sq).has_value());
  CHECK(generating_set(*sq) == std::vector<int>{1, 2});
  CHECK(generated_subsemimodule(*sq, {3}) == sq->subset(0b1001));
  CHECK(generates(*sq, {1, 2}));
  CHECK_FALSE(generates(*sq, {3}));

  SemimodulePtr m3 = mod("z6.mod3");
  CHECK(is_cyclic(*m3));
  CHECK(cyclic_generator(*m3) == 1);
  CHECK(cyclic_subsemimodule(*m3, 1) == m3->carrier());

  for (const SemiringPtr& s : corpus().semirings)
    CHECK(cyclic_generator(*corpus().find_module(s->name() + ".self")) == s->one());
}

TEST_CASE("cancellative, faithful, MC, torsionfree") {
  SUBCASE("pinned classifications") {
    SemimodulePtr b = mod("bool2.self");
    CHECK(is_mc_semimodule(*b));
    CHECK_FALSE(is_cancellative(*b));  // 1+1 = 1 = 1+0
    CHECK(is_faithful(*b));

    SemimodulePtr m3 = mod("z6.mod3");
    CHECK_FALSE(is_mc_semimodule(*m3));  // 1 and 4 act identically
    CHECK(is_cancellative(*m3));
    CHECK_FALSE(is_faithful(*m3));  // 3 annihilates

    SemimodulePtr z3self = mod("z3.self");
    CHECK(is_mc_semimodule(*z3self));
    CHECK(is_cancellative(*z3self));
    CHECK(is_faithful(*z3self));
    CHECK(is_torsionfree(*z3self));

    CHECK(is_torsionfree(*mod("bool2.sq")));
  }
  SUBCASE("torsionfree requires a semidomain base") {
    CHECK_THROWS_AS(is_torsionfree(*mod("z6.self")), PreconditionUnmet);
  }
  SUBCASE("an MC semimodule with elements is faithful") {
    for (const SemimodulePtr& m : corpus().modules)
      if (m->order() > 1 && is_mc_semimodule(*m)) CHECK(is_faithful(*m));
  }
  SUBCASE("every ideal of a semidomain is an MC semimodule") {
    for (const char* name : {"bool2", "z3"}) {
      SemiringPtr s = corpus().find_semiring(name);
      for (const IdealInfo& info : all_ideals(*s))
        CHECK(is_mc_semimodule(*ideal_as_module(s, info.set, "tmp")));
    }
  }
}

TEST_CASE("T_p sets and fixpoint sets") {
  SemiringPtr z6 = corpus().find_semiring("z6");
  SemiringPtr z4 = corpus().find_semiring("z4");
  SemiringPtr chain3 = corpus().find_semiring("chain3");
  SemimodulePtr z6self = mod("z6.self");
  SemimodulePtr z4self = mod("z4.self");
  SemimodulePtr c3self = mod("chain3.self");

  SubsetHandle p2 = z6->subset(0b010101);
  CHECK(t_p_set(*z6self, p2) == z6self->subset(0b010101));
  FixpointSet f2 = fixpoint_set(*z6self, p2);
  CHECK(f2.set == z6self->subset(0b010101));
  CHECK(f2.closed);

  SubsetHandle pz4 = z4->subset(0b0101);
  CHECK(t_p_set(*z4self, pz4) == z4self->subset(0b0001));
  CHECK(fixpoint_set(*z4self, pz4).set == z4self->subset(0b0001));

  SubsetHandle pc3 = chain3->subset(0b011);
  CHECK(t_p_set(*c3self, pc3) == c3self->subset(0b001));
  FixpointSet fc3 = fixpoint_set(*c3self, pc3);
  CHECK(fc3.set == c3self->subset(0b011));
  CHECK(fc3.closed);

  SUBCASE("T_p is always a subsemimodule") {
    for (const SemimodulePtr& m : corpus().modules)
      for (const SubsetHandle& p : maximal_ideals(m->base()))
        CHECK(is_subsemimodule(*m, t_p_set(*m, p)));
  }
}

TEST_CASE("p-cyclic witnesses") {
  SemiringPtr z6 = corpus().find_semiring("z6");
  std::optional<PCyclicWitness> w = is_p_cyclic(*mod("z6.self"), z6->subset(0b010101));
  REQUIRE(w.has_value());
  CHECK(w->m == 1);
  CHECK(w->t == 1);
  CHECK(w->q == 0);

  SemiringPtr chain3 = corpus().find_semiring("chain3");
  std::optional<PCyclicWitness> wc = is_p_cyclic(*mod("chain3.self"), chain3->subset(0b011));
  REQUIRE(wc.has_value());
  CHECK(wc->m == 2);
  CHECK(wc->t == 2);
  CHECK(wc->q == 0);

  SemiringPtr bool2 = corpus().find_semiring("bool2");
  CHECK_FALSE(is_p_cyclic(*mod("bool2.sq"), bool2->subset(0b01)).has_value());
}

TEST_CASE("theta") {
  SemiringPtr bool2 = corpus().find_semiring("bool2");
  SemiringPtr z6 = corpus().find_semiring("z6");
  CHECK(theta(*mod("bool2.sq")) == bool2->subset(0b01));
  CHECK(theta(*mod("z6.self")) == z6->subset(0b111111));
  CHECK(theta(*mod("z6.ideal.0-3")) == z6->subset(0b111111));
}

TEST_CASE("hom enumeration") {
  SemimodulePtr b = mod("bool2.self");
  SemimodulePtr sq = mod("bool2.sq");
  SemimodulePtr z6self = mod("z6.self");
  SemimodulePtr ideal24 = mod("z6.ideal.0-2-4");

  SUBCASE("pinned counts and maps") {
    CHECK(all_homs(*b, *b).size() == 2);
    CHECK(all_homs(*z6self, *z6self).size() == 6);

    std::vector<HomTable> inc = all_homs(*ideal24, *z6self);
    REQUIRE(inc.size() == 3);
    CHECK(inc[0].map == std::vector<int>{0, 0, 0});
    CHECK(inc[1].map == std::vector<int>{0, 2, 4});
    CHECK(inc[2].map == std::vector<int>{0, 4, 2});
    CHECK_FALSE(is_surjective(inc[1]));
    CHECK(is_injective(inc[1]));

    std::vector<HomTable> proj = all_homs(*sq, *b);
    REQUIRE(proj.size() == 4);
    CHECK(proj[0].map == std::vector<int>{0, 0, 0, 0});
    CHECK(proj[1].map == std::vector<int>{0, 0, 1, 1});
    CHECK(proj[2].map == std::vector<int>{0, 1, 0, 1});
    CHECK(proj[3].map == std::vector<int>{0, 1, 1, 1});
    CHECK(is_surjective(proj[1]));
    CHECK_FALSE(is_injective(proj[1]));
  }
  SUBCASE("agrees with brute-force map enumeration on small modules") {
    std::vector<std::pair<SemimodulePtr, SemimodulePtr>> pairs = {
        {b, b}, {sq, b}, {sq, sq}, {ideal24, z6self}, {mod("z6.mod3"), mod("z6.mod3")}};
    for (auto& [m, n] : pairs) {
      std::set<std::vector<int>> oracle = th::brute_hom_maps(*m, *n);
      std::set<std::vector<int>> got;
      for (const HomTable& h : all_homs(*m, *n)) got.insert(h.map);
      CHECK(got == oracle);
    }
  }
  SUBCASE("different base objects are rejected") {
    SemiringPtr fresh = validate_semiring(th::raw_bool2());
    SemimodulePtr other = semiring_as_module(fresh);
    CHECK_THROWS_AS(all_homs(*b, *other), BaseMismatch);
  }
}

TEST_CASE("dual basis certificates") {
  SemimodulePtr ideal24 = mod("z6.ideal.0-2-4");
  SemimodulePtr sq = mod("bool2.sq");
  SemimodulePtr z3self = mod("z3.self");

  auto verify = [](const FiniteSemimodule& m, const DualBasis& basis) {
    // x = sum_i f_i(x) * m_i for every x.
    for (int x = 0; x < m.order(); ++x) {
      int acc = 0;
      for (const auto& [elem, hom] : basis.pairs) acc = m.add(acc, m.act(hom(x), elem));
      CHECK(acc == x);
    }
  };

  std::optional<DualBasis> d24 = dual_basis_certificate(ideal24, ideal24->order());
  REQUIRE(d24.has_value());
  CHECK(d24->pairs.size() == 1);
  verify(*ideal24, *d24);

  std::optional<DualBasis> dsq = dual_basis_certificate(sq, sq->order());
  REQUIRE(dsq.has_value());
  CHECK(dsq->pairs.size() == 2);
  CHECK(dsq->pairs[0].first == 1);
  CHECK(dsq->pairs[1].first == 2);
  verify(*sq, *dsq);

  std::optional<DualBasis> d3 = dual_basis_certificate(z3self, z3self->order());
  REQUIRE(d3.has_value());
  CHECK(d3->pairs.size() == 1);
  verify(*z3self, *d3);

  CHECK_THROWS_AS(dual_basis_certificate(sq, -1), PreconditionUnmet);
  CHECK_FALSE(dual_basis_certificate(sq, 1).has_value());  // needs two pairs
}

TEST_CASE("ideal-as-module reindexing") {
  SemiringPtr z6 = corpus().find_semiring("z6");
  SemimodulePtr m = mod("z6.ideal.0-2-4");
  REQUIRE(m->order() == 3);
  // Elements 0,2,4 of z6 become indices 0,1,2; the action is inherited.
  CHECK(m->act(5, 1) == 2);  // 5*2 = 10 = 4
  CHECK(m->act(2, 1) == 2);  // 2*2 = 4
  CHECK(m->act(3, 1) == 0);  // 3*2 = 6 = 0
  CHECK(m->add(1, 2) == 0);  // 2+4 = 6 = 0
  CHECK(m->base_ptr().get() == z6.get());
}

TEST_CASE("subset owner discipline for modules") {
  SemimodulePtr sq = mod("bool2.sq");
  SemimodulePtr b = mod("bool2.self");
  CHECK_THROWS_AS(is_subsemimodule(*sq, b->subset(0b01)), OwnerMismatch);
  CHECK_THROWS_AS(module_residual(*sq, b->subset(0b01), sq->carrier()), OwnerMismatch);
}
