#include "semiring_lab/io.hpp"

namespace semiring_lab {

namespace {

SemiringPtr make_semiring(std::string name, int order, int one,
                          int (*add)(int, int), int (*mul)(int, int)) {
  RawTables t;
  t.name = std::move(name);
  t.order = order;
  t.one = one;
  t.add.resize(static_cast<std::size_t>(order) * order);
  t.mul.resize(t.add.size());
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      t.add[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint8_t>(add(a, b));
      t.mul[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint8_t>(mul(a, b));
    }
  return validate_semiring(std::move(t));
}

std::string ideal_module_name(const FiniteSemiring& s, const SubsetHandle& ideal) {
  std::string name = s.name() + ".ideal.";
  bool first = true;
  for (int e : ideal.elements()) {
    if (!first) name += '-';
    first = false;
    name += std::to_string(e);
  }
  return name;
}

SemimodulePtr make_bool2_sq(const SemiringPtr& bool2) {
  // Pairs over the Boolean semiring, componentwise; element x encodes
  // the pair (x & 1, x >> 1).
  RawModuleTables t;
  t.name = "bool2.sq";
  t.order = 4;
  t.add.resize(16);
  t.action.resize(8);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t.add[static_cast<std::size_t>(x) * 4 + y] =
        static_cast<std::uint8_t>(x | y);
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < 4; ++x)
      t.action[static_cast<std::size_t>(s) * 4 + x] = static_cast<std::uint8_t>(s ? x : 0);
  return validate_semimodule(bool2, std::move(t));
}

SemimodulePtr make_z6_mod3(const SemiringPtr& z6) {
  // The three-element quotient target: addition mod 3, scalars act by
  // multiplication mod 3.
  RawModuleTables t;
  t.name = "z6.mod3";
  t.order = 3;
  t.add.resize(9);
  t.action.resize(18);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      t.add[static_cast<std::size_t>(x) * 3 + y] = static_cast<std::uint8_t>((x + y) % 3);
  for (int s = 0; s < 6; ++s)
    for (int x = 0; x < 3; ++x)
      t.action[static_cast<std::size_t>(s) * 3 + x] = static_cast<std::uint8_t>((s * x) % 3);
  return validate_semimodule(z6, std::move(t));
}

Corpus build() {
  Corpus c;
  c.semirings.push_back(make_semiring(
      "bool2", 2, 1, [](int a, int b) { return a | b; }, [](int a, int b) { return a & b; }));
  c.semirings.push_back(make_semiring(
      "chain3", 3, 2, [](int a, int b) { return a > b ? a : b; },
      [](int a, int b) { return a < b ? a : b; }));
  c.semirings.push_back(make_semiring(
      "sat3", 4, 1, [](int a, int b) { return a + b > 3 ? 3 : a + b; },
      [](int a, int b) { return a * b > 3 ? 3 : a * b; }));
  c.semirings.push_back(make_semiring(
      "z3", 3, 1, [](int a, int b) { return (a + b) % 3; },
      [](int a, int b) { return (a * b) % 3; }));
  c.semirings.push_back(make_semiring(
      "z4", 4, 1, [](int a, int b) { return (a + b) % 4; },
      [](int a, int b) { return (a * b) % 4; }));
  c.semirings.push_back(make_semiring(
      "z6", 6, 1, [](int a, int b) { return (a + b) % 6; },
      [](int a, int b) { return (a * b) % 6; }));

  for (const SemiringPtr& s : c.semirings) {
    c.modules.push_back(semiring_as_module(s, s->name() + ".self"));
    for (const IdealInfo& info : all_ideals(*s))
      c.modules.push_back(ideal_as_module(s, info.set, ideal_module_name(*s, info.set)));
  }
  c.modules.push_back(make_bool2_sq(c.find_semiring("bool2")));
  c.modules.push_back(make_z6_mod3(c.find_semiring("z6")));
  return c;
}

}  // namespace

const Corpus& built_in_corpus() {
  static const Corpus corpus = build();
  return corpus;
}

}  // namespace semiring_lab
