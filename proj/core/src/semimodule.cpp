#include "semiring_lab/semimodule.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace semiring_lab {

namespace {

void check_shape(const FiniteSemiring& base, const RawModuleTables& t) {
  if (t.order < 1)
    throw MalformedTable(t.name + ": semimodule order must be at least 1");
  if (t.order > kMaxOrder)
    throw MalformedTable(t.name + ": order " + std::to_string(t.order) +
                         " exceeds the supported maximum of 64");
  const std::size_t add_want = static_cast<std::size_t>(t.order) * t.order;
  const std::size_t act_want = static_cast<std::size_t>(base.order()) * t.order;
  if (t.add.size() != add_want)
    throw MalformedTable(t.name + ": add table must hold " + std::to_string(add_want) +
                         " entries");
  if (t.action.size() != act_want)
    throw MalformedTable(t.name + ": action table must hold " + std::to_string(act_want) +
                         " entries");
  for (std::uint8_t v : t.add)
    if (v >= t.order) throw MalformedTable(t.name + ": add table entry out of range");
  for (std::uint8_t v : t.action)
    if (v >= t.order) throw MalformedTable(t.name + ": action table entry out of range");
}

}  // namespace

SemimodulePtr validate_semimodule(SemiringPtr base, RawModuleTables tables) {
  if (!base) throw Error("validate_semimodule: null base semiring");
  check_shape(*base, tables);
  const int m = tables.order;
  const int n = base->order();
  auto add = [&](int x, int y) { return int(tables.add[static_cast<std::size_t>(x) * m + y]); };
  auto act = [&](int s, int x) {
    return int(tables.action[static_cast<std::size_t>(s) * m + x]);
  };
  auto fail = [&](const char* axiom, std::vector<int> w) {
    throw AxiomViolation(tables.name, axiom, std::move(w));
  };

  for (int x = 0; x < m; ++x)
    if (add(0, x) != x || add(x, 0) != x) fail("module-add-identity", {x});
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      if (add(x, y) != add(y, x)) fail("module-add-commutativity", {x, y});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (add(add(x, y), z) != add(x, add(y, z))) fail("module-add-associativity", {x, y, z});
  for (int x = 0; x < m; ++x)
    if (act(base->one(), x) != x) fail("action-identity", {x});
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < m; ++x)
        if (act(base->mul(s, t), x) != act(s, act(t, x))) fail("action-compatibility", {s, t, x});
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (act(s, add(x, y)) != add(act(s, x), act(s, y)))
          fail("action-add-distributivity", {s, x, y});
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int x = 0; x < m; ++x)
        if (act(base->add(s, t), x) != add(act(s, x), act(t, x)))
          fail("action-scalar-distributivity", {s, t, x});
  for (int x = 0; x < m; ++x)
    if (act(0, x) != 0) fail("action-absorption", {0, x});
  for (int s = 0; s < n; ++s)
    if (act(s, 0) != 0) fail("action-absorption", {s, 0});

  return SemimodulePtr(new FiniteSemimodule(std::move(base), std::move(tables)));
}

SemimodulePtr semiring_as_module(const SemiringPtr& s, std::string name) {
  if (!s) throw Error("semiring_as_module: null semiring");
  RawModuleTables t;
  t.name = name.empty() ? s->name() + ".self" : std::move(name);
  t.order = s->order();
  t.add = s->tables().add;
  t.action = s->tables().mul;
  return validate_semimodule(s, std::move(t));
}

SemimodulePtr ideal_as_module(const SemiringPtr& s, const SubsetHandle& ideal, std::string name) {
  if (!s) throw Error("ideal_as_module: null semiring");
  require_owner(ideal, s.get(), "ideal_as_module");
  if (!is_ideal(*s, ideal))
    throw NotAnIdeal("ideal_as_module: " + ideal.to_string() + " is not an ideal of " +
                     s->name());
  std::vector<int> elems = ideal.elements();
  std::vector<int> index_of(static_cast<std::size_t>(s->order()), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);

  RawModuleTables t;
  t.name = std::move(name);
  t.order = static_cast<int>(elems.size());
  t.add.resize(static_cast<std::size_t>(t.order) * t.order);
  t.action.resize(static_cast<std::size_t>(s->order()) * t.order);
  for (int i = 0; i < t.order; ++i)
    for (int j = 0; j < t.order; ++j)
      t.add[static_cast<std::size_t>(i) * t.order + j] = index_of[s->add(elems[i], elems[j])];
  for (int sc = 0; sc < s->order(); ++sc)
    for (int j = 0; j < t.order; ++j)
      t.action[static_cast<std::size_t>(sc) * t.order + j] = index_of[s->mul(sc, elems[j])];
  return validate_semimodule(s, std::move(t));
}

namespace {

std::uint64_t additive_closure(const FiniteSemimodule& m, std::uint64_t bits) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t snapshot = bits;
    for_each_bit(snapshot, [&](int x) {
      for_each_bit(snapshot, [&](int y) {
        std::uint64_t bit = std::uint64_t{1} << m.add(x, y);
        if (!(bits & bit)) {
          bits |= bit;
          grew = true;
        }
      });
    });
  }
  return bits;
}

std::uint64_t module_closure(const FiniteSemimodule& m, std::uint64_t bits) {
  bits |= 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t snapshot = bits;
    for_each_bit(snapshot, [&](int x) {
      for_each_bit(snapshot, [&](int y) {
        std::uint64_t bit = std::uint64_t{1} << m.add(x, y);
        if (!(bits & bit)) {
          bits |= bit;
          grew = true;
        }
      });
      for (int s = 0; s < m.base().order(); ++s) {
        std::uint64_t bit = std::uint64_t{1} << m.act(s, x);
        if (!(bits & bit)) {
          bits |= bit;
          grew = true;
        }
      }
    });
  }
  return bits;
}

bool is_sub_bits(const FiniteSemimodule& m, std::uint64_t bits) {
  if (!(bits & 1)) return false;
  bool ok = true;
  for_each_bit(bits, [&](int x) {
    if (!ok) return;
    for_each_bit(bits, [&](int y) {
      if (!((bits >> m.add(x, y)) & 1)) ok = false;
    });
    for (int s = 0; s < m.base().order() && ok; ++s)
      if (!((bits >> m.act(s, x)) & 1)) ok = false;
  });
  return ok;
}

std::uint64_t require_sub(const FiniteSemimodule& m, const SubsetHandle& a, const char* what) {
  require_owner(a, &m, what);
  if (a.empty() || !is_sub_bits(m, a.bits()))
    throw NotASubsemimodule(std::string(what) + ": " + a.to_string() +
                            " is not a subsemimodule of " + m.name());
  return a.bits();
}

std::uint64_t require_base_ideal(const FiniteSemimodule& m, const SubsetHandle& ideal,
                                 const char* what) {
  require_owner(ideal, &m.base(), what);
  if (!is_ideal(m.base(), ideal))
    throw NotAnIdeal(std::string(what) + ": " + ideal.to_string() + " is not an ideal of " +
                     m.base().name());
  return ideal.bits();
}

std::uint64_t require_maximal(const FiniteSemimodule& m, const SubsetHandle& p,
                              const char* what) {
  require_owner(p, &m.base(), what);
  if (!is_ideal(m.base(), p) || !is_maximal_ideal(m.base(), p))
    throw NotMaximal(std::string(what) + ": " + p.to_string() + " is not a maximal ideal of " +
                     m.base().name());
  return p.bits();
}

}  // namespace

bool is_subsemimodule(const FiniteSemimodule& m, const SubsetHandle& a) {
  require_owner(a, &m, "is_subsemimodule");
  return !a.empty() && is_sub_bits(m, a.bits());
}

SubsetHandle generated_subsemimodule(const FiniteSemimodule& m, const std::vector<int>& gens) {
  std::uint64_t bits = 0;
  for (int g : gens) {
    if (g < 0 || g >= m.order())
      throw Error(m.name() + ": generator " + std::to_string(g) + " out of range");
    bits |= std::uint64_t{1} << g;
  }
  return m.subset(module_closure(m, bits));
}

bool generates(const FiniteSemimodule& m, const std::vector<int>& gens) {
  return generated_subsemimodule(m, gens) == m.carrier();
}

std::vector<int> generating_set(const FiniteSemimodule& m) {
  return m.memo().get<std::vector<int>>("generating-set", [&] {
    std::vector<int> gens;
    std::uint64_t closure = module_closure(m, 0);
    const std::uint64_t want = m.carrier().bits();
    while (closure != want) {
      int next = std::countr_zero(~closure & want);
      gens.push_back(next);
      closure = module_closure(m, closure | (std::uint64_t{1} << next));
    }
    return gens;
  });
}

SubsetHandle cyclic_subsemimodule(const FiniteSemimodule& m, int x) {
  if (x < 0 || x >= m.order())
    throw Error(m.name() + ": element " + std::to_string(x) + " out of range");
  std::uint64_t bits = 0;
  for (int s = 0; s < m.base().order(); ++s) bits |= std::uint64_t{1} << m.act(s, x);
  return m.subset(bits);
}

std::optional<int> cyclic_generator(const FiniteSemimodule& m) {
  for (int x = 0; x < m.order(); ++x)
    if (cyclic_subsemimodule(m, x) == m.carrier()) return x;
  return std::nullopt;
}

bool is_cyclic(const FiniteSemimodule& m) { return cyclic_generator(m).has_value(); }

std::vector<SubsetHandle> all_subsemimodules(const FiniteSemimodule& m, EnumStrategy strategy) {
  if (strategy == EnumStrategy::kAuto)
    strategy = m.order() <= 16 ? EnumStrategy::kScan : EnumStrategy::kClosure;
  std::vector<std::uint64_t> sets;
  if (strategy == EnumStrategy::kScan) {
    if (m.order() > 16)
      throw SizeBoundExceeded(m.name() + ": subset scan is limited to order 16");
    const std::uint64_t carrier = m.carrier().bits();
    for (std::uint64_t bits = 1; bits <= carrier; bits += 2)
      if (is_sub_bits(m, bits)) sets.push_back(bits);
  } else {
    // Every subsemimodule is the sum of the cyclic subsemimodules of
    // its members, so cyclic seeds saturated under pairwise sums give
    // the complete lattice.
    std::set<std::uint64_t> known;
    std::vector<std::uint64_t> work;
    auto push = [&](std::uint64_t bits) {
      if (known.insert(bits).second) work.push_back(bits);
    };
    push(1);
    for (int x = 0; x < m.order(); ++x) push(cyclic_subsemimodule(m, x).bits());
    while (!work.empty()) {
      std::uint64_t next = work.back();
      work.pop_back();
      std::vector<std::uint64_t> snapshot(known.begin(), known.end());
      for (std::uint64_t other : snapshot) push(additive_closure(m, next | other));
    }
    sets.assign(known.begin(), known.end());
  }
  std::sort(sets.begin(), sets.end());
  std::vector<SubsetHandle> out;
  out.reserve(sets.size());
  for (std::uint64_t bits : sets) out.push_back(m.subset(bits));
  return out;
}

const std::vector<SubsetHandle>& all_subsemimodules(const FiniteSemimodule& m) {
  return m.memo().get<std::vector<SubsetHandle>>(
      "all-subs", [&] { return all_subsemimodules(m, EnumStrategy::kAuto); });
}

SubsetHandle module_residual(const FiniteSemimodule& m, const SubsetHandle& n,
                             const SubsetHandle& l) {
  std::uint64_t nb = require_sub(m, n, "module_residual");
  std::uint64_t lb = require_sub(m, l, "module_residual");
  std::uint64_t out = 0;
  for (int s = 0; s < m.base().order(); ++s) {
    bool in = true;
    for_each_bit(lb, [&](int x) {
      if (!((nb >> m.act(s, x)) & 1)) in = false;
    });
    if (in) out |= std::uint64_t{1} << s;
  }
  return m.base().subset(out);
}

SubsetHandle ideal_times_module(const FiniteSemimodule& m, const SubsetHandle& ideal) {
  return ideal_times_module(m, ideal, m.carrier());
}

SubsetHandle ideal_times_module(const FiniteSemimodule& m, const SubsetHandle& ideal,
                                const SubsetHandle& sub) {
  std::uint64_t ib = require_base_ideal(m, ideal, "ideal_times_module");
  std::uint64_t sb = require_sub(m, sub, "ideal_times_module");
  std::uint64_t products = 0;
  for_each_bit(ib, [&](int a) {
    for_each_bit(sb, [&](int x) { products |= std::uint64_t{1} << m.act(a, x); });
  });
  return m.subset(additive_closure(m, products));
}

MultiplicationResult is_multiplication(const FiniteSemimodule& m) {
  return m.memo().get<MultiplicationResult>("multiplication", [&] {
    MultiplicationResult out;
    out.holds = true;
    for (const SubsetHandle& n : all_subsemimodules(m)) {
      SubsetHandle residual = module_residual(m, n, m.carrier());
      if (ideal_times_module(m, residual) != n) {
        out.holds = false;
        out.witness = n;
        break;
      }
    }
    return out;
  });
}

bool is_cancellative(const FiniteSemimodule& m) {
  return m.memo().get<bool>("cancellative", [&] {
    for (int a = 0; a < m.order(); ++a)
      for (int x = 0; x < m.order(); ++x)
        for (int y = x + 1; y < m.order(); ++y)
          if (m.add(a, x) == m.add(a, y)) return false;
    return true;
  });
}

bool is_faithful(const FiniteSemimodule& m) {
  return m.memo().get<bool>("faithful", [&] {
    for (int s = 1; s < m.base().order(); ++s) {
      bool annihilates = true;
      for (int x = 0; x < m.order() && annihilates; ++x)
        if (m.act(s, x) != 0) annihilates = false;
      if (annihilates) return false;
    }
    return true;
  });
}

bool is_mc_semimodule(const FiniteSemimodule& m) {
  return m.memo().get<bool>("mc", [&] {
    for (int s = 0; s < m.base().order(); ++s)
      for (int t = s + 1; t < m.base().order(); ++t)
        for (int x = 1; x < m.order(); ++x)
          if (m.act(s, x) == m.act(t, x)) return false;
    return true;
  });
}

bool is_torsionfree(const FiniteSemimodule& m) {
  if (!is_semidomain(m.base()))
    throw PreconditionUnmet("is_torsionfree: base of " + m.name() + " is not a semidomain");
  return m.memo().get<bool>("torsionfree", [&] {
    for (int a = 1; a < m.base().order(); ++a)
      for (int x = 0; x < m.order(); ++x)
        for (int y = x + 1; y < m.order(); ++y)
          if (m.act(a, x) == m.act(a, y)) return false;
    return true;
  });
}

SubsetHandle t_p_set(const FiniteSemimodule& m, const SubsetHandle& p) {
  std::uint64_t pb = require_maximal(m, p, "t_p_set");
  const FiniteSemiring& base = m.base();
  std::uint64_t killers = 0;  // scalars s with s + q = 1 for some q in p
  for (int s = 0; s < base.order(); ++s) {
    bool usable = false;
    for_each_bit(pb, [&](int q) {
      if (base.add(s, q) == base.one()) usable = true;
    });
    if (usable) killers |= std::uint64_t{1} << s;
  }
  std::uint64_t out = 0;
  for (int x = 0; x < m.order(); ++x) {
    bool in = false;
    for_each_bit(killers, [&](int s) {
      if (m.act(s, x) == 0) in = true;
    });
    if (in) out |= std::uint64_t{1} << x;
  }
  SubsetHandle result = m.subset(out);
  if (!is_subsemimodule(m, result))
    throw InternalCheckFailure("t_p_set of " + m.name() + " at " + p.to_string() +
                               " is not a subsemimodule");
  return result;
}

std::optional<PCyclicWitness> is_p_cyclic(const FiniteSemimodule& m, const SubsetHandle& p) {
  std::uint64_t pb = require_maximal(m, p, "is_p_cyclic");
  const FiniteSemiring& base = m.base();
  for (int x = 0; x < m.order(); ++x) {
    std::uint64_t sx = cyclic_subsemimodule(m, x).bits();
    for (int t = 0; t < base.order(); ++t) {
      bool carries = true;
      for (int y = 0; y < m.order() && carries; ++y)
        if (!((sx >> m.act(t, y)) & 1)) carries = false;
      if (!carries) continue;
      for (int q = 0; q < base.order(); ++q)
        if (((pb >> q) & 1) && base.add(t, q) == base.one())
          return PCyclicWitness{x, t, q};
    }
  }
  return std::nullopt;
}

FixpointSet fixpoint_set(const FiniteSemimodule& m, const SubsetHandle& p) {
  std::uint64_t pb = require_maximal(m, p, "fixpoint_set");
  std::uint64_t out = 0;
  for (int x = 0; x < m.order(); ++x) {
    bool in = false;
    for_each_bit(pb, [&](int q) {
      if (m.act(q, x) == x) in = true;
    });
    if (in) out |= std::uint64_t{1} << x;
  }
  SubsetHandle set = m.subset(out);
  return FixpointSet{set, is_subsemimodule(m, set)};
}

SubsetHandle theta(const FiniteSemimodule& m) {
  std::uint64_t bits = m.memo().get<std::uint64_t>("theta", [&] {
    SubsetHandle acc = m.base().subset(1);
    for (int x = 0; x < m.order(); ++x) {
      SubsetHandle part = module_residual(m, cyclic_subsemimodule(m, x), m.carrier());
      acc = ideal_sum(m.base(), acc, part);
    }
    return acc.bits();
  });
  return m.base().subset(bits);
}

namespace {

// Extends a generator assignment to a full hom by worklist closure;
// returns false on any conflict. `map` entries start at -1.
bool extend_hom(const FiniteSemimodule& m, const FiniteSemimodule& n, std::vector<int>& map) {
  const int nbase = m.base().order();
  bool changed = true;
  auto assign = [&](int x, int img) {
    if (map[x] == -1) {
      map[x] = img;
      changed = true;
      return true;
    }
    return map[x] == img;
  };
  while (changed) {
    changed = false;
    for (int x = 0; x < m.order(); ++x) {
      if (map[x] == -1) continue;
      for (int y = 0; y < m.order(); ++y) {
        if (map[y] == -1) continue;
        if (!assign(m.add(x, y), n.add(map[x], map[y]))) return false;
      }
      for (int s = 0; s < nbase; ++s)
        if (!assign(m.act(s, x), n.act(s, map[x]))) return false;
    }
  }
  for (int x = 0; x < m.order(); ++x)
    if (map[x] == -1)
      throw InternalCheckFailure("all_homs: generating set failed to reach element " +
                                 std::to_string(x) + " of " + m.name());
  for (int x = 0; x < m.order(); ++x) {
    for (int y = 0; y < m.order(); ++y)
      if (map[m.add(x, y)] != n.add(map[x], map[y])) return false;
    for (int s = 0; s < nbase; ++s)
      if (map[m.act(s, x)] != n.act(s, map[x])) return false;
  }
  return true;
}

}  // namespace

std::vector<HomTable> all_homs(const FiniteSemimodule& m, const FiniteSemimodule& n) {
  if (&m.base() != &n.base())
    throw BaseMismatch("all_homs: " + m.name() + " and " + n.name() +
                       " live over different base semirings");
  if (m.order() > 12)
    throw SizeBoundExceeded("all_homs: source order " + std::to_string(m.order()) +
                            " exceeds the guard of 12");
  const std::vector<int>& gens = generating_set(m);
  double assignments = 1.0;
  for (std::size_t i = 0; i < gens.size(); ++i) assignments *= n.order();
  if (assignments > double(1 << 24))
    throw SizeBoundExceeded("all_homs: " + std::to_string(gens.size()) + " generators over a " +
                            std::to_string(n.order()) + "-element target need too many trials");

  std::vector<HomTable> out;
  const std::uint64_t total = static_cast<std::uint64_t>(assignments);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> map(static_cast<std::size_t>(m.order()), -1);
    map[0] = 0;
    std::uint64_t rest = code;
    for (std::size_t i = gens.size(); i-- > 0;) {
      int img = static_cast<int>(rest % n.order());
      rest /= n.order();
      if (map[gens[i]] != -1 && map[gens[i]] != img) {
        map[0] = -2;  // generator clash with the forced zero image
        break;
      }
      map[gens[i]] = img;
    }
    if (map[0] == -2) continue;
    if (extend_hom(m, n, map)) out.push_back(HomTable{&m, &n, std::move(map)});
  }
  return out;
}

bool is_surjective(const HomTable& h) {
  std::uint64_t seen = 0;
  for (int img : h.map) seen |= std::uint64_t{1} << img;
  return seen == SubsetHandle::full(h.target, h.target->order()).bits();
}

bool is_injective(const HomTable& h) {
  std::uint64_t seen = 0;
  for (int img : h.map) {
    std::uint64_t bit = std::uint64_t{1} << img;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::optional<DualBasis> dual_basis_certificate(const SemimodulePtr& m, int bound) {
  if (!m) throw Error("dual_basis_certificate: null semimodule");
  if (bound < 0 || bound > m->order())
    throw PreconditionUnmet("dual_basis_certificate: bound must lie in [0, |M|]");
  SemimodulePtr target = semiring_as_module(m->base_ptr());
  std::vector<HomTable> homs = all_homs(*m, *target);

  const int pair_count = m->order() * static_cast<int>(homs.size());
  auto pair_elem = [&](int p) { return p / static_cast<int>(homs.size()); };
  auto pair_hom = [&](int p) { return p % static_cast<int>(homs.size()); };

  std::vector<int> chosen;
  auto decomposes = [&] {
    for (int x = 0; x < m->order(); ++x) {
      int sum = 0;
      for (int p : chosen) sum = m->add(sum, m->act(homs[pair_hom(p)].map[x], pair_elem(p)));
      if (sum != x) return false;
    }
    return true;
  };
  auto build = [&] {
    DualBasis basis;
    basis.target = target;
    for (int p : chosen) basis.pairs.emplace_back(pair_elem(p), homs[pair_hom(p)]);
    return basis;
  };

  // Non-decreasing index sequences of each size, lexicographic; the
  // first hit is therefore deterministic.
  for (int k = 0; k <= bound; ++k) {
    chosen.assign(static_cast<std::size_t>(k), 0);
    if (k == 0) {
      if (decomposes()) return build();
      continue;
    }
    while (true) {
      if (decomposes()) return build();
      int i = k - 1;
      while (i >= 0 && chosen[i] == pair_count - 1) --i;
      if (i < 0) break;
      int next = chosen[i] + 1;
      for (int j = i; j < k; ++j) chosen[j] = next;
    }
  }
  return std::nullopt;
}

}  // namespace semiring_lab
