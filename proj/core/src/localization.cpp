#include "semiring_lab/localization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

namespace semiring_lab {

namespace {

// Union-find quotient of pair indices 0..count-1 under a reflexive,
// symmetric relation. Classes are numbered by first occurrence, so
// class 0 is always the class of pair 0. The relation is audited for
// transitivity: it must coincide with the union-find partition.
struct PairQuotient {
  int classes = 0;
  std::vector<int> cls;  // pair -> class id
  std::vector<int> rep;  // class -> first pair in it
};

PairQuotient quotient_pairs(int count, const std::function<bool(int, int)>& related,
                            const std::string& what) {
  const std::size_t words = static_cast<std::size_t>((count + 63) / 64);
  std::vector<std::uint64_t> rel(words * count, 0);
  auto rel_get = [&](int p, int q) {
    return (rel[static_cast<std::size_t>(p) * words + q / 64] >> (q % 64)) & 1;
  };
  for (int p = 0; p < count; ++p)
    for (int q = 0; q < count; ++q)
      if (related(p, q)) rel[static_cast<std::size_t>(p) * words + q / 64] |= std::uint64_t{1}
                                                                              << (q % 64);

  std::vector<int> parent(static_cast<std::size_t>(count));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  for (int p = 0; p < count; ++p)
    for (int q = p + 1; q < count; ++q)
      if (rel_get(p, q)) parent[find(q)] = find(p);

  for (int p = 0; p < count; ++p) {
    if (!rel_get(p, p))
      throw InternalCheckFailure(what + ": localization relation is not reflexive");
    for (int q = 0; q < count; ++q) {
      if (rel_get(p, q) != rel_get(q, p))
        throw InternalCheckFailure(what + ": localization relation is not symmetric");
      if ((find(p) == find(q)) != bool(rel_get(p, q)))
        throw InternalCheckFailure(what + ": localization relation is not transitive");
    }
  }

  PairQuotient out;
  out.cls.assign(static_cast<std::size_t>(count), -1);
  for (int p = 0; p < count; ++p) {
    int root = find(p);
    if (out.cls[root] == -1) {
      out.cls[root] = out.classes++;
      out.rep.push_back(p);
    }
    out.cls[p] = out.cls[root];
  }
  return out;
}

}  // namespace

MultClosedSet make_mult_closed(const SemiringPtr& s, const SubsetHandle& members) {
  if (!s) throw Error("make_mult_closed: null semiring");
  require_owner(members, s.get(), "make_mult_closed");
  if (members.empty())
    throw NotMultClosed(s->name() + ": a multiplicatively closed set must be nonempty");
  std::uint64_t bits = members.bits();
  for_each_bit(bits, [&](int a) {
    for_each_bit(bits, [&](int b) {
      if (!((bits >> s->mul(a, b)) & 1))
        throw NotMultClosed(s->name() + ": " + members.to_string() +
                            " is not closed under multiplication (" + std::to_string(a) + "*" +
                            std::to_string(b) + " escapes)");
    });
  });
  MultClosedSet out;
  out.owner = s;
  out.one_adjoined = !members.contains(s->one());
  out.members = s->subset(bits | (std::uint64_t{1} << s->one()));
  return out;
}

namespace {

void check_tset(const SemiringPtr& s, const MultClosedSet& t, const char* what) {
  if (!s) throw Error(std::string(what) + ": null structure");
  if (t.owner.get() != s.get())
    throw OwnerMismatch(std::string(what) + ": denominator set belongs to a different semiring");
  require_owner(t.members, s.get(), what);
  if (t.members.contains(0))
    throw PreconditionUnmet(std::string(what) + ": 0 lies in the denominator set of " +
                            s->name() + ", so the localization collapses");
  if (!t.members.contains(s->one()))
    throw NotMultClosed(std::string(what) + ": denominator set lacks 1; build it with "
                        "make_mult_closed");
  for_each_bit(t.members.bits(), [&](int a) {
    for_each_bit(t.members.bits(), [&](int b) {
      if (!t.members.contains(s->mul(a, b)))
        throw NotMultClosed(std::string(what) + ": denominator set is not closed under "
                            "multiplication");
    });
  });
}

}  // namespace

int LocalizedSemiring::class_of(int element, int denominator) const {
  if (element < 0 || element >= source->order())
    throw Error("class_of: element out of range");
  auto it = std::find(t_elements.begin(), t_elements.end(), denominator);
  if (it == t_elements.end())
    throw PreconditionUnmet("class_of: " + std::to_string(denominator) +
                            " is not in the denominator set");
  return class_table[static_cast<std::size_t>(element) * t_elements.size() +
                     static_cast<std::size_t>(it - t_elements.begin())];
}

bool LocalizedSemiring::embedding_injective() const {
  std::vector<int> seen = embedding;
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

LocalizedSemiring localize_semiring(const SemiringPtr& s, const MultClosedSet& t) {
  check_tset(s, t, "localize_semiring");
  const int n = s->order();
  const std::vector<int> ts = t.members.elements();
  const int nt = static_cast<int>(ts.size());
  std::vector<int> t_index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < nt; ++i) t_index[ts[i]] = i;

  const int pairs = n * nt;
  auto elem_of = [&](int p) { return p / nt; };
  auto den_of = [&](int p) { return ts[p % nt]; };
  auto related = [&](int p, int q) {
    int a = elem_of(p), td = den_of(p), b = elem_of(q), ud = den_of(q);
    for (int u : ts)
      if (s->mul(s->mul(u, td), b) == s->mul(s->mul(u, ud), a)) return true;
    return false;
  };
  PairQuotient quo = quotient_pairs(pairs, related, s->name());
  if (quo.classes < 2)
    throw InternalCheckFailure(s->name() + ": localization collapsed to a point with 0 not in T");

  auto cls = [&](int a, int den) { return quo.cls[a * nt + t_index[den]]; };

  RawTables rt;
  rt.name = s->name() + "@" + t.members.to_string();
  rt.order = quo.classes;
  rt.one = cls(s->one(), s->one());
  rt.add.resize(static_cast<std::size_t>(quo.classes) * quo.classes);
  rt.mul.resize(rt.add.size());
  auto add_pair = [&](int a, int td, int b, int ud) {
    return cls(s->add(s->mul(a, ud), s->mul(b, td)), s->mul(td, ud));
  };
  auto mul_pair = [&](int a, int td, int b, int ud) {
    return cls(s->mul(a, b), s->mul(td, ud));
  };
  for (int x = 0; x < quo.classes; ++x) {
    int a = elem_of(quo.rep[x]), td = den_of(quo.rep[x]);
    for (int y = 0; y < quo.classes; ++y) {
      int b = elem_of(quo.rep[y]), ud = den_of(quo.rep[y]);
      rt.add[static_cast<std::size_t>(x) * quo.classes + y] = add_pair(a, td, b, ud);
      rt.mul[static_cast<std::size_t>(x) * quo.classes + y] = mul_pair(a, td, b, ud);
    }
  }
  // Well-definedness audit: every member pair, not just the chosen
  // representatives, must reproduce the tables.
  for (int p = 0; p < pairs; ++p) {
    int a = elem_of(p), td = den_of(p);
    for (int q = 0; q < pairs; ++q) {
      int b = elem_of(q), ud = den_of(q);
      std::size_t at = static_cast<std::size_t>(quo.cls[p]) * quo.classes + quo.cls[q];
      if (rt.add[at] != add_pair(a, td, b, ud) || rt.mul[at] != mul_pair(a, td, b, ud))
        throw InternalCheckFailure(s->name() + ": localized tables are not well defined");
    }
  }

  LocalizedSemiring out;
  out.source = s;
  out.tset = t;
  out.result = validate_semiring(std::move(rt));
  out.t_elements = ts;
  out.class_table = quo.cls;
  out.embedding.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) out.embedding[a] = cls(a, s->one());
  return out;
}

int LocalizedSemimodule::class_of(int element, int denominator) const {
  if (element < 0 || element >= source->order())
    throw Error("class_of: element out of range");
  const std::vector<int>& ts = base.t_elements;
  auto it = std::find(ts.begin(), ts.end(), denominator);
  if (it == ts.end())
    throw PreconditionUnmet("class_of: " + std::to_string(denominator) +
                            " is not in the denominator set");
  return class_table[static_cast<std::size_t>(element) * ts.size() +
                     static_cast<std::size_t>(it - ts.begin())];
}

SubsetHandle LocalizedSemimodule::localize_subset(const SubsetHandle& sub) const {
  require_owner(sub, source.get(), "localize_subset");
  const int nt = static_cast<int>(base.t_elements.size());
  std::uint64_t bits = 0;
  for_each_bit(sub.bits(), [&](int x) {
    for (int ti = 0; ti < nt; ++ti)
      bits |= std::uint64_t{1} << class_table[static_cast<std::size_t>(x) * nt + ti];
  });
  return result->subset(bits);
}

LocalizedSemimodule localize_semimodule(const SemimodulePtr& m, const MultClosedSet& t) {
  if (!m) throw Error("localize_semimodule: null semimodule");
  check_tset(m->base_ptr(), t, "localize_semimodule");
  LocalizedSemiring base = localize_semiring(m->base_ptr(), t);
  const FiniteSemiring& s = m->base();
  const int nm = m->order();
  const std::vector<int>& ts = base.t_elements;
  const int nt = static_cast<int>(ts.size());

  const int pairs = nm * nt;
  auto elem_of = [&](int p) { return p / nt; };
  auto den_of = [&](int p) { return ts[p % nt]; };
  auto related = [&](int p, int q) {
    int x = elem_of(p), td = den_of(p), y = elem_of(q), ud = den_of(q);
    for (int u : ts)
      if (m->act(s.mul(u, td), y) == m->act(s.mul(u, ud), x)) return true;
    return false;
  };
  PairQuotient quo = quotient_pairs(pairs, related, m->name());
  auto cls = [&](int x, int den) {
    return quo.cls[x * nt + std::distance(ts.begin(), std::find(ts.begin(), ts.end(), den))];
  };
  auto add_pair = [&](int x, int td, int y, int ud) {
    return cls(m->add(m->act(ud, x), m->act(td, y)), s.mul(td, ud));
  };
  auto act_pair = [&](int a, int td, int y, int ud) {
    return cls(m->act(a, y), s.mul(td, ud));
  };

  const std::string loc_name = m->name() + "@" + t.members.to_string();
  RawModuleTables over_loc;
  over_loc.name = loc_name;
  over_loc.order = quo.classes;
  over_loc.add.resize(static_cast<std::size_t>(quo.classes) * quo.classes);
  over_loc.action.resize(static_cast<std::size_t>(base.result->order()) * quo.classes);
  for (int x = 0; x < quo.classes; ++x) {
    int xm = elem_of(quo.rep[x]), td = den_of(quo.rep[x]);
    for (int y = 0; y < quo.classes; ++y) {
      int ym = elem_of(quo.rep[y]), ud = den_of(quo.rep[y]);
      over_loc.add[static_cast<std::size_t>(x) * quo.classes + y] = add_pair(xm, td, ym, ud);
    }
  }
  for (int sc = 0; sc < base.result->order(); ++sc) {
    // Representative of the scalar class sc in the base localization.
    int sp = -1;
    for (int p = 0; p < s.order() * nt && sp == -1; ++p)
      if (base.class_table[p] == sc) sp = p;
    if (sp == -1)
      throw InternalCheckFailure(m->name() + ": scalar class without representative");
    int as = sp / nt, tds = ts[sp % nt];
    for (int y = 0; y < quo.classes; ++y) {
      int ym = elem_of(quo.rep[y]), ud = den_of(quo.rep[y]);
      over_loc.action[static_cast<std::size_t>(sc) * quo.classes + y] =
          act_pair(as, tds, ym, ud);
    }
  }
  // Audit both tables over every member pair.
  for (int p = 0; p < pairs; ++p) {
    int x = elem_of(p), td = den_of(p);
    for (int q = 0; q < pairs; ++q) {
      int y = elem_of(q), ud = den_of(q);
      if (over_loc.add[static_cast<std::size_t>(quo.cls[p]) * quo.classes + quo.cls[q]] !=
          add_pair(x, td, y, ud))
        throw InternalCheckFailure(m->name() + ": localized addition is not well defined");
    }
  }
  for (int sp = 0; sp < s.order() * nt; ++sp) {
    int as = sp / nt, tds = ts[sp % nt];
    for (int q = 0; q < pairs; ++q) {
      int y = elem_of(q), ud = den_of(q);
      if (over_loc.action[static_cast<std::size_t>(base.class_table[sp]) * quo.classes +
                          quo.cls[q]] != act_pair(as, tds, y, ud))
        throw InternalCheckFailure(m->name() + ": localized action is not well defined");
    }
  }

  RawModuleTables over_src;
  over_src.name = loc_name + "#src";
  over_src.order = quo.classes;
  over_src.add = over_loc.add;
  over_src.action.resize(static_cast<std::size_t>(s.order()) * quo.classes);
  for (int sc = 0; sc < s.order(); ++sc)
    for (int y = 0; y < quo.classes; ++y) {
      int ym = elem_of(quo.rep[y]), ud = den_of(quo.rep[y]);
      over_src.action[static_cast<std::size_t>(sc) * quo.classes + y] =
          cls(m->act(sc, ym), ud);
    }
  for (int sc = 0; sc < s.order(); ++sc)
    for (int q = 0; q < pairs; ++q) {
      int y = elem_of(q), ud = den_of(q);
      if (over_src.action[static_cast<std::size_t>(sc) * quo.classes + quo.cls[q]] !=
          cls(m->act(sc, y), ud))
        throw InternalCheckFailure(m->name() +
                                   ": source-side localized action is not well defined");
    }

  LocalizedSemimodule out;
  out.source = m;
  out.base = std::move(base);
  out.result = validate_semimodule(out.base.result, std::move(over_loc));
  out.result_over_source = validate_semimodule(m->base_ptr(), std::move(over_src));
  out.class_table = quo.cls;
  out.embedding.resize(static_cast<std::size_t>(nm));
  for (int x = 0; x < nm; ++x) out.embedding[x] = cls(x, s.one());
  return out;
}

SubsetHandle localize_ideal(const LocalizedSemiring& loc, const SubsetHandle& ideal) {
  require_owner(ideal, loc.source.get(), "localize_ideal");
  if (!is_ideal(*loc.source, ideal))
    throw NotAnIdeal("localize_ideal: " + ideal.to_string() + " is not an ideal of " +
                     loc.source->name());
  const int nt = static_cast<int>(loc.t_elements.size());
  std::uint64_t bits = 0;
  for_each_bit(ideal.bits(), [&](int a) {
    for (int ti = 0; ti < nt; ++ti)
      bits |= std::uint64_t{1} << loc.class_table[static_cast<std::size_t>(a) * nt + ti];
  });
  SubsetHandle out = loc.result->subset(bits);
  if (!is_ideal(*loc.result, out))
    throw InternalCheckFailure("localize_ideal: image of " + ideal.to_string() +
                               " is not an ideal of the localization");
  return out;
}

namespace {

SubsetHandle prime_complement(const SemiringPtr& s, const SubsetHandle& p, const char* what) {
  if (!s) throw Error(std::string(what) + ": null semiring");
  require_owner(p, s.get(), what);
  if (!is_ideal(*s, p) || !is_prime_ideal(*s, p))
    throw NotPrime(std::string(what) + ": " + p.to_string() + " is not a prime ideal of " +
                   s->name());
  return s->subset(SubsetHandle::full(s.get(), s->order()).bits() & ~p.bits());
}

}  // namespace

LocalizedSemiring localize_at_prime(const SemiringPtr& s, const SubsetHandle& p) {
  return localize_semiring(s, make_mult_closed(s, prime_complement(s, p, "localize_at_prime")));
}

LocalizedSemimodule localize_at_prime(const SemimodulePtr& m, const SubsetHandle& p) {
  if (!m) throw Error("localize_at_prime: null semimodule");
  return localize_semimodule(
      m, make_mult_closed(m->base_ptr(), prime_complement(m->base_ptr(), p, "localize_at_prime")));
}

LocalizedSemiring total_quotient(const SemiringPtr& s) {
  if (!s) throw Error("total_quotient: null semiring");
  LocalizedSemiring loc = localize_semiring(s, make_mult_closed(s, mc_elements(*s)));
  if (!loc.embedding_injective())
    throw InternalCheckFailure(s->name() +
                               ": embedding into the total quotient is not injective");
  return loc;
}

SubsetHandle QuotientContext::product(const SubsetHandle& a, const SubsetHandle& b) const {
  require_owner(a, q_as_module.get(), "QuotientContext::product");
  require_owner(b, q_as_module.get(), "QuotientContext::product");
  std::uint64_t bits = 0;
  for_each_bit(a.bits(), [&](int x) {
    for_each_bit(b.bits(), [&](int y) { bits |= std::uint64_t{1} << loc.result->mul(x, y); });
  });
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t snapshot = bits;
    for_each_bit(snapshot, [&](int x) {
      for_each_bit(snapshot, [&](int y) {
        std::uint64_t bit = std::uint64_t{1} << q_as_module->add(x, y);
        if (!(bits & bit)) {
          bits |= bit;
          grew = true;
        }
      });
    });
  }
  return q_as_module->subset(bits);
}

QuotientContext quotient_context(const SemiringPtr& s) {
  if (!s) throw Error("quotient_context: null semiring");
  MultClosedSet mc = make_mult_closed(s, mc_elements(*s));
  SemimodulePtr self = semiring_as_module(s);
  LocalizedSemimodule lm = localize_semimodule(self, mc);
  if (lm.class_table != lm.base.class_table)
    throw InternalCheckFailure(s->name() +
                               ": module and semiring localizations disagree on classes");
  if (lm.base.result->order() > 16)
    throw SizeBoundExceeded(s->name() + ": total quotient has order " +
                            std::to_string(lm.base.result->order()) +
                            ", beyond the fractional-ideal guard of 16");
  {
    std::vector<int> seen = lm.embedding;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw InternalCheckFailure(s->name() +
                                 ": embedding into the total quotient is not injective");
  }

  QuotientContext ctx;
  ctx.loc = lm.base;
  ctx.q_as_module = lm.result_over_source;
  std::uint64_t image = 0;
  for (int a = 0; a < s->order(); ++a) image |= std::uint64_t{1} << lm.embedding[a];
  ctx.s_image = ctx.q_as_module->subset(image);

  const std::vector<int> mcs = mc.members.elements();
  for (const SubsetHandle& sub : all_subsemimodules(*ctx.q_as_module)) {
    int denom = -1;
    for (int d : mcs) {
      bool inside = true;
      for_each_bit(sub.bits(), [&](int x) {
        if (!((image >> ctx.q_as_module->act(d, x)) & 1)) inside = false;
      });
      if (inside) {
        denom = d;
        break;
      }
    }
    if (denom != -1) ctx.fractional_ideals.push_back(FractionalIdeal{sub, denom});
  }
  return ctx;
}

InvertibilityResult invertibility_witness(const QuotientContext& ctx, const SubsetHandle& ideal) {
  require_owner(ideal, ctx.loc.source.get(), "invertibility_witness");
  if (!is_ideal(*ctx.loc.source, ideal))
    throw NotAnIdeal("invertibility_witness: " + ideal.to_string() + " is not an ideal of " +
                     ctx.loc.source->name());
  std::uint64_t image = 0;
  for_each_bit(ideal.bits(), [&](int a) {
    image |= std::uint64_t{1} << ctx.loc.embedding[a];
  });
  SubsetHandle embedded = ctx.q_as_module->subset(image);
  for (const FractionalIdeal& j : ctx.fractional_ideals)
    if (ctx.product(embedded, j.members) == ctx.s_image)
      return InvertibilityResult{true, j.members};
  return InvertibilityResult{false, std::nullopt};
}

InvertibilityResult is_invertible_ideal(const SemiringPtr& s, const SubsetHandle& ideal) {
  return invertibility_witness(quotient_context(s), ideal);
}

std::optional<IdealImage> isomorphic_ideal_image(const SemimodulePtr& m) {
  if (!m) throw Error("isomorphic_ideal_image: null semimodule");
  if (!is_semidomain(m->base()))
    throw PreconditionUnmet("isomorphic_ideal_image: base of " + m->name() +
                            " is not a semidomain");
  if (!is_mc_semimodule(*m) || !is_multiplication(*m).holds) return std::nullopt;

  QuotientContext ctx = quotient_context(m->base_ptr());
  SemimodulePtr target = semiring_as_module(m->base_ptr());
  for (const HomTable& h : all_homs(*m, *target)) {
    if (!is_injective(h)) continue;
    std::uint64_t image = 0;
    for (int img : h.map) image |= std::uint64_t{1} << img;
    SubsetHandle ideal = m->base().subset(image);
    if (!is_ideal(m->base(), ideal))
      throw InternalCheckFailure("isomorphic_ideal_image: hom image " + ideal.to_string() +
                                 " is not an ideal of " + m->base().name());
    if (invertibility_witness(ctx, ideal).invertible)
      return IdealImage{ideal, h, target};
  }
  return std::nullopt;
}

}  // namespace semiring_lab
