#include "semiring_lab/ideals.hpp"

#include <algorithm>
#include <set>

namespace semiring_lab {

namespace {

std::uint64_t additive_closure(const FiniteSemiring& s, std::uint64_t bits) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t snapshot = bits;
    for_each_bit(snapshot, [&](int a) {
      for_each_bit(snapshot, [&](int b) {
        std::uint64_t bit = std::uint64_t{1} << s.add(a, b);
        if (!(bits & bit)) {
          bits |= bit;
          grew = true;
        }
      });
    });
  }
  return bits;
}

std::uint64_t ideal_closure(const FiniteSemiring& s, std::uint64_t bits) {
  bits |= 1;  // 0 = 0 * x lands in every ideal
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t snapshot = bits;
    for_each_bit(snapshot, [&](int a) {
      for_each_bit(snapshot, [&](int b) {
        std::uint64_t bit = std::uint64_t{1} << s.add(a, b);
        if (!(bits & bit)) {
          bits |= bit;
          grew = true;
        }
      });
      for (int r = 0; r < s.order(); ++r) {
        std::uint64_t bit = std::uint64_t{1} << s.mul(r, a);
        if (!(bits & bit)) {
          bits |= bit;
          grew = true;
        }
      }
    });
  }
  return bits;
}

bool is_ideal_bits(const FiniteSemiring& s, std::uint64_t bits) {
  if (!(bits & 1)) return false;
  bool ok = true;
  for_each_bit(bits, [&](int a) {
    if (!ok) return;
    for_each_bit(bits, [&](int b) {
      if (!((bits >> s.add(a, b)) & 1)) ok = false;
    });
    for (int r = 0; r < s.order() && ok; ++r)
      if (!((bits >> s.mul(r, a)) & 1)) ok = false;
  });
  return ok;
}

bool is_subtractive_bits(const FiniteSemiring& s, std::uint64_t bits) {
  bool ok = true;
  for_each_bit(bits, [&](int a) {
    if (!ok) return;
    for (int b = 0; b < s.order(); ++b)
      if (((bits >> s.add(a, b)) & 1) && !((bits >> b) & 1)) {
        ok = false;
        return;
      }
  });
  return ok;
}

bool is_prime_bits(const FiniteSemiring& s, std::uint64_t bits) {
  const std::uint64_t carrier = SubsetHandle::full(&s, s.order()).bits();
  if (bits == carrier) return false;
  for (int a = 0; a < s.order(); ++a)
    for (int b = a; b < s.order(); ++b)
      if (((bits >> s.mul(a, b)) & 1) && !((bits >> a) & 1) && !((bits >> b) & 1)) return false;
  return true;
}

std::vector<IdealInfo> decorate(const FiniteSemiring& s, std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const std::uint64_t carrier = SubsetHandle::full(&s, s.order()).bits();

  std::vector<IdealInfo> out;
  out.reserve(sets.size());
  for (std::uint64_t bits : sets) {
    IdealInfo info{s.subset(bits), {}};
    info.flags.proper = bits != carrier;
    info.flags.subtractive = is_subtractive_bits(s, bits);
    info.flags.prime = is_prime_bits(s, bits);
    out.push_back(info);
  }
  for (IdealInfo& info : out) {
    if (!info.flags.proper) continue;
    bool maximal = true;
    for (const IdealInfo& other : out) {
      if (!other.flags.proper || other.set.bits() == info.set.bits()) continue;
      if (info.set.subset_of(other.set)) {
        maximal = false;
        break;
      }
    }
    info.flags.maximal = maximal;
  }
  return out;
}

std::vector<std::uint64_t> enumerate_by_scan(const FiniteSemiring& s) {
  if (s.order() > 16)
    throw SizeBoundExceeded(s.name() + ": subset scan is limited to order 16");
  std::vector<std::uint64_t> sets;
  const std::uint64_t carrier = SubsetHandle::full(&s, s.order()).bits();
  for (std::uint64_t bits = 1; bits <= carrier; bits += 2)
    if (is_ideal_bits(s, bits)) sets.push_back(bits);
  return sets;
}

std::vector<std::uint64_t> enumerate_by_closure(const FiniteSemiring& s) {
  // Every ideal is the sum of the principal ideals of its members, so
  // seeding with the one- and two-generator ideals and saturating under
  // pairwise sums reaches the full lattice.
  std::set<std::uint64_t> known;
  std::vector<std::uint64_t> work;
  auto push = [&](std::uint64_t bits) {
    if (known.insert(bits).second) work.push_back(bits);
  };
  push(ideal_closure(s, 0));
  for (int a = 0; a < s.order(); ++a) {
    push(ideal_closure(s, std::uint64_t{1} << a));
    for (int b = a + 1; b < s.order(); ++b)
      push(ideal_closure(s, (std::uint64_t{1} << a) | (std::uint64_t{1} << b)));
  }
  while (!work.empty()) {
    std::uint64_t next = work.back();
    work.pop_back();
    std::vector<std::uint64_t> snapshot(known.begin(), known.end());
    for (std::uint64_t other : snapshot) push(additive_closure(s, next | other));
  }
  return {known.begin(), known.end()};
}

}  // namespace

bool is_ideal(const FiniteSemiring& s, const SubsetHandle& a) {
  require_owner(a, &s, "is_ideal");
  return !a.empty() && is_ideal_bits(s, a.bits());
}

SubsetHandle generated_ideal(const FiniteSemiring& s, const std::vector<int>& gens) {
  std::uint64_t bits = 0;
  for (int g : gens) {
    if (g < 0 || g >= s.order())
      throw Error(s.name() + ": generator " + std::to_string(g) + " out of range");
    bits |= std::uint64_t{1} << g;
  }
  return s.subset(ideal_closure(s, bits));
}

const std::vector<IdealInfo>& all_ideals(const FiniteSemiring& s) {
  return s.memo().get<std::vector<IdealInfo>>(
      "all-ideals", [&] { return all_ideals(s, EnumStrategy::kAuto); });
}

std::vector<IdealInfo> all_ideals(const FiniteSemiring& s, EnumStrategy strategy) {
  if (strategy == EnumStrategy::kAuto)
    strategy = s.order() <= 16 ? EnumStrategy::kScan : EnumStrategy::kClosure;
  auto sets = strategy == EnumStrategy::kScan ? enumerate_by_scan(s) : enumerate_by_closure(s);
  return decorate(s, std::move(sets));
}

std::vector<SubsetHandle> maximal_ideals(const FiniteSemiring& s) {
  std::vector<SubsetHandle> out;
  for (const IdealInfo& info : all_ideals(s))
    if (info.flags.maximal) out.push_back(info.set);
  return out;
}

std::vector<SubsetHandle> prime_ideals(const FiniteSemiring& s) {
  std::vector<SubsetHandle> out;
  for (const IdealInfo& info : all_ideals(s))
    if (info.flags.prime) out.push_back(info.set);
  return out;
}

namespace {

std::uint64_t require_ideal(const FiniteSemiring& s, const SubsetHandle& a, const char* what) {
  require_owner(a, &s, what);
  if (a.empty() || !is_ideal_bits(s, a.bits()))
    throw NotAnIdeal(std::string(what) + ": " + a.to_string() + " is not an ideal of " + s.name());
  return a.bits();
}

}  // namespace

bool is_subtractive(const FiniteSemiring& s, const SubsetHandle& ideal) {
  return is_subtractive_bits(s, require_ideal(s, ideal, "is_subtractive"));
}

bool is_prime_ideal(const FiniteSemiring& s, const SubsetHandle& ideal) {
  return is_prime_bits(s, require_ideal(s, ideal, "is_prime_ideal"));
}

bool is_maximal_ideal(const FiniteSemiring& s, const SubsetHandle& ideal) {
  std::uint64_t bits = require_ideal(s, ideal, "is_maximal_ideal");
  for (const IdealInfo& info : all_ideals(s))
    if (info.set.bits() == bits) return info.flags.maximal;
  throw InternalCheckFailure("is_maximal_ideal: ideal missing from enumeration");
}

SubsetHandle ideal_sum(const FiniteSemiring& s, const SubsetHandle& i, const SubsetHandle& j) {
  std::uint64_t ib = require_ideal(s, i, "ideal_sum");
  std::uint64_t jb = require_ideal(s, j, "ideal_sum");
  std::uint64_t out = 0;
  for_each_bit(ib, [&](int a) {
    for_each_bit(jb, [&](int b) { out |= std::uint64_t{1} << s.add(a, b); });
  });
  return s.subset(out);
}

SubsetHandle ideal_product(const FiniteSemiring& s, const SubsetHandle& i, const SubsetHandle& j) {
  std::uint64_t ib = require_ideal(s, i, "ideal_product");
  std::uint64_t jb = require_ideal(s, j, "ideal_product");
  std::uint64_t products = 0;
  for_each_bit(ib, [&](int a) {
    for_each_bit(jb, [&](int b) { products |= std::uint64_t{1} << s.mul(a, b); });
  });
  return s.subset(additive_closure(s, products));
}

SubsetHandle ideal_residual(const FiniteSemiring& s, const SubsetHandle& i, const SubsetHandle& j) {
  std::uint64_t ib = require_ideal(s, i, "ideal_residual");
  std::uint64_t jb = require_ideal(s, j, "ideal_residual");
  std::uint64_t out = 0;
  for (int r = 0; r < s.order(); ++r) {
    bool in = true;
    for_each_bit(jb, [&](int b) {
      if (!((ib >> s.mul(r, b)) & 1)) in = false;
    });
    if (in) out |= std::uint64_t{1} << r;
  }
  return s.subset(out);
}

}  // namespace semiring_lab
