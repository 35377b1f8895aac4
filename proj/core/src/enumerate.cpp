#include <algorithm>
#include <array>
#include <functional>

#include "semiring_lab/harness.hpp"

namespace semiring_lab {

namespace {

using Table = std::vector<std::int8_t>;  // -1 = not yet assigned

int cell(const Table& t, int n, int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; }

void set_sym(Table& t, int n, int a, int b, int v) {
  t[static_cast<std::size_t>(a) * n + b] = static_cast<std::int8_t>(v);
  t[static_cast<std::size_t>(b) * n + a] = static_cast<std::int8_t>(v);
}

/// Associativity over the known part of a symmetric partial table.
bool assoc_consistent(const Table& t, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = cell(t, n, a, b);
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int ab_c = cell(t, n, ab, c);
        if (ab_c < 0) continue;
        int bc = cell(t, n, b, c);
        if (bc < 0) continue;
        int a_bc = cell(t, n, a, bc);
        if (a_bc < 0) continue;
        if (ab_c != a_bc) return false;
      }
    }
  return true;
}

/// Left distributivity of a partial `mul` over a complete `add`.
bool dist_consistent(const Table& mul, const Table& add, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = cell(mul, n, a, b);
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int ac = cell(mul, n, a, c);
        if (ac < 0) continue;
        int lhs = cell(mul, n, a, cell(add, n, b, c));
        if (lhs < 0) continue;
        if (lhs != cell(add, n, ab, ac)) return false;
      }
    }
  return true;
}

/// All commutative monoid tables on {0..n-1} with identity 0, in
/// lexicographic order of the free cells (i <= j, i >= 1).
void for_each_add_monoid(int n, const std::function<void(const Table&)>& yield) {
  Table t(static_cast<std::size_t>(n) * n, -1);
  for (int j = 0; j < n; ++j) set_sym(t, n, 0, j, j);
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      yield(t);
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v < n; ++v) {
      set_sym(t, n, i, j, v);
      if (assoc_consistent(t, n)) rec(k + 1);
    }
    set_sym(t, n, i, j, -1);
  };
  rec(0);
}

std::vector<std::uint8_t> narrow(const Table& t) {
  std::vector<std::uint8_t> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = static_cast<std::uint8_t>(t[i]);
  return out;
}

/// Serialized (one, add, mul) after relabeling by perm (perm[x] is the
/// new name of x; perm[0] == 0).
std::vector<std::uint8_t> relabel_key(int n, int one, const std::vector<std::uint8_t>& add,
                                      const std::vector<std::uint8_t>& mul,
                                      const std::vector<int>& perm) {
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) inv[perm[x]] = x;
  std::vector<std::uint8_t> key;
  key.reserve(1 + 2 * add.size());
  key.push_back(static_cast<std::uint8_t>(perm[one]));
  for (const auto* table : {&add, &mul})
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        key.push_back(perm[(*table)[static_cast<std::size_t>(inv[x]) * n + inv[y]]]);
  return key;
}

bool is_canonical(const SemiringPtr& s) {
  const int n = s->order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::uint8_t> self =
      relabel_key(n, s->one(), s->tables().add, s->tables().mul, perm);
  // Permutations of 1..n-1 (element 0 is structurally fixed).
  std::sort(perm.begin() + 1, perm.end());
  do {
    if (relabel_key(n, s->one(), s->tables().add, s->tables().mul, perm) < self) return false;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return true;
}

}  // namespace

std::vector<SemiringPtr> enumerate_semirings(int order, bool up_to_iso) {
  if (order < 2 || order > 5)
    throw SizeBoundExceeded("enumerate_semirings supports orders 2..5, got " +
                            std::to_string(order));
  std::vector<SemiringPtr> out;
  for_each_add_monoid(order, [&](const Table& add) {
    Table add_full = add;
    for (int one = 1; one < order; ++one) {
      Table mul(static_cast<std::size_t>(order) * order, -1);
      for (int j = 0; j < order; ++j) {
        set_sym(mul, order, 0, j, 0);
        set_sym(mul, order, one, j, j);
      }
      std::vector<std::pair<int, int>> cells;
      for (int i = 1; i < order; ++i)
        for (int j = i; j < order; ++j)
          if (i != one && j != one) cells.emplace_back(i, j);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
          RawTables rt;
          rt.name = "s" + std::to_string(order) + "-" + std::to_string(out.size());
          rt.order = order;
          rt.one = one;
          rt.add = narrow(add_full);
          rt.mul = narrow(mul);
          SemiringPtr s = validate_semiring(std::move(rt));
          if (!up_to_iso || is_canonical(s)) out.push_back(std::move(s));
          return;
        }
        auto [i, j] = cells[k];
        for (int v = 0; v < order; ++v) {
          set_sym(mul, order, i, j, v);
          if (assoc_consistent(mul, order) && dist_consistent(mul, add_full, order)) rec(k + 1);
        }
        set_sym(mul, order, i, j, -1);
      };
      rec(0);
    }
  });
  // Renumber after the isomorphism filter so names are contiguous.
  if (up_to_iso) {
    std::vector<SemiringPtr> renamed;
    for (std::size_t i = 0; i < out.size(); ++i) {
      RawTables rt = out[i]->tables();
      rt.name = "s" + std::to_string(order) + "-" + std::to_string(i);
      renamed.push_back(validate_semiring(std::move(rt)));
    }
    out = std::move(renamed);
  }
  return out;
}

std::vector<SemimodulePtr> enumerate_semimodules(const SemiringPtr& s, int order) {
  if (!s) throw Error("enumerate_semimodules: null semiring");
  if (order < 1 || order > 6)
    throw SizeBoundExceeded("enumerate_semimodules supports orders 1..6, got " +
                            std::to_string(order));
  const int n = s->order();
  std::vector<SemimodulePtr> out;
  for_each_add_monoid(order, [&](const Table& madd) {
    // Action rows: scalar 0 and the base one are forced, as is the
    // image of module element 0.
    Table act(static_cast<std::size_t>(n) * order, -1);
    for (int x = 0; x < order; ++x) {
      act[x] = 0;
      act[static_cast<std::size_t>(s->one()) * order + x] = static_cast<std::int8_t>(x);
    }
    for (int sc = 0; sc < n; ++sc) act[static_cast<std::size_t>(sc) * order] = 0;

    std::vector<std::pair<int, int>> cells;
    for (int sc = 1; sc < n; ++sc)
      for (int x = 1; x < order; ++x)
        if (sc != s->one()) cells.emplace_back(sc, x);

    auto a = [&](int sc, int x) { return int(act[static_cast<std::size_t>(sc) * order + x]); };
    auto consistent = [&] {
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int x = 0; x < order; ++x) {
            int qx = a(q, x);
            int lhs = a(s->mul(p, q), x);
            if (qx >= 0 && lhs >= 0 && a(p, qx) >= 0 && lhs != a(p, qx)) return false;
            int px = a(p, x);
            int sum = a(s->add(p, q), x);
            if (px >= 0 && qx >= 0 && sum >= 0 &&
                sum != cell(madd, order, px, qx))
              return false;
          }
      for (int p = 0; p < n; ++p)
        for (int x = 0; x < order; ++x) {
          int px = a(p, x);
          if (px < 0) continue;
          for (int y = 0; y < order; ++y) {
            int py = a(p, y);
            if (py < 0) continue;
            int lhs = a(p, cell(madd, order, x, y));
            if (lhs >= 0 && lhs != cell(madd, order, px, py)) return false;
          }
        }
      return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == cells.size()) {
        // With every free cell fixed, consistent() is the complete
        // action-axiom check; it must run even when no cell was free
        // (small bases force the whole table).
        if (!consistent()) return;
        RawModuleTables mt;
        mt.name = s->name() + "-m" + std::to_string(order) + "-" + std::to_string(out.size());
        mt.order = order;
        mt.add = narrow(madd);
        mt.action = narrow(act);
        out.push_back(validate_semimodule(s, std::move(mt)));
        return;
      }
      auto [sc, x] = cells[k];
      for (int v = 0; v < order; ++v) {
        act[static_cast<std::size_t>(sc) * order + x] = static_cast<std::int8_t>(v);
        if (consistent()) rec(k + 1);
      }
      act[static_cast<std::size_t>(sc) * order + x] = -1;
    };
    rec(0);
  });
  return out;
}

Corpus census_corpus(int max_order) {
  if (max_order < 2 || max_order > 4)
    throw SizeBoundExceeded("census_corpus supports max orders 2..4, got " +
                            std::to_string(max_order));
  Corpus c;
  for (int n = 2; n <= max_order; ++n)
    for (SemiringPtr& s : enumerate_semirings(n, true)) c.semirings.push_back(std::move(s));
  for (const SemiringPtr& s : c.semirings)
    for (int m = 1; m <= max_order; ++m)
      for (SemimodulePtr& mod : enumerate_semimodules(s, m)) c.modules.push_back(std::move(mod));
  return c;
}

}  // namespace semiring_lab
