// Shared test utilities: table builders, the ten axiom mutants,
// brute-force oracles kept deliberately independent of the library's
// own closure/residual machinery, and a popen-based CLI runner.
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "semiring_lab/harness.hpp"

namespace test_helpers {

using namespace semiring_lab;

// ------------------------------------------------------------ builders

inline RawTables make_raw(std::string name, int order, int one,
                          const std::function<int(int, int)>& add,
                          const std::function<int(int, int)>& mul) {
  RawTables t;
  t.name = std::move(name);
  t.order = order;
  t.one = one;
  t.add.resize(static_cast<std::size_t>(order) * order);
  t.mul.resize(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      t.add[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint8_t>(add(a, b));
      t.mul[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint8_t>(mul(a, b));
    }
  return t;
}

inline RawTables raw_bool2() {
  return make_raw("bool2", 2, 1, [](int a, int b) { return a | b; },
                  [](int a, int b) { return a & b; });
}

inline RawTables raw_chain3() {
  return make_raw("chain3", 3, 2, [](int a, int b) { return a > b ? a : b; },
                  [](int a, int b) { return a < b ? a : b; });
}

inline RawTables raw_zmod(int n) {
  return make_raw("z" + std::to_string(n), n, 1,
                  [n](int a, int b) { return (a + b) % n; },
                  [n](int a, int b) { return (a * b) % n; });
}

inline void set_add(RawTables& t, int a, int b, int v) {
  t.add[static_cast<std::size_t>(a) * t.order + b] = static_cast<std::uint8_t>(v);
}
inline void set_mul(RawTables& t, int a, int b, int v) {
  t.mul[static_cast<std::size_t>(a) * t.order + b] = static_cast<std::uint8_t>(v);
}

/// Asserts that validation rejects `t` naming exactly `axiom`.
/// Returns the violation for witness inspection.
inline AxiomViolation expect_axiom(RawTables t, const std::string& axiom) {
  try {
    validate_semiring(std::move(t));
  } catch (const AxiomViolation& e) {
    if (e.axiom != axiom)
      throw std::runtime_error("expected axiom '" + axiom + "', got '" + e.axiom +
                               "': " + e.what());
    return e;
  }
  throw std::runtime_error("expected rejection by axiom '" + axiom + "', table validated");
}

inline AxiomViolation expect_module_axiom(SemiringPtr base, RawModuleTables t,
                                          const std::string& axiom) {
  try {
    validate_semimodule(std::move(base), std::move(t));
  } catch (const AxiomViolation& e) {
    if (e.axiom != axiom)
      throw std::runtime_error("expected axiom '" + axiom + "', got '" + e.axiom +
                               "': " + e.what());
    return e;
  }
  throw std::runtime_error("expected rejection by axiom '" + axiom + "', table validated");
}

// The nine semiring mutants used by acceptance criterion 1, one per
// semiring axiom in validator order.
struct SemiringMutant {
  std::string axiom;
  RawTables tables;
};

inline std::vector<SemiringMutant> semiring_mutants() {
  std::vector<SemiringMutant> out;
  {
    RawTables t = raw_bool2();
    t.one = 0;
    out.push_back({"one-neq-zero", std::move(t)});
  }
  {
    RawTables t = raw_zmod(6);
    set_add(t, 0, 3, 1);
    set_add(t, 3, 0, 1);
    out.push_back({"add-identity", std::move(t)});
  }
  {
    RawTables t = raw_zmod(6);
    set_add(t, 1, 2, 4);  // leaves add(2,1) = 3
    out.push_back({"add-commutativity", std::move(t)});
  }
  {
    RawTables t = raw_zmod(6);
    set_add(t, 1, 1, 3);  // diagonal: symmetric, breaks (1+1)+2 = 1+(1+2)
    out.push_back({"add-associativity", std::move(t)});
  }
  {
    RawTables t = raw_bool2();
    set_mul(t, 1, 1, 0);
    out.push_back({"mul-identity", std::move(t)});
  }
  {
    RawTables t = raw_zmod(6);
    set_mul(t, 2, 3, 1);  // leaves mul(3,2) = 0
    out.push_back({"mul-commutativity", std::move(t)});
  }
  {
    RawTables t = raw_zmod(6);
    set_mul(t, 2, 2, 1);  // diagonal: breaks (2*2)*3 = 2*(2*3)
    out.push_back({"mul-associativity", std::move(t)});
  }
  {
    RawTables t = raw_chain3();
    set_mul(t, 0, 1, 1);
    set_mul(t, 1, 0, 1);
    out.push_back({"absorption", std::move(t)});
  }
  {
    // Saturating add on {0,1,2} with mul = min and one = 2 satisfies
    // everything up to distributivity: 1*(1+1) = 1 but 1*1+1*1 = 2.
    RawTables t = make_raw("satmin", 3, 2,
                           [](int a, int b) { return a + b > 2 ? 2 : a + b; },
                           [](int a, int b) { return a < b ? a : b; });
    out.push_back({"distributivity", std::move(t)});
  }
  return out;
}

/// The tenth mutant: the square module over bool2 with the identity
/// action broken at one point.
inline RawModuleTables module_mutant_action_identity() {
  RawModuleTables t;
  t.name = "bool2.sq.bad";
  t.order = 4;
  t.add.resize(16);
  t.action.resize(8);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t.add[static_cast<std::size_t>(x) * 4 + y] = static_cast<std::uint8_t>(x | y);
  for (int x = 0; x < 4; ++x) {
    t.action[x] = 0;                                    // scalar 0
    t.action[4 + x] = static_cast<std::uint8_t>(x);     // scalar 1: identity
  }
  t.action[4 + 1] = 2;  // act(1, (1,0)) = (0,1)
  return t;
}

// ------------------------------------------------------------ oracles

/// Ground-truth ideal test by direct loops (independent of is_ideal).
inline bool brute_is_ideal(const FiniteSemiring& s, std::uint64_t bits) {
  if (!(bits & 1)) return false;
  for (int a = 0; a < s.order(); ++a) {
    if (!((bits >> a) & 1)) continue;
    for (int b = 0; b < s.order(); ++b) {
      if (((bits >> b) & 1) && !((bits >> s.add(a, b)) & 1)) return false;
      if (!((bits >> s.mul(b, a)) & 1)) return false;
    }
  }
  return true;
}

inline std::set<std::uint64_t> brute_ideal_bits(const FiniteSemiring& s) {
  std::set<std::uint64_t> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << s.order()); bits += 2)
    if (brute_is_ideal(s, bits)) out.insert(bits);
  return out;
}

inline bool brute_is_subsemimodule(const FiniteSemimodule& m, std::uint64_t bits) {
  if (!(bits & 1)) return false;
  for (int x = 0; x < m.order(); ++x) {
    if (!((bits >> x) & 1)) continue;
    for (int y = 0; y < m.order(); ++y)
      if (((bits >> y) & 1) && !((bits >> m.add(x, y)) & 1)) return false;
    for (int sc = 0; sc < m.base().order(); ++sc)
      if (!((bits >> m.act(sc, x)) & 1)) return false;
  }
  return true;
}

inline std::set<std::uint64_t> brute_sub_bits(const FiniteSemimodule& m) {
  std::set<std::uint64_t> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m.order()); bits += 2)
    if (brute_is_subsemimodule(m, bits)) out.insert(bits);
  return out;
}

/// Additive closure by plain fixpoint iteration.
inline std::uint64_t brute_additive_closure(const FiniteSemimodule& m, std::uint64_t bits) {
  bits |= 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::uint64_t next = bits;
    for (int x = 0; x < m.order(); ++x)
      if ((bits >> x) & 1)
        for (int y = 0; y < m.order(); ++y)
          if ((bits >> y) & 1) next |= std::uint64_t{1} << m.add(x, y);
    if (next != bits) {
      bits = next;
      grew = true;
    }
  }
  return bits;
}

/// IM computed from scratch: additive closure of {a·x : a in I, x in M}.
inline std::uint64_t brute_ideal_times_module(const FiniteSemimodule& m, std::uint64_t ideal) {
  std::uint64_t prods = 1;
  for (int a = 0; a < m.base().order(); ++a)
    if ((ideal >> a) & 1)
      for (int x = 0; x < m.order(); ++x) prods |= std::uint64_t{1} << m.act(a, x);
  return brute_additive_closure(m, prods);
}

/// The existential multiplication oracle: N is reachable as IM for
/// some ideal I of the base.
inline bool brute_exists_ideal_product(const FiniteSemimodule& m, std::uint64_t n_bits) {
  for (std::uint64_t ideal : brute_ideal_bits(m.base()))
    if (brute_ideal_times_module(m, ideal) == n_bits) return true;
  return false;
}

/// All homs by exhaustive map enumeration; only for tiny modules.
inline std::set<std::vector<int>> brute_hom_maps(const FiniteSemimodule& m,
                                                 const FiniteSemimodule& n) {
  std::set<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(m.order()), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < m.order(); ++i) total *= static_cast<std::uint64_t>(n.order());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < m.order(); ++i) {
      map[static_cast<std::size_t>(i)] = static_cast<int>(rest % n.order());
      rest /= static_cast<std::uint64_t>(n.order());
    }
    bool ok = map[0] == 0;
    for (int x = 0; x < m.order() && ok; ++x) {
      for (int y = 0; y < m.order() && ok; ++y)
        if (map[static_cast<std::size_t>(m.add(x, y))] !=
            n.add(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
          ok = false;
      for (int sc = 0; sc < m.base().order() && ok; ++sc)
        if (map[static_cast<std::size_t>(m.act(sc, x))] !=
            n.act(sc, map[static_cast<std::size_t>(x)]))
          ok = false;
    }
    if (ok) out.insert(map);
  }
  return out;
}

// ------------------------------------------------------------ CLI

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

inline CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(SEMIRING_LAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace test_helpers
