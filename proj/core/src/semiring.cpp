#include "semiring_lab/semiring.hpp"

#include <sstream>
#include <utility>

#include "semiring_lab/ideals.hpp"

namespace semiring_lab {

namespace {

std::string witness_string(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  out += ')';
  return out;
}

}  // namespace

AxiomViolation::AxiomViolation(const std::string& structure, std::string axiom_name,
                               std::vector<int> witness_elems)
    : Error(structure + ": axiom '" + axiom_name + "' violated at " +
            witness_string(witness_elems)),
      axiom(std::move(axiom_name)),
      witness(std::move(witness_elems)) {}

ParseError::ParseError(int line_no, const std::string& what)
    : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

void check_shape(const RawTables& t) {
  if (t.order < 2)
    throw MalformedTable(t.name + ": order must be at least 2");
  if (t.order > kMaxOrder)
    throw MalformedTable(t.name + ": order " + std::to_string(t.order) +
                         " exceeds the supported maximum of 64");
  const std::size_t want = static_cast<std::size_t>(t.order) * t.order;
  if (t.add.size() != want)
    throw MalformedTable(t.name + ": add table must hold " + std::to_string(want) + " entries");
  if (t.mul.size() != want)
    throw MalformedTable(t.name + ": mul table must hold " + std::to_string(want) + " entries");
  for (std::uint8_t v : t.add)
    if (v >= t.order) throw MalformedTable(t.name + ": add table entry out of range");
  for (std::uint8_t v : t.mul)
    if (v >= t.order) throw MalformedTable(t.name + ": mul table entry out of range");
  if (t.one < 0 || t.one >= t.order)
    throw MalformedTable(t.name + ": one index out of range");
}

}  // namespace

SemiringPtr validate_semiring(RawTables tables) {
  check_shape(tables);
  const int n = tables.order;
  const int one = tables.one;
  auto add = [&](int a, int b) { return int(tables.add[static_cast<std::size_t>(a) * n + b]); };
  auto mul = [&](int a, int b) { return int(tables.mul[static_cast<std::size_t>(a) * n + b]); };
  auto fail = [&](const char* axiom, std::vector<int> w) {
    throw AxiomViolation(tables.name, axiom, std::move(w));
  };

  if (one == 0) fail("one-neq-zero", {one});
  for (int a = 0; a < n; ++a)
    if (add(0, a) != a || add(a, 0) != a) fail("add-identity", {a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (add(a, b) != add(b, a)) fail("add-commutativity", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) fail("add-associativity", {a, b, c});
  for (int a = 0; a < n; ++a)
    if (mul(one, a) != a || mul(a, one) != a) fail("mul-identity", {a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) fail("mul-commutativity", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("mul-associativity", {a, b, c});
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != 0 || mul(a, 0) != 0) fail("absorption", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity", {a, b, c});
        if (mul(add(b, c), a) != add(mul(b, a), mul(c, a))) fail("distributivity", {a, b, c});
      }

  return SemiringPtr(new FiniteSemiring(std::move(tables)));
}

bool is_yoked(const FiniteSemiring& s) {
  return s.memo().get<bool>("yoked", [&] {
    const int n = s.order();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        bool found = false;
        for (int t = 0; t < n && !found; ++t)
          found = s.add(a, t) == b || s.add(b, t) == a;
        if (!found) return false;
      }
    return true;
  });
}

bool is_entire(const FiniteSemiring& s) {
  return s.memo().get<bool>("entire", [&] {
    const int n = s.order();
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        if (s.mul(a, b) == 0) return false;
    return true;
  });
}

bool is_mc_element(const FiniteSemiring& s, int element) {
  return mc_elements(s).contains(element);
}

SubsetHandle mc_elements(const FiniteSemiring& s) {
  std::uint64_t bits = s.memo().get<std::uint64_t>("mc", [&] {
    const int n = s.order();
    std::uint64_t out = 0;
    for (int a = 0; a < n; ++a) {
      bool cancels = true;
      for (int b = 0; b < n && cancels; ++b)
        for (int c = b + 1; c < n && cancels; ++c)
          if (s.mul(a, b) == s.mul(a, c)) cancels = false;
      if (cancels) out |= std::uint64_t{1} << a;
    }
    return out;
  });
  return s.subset(bits);
}

bool is_semidomain(const FiniteSemiring& s) {
  return s.memo().get<bool>("semidomain", [&] {
    SubsetHandle mc = mc_elements(s);
    for (int a = 1; a < s.order(); ++a)
      if (!mc.contains(a)) return false;
    return true;
  });
}

bool is_mult_idempotent(const FiniteSemiring& s) {
  return s.memo().get<bool>("mult-idempotent", [&] {
    for (int a = 0; a < s.order(); ++a)
      if (s.mul(a, a) != a) return false;
    return true;
  });
}

SubsetHandle units(const FiniteSemiring& s) {
  std::uint64_t bits = s.memo().get<std::uint64_t>("units", [&] {
    const int n = s.order();
    std::uint64_t out = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s.mul(a, b) == s.one()) {
          out |= std::uint64_t{1} << a;
          break;
        }
    return out;
  });
  return s.subset(bits);
}

std::optional<SubsetHandle> is_local(const FiniteSemiring& s) {
  auto maxs = maximal_ideals(s);
  if (maxs.size() == 1) return maxs.front();
  return std::nullopt;
}

bool structurally_equal(const FiniteSemiring& a, const FiniteSemiring& b) {
  return a.name() == b.name() && a.order() == b.order() && a.one() == b.one() &&
         a.tables().add == b.tables().add && a.tables().mul == b.tables().mul;
}

}  // namespace semiring_lab
