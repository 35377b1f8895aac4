#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/detail/memo.hpp"
#include "semiring_lab/errors.hpp"
#include "semiring_lab/subset.hpp"

namespace semiring_lab {

class FiniteSemiring;
using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

/// Largest supported carrier, chosen so subsets fit in one machine word.
inline constexpr int kMaxOrder = 64;

/// Unvalidated input for validate_semiring. Tables are row-major
/// order*order; element 0 must be the additive identity and `one`
/// names the multiplicative identity.
struct RawTables {
  std::string name;
  int order = 0;
  int one = 0;
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> mul;
};

/// A finite commutative semiring given by Cayley tables.
///
/// Instances are immutable and always satisfy the full axiom set; the
/// only way to obtain one is validate_semiring(). Identity of the
/// object doubles as the owner tag for SubsetHandle values drawn from
/// its carrier, so instances are neither copyable nor movable.
class FiniteSemiring {
 public:
  FiniteSemiring(const FiniteSemiring&) = delete;
  FiniteSemiring& operator=(const FiniteSemiring&) = delete;

  const std::string& name() const { return tables_.name; }
  int order() const { return tables_.order; }
  int zero() const { return 0; }
  int one() const { return tables_.one; }

  int add(int a, int b) const { return tables_.add[static_cast<std::size_t>(a) * tables_.order + b]; }
  int mul(int a, int b) const { return tables_.mul[static_cast<std::size_t>(a) * tables_.order + b]; }

  SubsetHandle carrier() const { return SubsetHandle::full(this, tables_.order); }
  SubsetHandle subset(std::uint64_t bits) const { return SubsetHandle(this, bits); }

  const RawTables& tables() const { return tables_; }
  detail::MemoMap& memo() const { return memo_; }

 private:
  explicit FiniteSemiring(RawTables t) : tables_(std::move(t)) {}

  RawTables tables_;
  mutable detail::MemoMap memo_;

  friend SemiringPtr validate_semiring(RawTables tables);
};

/// Checks table shape plus every semiring axiom and returns the
/// validated structure. Throws MalformedTable for shape problems and
/// AxiomViolation naming the first broken axiom with a witness tuple.
/// Axiom check order: one-neq-zero, add-identity, add-commutativity,
/// add-associativity, mul-identity, mul-commutativity,
/// mul-associativity, absorption, distributivity.
SemiringPtr validate_semiring(RawTables tables);

/// For every a, b some t solves a+t=b or b+t=a.
bool is_yoked(const FiniteSemiring& s);

/// ab=0 implies a=0 or b=0.
bool is_entire(const FiniteSemiring& s);

/// Every nonzero element is multiplicatively cancellable.
bool is_semidomain(const FiniteSemiring& s);

/// a*a=a for every a.
bool is_mult_idempotent(const FiniteSemiring& s);

/// Elements with a multiplicative inverse.
SubsetHandle units(const FiniteSemiring& s);

/// Multiplicatively cancellable elements: sb=sc implies b=c.
SubsetHandle mc_elements(const FiniteSemiring& s);

bool is_mc_element(const FiniteSemiring& s, int element);

/// Returns the unique maximal ideal when s is local, nullopt otherwise.
std::optional<SubsetHandle> is_local(const FiniteSemiring& s);

/// Field-by-field equality (name, order, one, both tables).
bool structurally_equal(const FiniteSemiring& a, const FiniteSemiring& b);

}  // namespace semiring_lab
