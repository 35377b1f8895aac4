#pragma once

#include <optional>
#include <utility>

#include "semiring_lab/ideals.hpp"

namespace semiring_lab {

class FiniteSemimodule;
using SemimodulePtr = std::shared_ptr<const FiniteSemimodule>;

/// Unvalidated input for validate_semimodule. `add` is order*order and
/// `action` is base_order*order, row = scalar, column = module element.
/// Element 0 must be the additive identity. Order 1 (the zero module)
/// is allowed.
struct RawModuleTables {
  std::string name;
  int order = 0;
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> action;
};

/// A finite semimodule over a finite commutative semiring, given by an
/// addition table and a scalar-action table. Immutable; obtained only
/// through validate_semimodule. Holds a shared reference to its base,
/// so the base outlives every module built over it. Like semirings,
/// the object's identity is the owner tag for subsets of its carrier;
/// two separately built copies of the same tables are distinct owners.
class FiniteSemimodule {
 public:
  FiniteSemimodule(const FiniteSemimodule&) = delete;
  FiniteSemimodule& operator=(const FiniteSemimodule&) = delete;

  const std::string& name() const { return tables_.name; }
  const FiniteSemiring& base() const { return *base_; }
  const SemiringPtr& base_ptr() const { return base_; }
  int order() const { return tables_.order; }
  int zero() const { return 0; }

  int add(int x, int y) const { return tables_.add[static_cast<std::size_t>(x) * tables_.order + y]; }
  int act(int s, int x) const { return tables_.action[static_cast<std::size_t>(s) * tables_.order + x]; }

  SubsetHandle carrier() const { return SubsetHandle::full(this, tables_.order); }
  SubsetHandle subset(std::uint64_t bits) const { return SubsetHandle(this, bits); }

  const RawModuleTables& tables() const { return tables_; }
  detail::MemoMap& memo() const { return memo_; }

 private:
  FiniteSemimodule(SemiringPtr base, RawModuleTables t)
      : base_(std::move(base)), tables_(std::move(t)) {}

  SemiringPtr base_;
  RawModuleTables tables_;
  mutable detail::MemoMap memo_;

  friend SemimodulePtr validate_semimodule(SemiringPtr base, RawModuleTables tables);
};

/// Checks table shape plus every semimodule axiom. Axiom check order:
/// module-add-identity, module-add-commutativity,
/// module-add-associativity, action-identity, action-compatibility,
/// action-add-distributivity, action-scalar-distributivity,
/// action-absorption.
SemimodulePtr validate_semimodule(SemiringPtr base, RawModuleTables tables);

/// S acting on itself through its own multiplication table.
SemimodulePtr semiring_as_module(const SemiringPtr& s, std::string name = "");

/// The ideal as a standalone semimodule; carrier is the ideal's
/// elements reindexed ascending (0 stays 0).
SemimodulePtr ideal_as_module(const SemiringPtr& s, const SubsetHandle& ideal, std::string name);

/// Nonempty, closed under add and under the action of every scalar.
bool is_subsemimodule(const FiniteSemimodule& m, const SubsetHandle& a);

/// Least subsemimodule containing the generators; {0} for none.
SubsetHandle generated_subsemimodule(const FiniteSemimodule& m, const std::vector<int>& gens);

/// Does the closure of G reach the whole carrier?
bool generates(const FiniteSemimodule& m, const std::vector<int>& gens);

/// Greedy generating set: repeatedly adjoin the smallest element not
/// yet in the closure. Deterministic; not guaranteed minimum-size.
std::vector<int> generating_set(const FiniteSemimodule& m);

/// Sx = {s·x : s in S}; already a subsemimodule.
SubsetHandle cyclic_subsemimodule(const FiniteSemimodule& m, int x);

/// Smallest x with Sx = M, if any.
std::optional<int> cyclic_generator(const FiniteSemimodule& m);
bool is_cyclic(const FiniteSemimodule& m);

/// All subsemimodules, ascending bit pattern. Memoized.
const std::vector<SubsetHandle>& all_subsemimodules(const FiniteSemimodule& m);
std::vector<SubsetHandle> all_subsemimodules(const FiniteSemimodule& m, EnumStrategy strategy);

/// (N : L) = {s : sL inside N}, an ideal of the base semiring.
SubsetHandle module_residual(const FiniteSemimodule& m, const SubsetHandle& n,
                             const SubsetHandle& l);

/// IM (or I·N for a subsemimodule N): additive closure of {a·x}.
SubsetHandle ideal_times_module(const FiniteSemimodule& m, const SubsetHandle& ideal);
SubsetHandle ideal_times_module(const FiniteSemimodule& m, const SubsetHandle& ideal,
                                const SubsetHandle& sub);

struct MultiplicationResult {
  bool holds = false;
  /// Smallest (by bit pattern) subsemimodule N with N != (N:M)M.
  std::optional<SubsetHandle> witness;
};

/// N = (N:M)M for every subsemimodule N.
MultiplicationResult is_multiplication(const FiniteSemimodule& m);

/// m + x = m + y implies x = y.
bool is_cancellative(const FiniteSemimodule& m);

/// Only the zero scalar annihilates all of M.
bool is_faithful(const FiniteSemimodule& m);

/// s·x = s'·x with x nonzero implies s = s'.
bool is_mc_semimodule(const FiniteSemimodule& m);

/// Every nonzero scalar acts injectively. Requires a semidomain base.
bool is_torsionfree(const FiniteSemimodule& m);

/// T_p(M) = {x : s·x = 0 for some s with s + q = 1, q in p}.
/// p must be a maximal ideal of the base.
SubsetHandle t_p_set(const FiniteSemimodule& m, const SubsetHandle& p);

struct PCyclicWitness {
  int m = 0;
  int t = 0;
  int q = 0;
};

/// First (m, t, q) in ascending order with q in p, t + q = 1 and
/// tM inside Sm; p must be maximal.
std::optional<PCyclicWitness> is_p_cyclic(const FiniteSemimodule& m, const SubsetHandle& p);

struct FixpointSet {
  SubsetHandle set;
  /// Whether the set happens to be a subsemimodule (always true under
  /// the cancellative/yoked/subtractive-maximal hypotheses).
  bool closed = false;
};

/// {x : x = q·x for some q in p}; p must be maximal.
FixpointSet fixpoint_set(const FiniteSemimodule& m, const SubsetHandle& p);

/// theta(M) = sum over all x of (Sx : M), an ideal of the base.
SubsetHandle theta(const FiniteSemimodule& m);

/// A verified S-homomorphism between semimodules over the same base.
struct HomTable {
  const FiniteSemimodule* source = nullptr;
  const FiniteSemimodule* target = nullptr;
  std::vector<int> map;

  int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
};

/// Exhaustive hom enumeration: images are assigned to the greedy
/// generating set (odometer order, last generator fastest) and
/// extended by closure; every produced table is fully re-verified.
/// Guards: |M| <= 12 and at most 2^24 assignments.
std::vector<HomTable> all_homs(const FiniteSemimodule& m, const FiniteSemimodule& n);

bool is_surjective(const HomTable& h);
bool is_injective(const HomTable& h);

/// A projectivity certificate: x = sum of phi_i(x)·m_i for all x.
struct DualBasis {
  std::vector<std::pair<int, HomTable>> pairs;
  /// Keepalive for the hom target (the base acting on itself).
  SemimodulePtr target;
};

/// Smallest-first exhaustive search for a dual basis with at most
/// `bound` pairs (bound <= |M|). nullopt means none within the bound —
/// a bounded-search outcome, not a disproof.
std::optional<DualBasis> dual_basis_certificate(const SemimodulePtr& m, int bound);

}  // namespace semiring_lab
