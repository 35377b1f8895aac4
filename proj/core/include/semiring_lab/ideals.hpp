#pragma once

#include <vector>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// Classification flags for one ideal. The whole semiring counts as an
/// ideal; `proper` distinguishes it. maximal implies proper and prime.
struct IdealFlags {
  bool proper = false;
  bool subtractive = false;
  bool prime = false;
  bool maximal = false;
};

struct IdealInfo {
  SubsetHandle set;
  IdealFlags flags;
};

/// Enumeration strategy. kScan walks all 2^n subsets and is the ground
/// truth for orders up to 16; kClosure generates from small generator
/// sets and saturates under sums. kAuto picks scan when it fits.
enum class EnumStrategy { kAuto, kScan, kClosure };

/// Nonempty, closed under + and under multiplication by any element.
bool is_ideal(const FiniteSemiring& s, const SubsetHandle& a);

/// Smallest ideal containing the generators; {0} for an empty list.
SubsetHandle generated_ideal(const FiniteSemiring& s, const std::vector<int>& gens);

/// All ideals with flags, ordered by ascending bit pattern. Memoized.
const std::vector<IdealInfo>& all_ideals(const FiniteSemiring& s);

/// Uncached variant with an explicit strategy, for oracle comparisons.
std::vector<IdealInfo> all_ideals(const FiniteSemiring& s, EnumStrategy strategy);

std::vector<SubsetHandle> maximal_ideals(const FiniteSemiring& s);
std::vector<SubsetHandle> prime_ideals(const FiniteSemiring& s);

bool is_subtractive(const FiniteSemiring& s, const SubsetHandle& ideal);
bool is_prime_ideal(const FiniteSemiring& s, const SubsetHandle& ideal);
bool is_maximal_ideal(const FiniteSemiring& s, const SubsetHandle& ideal);

/// I + J: pairwise sums, the smallest ideal containing both.
SubsetHandle ideal_sum(const FiniteSemiring& s, const SubsetHandle& i, const SubsetHandle& j);

/// IJ: additive closure of the pairwise products.
SubsetHandle ideal_product(const FiniteSemiring& s, const SubsetHandle& i, const SubsetHandle& j);

/// (I : J) = elements s with sJ inside I.
SubsetHandle ideal_residual(const FiniteSemiring& s, const SubsetHandle& i, const SubsetHandle& j);

}  // namespace semiring_lab
