#pragma once

#include "semiring_lab/semimodule.hpp"

namespace semiring_lab {

/// A multiplicatively closed subset of a semiring, the denominator set
/// for localization. 1 is adjoined when absent (recorded).
struct MultClosedSet {
  SemiringPtr owner;
  SubsetHandle members;
  bool one_adjoined = false;
};

/// Verifies closure under multiplication and nonemptiness, adjoins 1
/// if needed. Throws NotMultClosed otherwise.
MultClosedSet make_mult_closed(const SemiringPtr& s, const SubsetHandle& members);

/// T^{-1}S: the quotient of S x T by (a,t) ~ (a',t') iff there is an
/// s in T with s·t·a' = s·t'·a. Built by union-find over the pairwise
/// relation; transitivity of the raw relation and well-definedness of
/// the induced tables are audited exhaustively at construction.
/// Class 0 is the class of (0, t); the result is re-validated as a
/// semiring. Throws PreconditionUnmet when 0 is in T (the quotient
/// collapses below the representable minimum order).
struct LocalizedSemiring {
  SemiringPtr source;
  MultClosedSet tset;
  SemiringPtr result;
  /// Ascending elements of T.
  std::vector<int> t_elements;
  /// class_table[a * |T| + ti] = class of a / t_elements[ti].
  std::vector<int> class_table;
  /// a -> class of a/1.
  std::vector<int> embedding;

  int class_of(int element, int denominator) const;
  bool embedding_injective() const;
};

LocalizedSemiring localize_semiring(const SemiringPtr& s, const MultClosedSet& t);

/// T^{-1}M with its T^{-1}S structure and, in parallel, the same
/// carrier viewed as a module over the original S (s·(x/u) = sx/u).
struct LocalizedSemimodule {
  SemimodulePtr source;
  LocalizedSemiring base;
  /// T^{-1}M over T^{-1}S.
  SemimodulePtr result;
  /// The same classes as an S-semimodule.
  SemimodulePtr result_over_source;
  std::vector<int> class_table;
  std::vector<int> embedding;

  int class_of(int element, int denominator) const;

  /// Image of a subset of M under x -> x/1 ... x/t (all denominators).
  SubsetHandle localize_subset(const SubsetHandle& sub) const;
};

LocalizedSemimodule localize_semimodule(const SemimodulePtr& m, const MultClosedSet& t);

/// Image of an ideal of S in T^{-1}S (all classes a/t with a in I).
SubsetHandle localize_ideal(const LocalizedSemiring& loc, const SubsetHandle& ideal);

/// S_p / M_p: localization at the complement of a prime ideal.
LocalizedSemiring localize_at_prime(const SemiringPtr& s, const SubsetHandle& p);
LocalizedSemimodule localize_at_prime(const SemimodulePtr& m, const SubsetHandle& p);

/// Q(S): localization at the MC elements. The embedding S -> Q(S) is
/// injective by construction (checked).
LocalizedSemiring total_quotient(const SemiringPtr& s);

/// A subsemimodule of Q(S)-as-S-module together with an MC common
/// denominator pushing it into the image of S.
struct FractionalIdeal {
  SubsetHandle members;
  int denominator = 0;
};

/// Q(S) with its S-module structure, the embedded image of S, and the
/// complete list of fractional ideals (ascending bit pattern).
/// Enumeration guard: |Q(S)| <= 16.
struct QuotientContext {
  LocalizedSemiring loc;
  SemimodulePtr q_as_module;
  SubsetHandle s_image;
  std::vector<FractionalIdeal> fractional_ideals;

  /// Fractional-ideal product: additive closure of pairwise products.
  SubsetHandle product(const SubsetHandle& a, const SubsetHandle& b) const;
};

QuotientContext quotient_context(const SemiringPtr& s);

struct InvertibilityResult {
  bool invertible = false;
  /// The inverse fractional ideal J with I·J = S, when invertible.
  std::optional<SubsetHandle> inverse;
};

/// Searches the fractional ideals of a prebuilt context.
InvertibilityResult invertibility_witness(const QuotientContext& ctx, const SubsetHandle& ideal);

/// Convenience wrapper building the context on the fly.
InvertibilityResult is_invertible_ideal(const SemiringPtr& s, const SubsetHandle& ideal);

/// An embedding of M into S-as-module whose image is an (invertible)
/// ideal of S.
struct IdealImage {
  SubsetHandle ideal;
  HomTable hom;
  SemimodulePtr target;
};

/// For M over a semidomain: the smallest injective hom M -> S whose
/// image is an invertible ideal. nullopt when M is not an MC
/// multiplication semimodule or no such hom exists. Throws
/// PreconditionUnmet when the base is not a semidomain.
std::optional<IdealImage> isomorphic_ideal_image(const SemimodulePtr& m);

}  // namespace semiring_lab
