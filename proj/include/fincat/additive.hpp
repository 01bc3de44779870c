#pragma once

#include <optional>
#include <vector>

#include "fincat/fractions.hpp"

namespace fincat {

// Abelian-group tables on every hom-set of a host category: a zero morphism
// per ordered object pair, a total addition table on parallel morphisms and a
// negation table. Entries are -1 where undefined; validate_preadditive
// reports every gap and axiom violation.
struct PreadditiveStructure {
  int num_objects = 0;
  int num_morphisms = 0;
  std::vector<MorId> zero;       // indexed a * num_objects + b
  std::vector<MorId> add_table;  // indexed f * num_morphisms + g, -1 off the parallel diagonal
  std::vector<MorId> neg_table;  // indexed by morphism id

  static PreadditiveStructure empty_for(int objects, int morphisms);

  MorId zero_of(ObjId a, ObjId b) const { return zero[a * num_objects + b]; }
  MorId add(MorId f, MorId g) const { return add_table[static_cast<size_t>(f) * num_morphisms + g]; }
  MorId neg(MorId f) const { return neg_table[f]; }
  void set_add(MorId f, MorId g, MorId s) { add_table[static_cast<size_t>(f) * num_morphisms + g] = s; }

  bool operator==(const PreadditiveStructure&) const = default;
};

// Exhaustive check of the preadditive axioms: totality, abelian-group laws on
// every hom-set, bilinearity of composition and absorption by zeros.
ValidationReport validate_preadditive(const FiniteCategory& c, const PreadditiveStructure& p);

// The same structure seen from the opposite category: zeros swap hom-sets,
// addition and negation are indexed by morphisms and stay put.
PreadditiveStructure opposite_preadditive(const PreadditiveStructure& p);

// Two parallel roofs rewritten over a single W-leg.
struct CommonDenominator {
  MorId f1 = -1;
  MorId f2 = -1;
  MorId w = -1;
};

// Rewrites two parallel roofs as fractions with a common W-leg, obtained from
// the completion square of their W-legs. Each output roof is equivalent to
// its input.
CommonDenominator common_denominator(const FiniteCategory& c, const MorphClass& w, Roof r1, Roof r2);

// Addition of parallel roofs over a common denominator. The class of the
// result depends only on the classes of the summands.
Roof add_roofs(const FiniteCategory& c, const MorphClass& w, const PreadditiveStructure& p, Roof r1, Roof r2);

Roof negate_roof(const FiniteCategory& c, const PreadditiveStructure& p, Roof r);
Roof zero_roof(const FiniteCategory& c, const PreadditiveStructure& p, ObjId a, ObjId b);

// Additive variant of the coequalizing axiom: whenever f w = 0 there is w' in
// W with w' f = 0. On preadditive categories its verdict matches check_l2.
AxiomReport check_l2_doubleprime(const FiniteCategory& c, const MorphClass& w, const PreadditiveStructure& p,
                                 bool all_witnesses = false);

struct BiproductDiagram {
  ObjId p = -1;
  MorId i1 = -1;
  MorId i2 = -1;
  MorId p1 = -1;
  MorId p2 = -1;

  bool operator==(const BiproductDiagram&) const = default;
};

// Exhaustive search for a biproduct of (a, b); smallest candidate tuple in
// (p, i1, i2, p1, p2) id order.
std::optional<BiproductDiagram> find_biproduct(const FiniteCategory& c, const PreadditiveStructure& p,
                                               ObjId a, ObjId b);

// Objects whose identity is the zero endomorphism.
std::vector<ObjId> zero_objects(const FiniteCategory& c, const PreadditiveStructure& p);

// The preadditive structure induced on the localized category: addition and
// negation are tabulated once on canonical roof representatives; zeros are
// the images of the zeros of c.
PreadditiveStructure induced_preadditive(const FiniteCategory& c, const MorphClass& w,
                                         const PreadditiveStructure& p, const FractionCategory& loc);

// Certifies that the localization is preadditive: validates the induced
// structure, checks that the localization functor is additive and that every
// biproduct diagram found in c maps to a biproduct diagram in the localized
// category. An empty report is the expected outcome.
ValidationReport check_additive_localization(const FiniteCategory& c, const MorphClass& w,
                                             const PreadditiveStructure& p);

}  // namespace fincat
