#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

// Left roof (f, w): a pair of morphisms with a common codomain whose w-leg
// lies in the distinguished class W. It stands for the fraction "w inverse
// after f", going from dom(f) to dom(w).
struct Roof {
  MorId f = -1;
  MorId w = -1;

  bool operator==(const Roof&) const = default;
  // Canonical order: W-leg first. Class representatives are minimal in it.
  bool operator<(const Roof& o) const { return w != o.w ? w < o.w : f < o.f; }
};

ObjId roof_source(const FiniteCategory& c, Roof r);
ObjId roof_target(const FiniteCategory& c, Roof r);
ObjId roof_apex(const FiniteCategory& c, Roof r);
bool roof_valid(const FiniteCategory& c, const MorphClass& w, Roof r);
std::string roof_name(const FiniteCategory& c, Roof r);  // "(f,w)" with morphism names

// Witness (g, h) for the equivalence of two parallel roofs: g and h close the
// two squares and the common composite g w1 = h w2 lies in W (or in the
// generated class W_L when `weak` is set).
struct EquivWitness {
  MorId g = -1;
  MorId h = -1;
  bool weak = false;

  bool operator==(const EquivWitness&) const = default;
};

// Completion square for a W-leg w and a morphism f sharing its domain:
// w_prime in W and f_prime with w_prime f = f_prime w.
struct L1Witness {
  MorId f_prime = -1;
  MorId w_prime = -1;

  bool operator==(const L1Witness&) const = default;
};

enum class AxiomId { L0, L1, L2, L1Prime, L2Prime, L2DoublePrime };

std::string_view axiom_name(AxiomId id);  // "L0", "L1", "L2", "L1'", "L2'", "L2''"

struct AxiomWitness {
  enum class Kind {
    MissingIdentity,  // a: identity morphism absent from W
    NotClosed,        // a, b in W composable; c = a after b not in W
    NoSquare,         // a = w, b = f: no completion square exists
    NoCoequalizer,    // a = w, b = f1, c = f2: no equalizing w' exists
    NoAnnihilator,    // a = w, b = f: f w = 0 but no w' with w' f = 0
  };

  Kind kind;
  MorId a = -1;
  MorId b = -1;
  MorId c = -1;

  bool operator==(const AxiomWitness&) const = default;
};

struct AxiomReport {
  AxiomId axiom;
  bool holds = true;
  std::vector<AxiomWitness> witnesses;  // empty when the axiom holds; first
                                        // counterexample only unless the
                                        // checker was asked for all of them
};

// Stable line format: "axiom L2: holds" or
// "axiom L2: FAILS witness w=<name> f1=<name> f2=<name>". One line per witness.
std::string to_lines(const AxiomReport& report, const FiniteCategory& c);

struct AxiomFailureError : Error {
  AxiomReport report;
  AxiomFailureError(AxiomReport r, const FiniteCategory& c);
};

// W contains all identities and is closed under composition.
AxiomReport check_l0(const FiniteCategory& c, const MorphClass& w, bool all_witnesses = false);

// Smallest superset of W plus all identities closed under composition.
MorphClass saturate(const FiniteCategory& c, const MorphClass& w);

// Every cospan (w, f) with a common domain admits a completion square.
AxiomReport check_l1(const FiniteCategory& c, const MorphClass& w, bool all_witnesses = false);

// Every pair equalized by a W-morphism on the right is coequalized by one on
// the left.
AxiomReport check_l2(const FiniteCategory& c, const MorphClass& w, bool all_witnesses = false);

// One factor of a W_L decomposition: a member of W or a split mono.
struct WLFactor {
  MorId mor = -1;
  bool split_mono = false;

  bool operator==(const WLFactor&) const = default;
};

struct WLClosure {
  MorphClass members;
  // Per member, one derivation as a list of factors in composition order
  // (first factor applied last). Empty for non-members.
  std::vector<std::vector<WLFactor>> decomposition;
};

// The class generated by W together with all split monos, with one recorded
// decomposition per member.
WLClosure generate_wl(const FiniteCategory& c, const MorphClass& w);

// As check_l2, but the coequalizing morphism may come from generate_wl(c, w).
AxiomReport check_l2_prime(const FiniteCategory& c, const MorphClass& w, bool all_witnesses = false);

// As check_l1, but quantified over legs in generate_wl(c, w); the completing
// leg must still lie in W.
AxiomReport check_l1_prime(const FiniteCategory& c, const MorphClass& w, bool all_witnesses = false);

// Given w_prime in W_L with the supplied decomposition, produces k such that
// k w_prime lies in W. Requires L0 and L1; throws NoWitnessError when a
// completion square is missing mid-iteration (a precondition violation).
MorId find_k(const FiniteCategory& c, const MorphClass& w, MorId w_prime, std::span<const WLFactor> decomposition);

// Smallest completion square for (w, f) in lexicographic (w_prime, f_prime)
// id order; throws NoWitnessError when none exists.
L1Witness l1_complete(const FiniteCategory& c, const MorphClass& w, MorId w_leg, MorId f);

// Smallest witness (g, h) making two parallel roofs equivalent, or nothing.
std::optional<EquivWitness> roof_equivalent(const FiniteCategory& c, const MorphClass& w, Roof r1, Roof r2);

// Same search with the common composite only required in generate_wl(c, w).
std::optional<EquivWitness> roof_equivalent_weak(const FiniteCategory& c, const MorphClass& w, Roof r1, Roof r2);

// Connectivity in the symmetric-transitive closure of single commutative
// triangles between parallel roofs, computed by union-find.
bool roof_equivalent_generated(const FiniteCategory& c, const MorphClass& w, Roof r1, Roof r2);

// All roofs from source to target, ascending in canonical (w, f) order.
std::vector<Roof> roofs_between(const FiniteCategory& c, const MorphClass& w, ObjId source, ObjId target);

// Partition of `roofs` (assumed sorted ascending) by the generated
// equivalence; class indices are assigned in order of each class's minimal
// member.
std::vector<int> partition_roofs_generated(const FiniteCategory& c, const MorphClass& w,
                                           const std::vector<Roof>& roofs);

// Composite roof via a completion square between the inner legs.
Roof compose_roofs(const FiniteCategory& c, const MorphClass& w, Roof r1, Roof r2);

// Roof classes of one ordered object pair.
struct RoofClasses {
  std::vector<Roof> roofs;      // ascending (w, f)
  std::vector<int> class_of;    // parallel to roofs
  std::vector<Roof> reps;       // canonical (minimal) representative per class
  std::vector<MorId> class_mor; // morphism id in the localized category per class

  int num_classes() const { return static_cast<int>(reps.size()); }
  int index_of(Roof r) const;   // -1 if r is not a roof of this pair
};

// The category of fractions: the localized category, the localization functor
// (object map is the identity) and the full roof-class tables. `roof_host` is
// the category whose tables interpret the stored roofs; it is the source
// category itself for left fractions and its opposite for right fractions.
struct FractionCategory {
  FiniteCategory base;
  FiniteCategory roof_host;
  std::vector<MorId> loc_mor;     // source morphism id -> base morphism id
  std::vector<RoofClasses> hom;   // indexed source * base.num_objects() + target
  bool right_fractions = false;

  const RoofClasses& classes(ObjId source, ObjId target) const {
    return hom[source * base.num_objects() + target];
  }
  // Morphism of `base` represented by r; r must be a valid roof of roof_host.
  MorId class_morphism(Roof r) const;
  Roof canonical_rep(Roof r) const;
  Functor loc() const;
};

// Builds the category of fractions. Verifies L0, L1 and L2 first and throws
// AxiomFailureError with the counterexample when one fails. The partition by
// the generated relation is cross-checked against the pairwise witness search
// as an internal invariant.
FractionCategory localize(const FiniteCategory& c, const MorphClass& w);

// Right-fraction localization via the opposite category.
FractionCategory localize_right(const FiniteCategory& c, const MorphClass& w);

// The unique functor through the localization: maps the class of (f, w) to
// F(w)^-1 F(f). Throws NotLocalError when some F(w) is not invertible.
// Verifies functoriality, the factorization G after loc = F, and that every
// class decomposes through loc images (which forces uniqueness).
Functor factor_functor(const FiniteCategory& c, const MorphClass& w, const FractionCategory& loc,
                       const FiniteCategory& target, const Functor& f);

// Full localization report: per ordered object pair a "hom <A> <B>: <n>
// classes" line followed by one "class <i>: (<f>,<w>)" line per class.
std::string localization_report(const FractionCategory& loc);
std::string hom_report(const FractionCategory& loc, ObjId source, ObjId target);

}  // namespace fincat
