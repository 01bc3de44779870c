#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/errors.hpp"

namespace fincat {

using ObjId = int;
using MorId = int;

struct MorphismRecord {
  std::string name;
  ObjId dom = -1;
  ObjId cod = -1;

  bool operator==(const MorphismRecord&) const = default;
};

// A finite category given by explicit tables. Object and morphism ids are
// dense indices in definition order; the composition table stores -1 for
// non-composable pairs. Instances are treated as immutable once built.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<MorphismRecord> morphisms;
  std::vector<MorId> identities;  // indexed by object id
  std::vector<MorId> comp_table;  // comp_table[g * num_morphisms() + f] = g after f

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }

  ObjId dom(MorId f) const { return morphisms[f].dom; }
  ObjId cod(MorId f) const { return morphisms[f].cod; }
  MorId identity(ObjId a) const { return identities[a]; }

  const std::string& obj_name(ObjId a) const { return objects[a]; }
  const std::string& mor_name(MorId f) const { return morphisms[f].name; }

  bool composable(MorId g, MorId f) const { return cod(f) == dom(g); }
  MorId compose(MorId g, MorId f) const { return comp_table[g * num_morphisms() + f]; }

  void init_comp_table() { comp_table.assign(static_cast<size_t>(num_morphisms()) * num_morphisms(), -1); }
  void set_compose(MorId g, MorId f, MorId h) { comp_table[g * num_morphisms() + f] = h; }

  std::optional<ObjId> object_id(std::string_view name) const;
  std::optional<MorId> morphism_id(std::string_view name) const;

  bool operator==(const FiniteCategory&) const = default;
};

// A subclass of the morphisms of a fixed host category.
class MorphClass {
 public:
  MorphClass() = default;
  explicit MorphClass(int num_morphisms) : bits_(num_morphisms, false) {}
  MorphClass(int num_morphisms, std::initializer_list<MorId> members) : bits_(num_morphisms, false) {
    for (MorId f : members) insert(f);
  }

  static MorphClass identities_of(const FiniteCategory& c);

  bool contains(MorId f) const { return f >= 0 && f < capacity() && bits_[f]; }
  void insert(MorId f) { bits_.at(f) = true; }

  int capacity() const { return static_cast<int>(bits_.size()); }
  int size() const;
  std::vector<MorId> members() const;  // ascending

  bool operator==(const MorphClass&) const = default;

 private:
  std::vector<bool> bits_;
};

// Object and morphism maps; the source and target categories are supplied at
// the call sites that need them.
struct Functor {
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  bool operator==(const Functor&) const = default;
};

Functor identity_functor(const FiniteCategory& c);

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Exhaustively checks every category axiom instance and lists each violation
// with its witness. A well-formed report on an invalid table still names
// every offending pair/triple, so reports stay re-checkable by hand.
ValidationReport validate_category(const FiniteCategory& c);

// Swaps dom/cod and transposes the composition table; involutive.
FiniteCategory opposite(const FiniteCategory& c);

// Two-sided inverse of f, if one exists. Two-sided inverses are unique.
std::optional<MorId> is_iso(const FiniteCategory& c, MorId f);

// Checks dom/cod, identity and composition preservation by exhaustive table
// scan; stops at the first violation and reports its witness.
ValidationReport check_functor(const FiniteCategory& source, const FiniteCategory& target, const Functor& f);

// All morphisms with a left inverse. Contains every identity.
MorphClass split_monos(const FiniteCategory& c);

}  // namespace fincat
