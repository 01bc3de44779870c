#pragma once

#include <string>
#include <vector>

#include "fincat/fractions.hpp"

namespace fincat {

// A literal is a morphism of the host category or the formal inverse of a
// W-member. Inverse literals swap the endpoints of their morphism.
struct Literal {
  MorId mor = -1;
  bool inverse = false;

  bool operator==(const Literal&) const = default;
};

ObjId literal_dom(const FiniteCategory& c, Literal l);
ObjId literal_cod(const FiniteCategory& c, Literal l);

// A composable string of literals, written in composition order: the first
// literal is applied last. The empty string is an identity anchored at an
// object. `anchor` always holds the source object.
struct LiteralString {
  std::vector<Literal> literals;
  ObjId anchor = -1;

  bool operator==(const LiteralString&) const = default;
  int length() const { return static_cast<int>(literals.size()); }
};

// Builds a string after checking composability and that inverse literals are
// W-members; throws PreconditionError otherwise. For the empty string the
// anchor object must be supplied.
LiteralString make_string(const FiniteCategory& c, const MorphClass& w, std::vector<Literal> literals,
                          ObjId anchor_if_empty = -1);

ObjId string_source(const FiniteCategory& c, const LiteralString& s);
ObjId string_target(const FiniteCategory& c, const LiteralString& s);

// The two-literal string "w inverse after f" representing a roof.
LiteralString roof_string(const FiniteCategory& c, const MorphClass& w, Roof r);

// Human-readable form "<source> : lit,lit,..." with "~name" for inverses.
std::string string_spec(const FiniteCategory& c, const LiteralString& s);

// All strings reachable from s by one elementary equivalence applied in
// either direction at any position: dropping/inserting an identity literal,
// contracting/expanding a composable forward pair, and cancelling/inserting
// an adjacent inverse pair. Deduplicated, deterministic order.
std::vector<LiteralString> rewrite_step(const FiniteCategory& c, const MorphClass& w, const LiteralString& s);

enum class WordVerdict { Equal, Distinct, Unknown };

std::string_view verdict_name(WordVerdict v);

// Bidirectional breadth-first search through rewrite_step, restricted to
// strings of length <= max_len, spending at most max_steps expansions in
// total. Equal and Distinct verdicts are certain; Distinct is only reported
// when both reachable sets were exhausted without ever clipping a neighbor
// at the length bound.
WordVerdict word_equal(const FiniteCategory& c, const MorphClass& w, const LiteralString& s1,
                       const LiteralString& s2, int max_len, long max_steps);

inline constexpr long kDefaultMaxSteps = 100000;
int default_max_len(int longest_input);  // 2 * longest_input + 4

struct AgreementReport {
  long agree = 0;
  long unknown = 0;
  long total = 0;
};

struct DisagreementError : Error {
  Roof r1;
  Roof r2;
  WordVerdict word;
  bool same_class;
  DisagreementError(Roof a, Roof b, WordVerdict v, bool same, const std::string& message)
      : Error(message), r1(a), r2(b), word(v), same_class(same) {}
};

// Cross-checks the roof-class partition against the word oracle on every
// ordered pair of parallel roofs. Certified disagreement throws; unknowns are
// counted and reported.
AgreementReport oracle_compare(const FiniteCategory& c, const MorphClass& w, const FractionCategory& loc,
                               int max_len, long max_steps);

}  // namespace fincat
