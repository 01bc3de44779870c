#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fincat/additive.hpp"
#include "fincat/word_oracle.hpp"

namespace fincat {

// Result of parsing one category file: the category, the distinguished class
// W, the optional preadditive tables and any declared literal strings.
struct ParsedCategory {
  FiniteCategory category;
  MorphClass w;
  std::optional<PreadditiveStructure> preadditive;
  std::vector<LiteralString> words;
};

// Line-oriented grammar, one declaration per line, '#' starts a comment:
//   object <name>
//   morphism <name> : <dom> -> <cod>
//   identity <obj> = <mor>
//   compose <g> . <f> = <h>
//   w <mor>
//   zero <A> <B> = <mor>
//   add <f> + <g> = <h>
//   neg <f> = <g>
//   word <sourceObj> : <lit>,<lit>,...      (~name is a formal inverse)
// Names are assigned dense ids in file order and must be declared before
// use. Every object needs an identity line and every composable pair a
// compose line; unlisted composites, unknown names and duplicate definitions
// are parse errors. Missing neg lines are derived from the add table when
// the inverse is unique; an ambiguous derivation is a parse error.
ParsedCategory parse_category_file(std::string_view text);
ParsedCategory load_category_file(const std::string& path);

// Canonical serialization; parsing it back reproduces the same value.
std::string serialize_category(const ParsedCategory& parsed);

// Functor files map names to names, one pair per line:
//   object <sourceObj> -> <targetObj>
//   morphism <sourceMor> -> <targetMor>
// Every source object and morphism must be mapped exactly once.
Functor parse_functor_file(std::string_view text, const FiniteCategory& source, const FiniteCategory& target);
Functor load_functor_file(const std::string& path, const FiniteCategory& source, const FiniteCategory& target);

// Roof literal "(f,w)" with morphism names.
Roof parse_roof_literal(std::string_view text, const FiniteCategory& c);

// Word specification "<sourceObj> : <lit>,<lit>,..." as in word lines.
LiteralString parse_word_spec(std::string_view text, const FiniteCategory& c, const MorphClass& w);

}  // namespace fincat
