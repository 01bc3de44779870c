#include <doctest.h>

#include "fincat/parser.hpp"
#include "support/fixtures.hpp"

using namespace fincat;
using namespace fincat::testsupport;

TEST_CASE("parsing the interval fixture") {
  ParsedCategory parsed = load_fixture("INTERVAL.cat");
  CHECK(parsed.category.num_objects() == 2);
  CHECK(parsed.category.num_morphisms() == 3);
  CHECK(parsed.w.size() == 3);
  CHECK_FALSE(parsed.preadditive.has_value());
  // ids follow file order
  CHECK(parsed.category.mor_name(0) == "id_0");
  CHECK(parsed.category.mor_name(2) == "u");
}

TEST_CASE("parsing RING_Z6 yields the additive tables") {
  ParsedCategory parsed = load_fixture("RING_Z6.cat");
  REQUIRE(parsed.preadditive.has_value());
  const PreadditiveStructure& p = *parsed.preadditive;
  CHECK(p.zero_of(0, 0) == mor(parsed.category, "0"));
  CHECK(p.add(mor(parsed.category, "4"), mor(parsed.category, "5")) == mor(parsed.category, "3"));
  CHECK(p.neg(mor(parsed.category, "2")) == mor(parsed.category, "4"));
  CHECK(parsed.w.members() == std::vector<MorId>{1, 3});
}

TEST_CASE("a non-composable compose line is rejected") {
  const char* text =
      "object 0\nobject 1\n"
      "morphism id_0 : 0 -> 0\nmorphism id_1 : 1 -> 1\nmorphism u : 0 -> 1\n"
      "identity 0 = id_0\nidentity 1 = id_1\n"
      "compose u . id_0 = u\ncompose id_0 . id_0 = id_0\ncompose id_1 . id_1 = id_1\n"
      "compose u . id_1 = u\n";
  CHECK_THROWS_WITH_AS(parse_category_file(text), "line 11: pair is not composable: cod(id_1) != dom(u)",
                       ParseError);
}

TEST_CASE("missing composites and identities are rejected") {
  CHECK_THROWS_AS(parse_category_file("object A\n"), ParseError);
  const char* no_comp =
      "object A\nmorphism id_A : A -> A\nidentity A = id_A\nmorphism f : A -> A\n"
      "compose id_A . id_A = id_A\ncompose f . id_A = f\ncompose id_A . f = f\n";
  CHECK_THROWS_WITH_AS(parse_category_file(no_comp), "missing composite for 'f . f'", ParseError);
}

TEST_CASE("duplicate and unknown names are rejected with line numbers") {
  CHECK_THROWS_WITH_AS(parse_category_file("object A\nobject A\n"), "line 2: duplicate object 'A'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_category_file("morphism f : A -> B\n"), "line 1: unknown object 'A'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_category_file("object A\nnonsense A\n"), "line 2: unknown directive 'nonsense'",
                       ParseError);
}

TEST_CASE("an ambiguous derived negation is rejected") {
  // add table where both m0 and m1 cancel m0, which only happens when the
  // table is not a group; the parser refuses to guess
  const char* text =
      "object A\n"
      "morphism m0 : A -> A\nmorphism m1 : A -> A\n"
      "identity A = m0\n"
      "compose m0 . m0 = m0\ncompose m0 . m1 = m1\ncompose m1 . m0 = m1\ncompose m1 . m1 = m1\n"
      "zero A A = m0\n"
      "add m0 + m0 = m0\nadd m0 + m1 = m0\nadd m1 + m0 = m0\nadd m1 + m1 = m1\n";
  CHECK_THROWS_WITH_AS(parse_category_file(text),
                       "ambiguous negation for 'm0': both 'm0' and 'm1' cancel it", ParseError);
}

TEST_CASE("parse-serialize round trip is the identity on every fixture") {
  for (const char* name : {"DISCRETE2.cat", "INTERVAL.cat", "INTERVAL_WORDS.cat", "PARALLEL_NOCOEQ.cat",
                           "SPLITMONO.cat", "RING_Z2.cat", "RING_Z6.cat", "RING_Z8.cat", "MAT_F2.cat"}) {
    ParsedCategory first = load_fixture(name);
    ParsedCategory second = parse_category_file(serialize_category(first));
    CHECK(first.category == second.category);
    CHECK(first.w == second.w);
    CHECK(first.preadditive == second.preadditive);
    CHECK(first.words == second.words);
  }
}

TEST_CASE("the empty file parses to the empty category") {
  ParsedCategory parsed = parse_category_file("");
  CHECK(parsed.category.num_objects() == 0);
  CHECK(parsed.category.num_morphisms() == 0);
  ParsedCategory again = parse_category_file(serialize_category(parsed));
  CHECK(parsed.category == again.category);
}

TEST_CASE("word lines parse against the declared W") {
  const char* text =
      "object 0\nobject 1\n"
      "morphism id_0 : 0 -> 0\nmorphism id_1 : 1 -> 1\nmorphism u : 0 -> 1\n"
      "identity 0 = id_0\nidentity 1 = id_1\n"
      "compose id_0 . id_0 = id_0\ncompose id_1 . id_1 = id_1\n"
      "compose id_1 . u = u\ncompose u . id_0 = u\n"
      "w id_0\nw id_1\nw u\n"
      "word 0 : ~u,u\n"
      "word 0 :\n";
  ParsedCategory parsed = parse_category_file(text);
  REQUIRE(parsed.words.size() == 2);
  CHECK(parsed.words[0].literals.size() == 2);
  CHECK(parsed.words[0].literals[0].inverse);
  CHECK(parsed.words[1].literals.empty());
  CHECK(parsed.words[1].anchor == 0);
}

TEST_CASE("word lines with a non-W inverse are rejected") {
  const char* text =
      "object 0\nobject 1\n"
      "morphism id_0 : 0 -> 0\nmorphism id_1 : 1 -> 1\nmorphism u : 0 -> 1\n"
      "identity 0 = id_0\nidentity 1 = id_1\n"
      "compose id_0 . id_0 = id_0\ncompose id_1 . id_1 = id_1\n"
      "compose id_1 . u = u\ncompose u . id_0 = u\n"
      "w id_0\nw id_1\n"
      "word 0 : ~u,u\n";
  CHECK_THROWS_AS(parse_category_file(text), ParseError);
}

TEST_CASE("functor files resolve names against both categories") {
  ParsedCategory interval = load_fixture("INTERVAL.cat");
  ParsedCategory discrete = load_fixture("DISCRETE2.cat");
  Functor f = load_functor_file(fixture_path("maps/INTERVAL_to_DISCRETE2.fun"), interval.category,
                                discrete.category);
  CHECK(check_functor(interval.category, discrete.category, f).ok());
  CHECK_THROWS_AS(parse_functor_file("object 0 -> X\n", interval.category, discrete.category), ParseError);
}

TEST_CASE("roof literals parse to morphism pairs") {
  ParsedCategory interval = load_fixture("INTERVAL.cat");
  Roof r = parse_roof_literal("(u,id_1)", interval.category);
  CHECK(r.f == mor(interval.category, "u"));
  CHECK(r.w == mor(interval.category, "id_1"));
  CHECK_THROWS_AS(parse_roof_literal("(u id_1)", interval.category), ParseError);
  CHECK_THROWS_AS(parse_roof_literal("(nope,id_1)", interval.category), ParseError);
}

TEST_CASE("word specs parse like word lines") {
  ParsedCategory interval = load_fixture("INTERVAL.cat");
  LiteralString s = parse_word_spec("0 : ~u,u", interval.category, interval.w);
  CHECK(s.literals.size() == 2);
  CHECK(string_source(interval.category, s) == obj(interval.category, "0"));
  CHECK(string_target(interval.category, s) == obj(interval.category, "0"));
  CHECK_THROWS_AS(parse_word_spec("1 : ~u,u", interval.category, interval.w), ParseError);
}
