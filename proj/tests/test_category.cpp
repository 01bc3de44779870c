#include <doctest.h>

#include <algorithm>

#include "fincat/category.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace fincat;
using namespace fincat::testsupport;

namespace {

const std::vector<std::string> kFixtureNames = {
    "DISCRETE2.cat", "INTERVAL.cat", "PARALLEL_NOCOEQ.cat", "SPLITMONO.cat",
    "RING_Z2.cat",   "RING_Z6.cat",  "RING_Z8.cat",         "MAT_F2.cat",
};

}  // namespace

TEST_CASE("validate_category accepts the fixtures") {
  for (const std::string& name : kFixtureNames) {
    ParsedCategory parsed = load_fixture(name);
    ValidationReport rep = validate_category(parsed.category);
    CHECK_MESSAGE(rep.ok(), (name + ": " + (rep.ok() ? "" : rep.violations.front())));
  }
}

TEST_CASE("validate_category flags a corrupted composite") {
  ParsedCategory parsed = load_fixture("INTERVAL.cat");
  FiniteCategory bad = parsed.category;
  bad.set_compose(mor(bad, "id_1"), mor(bad, "u"), mor(bad, "id_1"));
  ValidationReport rep = validate_category(bad);
  REQUIRE_FALSE(rep.ok());
  bool saw_coherence = false;
  for (const std::string& v : rep.violations)
    if (v.find("comp(id_1,u)") != std::string::npos && v.find("coherence") != std::string::npos)
      saw_coherence = true;
  CHECK(saw_coherence);
}

TEST_CASE("validate_category flags a broken associativity instance") {
  // redefine comp(p,p) = id_B: dom/cod still match but p.(m.e) != (p.m).e
  ParsedCategory parsed = load_fixture("SPLITMONO.cat");
  FiniteCategory bad = parsed.category;
  bad.set_compose(mor(bad, "p"), mor(bad, "p"), mor(bad, "id_B"));
  ValidationReport rep = validate_category(bad);
  REQUIRE_FALSE(rep.ok());
  bool saw_assoc = false;
  for (const std::string& v : rep.violations)
    if (v.find("associativity") != std::string::npos) saw_assoc = true;
  CHECK(saw_assoc);
}

TEST_CASE("the empty category is valid") {
  FiniteCategory empty;
  empty.init_comp_table();
  CHECK(validate_category(empty).ok());
}

TEST_CASE("opposite is an involution and preserves validity") {
  for (const std::string& name : kFixtureNames) {
    ParsedCategory parsed = load_fixture(name);
    FiniteCategory op = opposite(parsed.category);
    CHECK(validate_category(op).ok());
    CHECK(opposite(op) == parsed.category);
  }
}

TEST_CASE("opposite reverses the interval arrow") {
  ParsedCategory parsed = load_fixture("INTERVAL.cat");
  FiniteCategory op = opposite(parsed.category);
  MorId u = mor(op, "u");
  CHECK(op.dom(u) == obj(op, "1"));
  CHECK(op.cod(u) == obj(op, "0"));
  CHECK(opposite(parsed.category) == op);
}

TEST_CASE("opposite keeps DISCRETE2 unchanged") {
  ParsedCategory parsed = load_fixture("DISCRETE2.cat");
  CHECK(opposite(parsed.category) == parsed.category);
}

TEST_CASE("is_iso on the fixtures") {
  ParsedCategory interval = load_fixture("INTERVAL.cat");
  CHECK(is_iso(interval.category, mor(interval.category, "id_0")) == mor(interval.category, "id_0"));
  CHECK_FALSE(is_iso(interval.category, mor(interval.category, "u")).has_value());

  ParsedCategory z6 = load_fixture("RING_Z6.cat");
  CHECK(is_iso(z6.category, mor(z6.category, "5")) == mor(z6.category, "5"));
}

TEST_CASE("is_iso agrees with the exhaustive inverse search") {
  for (const std::string& name : kFixtureNames) {
    ParsedCategory parsed = load_fixture(name);
    for (MorId f = 0; f < parsed.category.num_morphisms(); ++f) {
      auto expected = oracle_two_sided_inverse(parsed.category, f);
      auto got = is_iso(parsed.category, f);
      CHECK(got == expected);
      if (got) CHECK(is_iso(parsed.category, *got) == f);  // inverses pair up
    }
  }
}

TEST_CASE("check_functor accepts the identity functor") {
  ParsedCategory parsed = load_fixture("INTERVAL.cat");
  CHECK(check_functor(parsed.category, parsed.category, identity_functor(parsed.category)).ok());
}

TEST_CASE("check_functor accepts the collapse of the interval") {
  ParsedCategory interval = load_fixture("INTERVAL.cat");
  ParsedCategory discrete = load_fixture("DISCRETE2.cat");
  Functor collapse;
  ObjId x = obj(discrete.category, "X");
  collapse.obj_map = {x, x};
  MorId idx = mor(discrete.category, "id_X");
  collapse.mor_map = {idx, idx, idx};
  CHECK(check_functor(interval.category, discrete.category, collapse).ok());
}

TEST_CASE("check_functor reports a cod mismatch with its witness") {
  ParsedCategory interval = load_fixture("INTERVAL.cat");
  Functor bad = identity_functor(interval.category);
  bad.mor_map[mor(interval.category, "u")] = mor(interval.category, "id_0");
  ValidationReport rep = check_functor(interval.category, interval.category, bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().find("morphism u") != std::string::npos);
  CHECK(rep.violations.front().find("cod not preserved") != std::string::npos);
}

TEST_CASE("split_monos matches the exhaustive left-inverse search") {
  for (const std::string& name : kFixtureNames) {
    ParsedCategory parsed = load_fixture(name);
    CHECK(split_monos(parsed.category).members() == oracle_split_monos(parsed.category));
    // identities always split
    for (ObjId a = 0; a < parsed.category.num_objects(); ++a)
      CHECK(split_monos(parsed.category).contains(parsed.category.identity(a)));
  }
}

TEST_CASE("split_monos on the named fixtures") {
  ParsedCategory discrete = load_fixture("DISCRETE2.cat");
  CHECK(split_monos(discrete.category).size() == 2);

  ParsedCategory sm = load_fixture("SPLITMONO.cat");
  MorphClass monos = split_monos(sm.category);
  CHECK(monos.members() == std::vector<MorId>{mor(sm.category, "id_A"), mor(sm.category, "id_B"),
                                              mor(sm.category, "m")});

  ParsedCategory interval = load_fixture("INTERVAL.cat");
  CHECK(split_monos(interval.category).members() ==
        std::vector<MorId>{mor(interval.category, "id_0"), mor(interval.category, "id_1")});
}
