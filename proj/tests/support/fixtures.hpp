#pragma once

#include <string>

#include "fincat/parser.hpp"

namespace fincat::testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(FINCAT_FIXTURES_DIR) + "/" + name;
}

inline ParsedCategory load_fixture(const std::string& name) {
  return load_category_file(fixture_path(name));
}

// Morphism id by name; fixtures only use names that exist.
inline MorId mor(const FiniteCategory& c, const std::string& name) {
  auto id = c.morphism_id(name);
  if (!id) throw std::runtime_error("fixture morphism not found: " + name);
  return *id;
}

inline ObjId obj(const FiniteCategory& c, const std::string& name) {
  auto id = c.object_id(name);
  if (!id) throw std::runtime_error("fixture object not found: " + name);
  return *id;
}

}  // namespace fincat::testsupport
