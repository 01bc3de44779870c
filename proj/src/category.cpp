#include "fincat/category.hpp"

#include <algorithm>

namespace fincat {

std::optional<ObjId> FiniteCategory::object_id(std::string_view name) const {
  for (ObjId a = 0; a < num_objects(); ++a)
    if (objects[a] == name) return a;
  return std::nullopt;
}

std::optional<MorId> FiniteCategory::morphism_id(std::string_view name) const {
  for (MorId f = 0; f < num_morphisms(); ++f)
    if (morphisms[f].name == name) return f;
  return std::nullopt;
}

MorphClass MorphClass::identities_of(const FiniteCategory& c) {
  MorphClass out(c.num_morphisms());
  for (ObjId a = 0; a < c.num_objects(); ++a) out.insert(c.identity(a));
  return out;
}

int MorphClass::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<MorId> MorphClass::members() const {
  std::vector<MorId> out;
  for (MorId f = 0; f < capacity(); ++f)
    if (bits_[f]) out.push_back(f);
  return out;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  f.obj_map.resize(c.num_objects());
  f.mor_map.resize(c.num_morphisms());
  for (ObjId a = 0; a < c.num_objects(); ++a) f.obj_map[a] = a;
  for (MorId m = 0; m < c.num_morphisms(); ++m) f.mor_map[m] = m;
  return f;
}

namespace {

std::string arrow(const FiniteCategory& c, MorId f) {
  return c.mor_name(f) + " : " + c.obj_name(c.dom(f)) + " -> " + c.obj_name(c.cod(f));
}

}  // namespace

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport rep;
  const int n = c.num_objects();
  const int m = c.num_morphisms();

  if (static_cast<int>(c.identities.size()) != n) {
    rep.violations.push_back("identity map does not cover every object");
    return rep;
  }
  if (c.comp_table.size() != static_cast<size_t>(m) * m) {
    rep.violations.push_back("composition table has wrong size");
    return rep;
  }

  bool shape_ok = true;
  for (MorId f = 0; f < m; ++f) {
    if (c.dom(f) < 0 || c.dom(f) >= n || c.cod(f) < 0 || c.cod(f) >= n) {
      rep.violations.push_back("morphism " + c.mor_name(f) + ": dom/cod out of range");
      shape_ok = false;
    }
  }
  for (ObjId a = 0; a < n; ++a) {
    MorId i = c.identities[a];
    if (i < 0 || i >= m) {
      rep.violations.push_back("identity of " + c.obj_name(a) + ": missing");
      shape_ok = false;
    } else if (c.dom(i) != a || c.cod(i) != a) {
      rep.violations.push_back("identity of " + c.obj_name(a) + ": " + c.mor_name(i) +
                               " is not an endomorphism of " + c.obj_name(a));
    }
  }
  if (!shape_ok) return rep;

  for (MorId g = 0; g < m; ++g) {
    for (MorId f = 0; f < m; ++f) {
      MorId h = c.compose(g, f);
      if (c.composable(g, f)) {
        if (h < 0 || h >= m) {
          rep.violations.push_back("comp(" + c.mor_name(g) + "," + c.mor_name(f) +
                                   "): undefined for composable pair");
        } else if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g)) {
          rep.violations.push_back("comp(" + c.mor_name(g) + "," + c.mor_name(f) + ") = " + c.mor_name(h) +
                                   ": dom/cod coherence violated, got " + c.obj_name(c.dom(h)) + " -> " +
                                   c.obj_name(c.cod(h)) + ", expected " + c.obj_name(c.dom(f)) + " -> " +
                                   c.obj_name(c.cod(g)));
        }
      } else if (h != -1) {
        rep.violations.push_back("comp(" + c.mor_name(g) + "," + c.mor_name(f) +
                                 "): defined but pair is not composable");
      }
    }
  }

  for (MorId f = 0; f < m; ++f) {
    MorId left = c.identity(c.cod(f));
    MorId h = c.compose(left, f);
    if (h != f)
      rep.violations.push_back("left identity law violated: comp(" + c.mor_name(left) + "," + c.mor_name(f) +
                               ") = " + (h >= 0 ? c.mor_name(h) : "undefined") + ", expected " + c.mor_name(f));
    MorId right = c.identity(c.dom(f));
    h = c.compose(f, right);
    if (h != f)
      rep.violations.push_back("right identity law violated: comp(" + c.mor_name(f) + "," + c.mor_name(right) +
                               ") = " + (h >= 0 ? c.mor_name(h) : "undefined") + ", expected " + c.mor_name(f));
  }

  for (MorId h = 0; h < m; ++h) {
    for (MorId g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      MorId hg = c.compose(h, g);
      for (MorId f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        MorId gf = c.compose(g, f);
        if (gf < 0 || hg < 0) continue;  // already reported above
        MorId a1 = c.compose(h, gf);
        MorId a2 = c.compose(hg, f);
        if (a1 != a2)
          rep.violations.push_back("associativity violated on (" + c.mor_name(h) + "," + c.mor_name(g) + "," +
                                   c.mor_name(f) + "): comp(" + c.mor_name(h) + ",comp(" + c.mor_name(g) + "," +
                                   c.mor_name(f) + ")) = " + (a1 >= 0 ? c.mor_name(a1) : "undefined") +
                                   ", comp(comp(" + c.mor_name(h) + "," + c.mor_name(g) + ")," + c.mor_name(f) +
                                   ") = " + (a2 >= 0 ? c.mor_name(a2) : "undefined"));
      }
    }
  }

  return rep;
}

FiniteCategory opposite(const FiniteCategory& c) {
  FiniteCategory op = c;
  for (auto& mr : op.morphisms) std::swap(mr.dom, mr.cod);
  const int m = c.num_morphisms();
  for (MorId g = 0; g < m; ++g)
    for (MorId f = 0; f < m; ++f) op.comp_table[g * m + f] = c.comp_table[f * m + g];
  return op;
}

std::optional<MorId> is_iso(const FiniteCategory& c, MorId f) {
  for (MorId g = 0; g < c.num_morphisms(); ++g) {
    if (!c.composable(g, f) || !c.composable(f, g)) continue;
    if (c.compose(g, f) == c.identity(c.dom(f)) && c.compose(f, g) == c.identity(c.cod(f))) return g;
  }
  return std::nullopt;
}

ValidationReport check_functor(const FiniteCategory& source, const FiniteCategory& target, const Functor& f) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.violations.push_back(std::move(msg));
  };

  if (static_cast<int>(f.obj_map.size()) != source.num_objects() ||
      static_cast<int>(f.mor_map.size()) != source.num_morphisms()) {
    fail("object or morphism map does not cover the source category");
    return rep;
  }
  for (ObjId a = 0; a < source.num_objects(); ++a)
    if (f.obj_map[a] < 0 || f.obj_map[a] >= target.num_objects()) {
      fail("object " + source.obj_name(a) + ": image out of range");
      return rep;
    }
  for (MorId x = 0; x < source.num_morphisms(); ++x)
    if (f.mor_map[x] < 0 || f.mor_map[x] >= target.num_morphisms()) {
      fail("morphism " + source.mor_name(x) + ": image out of range");
      return rep;
    }

  for (MorId x = 0; x < source.num_morphisms(); ++x) {
    MorId fx = f.mor_map[x];
    if (target.dom(fx) != f.obj_map[source.dom(x)]) {
      fail("morphism " + source.mor_name(x) + ": dom not preserved (image " + arrow(target, fx) + ")");
      return rep;
    }
    if (target.cod(fx) != f.obj_map[source.cod(x)]) {
      fail("morphism " + source.mor_name(x) + ": cod not preserved (image " + arrow(target, fx) + ")");
      return rep;
    }
  }

  for (ObjId a = 0; a < source.num_objects(); ++a) {
    if (f.mor_map[source.identity(a)] != target.identity(f.obj_map[a])) {
      fail("identity of " + source.obj_name(a) + " not preserved: image is " +
           target.mor_name(f.mor_map[source.identity(a)]));
      return rep;
    }
  }

  for (MorId g = 0; g < source.num_morphisms(); ++g) {
    for (MorId x = 0; x < source.num_morphisms(); ++x) {
      if (!source.composable(g, x)) continue;
      MorId lhs = f.mor_map[source.compose(g, x)];
      MorId rhs = target.compose(f.mor_map[g], f.mor_map[x]);
      if (lhs != rhs) {
        fail("composition not preserved on (" + source.mor_name(g) + "," + source.mor_name(x) + "): F(g.f) = " +
             target.mor_name(lhs) + ", F(g).F(f) = " + (rhs >= 0 ? target.mor_name(rhs) : "undefined"));
        return rep;
      }
    }
  }

  return rep;
}

MorphClass split_monos(const FiniteCategory& c) {
  MorphClass out(c.num_morphisms());
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    for (MorId e = 0; e < c.num_morphisms(); ++e) {
      if (!c.composable(e, m)) continue;
      if (c.compose(e, m) == c.identity(c.dom(m))) {
        out.insert(m);
        break;
      }
    }
  }
  return out;
}

}  // namespace fincat
