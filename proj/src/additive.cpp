#include "fincat/additive.hpp"

#include <algorithm>

namespace fincat {

PreadditiveStructure PreadditiveStructure::empty_for(int objects, int morphisms) {
  PreadditiveStructure p;
  p.num_objects = objects;
  p.num_morphisms = morphisms;
  p.zero.assign(static_cast<size_t>(objects) * objects, -1);
  p.add_table.assign(static_cast<size_t>(morphisms) * morphisms, -1);
  p.neg_table.assign(morphisms, -1);
  return p;
}

namespace {

bool parallel(const FiniteCategory& c, MorId f, MorId g) {
  return c.dom(f) == c.dom(g) && c.cod(f) == c.cod(g);
}

std::string pair_name(const FiniteCategory& c, ObjId a, ObjId b) {
  return "hom(" + c.obj_name(a) + "," + c.obj_name(b) + ")";
}

}  // namespace

ValidationReport validate_preadditive(const FiniteCategory& c, const PreadditiveStructure& p) {
  ValidationReport rep;
  const int n = c.num_objects();
  const int m = c.num_morphisms();

  if (p.num_objects != n || p.num_morphisms != m || static_cast<int>(p.zero.size()) != n * n ||
      p.add_table.size() != static_cast<size_t>(m) * m || static_cast<int>(p.neg_table.size()) != m) {
    rep.violations.push_back("preadditive tables have wrong size");
    return rep;
  }

  // hom-set members per ordered pair
  std::vector<std::vector<MorId>> hom(static_cast<size_t>(n) * n);
  for (MorId f = 0; f < m; ++f) hom[c.dom(f) * n + c.cod(f)].push_back(f);

  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      MorId z = p.zero_of(a, b);
      if (z < 0 || z >= m) {
        rep.violations.push_back("zero missing for " + pair_name(c, a, b));
        continue;
      }
      if (c.dom(z) != a || c.cod(z) != b)
        rep.violations.push_back("zero of " + pair_name(c, a, b) + ": " + c.mor_name(z) +
                                 " has wrong dom/cod");
    }
  }

  for (MorId f = 0; f < m; ++f) {
    for (MorId g = 0; g < m; ++g) {
      MorId s = p.add(f, g);
      if (parallel(c, f, g)) {
        if (s < 0 || s >= m)
          rep.violations.push_back("add(" + c.mor_name(f) + "," + c.mor_name(g) + ") missing");
        else if (!parallel(c, f, s))
          rep.violations.push_back("add(" + c.mor_name(f) + "," + c.mor_name(g) + ") = " + c.mor_name(s) +
                                   " is not parallel to its arguments");
      } else if (s != -1) {
        rep.violations.push_back("add(" + c.mor_name(f) + "," + c.mor_name(g) +
                                 ") defined on a non-parallel pair");
      }
    }
  }
  if (!rep.ok()) return rep;  // group laws need total well-typed tables

  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      const std::vector<MorId>& members = hom[a * n + b];
      MorId z = p.zero_of(a, b);
      for (MorId f : members) {
        if (p.add(z, f) != f)
          rep.violations.push_back("zero of " + pair_name(c, a, b) + " is not neutral on " + c.mor_name(f));
        MorId nf = p.neg(f);
        if (nf < 0 || nf >= m || !parallel(c, f, nf))
          rep.violations.push_back("neg(" + c.mor_name(f) + ") missing or not parallel");
        else if (p.add(f, nf) != z)
          rep.violations.push_back("neg(" + c.mor_name(f) + ") is not an additive inverse");
      }
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          if (p.add(members[i], members[j]) != p.add(members[j], members[i]))
            rep.violations.push_back("addition not commutative on (" + c.mor_name(members[i]) + "," +
                                     c.mor_name(members[j]) + ")");
      for (MorId f : members)
        for (MorId g : members)
          for (MorId h : members)
            if (p.add(f, p.add(g, h)) != p.add(p.add(f, g), h))
              rep.violations.push_back("addition not associative on (" + c.mor_name(f) + "," + c.mor_name(g) +
                                       "," + c.mor_name(h) + ")");
    }
  }

  // bilinearity of composition
  for (MorId g = 0; g < m; ++g)
    for (MorId f1 = 0; f1 < m; ++f1) {
      if (!c.composable(g, f1)) continue;
      for (MorId f2 = 0; f2 < m; ++f2) {
        if (!parallel(c, f1, f2)) continue;
        if (c.compose(g, p.add(f1, f2)) != p.add(c.compose(g, f1), c.compose(g, f2)))
          rep.violations.push_back("composition not linear in the right argument on (" + c.mor_name(g) + "," +
                                   c.mor_name(f1) + "," + c.mor_name(f2) + ")");
      }
    }
  for (MorId f = 0; f < m; ++f)
    for (MorId g1 = 0; g1 < m; ++g1) {
      if (!c.composable(g1, f)) continue;
      for (MorId g2 = 0; g2 < m; ++g2) {
        if (!parallel(c, g1, g2)) continue;
        if (c.compose(p.add(g1, g2), f) != p.add(c.compose(g1, f), c.compose(g2, f)))
          rep.violations.push_back("composition not linear in the left argument on (" + c.mor_name(g1) + "," +
                                   c.mor_name(g2) + "," + c.mor_name(f) + ")");
      }
    }

  // zero absorption
  for (MorId g = 0; g < m; ++g)
    for (ObjId x = 0; x < n; ++x) {
      MorId z = p.zero_of(x, c.dom(g));
      if (c.compose(g, z) != p.zero_of(x, c.cod(g)))
        rep.violations.push_back("comp(" + c.mor_name(g) + ",0) is not the zero of " +
                                 pair_name(c, x, c.cod(g)));
    }
  for (MorId f = 0; f < m; ++f)
    for (ObjId y = 0; y < n; ++y) {
      MorId z = p.zero_of(c.cod(f), y);
      if (c.compose(z, f) != p.zero_of(c.dom(f), y))
        rep.violations.push_back("comp(0," + c.mor_name(f) + ") is not the zero of " +
                                 pair_name(c, c.dom(f), y));
    }

  return rep;
}

PreadditiveStructure opposite_preadditive(const PreadditiveStructure& p) {
  PreadditiveStructure out = p;
  for (ObjId a = 0; a < p.num_objects; ++a)
    for (ObjId b = 0; b < p.num_objects; ++b) out.zero[a * p.num_objects + b] = p.zero_of(b, a);
  return out;
}

CommonDenominator common_denominator(const FiniteCategory& c, const MorphClass& w, Roof r1, Roof r2) {
  if (!roof_valid(c, w, r1)) throw PreconditionError("invalid roof " + roof_name(c, r1));
  if (!roof_valid(c, w, r2)) throw PreconditionError("invalid roof " + roof_name(c, r2));
  if (roof_source(c, r1) != roof_source(c, r2) || roof_target(c, r1) != roof_target(c, r2))
    throw ParallelismError("roofs " + roof_name(c, r1) + " and " + roof_name(c, r2) + " are not parallel");
  L1Witness wit = l1_complete(c, w, r1.w, r2.w);
  return CommonDenominator{c.compose(wit.f_prime, r1.f), c.compose(wit.w_prime, r2.f),
                           c.compose(wit.w_prime, r2.w)};
}

Roof add_roofs(const FiniteCategory& c, const MorphClass& w, const PreadditiveStructure& p, Roof r1,
               Roof r2) {
  CommonDenominator cd = common_denominator(c, w, r1, r2);
  return Roof{p.add(cd.f1, cd.f2), cd.w};
}

Roof negate_roof(const FiniteCategory& c, const PreadditiveStructure& p, Roof r) {
  MorId nf = p.neg(r.f);
  if (nf < 0) throw PreconditionError("negation of " + c.mor_name(r.f) + " is not defined");
  return Roof{nf, r.w};
}

Roof zero_roof(const FiniteCategory& c, const PreadditiveStructure& p, ObjId a, ObjId b) {
  MorId z = p.zero_of(a, b);
  if (z < 0) throw PreconditionError("zero morphism missing for the requested pair");
  return Roof{z, c.identity(b)};
}

AxiomReport check_l2_doubleprime(const FiniteCategory& c, const MorphClass& w, const PreadditiveStructure& p,
                                 bool all_witnesses) {
  AxiomReport rep{AxiomId::L2DoublePrime, true, {}};
  for (MorId leg : w.members()) {
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (c.dom(f) != c.cod(leg)) continue;
      if (c.compose(f, leg) != p.zero_of(c.dom(leg), c.cod(f))) continue;
      bool found = false;
      for (MorId w_prime = 0; w_prime < c.num_morphisms() && !found; ++w_prime) {
        if (!w.contains(w_prime) || c.dom(w_prime) != c.cod(f)) continue;
        if (c.compose(w_prime, f) == p.zero_of(c.dom(f), c.cod(w_prime))) found = true;
      }
      if (!found) {
        rep.holds = false;
        rep.witnesses.push_back({AxiomWitness::Kind::NoAnnihilator, leg, f, -1});
        if (!all_witnesses) return rep;
      }
    }
  }
  return rep;
}

std::optional<BiproductDiagram> find_biproduct(const FiniteCategory& c, const PreadditiveStructure& p,
                                               ObjId a, ObjId b) {
  const int m = c.num_morphisms();
  for (ObjId candidate = 0; candidate < c.num_objects(); ++candidate) {
    for (MorId i1 = 0; i1 < m; ++i1) {
      if (c.dom(i1) != a || c.cod(i1) != candidate) continue;
      for (MorId i2 = 0; i2 < m; ++i2) {
        if (c.dom(i2) != b || c.cod(i2) != candidate) continue;
        for (MorId p1 = 0; p1 < m; ++p1) {
          if (c.dom(p1) != candidate || c.cod(p1) != a) continue;
          if (c.compose(p1, i1) != c.identity(a)) continue;
          if (c.compose(p1, i2) != p.zero_of(b, a)) continue;
          for (MorId p2 = 0; p2 < m; ++p2) {
            if (c.dom(p2) != candidate || c.cod(p2) != b) continue;
            if (c.compose(p2, i2) != c.identity(b)) continue;
            if (c.compose(p2, i1) != p.zero_of(a, b)) continue;
            if (p.add(c.compose(i1, p1), c.compose(i2, p2)) != c.identity(candidate)) continue;
            return BiproductDiagram{candidate, i1, i2, p1, p2};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<ObjId> zero_objects(const FiniteCategory& c, const PreadditiveStructure& p) {
  std::vector<ObjId> out;
  for (ObjId a = 0; a < c.num_objects(); ++a)
    if (c.identity(a) == p.zero_of(a, a)) out.push_back(a);
  return out;
}

PreadditiveStructure induced_preadditive(const FiniteCategory& c, const MorphClass& w,
                                         const PreadditiveStructure& p, const FractionCategory& loc) {
  if (loc.right_fractions)
    throw PreconditionError("induced_preadditive expects a left-fraction localization");
  const int n = loc.base.num_objects();
  PreadditiveStructure out = PreadditiveStructure::empty_for(n, loc.base.num_morphisms());
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) out.zero[a * n + b] = loc.loc_mor[p.zero_of(a, b)];

  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      const RoofClasses& rc = loc.classes(a, b);
      for (int x = 0; x < rc.num_classes(); ++x) {
        out.neg_table[rc.class_mor[x]] = loc.class_morphism(negate_roof(c, p, rc.reps[x]));
        for (int y = 0; y < rc.num_classes(); ++y) {
          Roof sum = add_roofs(c, w, p, rc.reps[x], rc.reps[y]);
          out.set_add(rc.class_mor[x], rc.class_mor[y], loc.class_morphism(sum));
        }
      }
    }
  return out;
}

ValidationReport check_additive_localization(const FiniteCategory& c, const MorphClass& w,
                                             const PreadditiveStructure& p) {
  ValidationReport rep;
  ValidationReport input = validate_preadditive(c, p);
  if (!input.ok()) {
    for (std::string& v : input.violations) rep.violations.push_back("input: " + std::move(v));
    return rep;
  }

  FractionCategory loc = localize(c, w);
  PreadditiveStructure induced = induced_preadditive(c, w, p, loc);

  ValidationReport induced_rep = validate_preadditive(loc.base, induced);
  for (std::string& v : induced_rep.violations) rep.violations.push_back("induced: " + std::move(v));

  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (!parallel(c, f, g)) continue;
      if (loc.loc_mor[p.add(f, g)] != induced.add(loc.loc_mor[f], loc.loc_mor[g]))
        rep.violations.push_back("localization functor not additive on (" + c.mor_name(f) + "," +
                                 c.mor_name(g) + ")");
    }
    if (loc.loc_mor[p.neg(f)] != induced.neg(loc.loc_mor[f]))
      rep.violations.push_back("localization functor does not preserve negation of " + c.mor_name(f));
  }

  for (ObjId a = 0; a < c.num_objects(); ++a)
    for (ObjId b = 0; b < c.num_objects(); ++b) {
      std::optional<BiproductDiagram> bd = find_biproduct(c, p, a, b);
      if (!bd) continue;
      MorId i1 = loc.loc_mor[bd->i1], i2 = loc.loc_mor[bd->i2];
      MorId p1 = loc.loc_mor[bd->p1], p2 = loc.loc_mor[bd->p2];
      const FiniteCategory& base = loc.base;
      bool ok = base.compose(p1, i1) == base.identity(a) && base.compose(p2, i2) == base.identity(b) &&
                base.compose(p1, i2) == induced.zero_of(b, a) &&
                base.compose(p2, i1) == induced.zero_of(a, b) &&
                induced.add(base.compose(i1, p1), base.compose(i2, p2)) == base.identity(bd->p);
      if (!ok)
        rep.violations.push_back("biproduct of (" + c.obj_name(a) + "," + c.obj_name(b) +
                                 ") is not preserved");
    }

  return rep;
}

}  // namespace fincat
