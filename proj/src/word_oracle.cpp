#include "fincat/word_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace fincat {

ObjId literal_dom(const FiniteCategory& c, Literal l) { return l.inverse ? c.cod(l.mor) : c.dom(l.mor); }
ObjId literal_cod(const FiniteCategory& c, Literal l) { return l.inverse ? c.dom(l.mor) : c.cod(l.mor); }

LiteralString make_string(const FiniteCategory& c, const MorphClass& w, std::vector<Literal> literals,
                          ObjId anchor_if_empty) {
  LiteralString s;
  for (const Literal& l : literals) {
    if (l.mor < 0 || l.mor >= c.num_morphisms()) throw PreconditionError("literal refers to no morphism");
    if (l.inverse && !w.contains(l.mor))
      throw PreconditionError("formal inverse of " + c.mor_name(l.mor) + " requires membership in W");
  }
  for (size_t i = 0; i + 1 < literals.size(); ++i)
    if (literal_dom(c, literals[i]) != literal_cod(c, literals[i + 1]))
      throw PreconditionError("literal string is not composable at position " + std::to_string(i + 1));
  if (literals.empty()) {
    if (anchor_if_empty < 0 || anchor_if_empty >= c.num_objects())
      throw PreconditionError("empty literal string needs an anchor object");
    s.anchor = anchor_if_empty;
  } else {
    s.anchor = literal_dom(c, literals.back());
  }
  s.literals = std::move(literals);
  return s;
}

ObjId string_source(const FiniteCategory& c, const LiteralString& s) {
  return s.literals.empty() ? s.anchor : literal_dom(c, s.literals.back());
}

ObjId string_target(const FiniteCategory& c, const LiteralString& s) {
  return s.literals.empty() ? s.anchor : literal_cod(c, s.literals.front());
}

LiteralString roof_string(const FiniteCategory& c, const MorphClass& w, Roof r) {
  return make_string(c, w, {Literal{r.w, true}, Literal{r.f, false}});
}

std::string string_spec(const FiniteCategory& c, const LiteralString& s) {
  std::string out = c.obj_name(string_source(c, s)) + " :";
  for (size_t i = 0; i < s.literals.size(); ++i) {
    out += i == 0 ? " " : ",";
    if (s.literals[i].inverse) out += "~";
    out += c.mor_name(s.literals[i].mor);
  }
  return out;
}

std::string_view verdict_name(WordVerdict v) {
  switch (v) {
    case WordVerdict::Equal: return "equal";
    case WordVerdict::Distinct: return "distinct";
    case WordVerdict::Unknown: return "unknown";
  }
  return "?";
}

int default_max_len(int longest_input) { return 2 * longest_input + 4; }

namespace {

// Interned string: [anchor, lit...] with lit = 2 * mor + inverse.
using Encoded = std::vector<int>;

struct EncodedHash {
  size_t operator()(const Encoded& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Encoded encode(const FiniteCategory& c, const LiteralString& s) {
  Encoded out;
  out.reserve(s.literals.size() + 1);
  out.push_back(string_source(c, s));
  for (const Literal& l : s.literals) out.push_back(2 * l.mor + (l.inverse ? 1 : 0));
  return out;
}

LiteralString decode(const FiniteCategory& c, const Encoded& e) {
  LiteralString s;
  s.anchor = e[0];
  for (size_t i = 1; i < e.size(); ++i) s.literals.push_back(Literal{e[i] / 2, (e[i] & 1) != 0});
  if (!s.literals.empty()) s.anchor = literal_dom(c, s.literals.back());
  return s;
}

// Shared state for the bounded rewrite search: interning plus a memoized
// neighbor list per string. `clipped` records whether some neighbor exceeded
// the length bound, which forfeits any claim of exhaustion.
struct RewriteContext {
  const FiniteCategory& c;
  const MorphClass& w;
  int max_len;

  std::vector<Encoded> strings;
  std::unordered_map<Encoded, int, EncodedHash> ids;
  std::vector<std::vector<int>> neighbors;
  std::vector<char> expanded;
  std::vector<char> clipped;
  std::vector<std::vector<std::pair<MorId, MorId>>> factorizations;  // per morphism

  RewriteContext(const FiniteCategory& cat, const MorphClass& wc, int len)
      : c(cat), w(wc), max_len(len), factorizations(cat.num_morphisms()) {
    for (MorId g = 0; g < c.num_morphisms(); ++g)
      for (MorId f = 0; f < c.num_morphisms(); ++f)
        if (c.composable(g, f)) factorizations[c.compose(g, f)].push_back({g, f});
  }

  int intern(const Encoded& e) {
    auto [it, inserted] = ids.try_emplace(e, static_cast<int>(strings.size()));
    if (inserted) {
      strings.push_back(e);
      neighbors.emplace_back();
      expanded.push_back(false);
      clipped.push_back(false);
    }
    return it->second;
  }

  // literal helpers working on encoded form
  ObjId lit_dom(int lit) const { return (lit & 1) ? c.cod(lit / 2) : c.dom(lit / 2); }
  ObjId lit_cod(int lit) const { return (lit & 1) ? c.dom(lit / 2) : c.cod(lit / 2); }

  void emit(std::vector<Encoded>& out, Encoded e, bool& clip) {
    if (static_cast<int>(e.size()) - 1 > max_len) {
      clip = true;
      return;
    }
    if (e.size() > 1) e[0] = lit_dom(e.back());
    out.push_back(std::move(e));
  }

  std::vector<Encoded> raw_neighbors(const Encoded& s, bool& clip) {
    std::vector<Encoded> out;
    const int len = static_cast<int>(s.size()) - 1;
    // gap objects: gap i sits before literal index i (0-based over literals)
    auto gap_obj = [&](int gap) -> ObjId {
      if (len == 0) return s[0];
      if (gap == 0) return lit_cod(s[1]);
      return lit_dom(s[gap]);  // literal at position gap-1 in 0-based terms
    };

    // delete an identity literal
    for (int i = 1; i <= len; ++i) {
      int lit = s[i];
      if (lit & 1) continue;
      MorId mor = lit / 2;
      if (c.identity(c.dom(mor)) != mor) continue;
      Encoded e;
      e.push_back(len == 1 ? c.dom(mor) : s[0]);
      for (int j = 1; j <= len; ++j)
        if (j != i) e.push_back(s[j]);
      emit(out, std::move(e), clip);
    }
    // insert an identity literal at any gap
    for (int gap = 0; gap <= len; ++gap) {
      ObjId a = gap_obj(gap);
      Encoded e;
      e.push_back(s[0]);
      for (int j = 1; j <= gap; ++j) e.push_back(s[j]);
      e.push_back(2 * c.identity(a));
      for (int j = gap + 1; j <= len; ++j) e.push_back(s[j]);
      emit(out, std::move(e), clip);
    }
    // contract an adjacent forward pair
    for (int i = 1; i + 1 <= len; ++i) {
      if ((s[i] & 1) || (s[i + 1] & 1)) continue;
      MorId g = s[i] / 2, f = s[i + 1] / 2;
      Encoded e;
      e.push_back(s[0]);
      for (int j = 1; j < i; ++j) e.push_back(s[j]);
      e.push_back(2 * c.compose(g, f));
      for (int j = i + 2; j <= len; ++j) e.push_back(s[j]);
      emit(out, std::move(e), clip);
    }
    // expand a forward literal into any factorization
    for (int i = 1; i <= len; ++i) {
      if (s[i] & 1) continue;
      for (auto [g, f] : factorizations[s[i] / 2]) {
        Encoded e;
        e.push_back(s[0]);
        for (int j = 1; j < i; ++j) e.push_back(s[j]);
        e.push_back(2 * g);
        e.push_back(2 * f);
        for (int j = i + 1; j <= len; ++j) e.push_back(s[j]);
        emit(out, std::move(e), clip);
      }
    }
    // cancel an adjacent inverse pair
    for (int i = 1; i + 1 <= len; ++i) {
      bool forward_then_inverse = !(s[i] & 1) && (s[i + 1] & 1) && s[i] / 2 == s[i + 1] / 2;
      bool inverse_then_forward = (s[i] & 1) && !(s[i + 1] & 1) && s[i] / 2 == s[i + 1] / 2;
      if (!forward_then_inverse && !inverse_then_forward) continue;
      MorId mor = s[i] / 2;
      Encoded e;
      e.push_back(len == 2 ? (forward_then_inverse ? c.cod(mor) : c.dom(mor)) : s[0]);
      for (int j = 1; j <= len; ++j)
        if (j != i && j != i + 1) e.push_back(s[j]);
      emit(out, std::move(e), clip);
    }
    // insert a cancelling pair of a W-member at any gap
    for (int gap = 0; gap <= len; ++gap) {
      ObjId a = gap_obj(gap);
      for (MorId leg : w.members()) {
        if (c.cod(leg) == a) {  // <w, w^-1> runs from cod(w) to cod(w)
          Encoded e;
          e.push_back(s[0]);
          for (int j = 1; j <= gap; ++j) e.push_back(s[j]);
          e.push_back(2 * leg);
          e.push_back(2 * leg + 1);
          for (int j = gap + 1; j <= len; ++j) e.push_back(s[j]);
          emit(out, std::move(e), clip);
        }
        if (c.dom(leg) == a) {  // <w^-1, w> runs from dom(w) to dom(w)
          Encoded e;
          e.push_back(s[0]);
          for (int j = 1; j <= gap; ++j) e.push_back(s[j]);
          e.push_back(2 * leg + 1);
          e.push_back(2 * leg);
          for (int j = gap + 1; j <= len; ++j) e.push_back(s[j]);
          emit(out, std::move(e), clip);
        }
      }
    }
    return out;
  }

  const std::vector<int>& neighbor_ids(int id) {
    if (!expanded[id]) {
      expanded[id] = true;
      bool clip = false;
      Encoded self = strings[id];  // copy: intern() may reallocate the pool
      std::vector<Encoded> raw = raw_neighbors(self, clip);
      clipped[id] = clip;
      std::vector<int> list;
      list.reserve(raw.size());
      for (Encoded& e : raw) list.push_back(intern(e));
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      neighbors[id] = std::move(list);
    }
    return neighbors[id];
  }
};

void require_valid(const FiniteCategory& c, const MorphClass& w, const LiteralString& s) {
  make_string(c, w, s.literals, s.literals.empty() ? s.anchor : -1);
}

WordVerdict word_equal_in(RewriteContext& ctx, int start1, int start2, long max_steps) {
  if (start1 == start2) return WordVerdict::Equal;

  struct Side {
    std::unordered_set<int> visited;
    std::deque<int> frontier;
    bool clipped = false;
  };
  Side sides[2];
  sides[0].visited.insert(start1);
  sides[0].frontier.push_back(start1);
  sides[1].visited.insert(start2);
  sides[1].frontier.push_back(start2);

  long steps = 0;
  int turn = 0;
  while (true) {
    if (sides[0].frontier.empty() && sides[1].frontier.empty()) {
      bool exhausted = !sides[0].clipped && !sides[1].clipped;
      return exhausted ? WordVerdict::Distinct : WordVerdict::Unknown;
    }
    if (steps >= max_steps) return WordVerdict::Unknown;
    Side& side = sides[turn].frontier.empty() ? sides[1 - turn] : sides[turn];
    Side& other = (&side == &sides[0]) ? sides[1] : sides[0];
    int node = side.frontier.front();
    side.frontier.pop_front();
    ++steps;
    for (int next : ctx.neighbor_ids(node)) {
      if (side.visited.insert(next).second) {
        if (other.visited.count(next)) return WordVerdict::Equal;
        side.frontier.push_back(next);
      }
    }
    side.clipped = side.clipped || ctx.clipped[node];
    turn = 1 - turn;
  }
}

}  // namespace

std::vector<LiteralString> rewrite_step(const FiniteCategory& c, const MorphClass& w,
                                        const LiteralString& s) {
  require_valid(c, w, s);
  RewriteContext ctx(c, w, s.length() + 2);
  bool clip = false;
  std::vector<Encoded> raw = ctx.raw_neighbors(encode(c, s), clip);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<LiteralString> out;
  out.reserve(raw.size());
  for (const Encoded& e : raw) out.push_back(decode(c, e));
  return out;
}

WordVerdict word_equal(const FiniteCategory& c, const MorphClass& w, const LiteralString& s1,
                       const LiteralString& s2, int max_len, long max_steps) {
  require_valid(c, w, s1);
  require_valid(c, w, s2);
  if (string_source(c, s1) != string_source(c, s2) || string_target(c, s1) != string_target(c, s2))
    throw ParallelismError("literal strings are not parallel");
  if (max_len < std::max(s1.length(), s2.length()))
    throw BoundsError("max_len " + std::to_string(max_len) + " is below the longest input (" +
                      std::to_string(std::max(s1.length(), s2.length())) + ")");
  RewriteContext ctx(c, w, max_len);
  int a = ctx.intern(encode(c, s1));
  int b = ctx.intern(encode(c, s2));
  return word_equal_in(ctx, a, b, max_steps);
}

AgreementReport oracle_compare(const FiniteCategory& c, const MorphClass& w, const FractionCategory& loc,
                               int max_len, long max_steps) {
  if (loc.right_fractions) throw PreconditionError("oracle_compare expects a left-fraction localization");
  if (max_len < 2) throw BoundsError("max_len must cover two-literal roof strings");

  RewriteContext ctx(c, w, max_len);
  std::map<std::pair<int, int>, WordVerdict> memo;
  AgreementReport report;

  const int n = c.num_objects();
  for (ObjId a = 0; a < n; ++a) {
    for (ObjId b = 0; b < n; ++b) {
      const RoofClasses& rc = loc.classes(a, b);
      std::vector<int> interned;
      interned.reserve(rc.roofs.size());
      for (const Roof& r : rc.roofs) interned.push_back(ctx.intern(encode(c, roof_string(c, w, r))));
      for (size_t i = 0; i < rc.roofs.size(); ++i) {
        for (size_t j = 0; j < rc.roofs.size(); ++j) {
          std::pair<int, int> key{std::min(interned[i], interned[j]), std::max(interned[i], interned[j])};
          auto it = memo.find(key);
          if (it == memo.end())
            it = memo.emplace(key, word_equal_in(ctx, key.first, key.second, max_steps)).first;
          WordVerdict verdict = it->second;
          bool same_class = rc.class_of[i] == rc.class_of[j];
          if ((verdict == WordVerdict::Equal && !same_class) ||
              (verdict == WordVerdict::Distinct && same_class))
            throw DisagreementError(rc.roofs[i], rc.roofs[j], verdict, same_class,
                                    "oracle disagreement on " + roof_name(c, rc.roofs[i]) + " vs " +
                                        roof_name(c, rc.roofs[j]) + ": word oracle says " +
                                        std::string(verdict_name(verdict)) + ", classes are " +
                                        (same_class ? "equal" : "different"));
          ++report.total;
          if (verdict == WordVerdict::Unknown)
            ++report.unknown;
          else
            ++report.agree;
        }
      }
    }
  }
  return report;
}

}  // namespace fincat
