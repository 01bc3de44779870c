#include "fincat/parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace fincat {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

bool valid_name(const std::string& name) {
  static const std::vector<std::string> reserved = {":", "=", ".", "->", "+", "~"};
  if (name.empty()) return false;
  if (std::find(reserved.begin(), reserved.end(), name) != reserved.end()) return false;
  for (char ch : name)
    if (ch == ',' || ch == '(' || ch == ')' || ch == '#') return false;
  return true;
}

struct Builder {
  FiniteCategory c;
  std::unordered_map<std::string, ObjId> object_ids;
  std::unordered_map<std::string, MorId> morphism_ids;
  std::map<std::pair<MorId, MorId>, MorId> composites;
  std::vector<bool> in_w;

  bool additive_seen = false;
  std::map<std::pair<ObjId, ObjId>, MorId> zeros;
  std::map<std::pair<MorId, MorId>, MorId> adds;
  std::map<MorId, MorId> negs;

  struct WordLine {
    int line;
    ObjId source;
    std::vector<Literal> literals;
  };
  std::vector<WordLine> word_lines;

  ObjId object(const std::string& name, int line) {
    auto it = object_ids.find(name);
    if (it == object_ids.end()) throw ParseError(line, "unknown object '" + name + "'");
    return it->second;
  }
  MorId morphism(const std::string& name, int line) {
    auto it = morphism_ids.find(name);
    if (it == morphism_ids.end()) throw ParseError(line, "unknown morphism '" + name + "'");
    return it->second;
  }
};

void parse_line(Builder& b, const std::vector<std::string>& tok, int line) {
  const std::string& head = tok[0];

  if (head == "object") {
    if (tok.size() != 2) throw ParseError(line, "expected: object <name>");
    if (!valid_name(tok[1])) throw ParseError(line, "invalid name '" + tok[1] + "'");
    if (b.object_ids.count(tok[1])) throw ParseError(line, "duplicate object '" + tok[1] + "'");
    b.object_ids[tok[1]] = b.c.num_objects();
    b.c.objects.push_back(tok[1]);
  } else if (head == "morphism") {
    if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->")
      throw ParseError(line, "expected: morphism <name> : <dom> -> <cod>");
    if (!valid_name(tok[1])) throw ParseError(line, "invalid name '" + tok[1] + "'");
    if (b.morphism_ids.count(tok[1])) throw ParseError(line, "duplicate morphism '" + tok[1] + "'");
    ObjId dom = b.object(tok[3], line);
    ObjId cod = b.object(tok[5], line);
    b.morphism_ids[tok[1]] = b.c.num_morphisms();
    b.c.morphisms.push_back({tok[1], dom, cod});
    b.in_w.push_back(false);
  } else if (head == "identity") {
    if (tok.size() != 4 || tok[2] != "=") throw ParseError(line, "expected: identity <obj> = <mor>");
    ObjId a = b.object(tok[1], line);
    MorId f = b.morphism(tok[3], line);
    if (static_cast<int>(b.c.identities.size()) <= a) b.c.identities.resize(b.c.num_objects(), -1);
    if (b.c.identities[a] != -1) throw ParseError(line, "duplicate identity for object '" + tok[1] + "'");
    b.c.identities[a] = f;
  } else if (head == "compose") {
    if (tok.size() != 6 || tok[2] != "." || tok[4] != "=")
      throw ParseError(line, "expected: compose <g> . <f> = <h>");
    MorId g = b.morphism(tok[1], line);
    MorId f = b.morphism(tok[3], line);
    MorId h = b.morphism(tok[5], line);
    if (b.c.cod(f) != b.c.dom(g))
      throw ParseError(line, "pair is not composable: cod(" + tok[3] + ") != dom(" + tok[1] + ")");
    if (!b.composites.emplace(std::make_pair(g, f), h).second)
      throw ParseError(line, "duplicate composite for (" + tok[1] + "," + tok[3] + ")");
  } else if (head == "w") {
    if (tok.size() != 2) throw ParseError(line, "expected: w <mor>");
    MorId f = b.morphism(tok[1], line);
    if (b.in_w[f]) throw ParseError(line, "duplicate w declaration for '" + tok[1] + "'");
    b.in_w[f] = true;
  } else if (head == "zero") {
    if (tok.size() != 5 || tok[3] != "=") throw ParseError(line, "expected: zero <A> <B> = <mor>");
    b.additive_seen = true;
    ObjId a = b.object(tok[1], line);
    ObjId bb = b.object(tok[2], line);
    MorId z = b.morphism(tok[4], line);
    if (b.c.dom(z) != a || b.c.cod(z) != bb)
      throw ParseError(line, "zero morphism '" + tok[4] + "' does not lie in the named hom-set");
    if (!b.zeros.emplace(std::make_pair(a, bb), z).second)
      throw ParseError(line, "duplicate zero for (" + tok[1] + "," + tok[2] + ")");
  } else if (head == "add") {
    if (tok.size() != 6 || tok[2] != "+" || tok[4] != "=")
      throw ParseError(line, "expected: add <f> + <g> = <h>");
    b.additive_seen = true;
    MorId f = b.morphism(tok[1], line);
    MorId g = b.morphism(tok[3], line);
    MorId h = b.morphism(tok[5], line);
    if (b.c.dom(f) != b.c.dom(g) || b.c.cod(f) != b.c.cod(g))
      throw ParseError(line, "add arguments are not parallel");
    if (b.c.dom(h) != b.c.dom(f) || b.c.cod(h) != b.c.cod(f))
      throw ParseError(line, "add result is not parallel to its arguments");
    if (!b.adds.emplace(std::make_pair(f, g), h).second)
      throw ParseError(line, "duplicate add entry for (" + tok[1] + "," + tok[3] + ")");
  } else if (head == "neg") {
    if (tok.size() != 4 || tok[2] != "=") throw ParseError(line, "expected: neg <f> = <g>");
    b.additive_seen = true;
    MorId f = b.morphism(tok[1], line);
    MorId g = b.morphism(tok[3], line);
    if (b.c.dom(f) != b.c.dom(g) || b.c.cod(f) != b.c.cod(g))
      throw ParseError(line, "neg result is not parallel to its argument");
    if (!b.negs.emplace(f, g).second) throw ParseError(line, "duplicate neg entry for '" + tok[1] + "'");
  } else if (head == "word") {
    if (tok.size() < 3 || tok.size() > 4 || tok[2] != ":")
      throw ParseError(line, "expected: word <obj> : <lit>,<lit>,...");
    ObjId src = b.object(tok[1], line);
    Builder::WordLine wl{line, src, {}};
    if (tok.size() == 4) {
      std::string lits = tok[3];
      size_t pos = 0;
      while (pos <= lits.size()) {
        size_t comma = lits.find(',', pos);
        std::string item = lits.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw ParseError(line, "empty literal in word");
        bool inverse = item[0] == '~';
        if (inverse) item = item.substr(1);
        wl.literals.push_back(Literal{b.morphism(item, line), inverse});
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    b.word_lines.push_back(std::move(wl));
  } else {
    throw ParseError(line, "unknown directive '" + head + "'");
  }
}

}  // namespace

ParsedCategory parse_category_file(std::string_view text) {
  Builder b;
  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_number;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tok = tokenize(line);
    if (!tok.empty()) parse_line(b, tok, line_number);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  FiniteCategory& c = b.c;
  const int n = c.num_objects();
  const int m = c.num_morphisms();

  if (static_cast<int>(c.identities.size()) < n) c.identities.resize(n, -1);
  for (ObjId a = 0; a < n; ++a)
    if (c.identities[a] == -1) throw ParseError(-1, "missing identity for object '" + c.obj_name(a) + "'");

  c.init_comp_table();
  for (const auto& [pair, h] : b.composites) c.set_compose(pair.first, pair.second, h);
  for (MorId g = 0; g < m; ++g)
    for (MorId f = 0; f < m; ++f)
      if (c.composable(g, f) && c.compose(g, f) == -1)
        throw ParseError(-1, "missing composite for '" + c.mor_name(g) + " . " + c.mor_name(f) + "'");

  ParsedCategory out;
  out.w = MorphClass(m);
  for (MorId f = 0; f < m; ++f)
    if (b.in_w[f]) out.w.insert(f);

  if (b.additive_seen) {
    PreadditiveStructure p = PreadditiveStructure::empty_for(n, m);
    for (const auto& [pair, z] : b.zeros) p.zero[pair.first * n + pair.second] = z;
    for (const auto& [pair, s] : b.adds) p.set_add(pair.first, pair.second, s);
    for (const auto& [f, g] : b.negs) p.neg_table[f] = g;
    // derive missing negations from the add table where that is unambiguous
    for (MorId f = 0; f < m; ++f) {
      if (p.neg_table[f] != -1) continue;
      MorId z = p.zero_of(c.dom(f), c.cod(f));
      if (z < 0) continue;  // validate_preadditive reports the missing zero
      MorId candidate = -1;
      for (MorId g = 0; g < m; ++g) {
        if (c.dom(g) != c.dom(f) || c.cod(g) != c.cod(f)) continue;
        if (p.add(f, g) != z) continue;
        if (candidate != -1)
          throw ParseError(-1, "ambiguous negation for '" + c.mor_name(f) + "': both '" +
                                   c.mor_name(candidate) + "' and '" + c.mor_name(g) + "' cancel it");
        candidate = g;
      }
      p.neg_table[f] = candidate;
    }
    out.preadditive = std::move(p);
  }

  out.category = std::move(b.c);

  for (const Builder::WordLine& wl : b.word_lines) {
    LiteralString s;
    try {
      s = make_string(out.category, out.w, wl.literals, wl.literals.empty() ? wl.source : -1);
    } catch (const PreconditionError& e) {
      throw ParseError(wl.line, e.what());
    }
    if (string_source(out.category, s) != wl.source)
      throw ParseError(wl.line, "word does not start at '" + out.category.obj_name(wl.source) + "'");
    out.words.push_back(std::move(s));
  }

  return out;
}

ParsedCategory load_category_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(-1, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_category_file(buf.str());
}

std::string serialize_category(const ParsedCategory& parsed) {
  const FiniteCategory& c = parsed.category;
  const int n = c.num_objects();
  const int m = c.num_morphisms();
  std::string out;

  for (ObjId a = 0; a < n; ++a) out += "object " + c.obj_name(a) + "\n";
  for (MorId f = 0; f < m; ++f)
    out += "morphism " + c.mor_name(f) + " : " + c.obj_name(c.dom(f)) + " -> " + c.obj_name(c.cod(f)) + "\n";
  for (ObjId a = 0; a < n; ++a) out += "identity " + c.obj_name(a) + " = " + c.mor_name(c.identity(a)) + "\n";
  for (MorId g = 0; g < m; ++g)
    for (MorId f = 0; f < m; ++f)
      if (c.composable(g, f))
        out += "compose " + c.mor_name(g) + " . " + c.mor_name(f) + " = " + c.mor_name(c.compose(g, f)) + "\n";
  for (MorId f : parsed.w.members()) out += "w " + c.mor_name(f) + "\n";

  if (parsed.preadditive) {
    const PreadditiveStructure& p = *parsed.preadditive;
    for (ObjId a = 0; a < n; ++a)
      for (ObjId b = 0; b < n; ++b)
        if (p.zero_of(a, b) != -1)
          out += "zero " + c.obj_name(a) + " " + c.obj_name(b) + " = " + c.mor_name(p.zero_of(a, b)) + "\n";
    for (MorId f = 0; f < m; ++f)
      for (MorId g = 0; g < m; ++g)
        if (p.add(f, g) != -1)
          out += "add " + c.mor_name(f) + " + " + c.mor_name(g) + " = " + c.mor_name(p.add(f, g)) + "\n";
    for (MorId f = 0; f < m; ++f)
      if (p.neg(f) != -1) out += "neg " + c.mor_name(f) + " = " + c.mor_name(p.neg(f)) + "\n";
  }

  for (const LiteralString& s : parsed.words) out += "word " + string_spec(c, s) + "\n";
  return out;
}

Functor parse_functor_file(std::string_view text, const FiniteCategory& source, const FiniteCategory& target) {
  Functor f;
  f.obj_map.assign(source.num_objects(), -1);
  f.mor_map.assign(source.num_morphisms(), -1);

  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_number;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tok = tokenize(line);
    if (!tok.empty()) {
      if (tok.size() != 4 || tok[2] != "->" || (tok[0] != "object" && tok[0] != "morphism"))
        throw ParseError(line_number, "expected: object|morphism <source name> -> <target name>");
      if (tok[0] == "object") {
        auto from = source.object_id(tok[1]);
        auto to = target.object_id(tok[3]);
        if (!from) throw ParseError(line_number, "unknown source object '" + tok[1] + "'");
        if (!to) throw ParseError(line_number, "unknown target object '" + tok[3] + "'");
        if (f.obj_map[*from] != -1) throw ParseError(line_number, "duplicate mapping for object '" + tok[1] + "'");
        f.obj_map[*from] = *to;
      } else {
        auto from = source.morphism_id(tok[1]);
        auto to = target.morphism_id(tok[3]);
        if (!from) throw ParseError(line_number, "unknown source morphism '" + tok[1] + "'");
        if (!to) throw ParseError(line_number, "unknown target morphism '" + tok[3] + "'");
        if (f.mor_map[*from] != -1)
          throw ParseError(line_number, "duplicate mapping for morphism '" + tok[1] + "'");
        f.mor_map[*from] = *to;
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  for (ObjId a = 0; a < source.num_objects(); ++a)
    if (f.obj_map[a] == -1) throw ParseError(-1, "object '" + source.obj_name(a) + "' is not mapped");
  for (MorId x = 0; x < source.num_morphisms(); ++x)
    if (f.mor_map[x] == -1) throw ParseError(-1, "morphism '" + source.mor_name(x) + "' is not mapped");
  return f;
}

Functor load_functor_file(const std::string& path, const FiniteCategory& source, const FiniteCategory& target) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(-1, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_functor_file(buf.str(), source, target);
}

Roof parse_roof_literal(std::string_view text, const FiniteCategory& c) {
  size_t first = text.find_first_not_of(" \t");
  size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError(-1, "empty roof literal");
  text = text.substr(first, last - first + 1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError(-1, "roof literal must look like (f,w)");
  std::string_view inner = text.substr(1, text.size() - 2);
  size_t comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
    throw ParseError(-1, "roof literal must name exactly two morphisms");
  std::string f_name(inner.substr(0, comma));
  std::string w_name(inner.substr(comma + 1));
  auto f = c.morphism_id(f_name);
  if (!f) throw ParseError(-1, "unknown morphism '" + f_name + "'");
  auto w = c.morphism_id(w_name);
  if (!w) throw ParseError(-1, "unknown morphism '" + w_name + "'");
  return Roof{*f, *w};
}

LiteralString parse_word_spec(std::string_view text, const FiniteCategory& c, const MorphClass& w) {
  std::vector<std::string> tok = tokenize(text);
  if (tok.size() < 2 || tok.size() > 3 || tok[1] != ":")
    throw ParseError(-1, "word spec must look like '<obj> : <lit>,<lit>,...'");
  auto src = c.object_id(tok[0]);
  if (!src) throw ParseError(-1, "unknown object '" + tok[0] + "'");
  std::vector<Literal> literals;
  if (tok.size() == 3) {
    const std::string& lits = tok[2];
    size_t pos = 0;
    while (pos <= lits.size()) {
      size_t comma = lits.find(',', pos);
      std::string item = lits.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty()) throw ParseError(-1, "empty literal in word");
      bool inverse = item[0] == '~';
      if (inverse) item = item.substr(1);
      auto mor = c.morphism_id(item);
      if (!mor) throw ParseError(-1, "unknown morphism '" + item + "'");
      literals.push_back(Literal{*mor, inverse});
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  LiteralString s;
  try {
    s = make_string(c, w, std::move(literals), *src);
  } catch (const PreconditionError& e) {
    throw ParseError(-1, e.what());
  }
  if (string_source(c, s) != *src) throw ParseError(-1, "word does not start at '" + tok[0] + "'");
  return s;
}

}  // namespace fincat
