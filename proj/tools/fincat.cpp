#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fincat/additive.hpp"
#include "fincat/parser.hpp"
#include "fincat/word_oracle.hpp"

namespace {

using namespace fincat;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // axiom failure, disagreement, negative verdict
constexpr int kExitUsage = 2;     // usage, parse or precondition problems

struct CheckedRoofs {
  Roof r1;
  Roof r2;
};

// Roof arguments for `equal`/`add`; with --right a roof is a cospan sharing
// its domain, and the computation runs in the opposite category.
CheckedRoofs parse_roof_args(const ParsedCategory& parsed, const std::string& roof1,
                             const std::string& roof2, bool right) {
  CheckedRoofs out{parse_roof_literal(roof1, parsed.category), parse_roof_literal(roof2, parsed.category)};
  const FiniteCategory host = right ? opposite(parsed.category) : parsed.category;
  for (const Roof& r : {out.r1, out.r2})
    if (!roof_valid(host, parsed.w, r))
      throw PreconditionError("not a roof: " + roof_name(parsed.category, r));
  return out;
}

int run_validate(const std::string& path) {
  ParsedCategory parsed = load_category_file(path);
  ValidationReport rep = validate_category(parsed.category);
  if (parsed.preadditive) {
    ValidationReport add_rep = validate_preadditive(parsed.category, *parsed.preadditive);
    rep.violations.insert(rep.violations.end(), add_rep.violations.begin(), add_rep.violations.end());
  }
  if (rep.ok()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  for (const std::string& v : rep.violations) std::cout << "invalid: " << v << "\n";
  return kExitFailure;
}

int run_check(const std::string& path, bool weak, bool all, bool right) {
  ParsedCategory parsed = load_category_file(path);
  const FiniteCategory c = right ? opposite(parsed.category) : parsed.category;
  const MorphClass& w = parsed.w;

  AxiomReport l0 = check_l0(c, w, all);
  std::cout << to_lines(l0, c);
  if (!l0.holds) return kExitFailure;

  bool ok = true;
  for (AxiomReport rep : {check_l1(c, w, all), check_l2(c, w, all)}) {
    std::cout << to_lines(rep, c);
    ok = ok && rep.holds;
  }
  if (weak) {
    for (AxiomReport rep : {check_l1_prime(c, w, all), check_l2_prime(c, w, all)}) {
      std::cout << to_lines(rep, c);
      ok = ok && rep.holds;
    }
  }
  if (parsed.preadditive) {
    PreadditiveStructure p = right ? opposite_preadditive(*parsed.preadditive) : *parsed.preadditive;
    AxiomReport rep = check_l2_doubleprime(c, w, p, all);
    std::cout << to_lines(rep, c);
    ok = ok && rep.holds;
  }
  return ok ? kExitOk : kExitFailure;
}

int run_localize(const std::string& path, bool right) {
  ParsedCategory parsed = load_category_file(path);
  FractionCategory loc =
      right ? localize_right(parsed.category, parsed.w) : localize(parsed.category, parsed.w);
  std::cout << localization_report(loc);
  return kExitOk;
}

int run_hom(const std::string& path, const std::string& a, const std::string& b, bool right) {
  ParsedCategory parsed = load_category_file(path);
  auto source = parsed.category.object_id(a);
  if (!source) throw PreconditionError("unknown object '" + a + "'");
  auto target = parsed.category.object_id(b);
  if (!target) throw PreconditionError("unknown object '" + b + "'");
  FractionCategory loc =
      right ? localize_right(parsed.category, parsed.w) : localize(parsed.category, parsed.w);
  std::cout << hom_report(loc, *source, *target);
  return kExitOk;
}

int run_equal(const std::string& path, const std::string& roof1, const std::string& roof2, bool weak,
              bool right) {
  ParsedCategory parsed = load_category_file(path);
  CheckedRoofs roofs = parse_roof_args(parsed, roof1, roof2, right);
  const FiniteCategory host = right ? opposite(parsed.category) : parsed.category;
  std::optional<EquivWitness> witness =
      weak ? roof_equivalent_weak(host, parsed.w, roofs.r1, roofs.r2)
           : roof_equivalent(host, parsed.w, roofs.r1, roofs.r2);
  if (!witness) {
    std::cout << "not equivalent\n";
    return kExitFailure;
  }
  std::cout << (witness->weak ? "equivalent (weak): witness g=" : "equivalent: witness g=")
            << host.mor_name(witness->g) << " h=" << host.mor_name(witness->h) << "\n";
  return kExitOk;
}

int run_add(const std::string& path, const std::string& roof1, const std::string& roof2) {
  ParsedCategory parsed = load_category_file(path);
  if (!parsed.preadditive) throw PreconditionError("'" + path + "' carries no additive structure");
  CheckedRoofs roofs = parse_roof_args(parsed, roof1, roof2, false);
  Roof sum = add_roofs(parsed.category, parsed.w, *parsed.preadditive, roofs.r1, roofs.r2);
  std::cout << "sum: " << roof_name(parsed.category, sum) << "\n";
  FractionCategory loc = localize(parsed.category, parsed.w);
  std::cout << "class: " << roof_name(parsed.category, loc.canonical_rep(sum)) << "\n";
  return kExitOk;
}

int run_factor(const std::string& source_path, const std::string& target_path,
               const std::string& map_path) {
  ParsedCategory source = load_category_file(source_path);
  ParsedCategory target = load_category_file(target_path);
  Functor f = load_functor_file(map_path, source.category, target.category);
  FractionCategory loc = localize(source.category, source.w);
  Functor g = factor_functor(source.category, source.w, loc, target.category, f);
  for (MorId x = 0; x < loc.base.num_morphisms(); ++x)
    std::cout << "G " << loc.base.mor_name(x) << " = " << target.category.mor_name(g.mor_map[x]) << "\n";
  return kExitOk;
}

int run_oracle(const std::string& path, std::optional<int> max_len, std::optional<long> max_steps) {
  ParsedCategory parsed = load_category_file(path);

  int longest = 2;  // roof strings
  for (const LiteralString& s : parsed.words) longest = std::max(longest, s.length());
  int len = max_len.value_or(default_max_len(longest));
  long steps = max_steps.value_or(kDefaultMaxSteps);

  // verdicts for declared words first, then the roof-class agreement report
  for (size_t i = 0; i < parsed.words.size(); ++i)
    for (size_t j = i + 1; j < parsed.words.size(); ++j) {
      const LiteralString& s1 = parsed.words[i];
      const LiteralString& s2 = parsed.words[j];
      if (string_source(parsed.category, s1) != string_source(parsed.category, s2) ||
          string_target(parsed.category, s1) != string_target(parsed.category, s2))
        continue;
      WordVerdict verdict = word_equal(parsed.category, parsed.w, s1, s2, len, steps);
      std::cout << "word " << i << " vs word " << j << ": " << verdict_name(verdict) << "\n";
    }

  FractionCategory loc = localize(parsed.category, parsed.w);
  AgreementReport rep = oracle_compare(parsed.category, parsed.w, loc, len, steps);
  std::cout << "oracle: agree=" << rep.agree << " unknown=" << rep.unknown << " total=" << rep.total
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"localization of finite categories by calculus of fractions"};
  app.require_subcommand(1);

  std::string path, path2, path3, roof1, roof2, obj_a, obj_b;
  bool weak = false, all = false, right = false;
  std::optional<int> max_len;
  std::optional<long> max_steps;

  CLI::App* validate = app.add_subcommand("validate", "check the category axioms of a file");
  validate->add_option("file", path)->required();

  CLI::App* check = app.add_subcommand("check", "check the calculus-of-fractions axioms");
  check->add_option("file", path)->required();
  check->add_flag("--weak", weak, "also check the weakened variants L1' and L2'");
  check->add_flag("--all", all, "list every counterexample instead of the first");
  check->add_flag("--right", right, "check the right-fraction axioms instead");

  CLI::App* localize_cmd = app.add_subcommand("localize", "construct the category of fractions");
  localize_cmd->add_option("file", path)->required();
  localize_cmd->add_flag("--right", right, "use right fractions");

  CLI::App* hom = app.add_subcommand("hom", "list the roof classes of one hom-set");
  hom->add_option("file", path)->required();
  hom->add_option("source", obj_a)->required();
  hom->add_option("target", obj_b)->required();
  hom->add_flag("--right", right, "use right fractions");

  CLI::App* equal = app.add_subcommand("equal", "decide equivalence of two roofs (f,w)");
  equal->add_option("file", path)->required();
  equal->add_option("roof1", roof1)->required();
  equal->add_option("roof2", roof2)->required();
  equal->add_flag("--weak", weak, "allow the common composite in W_L");
  equal->add_flag("--right", right, "treat the roofs as right fractions");

  CLI::App* add = app.add_subcommand("add", "add two parallel roofs in a preadditive category");
  add->add_option("file", path)->required();
  add->add_option("roof1", roof1)->required();
  add->add_option("roof2", roof2)->required();

  CLI::App* factor = app.add_subcommand("factor", "factor a functor through the localization");
  factor->add_option("source", path)->required();
  factor->add_option("target", path2)->required();
  factor->add_option("map", path3)->required();

  CLI::App* oracle = app.add_subcommand("oracle", "cross-check roof classes against word rewriting");
  oracle->add_option("file", path)->required();
  oracle->add_option("--max-len", max_len, "length bound for rewritten words");
  oracle->add_option("--max-steps", max_steps, "expansion budget per comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return run_validate(path);
    if (*check) return run_check(path, weak, all, right);
    if (*localize_cmd) return run_localize(path, right);
    if (*hom) return run_hom(path, obj_a, obj_b, right);
    if (*equal) return run_equal(path, roof1, roof2, weak, right);
    if (*add) return run_add(path, roof1, roof2);
    if (*factor) return run_factor(path, path2, path3);
    if (*oracle) return run_oracle(path, max_len, max_steps);
  } catch (const AxiomFailureError& e) {
    std::cout << e.what();  // already rendered as axiom lines
    return kExitFailure;
  } catch (const DisagreementError& e) {
    std::cout << "oracle: DISAGREEMENT " << e.what() << "\n";
    return kExitFailure;
  } catch (const NotLocalError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const NoWitnessError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // parallelism, composability, bounds and precondition problems
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
