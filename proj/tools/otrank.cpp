// otrank — command-line front end for the ranking/generation library.
//
// Exit codes: 0 success (or "yes" for decision queries), 1 "no"/INCONSISTENT,
// 2 usage or input error, 3 resource limit exceeded.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otrank/derivational.hpp"
#include "otrank/errors.hpp"
#include "otrank/generate.hpp"
#include "otrank/io.hpp"
#include "otrank/oracle.hpp"
#include "otrank/rank.hpp"
#include "otrank/reductions.hpp"
#include "otrank/synth.hpp"

namespace {

using ot::Alphabet;
using ot::AttestedForm;
using ot::AttestedSurfaceSet;
using ot::ConstraintId;
using ot::GrammarSpec;
using ot::Ranking;
using ot::Wdfa;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

// "identity" or a comma-separated list of constraint names, highest first.
Ranking parse_ranking(const GrammarSpec& g, const std::string& spec) {
  if (spec == "identity") return Ranking::identity(g.num_constraints());
  Ranking r;
  std::istringstream in(spec);
  std::string name;
  while (std::getline(in, name, ',')) r.order.push_back(g.constraints().id(name));
  r.validate(g.num_constraints());
  return r;
}

std::string ranking_names(const GrammarSpec& g, const Ranking& r) {
  std::string out;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    if (i > 0) out += ' ';
    out += g.constraints().name(r.order[i]);
  }
  return out;
}

std::string ranking_indices(const Ranking& r) {
  std::string out;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(r.order[i] + 1);
  }
  return out;
}

void print_words(const Wdfa& set, std::uint64_t max_words) {
  auto words = enumerate_words(set, max_words, 1u << 16);
  for (const auto& w : words)
    std::cout << "word: " << set.alphabet().format_word(w.word) << "\n";
  if (words.size() == max_words) std::cout << "word-list-truncated: yes\n";
}

int report_yes_no(bool yes) {
  std::cout << "result: " << (yes ? "yes" : "no") << "\n";
  return yes ? kExitYes : kExitNo;
}

int report_rank(const GrammarSpec* g, const ot::rank::RankResult& res) {
  if (!res.consistent()) {
    std::cout << "result: INCONSISTENT\n";
    return kExitNo;
  }
  std::cout << "ranking: "
            << (g ? ranking_names(*g, *res.ranking)
                  : ranking_indices(*res.ranking))
            << "\n";
  return kExitYes;
}

// Comma-separated positive sizes like "1024,2048".
std::vector<std::uint64_t> parse_sizes(const std::string& spec) {
  std::vector<std::uint64_t> sizes;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    sizes.push_back(std::stoull(tok));
  }
  if (sizes.empty()) throw ot::InputError("empty size list");
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "otrank — optimality-theoretic generation, ranking, and reductions"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand binds the fields it uses.
  struct {
    std::string grammar, bundle, rules, out;
    std::string ranking = "identity";
    std::string underlying, formulas, pairs, forms, ssets;
    std::string cnf, cnf2, graph, input, sequence, sizes = "1024,2048,4096";
    std::string variant = "beatable";
    std::uint64_t state_limit = ot::kDefaultStateLimit;
    std::uint64_t enum_limit = ot::kDefaultEnumLimit;
    std::uint64_t max_words = 10, node_limit = 1u << 22, cap = 200000;
    std::uint64_t seed = 1, reps = 3, clause_factor = 2, max_members = 3;
    std::uint32_t max_len = 12, exists = 0, arity = 3;
    bool bounded = false;
  } o;

  std::function<int()> run;

  auto limits = [&] {
    return ot::generate::Limits{o.state_limit, o.enum_limit};
  };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--state-limit", o.state_limit,
                    "product-construction state cap");
    cmd->add_option("--enum-limit", o.enum_limit, "enumeration cap");
  };

  // --- generate ---------------------------------------------------------
  CLI::App* generate =
      app.add_subcommand("generate", "run generation queries on a grammar");
  generate->require_subcommand(1);

  auto add_generate_common = [&](CLI::App* cmd) {
    cmd->add_option("--grammar", o.grammar, "grammar directory")->required();
    cmd->add_option("--ranking", o.ranking,
                    "comma-separated constraint names, or \"identity\"");
    add_limits(cmd);
  };

  {
    CLI::App* cmd = generate->add_subcommand(
        "opt", "optimal candidates and their violation vector");
    add_generate_common(cmd);
    cmd->add_option("--underlying", o.underlying, "candidate-set key")
        ->required();
    cmd->add_option("--max-words", o.max_words, "words to list");
    cmd->add_option("--out", o.out, "save the optimum automaton here");
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto res =
            ot::generate::winnow(g, parse_ranking(g, o.ranking), o.underlying,
                                 limits());
        std::cout << "values: " << ot::io::format_values(res.values) << "\n";
        print_words(res.optimum, o.max_words);
        if (!o.out.empty()) ot::io::save_wdfa(o.out, res.optimum);
        return kExitYes;
      };
    });
  }
  {
    CLI::App* cmd =
        generate->add_subcommand("optval", "optimal violation vector only");
    add_generate_common(cmd);
    cmd->add_option("--underlying", o.underlying, "candidate-set key")
        ->required();
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto v = ot::generate::opt_val(g, parse_ranking(g, o.ranking),
                                       o.underlying, limits());
        std::cout << "values: " << ot::io::format_values(v) << "\n";
        return kExitYes;
      };
    });
  }
  {
    CLI::App* cmd = generate->add_subcommand(
        "check", "are all attested forms optimal under the ranking?");
    add_generate_common(cmd);
    cmd->add_option("--forms", o.forms, "attested forms file")->required();
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        Ranking r = parse_ranking(g, o.ranking);
        bool yes = true;
        for (const AttestedForm& f :
             ot::io::load_forms(o.forms, g.alphabet()))
          yes = yes && ot::generate::check(g, r, f, limits());
        return report_yes_no(yes);
      };
    });
  }
  {
    CLI::App* cmd = generate->add_subcommand(
        "checksset",
        "does each attested surface set meet the optimal set?");
    add_generate_common(cmd);
    cmd->add_option("--ssets", o.ssets, "attested surface-set file")
        ->required();
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        Ranking r = parse_ranking(g, o.ranking);
        bool yes = true;
        for (const AttestedSurfaceSet& s :
             ot::io::load_ssets(o.ssets, g.alphabet()))
          yes = yes && ot::generate::check_sset(g, r, s, limits());
        return report_yes_no(yes);
      };
    });
  }
  {
    CLI::App* cmd = generate->add_subcommand(
        "query", "execute a serialized instance bundle");
    cmd->add_option("--bundle", o.bundle, "instance directory")->required();
    cmd->add_option("--max-words", o.max_words, "words to list for opt");
    cmd->add_option("--out", o.out, "save the optimum automaton here");
    add_limits(cmd);
    cmd->callback([&] {
      run = [&] {
        ot::reductions::Instance inst = ot::io::load_instance(o.bundle);
        ot::reductions::QueryOutcome res =
            ot::reductions::run_query(inst, limits());
        std::cout << "query: " << ot::reductions::query_kind_name(inst.query)
                  << "\n";
        if (res.value)
          std::cout << "values: " << ot::io::format_values(*res.value) << "\n";
        if (res.optimum) {
          print_words(*res.optimum, o.max_words);
          if (!o.out.empty()) ot::io::save_wdfa(o.out, *res.optimum);
        }
        if (res.witness && inst.grammar)
          std::cout << "ranking: " << ranking_names(*inst.grammar, *res.witness)
                    << "\n";
        if (res.sequence) {
          std::cout << "sequence:";
          for (std::uint32_t i : *res.sequence)
            std::cout << " " << inst.rules->pool[i].name;
          std::cout << "\n";
        }
        return report_yes_no(res.yes);
      };
    });
  }

  // --- rank -------------------------------------------------------------
  CLI::App* rank =
      app.add_subcommand("rank", "solve for a constraint ranking");
  rank->require_subcommand(1);

  auto add_formula_source = [&](CLI::App* cmd) {
    cmd->add_option("--formulas", o.formulas, "mark-data clause file");
    cmd->add_option("--grammar", o.grammar, "grammar directory");
    cmd->add_option("--pairs", o.pairs, "winner/loser pair file");
    add_limits(cmd);
  };
  // Either a raw formulas file or grammar+pairs to compile.  Returns the
  // grammar too (null when formulas were given directly).
  auto load_formula_source =
      [&](std::optional<GrammarSpec>& g) -> ot::FormulaSet {
    if (!o.formulas.empty()) {
      if (!o.grammar.empty() || !o.pairs.empty())
        throw ot::InputError("give either --formulas or --grammar/--pairs");
      return ot::io::load_formulas(o.formulas);
    }
    if (o.grammar.empty() || o.pairs.empty())
      throw ot::InputError("need --formulas, or --grammar and --pairs");
    g = ot::io::load_grammar(o.grammar);
    return ot::compile_pairs(*g,
                             ot::io::load_pairs(o.pairs, g->alphabet()));
  };

  {
    CLI::App* cmd = rank->add_subcommand(
        "rcd", "recursive constraint demotion (linear time)");
    add_formula_source(cmd);
    cmd->callback([&] {
      run = [&] {
        std::optional<GrammarSpec> g;
        ot::FormulaSet f = load_formula_source(g);
        ot::rank::RcdStats stats;
        ot::rank::RankResult res = ot::rank::rcd(f, &stats);
        std::cout << "stats: eliminated=" << stats.clauses_eliminated
                  << " disjuncts=" << stats.disjunct_visits
                  << " backs=" << stats.back_visits << "\n";
        return report_rank(g ? &*g : nullptr, res);
      };
    });
  }
  {
    CLI::App* cmd =
        rank->add_subcommand("cd", "stratified constraint demotion");
    add_formula_source(cmd);
    cmd->callback([&] {
      run = [&] {
        std::optional<GrammarSpec> g;
        ot::FormulaSet f = load_formula_source(g);
        ot::rank::RankResult res = ot::rank::cd(f);
        std::cout << "passes: " << res.diag.passes << "\n";
        return report_rank(g ? &*g : nullptr, res);
      };
    });
  }

  auto add_forms_learner = [&](CLI::App* cmd) {
    cmd->add_option("--grammar", o.grammar, "grammar directory")->required();
    cmd->add_option("--forms", o.forms, "attested forms file")->required();
    add_limits(cmd);
  };
  {
    CLI::App* cmd = rank->add_subcommand(
        "edcd", "error-driven constraint demotion over attested forms");
    add_forms_learner(cmd);
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto forms = ot::io::load_forms(o.forms, g.alphabet());
        ot::rank::RankResult res =
            ot::rank::edcd(g, forms, nullptr, limits());
        std::cout << "errors: " << res.diag.errors << "\n";
        if (res.diag.error_cap_hit) std::cout << "error-cap-hit: yes\n";
        return report_rank(&g, res);
      };
    });
  }
  {
    CLI::App* cmd = rank->add_subcommand(
        "mrcd", "multi-recursive constraint demotion over attested forms");
    add_forms_learner(cmd);
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto forms = ot::io::load_forms(o.forms, g.alphabet());
        ot::rank::RankResult res = ot::rank::mrcd(g, forms, limits());
        std::cout << "errors: " << res.diag.errors << "\n";
        return report_rank(&g, res);
      };
    });
  }
  {
    CLI::App* cmd = rank->add_subcommand(
        "rcdall", "greedy top-down ranking over attested forms");
    add_forms_learner(cmd);
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto forms = ot::io::load_forms(o.forms, g.alphabet());
        return report_rank(&g, ot::rank::rcd_all(g, forms, limits()));
      };
    });
  }
  {
    CLI::App* cmd = rank->add_subcommand(
        "sset", "rank against attested surface sets (search)");
    cmd->add_option("--grammar", o.grammar, "grammar directory")->required();
    cmd->add_option("--ssets", o.ssets, "attested surface-set file")
        ->required();
    add_limits(cmd);
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto ssets = ot::io::load_ssets(o.ssets, g.alphabet());
        ot::rank::RankResult res = ot::rank::rank_sset(g, ssets, limits());
        std::cout << "nodes: " << res.diag.nodes << "\n";
        return report_rank(&g, res);
      };
    });
  }

  // --- reduce -----------------------------------------------------------
  CLI::App* reduce = app.add_subcommand(
      "reduce", "encode a combinatorial problem as an instance bundle");
  reduce->require_subcommand(1);

  auto write_instance = [&](const ot::reductions::Instance& inst) {
    ot::io::save_instance(o.out, inst);
    std::cout << "wrote: " << o.out << "\n"
              << "query: " << ot::reductions::query_kind_name(inst.query)
              << "\n";
    if (inst.grammar)
      std::cout << "constraints: " << inst.grammar->num_constraints() << "\n";
    return kExitYes;
  };

  {
    CLI::App* cmd = reduce->add_subcommand(
        "hamilton", "Hamilton path -> single-surface-set ranking");
    cmd->add_option("--graph", o.graph, "digraph file")->required();
    cmd->add_flag("--bounded", o.bounded,
                  "cap constraint counting at the word length");
    cmd->add_option("--out", o.out, "output bundle directory")->required();
    cmd->callback([&] {
      run = [&] {
        return write_instance(ot::reductions::gen_hamilton(
            ot::io::load_digraph(o.graph), o.bounded));
      };
    });
  }
  {
    CLI::App* cmd = reduce->add_subcommand(
        "msa", "minimal satisfying assignment -> optimal violation vector");
    cmd->add_option("--cnf", o.cnf, "DIMACS cnf file")->required();
    cmd->add_option("--out", o.out, "output bundle directory")->required();
    cmd->callback([&] {
      run = [&] {
        return write_instance(
            ot::reductions::gen_msa(ot::io::load_cnf(o.cnf)));
      };
    });
  }
  {
    CLI::App* cmd =
        reduce->add_subcommand("cnfsat", "CNF satisfiability -> threshold");
    cmd->add_option("--cnf", o.cnf, "DIMACS cnf file")->required();
    cmd->add_option("--variant", o.variant, "beatable | check")
        ->check(CLI::IsMember({"beatable", "check"}));
    cmd->add_option("--out", o.out, "output bundle directory")->required();
    cmd->callback([&] {
      run = [&] {
        ot::CnfFormula phi = ot::io::load_cnf(o.cnf);
        return write_instance(o.variant == "beatable"
                                  ? ot::reductions::gen_cnfsat_beatable(phi)
                                  : ot::reductions::gen_cnfsat_check(phi));
      };
    });
  }
  {
    CLI::App* cmd = reduce->add_subcommand(
        "satunsat", "sat/unsat formula pair -> vector range");
    cmd->add_option("--sat", o.cnf, "formula that should be satisfiable")
        ->required();
    cmd->add_option("--unsat", o.cnf2, "formula that should be unsatisfiable")
        ->required();
    cmd->add_option("--out", o.out, "output bundle directory")->required();
    cmd->callback([&] {
      run = [&] {
        return write_instance(ot::reductions::gen_satunsat_range(
            ot::io::load_cnf(o.cnf), ot::io::load_cnf(o.cnf2)));
      };
    });
  }
  {
    CLI::App* cmd = reduce->add_subcommand(
        "qsat2", "exists-forall CNF falsifiability -> surface-set ranking");
    cmd->add_option("--cnf", o.cnf, "DIMACS cnf file")->required();
    cmd->add_option("--exists", o.exists,
                    "number of leading existential variables")
        ->required();
    cmd->add_option("--out", o.out, "output bundle directory")->required();
    cmd->callback([&] {
      run = [&] {
        return write_instance(
            ot::reductions::gen_qsat2(ot::io::load_cnf(o.cnf), o.exists));
      };
    });
  }
  {
    CLI::App* cmd = reduce->add_subcommand(
        "msalsb", "last bit of the minimal satisfying assignment -> checksset");
    cmd->add_option("--cnf", o.cnf, "DIMACS cnf file")->required();
    cmd->add_option("--out", o.out, "output bundle directory")->required();
    cmd->callback([&] {
      run = [&] {
        return write_instance(
            ot::reductions::gen_msalsb(ot::io::load_cnf(o.cnf)));
      };
    });
  }
  {
    CLI::App* cmd = reduce->add_subcommand(
        "permgrammar", "grammar whose every total ranking surfaces Σ^r");
    cmd->add_option("--arity", o.arity, "alphabet size r")->required();
    cmd->add_option("--out", o.out, "output grammar directory")->required();
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::reductions::gen_permutation_grammar(o.arity);
        ot::io::save_grammar(o.out, g);
        std::cout << "wrote: " << o.out << "\n"
                  << "constraints: " << g.num_constraints() << "\n";
        return kExitYes;
      };
    });
  }
  {
    CLI::App* cmd = reduce->add_subcommand(
        "orderable", "Hamilton path -> derivational rule ordering");
    cmd->add_option("--graph", o.graph, "digraph file")->required();
    cmd->add_option("--out", o.out, "output bundle directory")->required();
    cmd->callback([&] {
      run = [&] {
        return write_instance(ot::reductions::gen_orderable_hamilton(
            ot::io::load_digraph(o.graph)));
      };
    });
  }

  // --- derive -----------------------------------------------------------
  CLI::App* derive =
      app.add_subcommand("derive", "run derivational rule systems");
  derive->require_subcommand(1);
  {
    CLI::App* cmd =
        derive->add_subcommand("run", "apply a rule sequence to a word");
    cmd->add_option("--rules", o.rules, "rule-system directory")->required();
    cmd->add_option("--input", o.input, "input word")->required();
    cmd->add_option("--sequence", o.sequence,
                    "comma-separated 1-based pool indices")
        ->required();
    cmd->callback([&] {
      run = [&] {
        auto inst = ot::io::load_rules(o.rules);
        std::vector<std::uint32_t> indices;
        for (std::uint64_t i : parse_sizes(o.sequence)) {
          if (i == 0 || i > inst.pool.size())
            throw ot::InputError("rule index out of range: " +
                                 std::to_string(i));
          indices.push_back(static_cast<std::uint32_t>(i - 1));
        }
        ot::Word w = ot::derivational::apply_sequence(
            inst, indices, inst.alphabet.parse_word(o.input));
        std::cout << "word: " << inst.alphabet.format_word(w) << "\n";
        return kExitYes;
      };
    });
  }
  {
    CLI::App* cmd = derive->add_subcommand(
        "order", "find a rule order sending every pair into its target");
    cmd->add_option("--rules", o.rules, "rule-system directory")->required();
    cmd->add_option("--node-limit", o.node_limit, "search state cap");
    cmd->callback([&] {
      run = [&] {
        auto inst = ot::io::load_rules(o.rules);
        auto res = ot::derivational::orderable_sset(inst, o.node_limit);
        std::cout << "explored: " << res.explored << "\n";
        if (!res.sequence) return report_yes_no(false);
        std::cout << "sequence:";
        for (std::uint32_t i : *res.sequence)
          std::cout << " " << inst.pool[i].name;
        std::cout << "\n";
        return report_yes_no(true);
      };
    });
  }

  // --- oracle -----------------------------------------------------------
  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force baselines (small inputs only)");
  oracle->require_subcommand(1);
  {
    CLI::App* cmd = oracle->add_subcommand(
        "opt", "optimum by explicit candidate enumeration");
    cmd->add_option("--grammar", o.grammar, "grammar directory")->required();
    cmd->add_option("--ranking", o.ranking,
                    "comma-separated constraint names, or \"identity\"");
    cmd->add_option("--underlying", o.underlying, "candidate-set key")
        ->required();
    cmd->add_option("--max-len", o.max_len, "candidate length bound");
    cmd->add_option("--cap", o.cap, "candidate count cap");
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto res = ot::oracle::brute_opt(g, parse_ranking(g, o.ranking),
                                         o.underlying, o.max_len, o.cap);
        std::cout << "values: " << ot::io::format_values(res.values) << "\n";
        for (const ot::Word& w : res.optima)
          std::cout << "word: " << g.alphabet().format_word(w) << "\n";
        return kExitYes;
      };
    });
  }
  {
    CLI::App* cmd =
        oracle->add_subcommand("rank", "ranking by trying all permutations");
    cmd->add_option("--grammar", o.grammar, "grammar directory")->required();
    cmd->add_option("--forms", o.forms, "attested forms file")->required();
    cmd->add_option("--max-len", o.max_len, "candidate length bound");
    cmd->callback([&] {
      run = [&] {
        GrammarSpec g = ot::io::load_grammar(o.grammar);
        auto forms = ot::io::load_forms(o.forms, g.alphabet());
        auto r = ot::oracle::brute_rank(g, forms, o.max_len);
        if (!r) {
          std::cout << "result: INCONSISTENT\n";
          return kExitNo;
        }
        std::cout << "ranking: " << ranking_names(g, *r) << "\n";
        return kExitYes;
      };
    });
  }
  {
    CLI::App* cmd = oracle->add_subcommand(
        "msa", "minimal satisfying assignment by enumeration");
    cmd->add_option("--cnf", o.cnf, "DIMACS cnf file")->required();
    cmd->callback([&] {
      run = [&] {
        auto a = ot::oracle::brute_msa(ot::io::load_cnf(o.cnf));
        if (!a) {
          std::cout << "result: UNSAT\n";
          return kExitNo;
        }
        std::cout << "assignment: ";
        for (bool b : *a) std::cout << (b ? '1' : '0');
        std::cout << "\n";
        return kExitYes;
      };
    });
  }
  {
    CLI::App* cmd = oracle->add_subcommand(
        "qsat2", "exists-forall falsifiability by enumeration");
    cmd->add_option("--cnf", o.cnf, "DIMACS cnf file")->required();
    cmd->add_option("--exists", o.exists,
                    "number of leading existential variables")
        ->required();
    cmd->callback([&] {
      run = [&] {
        return report_yes_no(
            ot::oracle::brute_qsat2(ot::io::load_cnf(o.cnf), o.exists));
      };
    });
  }
  {
    CLI::App* cmd = oracle->add_subcommand(
        "hamilton", "Hamilton path by trying all permutations");
    cmd->add_option("--graph", o.graph, "digraph file")->required();
    cmd->callback([&] {
      run = [&] {
        return report_yes_no(
            ot::oracle::brute_hamilton(ot::io::load_digraph(o.graph)));
      };
    });
  }

  // --- bench ------------------------------------------------------------
  CLI::App* bench = app.add_subcommand("bench", "timing harnesses");
  bench->require_subcommand(1);
  {
    CLI::App* cmd = bench->add_subcommand(
        "rcd-scaling", "rcd wall time across consistent-formula sizes (TSV)");
    cmd->add_option("--sizes", o.sizes, "comma-separated constraint counts");
    cmd->add_option("--clause-factor", o.clause_factor,
                    "clauses per constraint");
    cmd->add_option("--max-members", o.max_members, "members per clause cap");
    cmd->add_option("--seed", o.seed, "rng seed");
    cmd->add_option("--reps", o.reps, "repetitions (min is reported)");
    cmd->callback([&] {
      run = [&] {
        std::cout << "n\tm\tM\tmillis\tns_per_unit\n";
        for (std::uint64_t n : parse_sizes(o.sizes)) {
          ot::synth::Rng rng(o.seed);
          ot::FormulaSet f = ot::synth::random_consistent_formulas(
              rng, static_cast<std::uint32_t>(n),
              static_cast<std::uint32_t>(n * o.clause_factor),
              static_cast<std::uint32_t>(o.max_members));
          double best = 0;
          for (std::uint64_t rep = 0; rep < o.reps; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            ot::rank::RankResult res = ot::rank::rcd(f);
            auto t1 = std::chrono::steady_clock::now();
            if (!res.consistent())
              throw ot::InputError("bench: generator produced an "
                                   "inconsistent set");
            double ms = std::chrono::duration<double, std::milli>(t1 - t0)
                            .count();
            if (rep == 0 || ms < best) best = ms;
          }
          double units = static_cast<double>(f.storage_size() + n);
          std::cout << n << "\t" << f.clauses().size() << "\t"
                    << f.storage_size() << "\t" << best << "\t"
                    << best * 1e6 / units << "\n";
        }
        return kExitYes;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    return run ? run() : kExitInput;
  } catch (const ot::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ot::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
