#include "otrank/synth.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "otrank/errors.hpp"
#include "otrank/generate.hpp"

namespace ot::synth {

std::uint64_t pick(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("synth: pick from empty range");
  return rng() % bound;
}

Ranking random_ranking(Rng& rng, std::uint32_t n) {
  Ranking r = Ranking::identity(n);
  // Fisher-Yates, driven by pick() for reproducibility.
  for (std::uint32_t i = n; i > 1; --i) {
    std::swap(r.order[i - 1], r.order[pick(rng, i)]);
  }
  return r;
}

Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t max_len) {
  Word w(pick(rng, max_len + 1));
  for (SymbolId& s : w) s = static_cast<SymbolId>(pick(rng, alphabet.size()));
  return w;
}

namespace {

// k distinct draws from 0..bound-1 (k <= bound), by partial Fisher-Yates.
std::vector<std::uint32_t> pick_distinct(Rng& rng, std::uint32_t bound,
                                         std::uint32_t k) {
  std::vector<std::uint32_t> all(bound);
  for (std::uint32_t i = 0; i < bound; ++i) all[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::swap(all[i], all[i + pick(rng, bound - i)]);
  }
  all.resize(k);
  return all;
}

}  // namespace

FormulaSet random_consistent_formulas(Rng& rng, std::uint32_t n,
                                      std::uint32_t num_clauses,
                                      std::uint32_t max_members,
                                      Ranking* hidden) {
  if (n < 2) throw InputError("synth: consistent formulas need n >= 2");
  if (max_members == 0) throw InputError("synth: max_members must be >= 1");
  Ranking h = random_ranking(rng, n);
  if (hidden) *hidden = h;
  std::vector<MarkDataClause> clauses;
  clauses.reserve(num_clauses);
  for (std::uint32_t i = 0; i < num_clauses; ++i) {
    // Split the hidden order at a pivot: members come from at or above it,
    // losers from strictly below, so the pivot member dominates every loser.
    std::uint32_t p = static_cast<std::uint32_t>(pick(rng, n - 1));
    MarkDataClause clause;
    clause.members.push_back(h.order[p]);
    std::uint32_t extra =
        static_cast<std::uint32_t>(pick(rng, std::min(max_members, p + 1)));
    for (std::uint32_t q : pick_distinct(rng, p + 1, extra)) {
      if (h.order[q] != clause.members[0]) clause.members.push_back(h.order[q]);
    }
    std::uint32_t below = n - 1 - p;
    std::uint32_t num_losers =
        1 + static_cast<std::uint32_t>(pick(rng, std::min(2u, below)));
    for (std::uint32_t q : pick_distinct(rng, below, num_losers)) {
      clause.losers.push_back(h.order[p + 1 + q]);
    }
    clauses.push_back(std::move(clause));
  }
  return FormulaSet(n, std::move(clauses));
}

FormulaSet random_formulas(Rng& rng, std::uint32_t n,
                           std::uint32_t num_clauses,
                           std::uint32_t max_members) {
  if (n < 2) throw InputError("synth: formulas need n >= 2");
  std::vector<MarkDataClause> clauses;
  clauses.reserve(num_clauses);
  for (std::uint32_t i = 0; i < num_clauses; ++i) {
    MarkDataClause clause;
    std::uint32_t num_losers = 1 + static_cast<std::uint32_t>(
                                       pick(rng, std::min(2u, n - 1)));
    std::uint32_t num_members = static_cast<std::uint32_t>(
        pick(rng, std::min(max_members, n - num_losers) + 1));
    std::vector<std::uint32_t> chosen =
        pick_distinct(rng, n, num_members + num_losers);
    clause.members.assign(chosen.begin(), chosen.begin() + num_members);
    clause.losers.assign(chosen.begin() + num_members, chosen.end());
    clauses.push_back(std::move(clause));
  }
  return FormulaSet(n, std::move(clauses));
}

CnfFormula random_cnf(Rng& rng, std::uint32_t max_vars,
                      std::uint32_t max_clauses, bool force_unsat) {
  if (max_vars == 0 || max_clauses == 0)
    throw InputError("synth: cnf sizes must be >= 1");
  CnfFormula phi;
  phi.num_vars = 1 + static_cast<std::uint32_t>(pick(rng, max_vars));
  std::uint32_t m = 1 + static_cast<std::uint32_t>(pick(rng, max_clauses));
  for (std::uint32_t i = 0; i < m; ++i) {
    CnfClause clause;
    std::uint32_t len = 1 + static_cast<std::uint32_t>(pick(rng, 3));
    for (std::uint32_t j = 0; j < len; ++j) {
      Literal lit;
      lit.var = 1 + static_cast<std::uint32_t>(pick(rng, phi.num_vars));
      lit.negated = pick(rng, 2) == 1;
      clause.push_back(lit);
    }
    phi.clauses.push_back(std::move(clause));
  }
  if (force_unsat) {
    phi.clauses.push_back({Literal{1, false}});
    phi.clauses.push_back({Literal{1, true}});
  }
  return phi;
}

Digraph random_digraph(Rng& rng, std::uint32_t order,
                       std::uint32_t edge_percent) {
  Digraph g;
  g.order = order;
  for (std::uint32_t i = 1; i <= order; ++i) {
    for (std::uint32_t j = 1; j <= order; ++j) {
      if (i == j) continue;
      if (pick(rng, 100) < edge_percent) g.edges.insert({i, j});
    }
  }
  return g;
}

GrammarSpec random_finite_grammar(Rng& rng, std::uint32_t num_gens,
                                  std::uint32_t num_constraints) {
  if (num_gens == 0 || num_constraints == 0)
    throw InputError("synth: grammar sizes must be >= 1");
  std::vector<std::string> names = {"a", "b", "c"};
  names.resize(2 + pick(rng, 2));
  Alphabet alphabet(names);

  std::vector<std::pair<std::string, Wdfa>> gens;
  for (std::uint32_t k = 1; k <= num_gens; ++k) {
    std::vector<Word> words(1 + pick(rng, 6));
    for (Word& w : words) w = random_word(rng, alphabet, 4);
    gens.emplace_back("u" + std::to_string(k), make_word_set(alphabet, words));
  }

  std::vector<Constraint> constraints;
  for (std::uint32_t c = 1; c <= num_constraints; ++c) {
    State k = 1 + static_cast<State>(pick(rng, 3));
    Wdfa machine(alphabet, k, 0);
    for (State s = 0; s < k; ++s) {
      for (SymbolId sym = 0; sym < alphabet.size(); ++sym) {
        machine.add_arc(s, sym, pick(rng, 2),
                        static_cast<State>(pick(rng, k)));
      }
      machine.set_final(s, pick(rng, 2));
    }
    constraints.push_back({"c" + std::to_string(c), std::move(machine)});
  }

  return GrammarSpec(alphabet, std::move(gens),
                     ConstraintSet(alphabet, std::move(constraints)));
}

std::vector<AttestedForm> consistent_attested_forms(Rng& rng,
                                                    const GrammarSpec& g,
                                                    std::uint32_t num_forms,
                                                    Ranking* hidden) {
  Ranking h = random_ranking(rng, g.num_constraints());
  if (hidden) *hidden = h;
  std::vector<AttestedForm> forms;
  forms.reserve(num_forms);
  for (std::uint32_t i = 0; i < num_forms; ++i) {
    const std::string& key = g.gens()[pick(rng, g.gens().size())].first;
    Wdfa optimum = generate::opt(g, h, key);
    std::vector<EnumeratedWord> first = enumerate_words(
        optimum, 1, 8 * std::max<std::uint32_t>(1, optimum.num_states()));
    if (first.empty())
      throw InputError("synth: optimum enumerates no word");  // unreachable
    forms.push_back({key, std::move(first[0].word)});
  }
  return forms;
}

}  // namespace ot::synth
