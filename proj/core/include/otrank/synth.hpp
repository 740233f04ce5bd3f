#ifndef OTRANK_SYNTH_HPP
#define OTRANK_SYNTH_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "otrank/cnf.hpp"
#include "otrank/digraph.hpp"
#include "otrank/formula.hpp"
#include "otrank/grammar.hpp"

// Seeded random instance generators for tests and benchmarks.  Everything
// here draws from the caller's engine only through pick(), so a fixed seed
// reproduces the same instance on any platform.
namespace ot::synth {

using Rng = std::mt19937_64;

// Uniform draw from [0, bound); bound must be positive.  (The slight modulo
// bias is irrelevant at test sizes and keeps results engine-portable, which
// std::uniform_int_distribution does not guarantee.)
std::uint64_t pick(Rng& rng, std::uint64_t bound);

// A uniformly random permutation of 0..n-1.
Ranking random_ranking(Rng& rng, std::uint32_t n);

// A random word over `alphabet` of length 0..max_len.
Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t max_len);

// `num_clauses` clauses over n >= 2 constraints, each built around a hidden
// random ranking so that the set is satisfiable by construction: every
// clause's top member outranks all of its losers under the hidden ranking.
// If `hidden` is non-null the hidden ranking is written there.
FormulaSet random_consistent_formulas(Rng& rng, std::uint32_t n,
                                      std::uint32_t num_clauses,
                                      std::uint32_t max_members,
                                      Ranking* hidden = nullptr);

// Arbitrary clauses (members may be empty), so the set may be inconsistent.
FormulaSet random_formulas(Rng& rng, std::uint32_t n,
                           std::uint32_t num_clauses,
                           std::uint32_t max_members);

// A random CNF formula: 1..max_vars variables, 1..max_clauses clauses of
// 1..3 literals each.  With force_unsat, the single-literal clauses (v1) and
// (!v1) are appended, making the formula unsatisfiable.
CnfFormula random_cnf(Rng& rng, std::uint32_t max_vars,
                      std::uint32_t max_clauses, bool force_unsat);

// Each ordered pair of distinct vertices becomes an edge with probability
// edge_percent/100.
Digraph random_digraph(Rng& rng, std::uint32_t order,
                       std::uint32_t edge_percent);

// A small random grammar suitable for exhaustive cross-checks: a 2-3 symbol
// alphabet, `num_gens` finite candidate sets ("u1".."uK", each a trie of 1-6
// words of length <= 4), and `num_constraints` random complete machines
// ("c1".."cN", 1-3 states, arc weights and exit weights in {0,1}).  Complete
// machines accept every candidate, so every query on the result is total.
GrammarSpec random_finite_grammar(Rng& rng, std::uint32_t num_gens,
                                  std::uint32_t num_constraints);

// Attested forms consistent by construction: draw a hidden random ranking,
// pick an underlying key per form, and surface the first optimal candidate
// under the hidden ranking.  If `hidden` is non-null the ranking is written
// there.
std::vector<AttestedForm> consistent_attested_forms(Rng& rng,
                                                    const GrammarSpec& g,
                                                    std::uint32_t num_forms,
                                                    Ranking* hidden = nullptr);

}  // namespace ot::synth

#endif  // OTRANK_SYNTH_HPP
