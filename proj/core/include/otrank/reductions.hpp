#ifndef OTRANK_REDUCTIONS_HPP
#define OTRANK_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otrank/cnf.hpp"
#include "otrank/derivational.hpp"
#include "otrank/digraph.hpp"
#include "otrank/generate.hpp"
#include "otrank/grammar.hpp"
#include "otrank/rank.hpp"

namespace ot::reductions {

enum class QueryKind {
  kOpt,
  kOptVal,
  kOptValZ,
  kBeatable,
  kBest,
  kRange,
  kCheck,
  kCheckSSet,
  kRankSSet,
  kOrderable,
};

const char* query_kind_name(QueryKind kind);
std::optional<QueryKind> query_kind_from_name(const std::string& name);

// A self-contained decision/generation problem: a grammar (or rule system)
// plus one query over it.  Serializable as a directory bundle.
struct Instance {
  QueryKind query = QueryKind::kOpt;
  std::optional<GrammarSpec> grammar;
  Ranking ranking;         // generation queries; empty for ranking queries
  std::string underlying;  // generation queries
  std::optional<ViolationVector> k1, k2;  // beatable/best thresholds, range
  std::vector<AttestedForm> forms;        // check
  std::vector<AttestedSurfaceSet> ssets;  // checksset / ranksset
  std::optional<derivational::RuleSystemInstance> rules;  // orderable
  std::string note;  // free-form description, kept through serialization
};

struct QueryOutcome {
  bool yes = false;
  std::optional<ViolationVector> value;                // optval
  std::optional<Wdfa> optimum;                         // opt
  std::optional<Ranking> witness;                      // ranksset
  std::optional<std::vector<std::uint32_t>> sequence;  // orderable
  rank::Diagnostics diag;
};

// Execute the instance's query.  Decision queries set `yes`; generation
// queries additionally fill `value`/`optimum`.
QueryOutcome run_query(const Instance& instance,
                       const generate::Limits& limits = {});

// --- encodings --------------------------------------------------------------

// Hamilton path -> single-attested-set ranking: candidates are all
// length-|V| vertex words, one "visit j early" constraint per vertex, and the
// attested set is the length-|V| walks of g; a consistent ranking exists iff
// g has a Hamilton path.  `bounded` caps each constraint's counting at the
// word length by intersecting it with the fixed-length candidate set.
Instance gen_hamilton(const Digraph& g, bool bounded);

// Minimal-satisfying-assignment -> optimal violation vector: candidates are
// the length-r assignments, one guarded clause (clause ∨ all-ones) per
// clause ranked above one "prefer 0 at i" constraint per variable; the
// optimum vector's last r entries spell the minimal satisfying assignment,
// or all-ones when unsatisfiable.
Instance gen_msa(const CnfFormula& phi);

// CNF satisfiability -> beatable: the all-but-last-zero threshold
// ⟨0,...,0,1⟩ is beatable iff some assignment satisfies every clause.
Instance gen_cnfsat_beatable(const CnfFormula& phi);

// CNF satisfiability -> check: candidates gain the empty word, whose vector
// is pinned to ⟨0,...,0,1⟩ by an exit charge on the last clause constraint;
// the empty word is optimal iff the formula is unsatisfiable.
Instance gen_cnfsat_check(const CnfFormula& phi);

// "phi satisfiable and psi unsatisfiable" -> range query over the
// concatenated clause constraints of the two (variable-disjoint) formulas.
Instance gen_satunsat_range(const CnfFormula& phi, const CnfFormula& psi);

// ∃-∀ CNF falsifiability (∃ b ∈ {0,1}^r ∀ extension: phi false) ->
// single-attested-set ranking over padded candidates b·2.  InputError if
// r exceeds the variable count.
Instance gen_qsat2(const CnfFormula& phi, std::uint32_t r);

// "minimal satisfying assignment ends in 0" -> attested-set check over the
// gen_msa grammar with X = {0,1}^(r-1)·0; equivalently, the optimum vector's
// last entry is zero.
Instance gen_msalsb(const CnfFormula& phi);

// Projection constraints plus a length preference: under every ranking of
// the projections with the length preference last, the optima are exactly
// the permutations of the alphabet.
GrammarSpec gen_permutation_grammar(std::uint32_t r);

// Hamilton path -> rule orderability (the derivational baseline).
Instance gen_orderable_hamilton(const Digraph& g);

}  // namespace ot::reductions

#endif  // OTRANK_REDUCTIONS_HPP
