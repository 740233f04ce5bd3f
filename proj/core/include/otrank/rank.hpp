#ifndef OTRANK_RANK_HPP
#define OTRANK_RANK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "otrank/formula.hpp"
#include "otrank/generate.hpp"
#include "otrank/grammar.hpp"

namespace ot::rank {

struct Diagnostics {
  std::uint64_t errors = 0;   // edcd/mrcd: suboptimal-attested-form events
  std::uint64_t passes = 0;   // cd: data passes, including the final clean one
  std::uint64_t nodes = 0;    // sset search: candidate extensions examined
  bool error_cap_hit = false; // edcd: the n^2 error cap fired
};

struct RankResult {
  std::optional<Ranking> ranking;  // nullopt = INCONSISTENT
  Diagnostics diag;

  bool consistent() const { return ranking.has_value(); }
};

// Work counters for the linear-time analysis of rcd: on success,
// clauses_eliminated == m, disjunct_visits == Σ|members| and
// back_visits == Σ|phi(C)|, so total work is O(M + n).
struct RcdStats {
  std::uint64_t clauses_eliminated = 0;
  std::uint64_t disjunct_visits = 0;
  std::uint64_t back_visits = 0;
};

// Recursive constraint demotion as a hypergraph topological sort: repeatedly
// emit a constraint with no unsatisfied clause, crossing off every clause it
// satisfies as a member.  Deterministic: among simultaneously-undominated
// constraints, lowest id first.
RankResult rcd(const FormulaSet& f, RcdStats* stats = nullptr);

// A stratified (partial) ranking: constraints with equal stratum are tied,
// lower stratum = higher rank.
struct StratifiedRanking {
  std::vector<std::uint32_t> stratum;  // one entry per constraint

  std::uint32_t num_strata() const;
  // Renumber strata to be contiguous 0..k-1, preserving order.
  void normalize();
  // Total order: by stratum, ties by constraint id.
  Ranking totalize() const;
};

// Classic constraint demotion: start with every constraint in the top
// stratum; on each pass demote every constraint with an unsatisfied clause to
// just below that clause's highest member.  Consistent sets settle within
// n+1 passes; a demotion on pass n+1 proves inconsistency.
RankResult cd(const FormulaSet& f);

// Error-driven constraint demotion over attested forms: per form, if the
// attested surface is not optimal under the current (totalized) strata, pick
// an optimal competitor, compile the pair, and apply one CD demotion step.
// More than n^2 errors proves inconsistency (an artifact-pinned cap; on
// consistent data total demotion distance is at most n(n-1)).
RankResult edcd(const GrammarSpec& g, const std::vector<AttestedForm>& forms,
                const StratifiedRanking* initial = nullptr,
                const generate::Limits& limits = {});

// Multi-recursive constraint demotion: like edcd, but errors accumulate
// mark-data clauses and the working ranking is re-derived by rcd after each
// error; rcd failure on the accumulated set proves inconsistency.
RankResult mrcd(const GrammarSpec& g, const std::vector<AttestedForm>& forms,
                const generate::Limits& limits = {});

// Greedy top-down ranking over attested forms: at each depth, commit the
// lowest-id constraint that keeps every attested form among the optima of its
// (cached, incrementally winnowed) candidate set.
RankResult rcd_all(const GrammarSpec& g, const std::vector<AttestedForm>& forms,
                   const generate::Limits& limits = {});

// Decide whether some total ranking makes at least one member of every
// attested surface set optimal; returns a witness ranking if so.
// Backtracking over ranking prefixes, pruning a prefix as soon as some
// form's winnowed candidate set no longer meets its attested set.  When
// there is a single attested set, every constraint is {0,1}-valued and the
// feasible words are few, an exact single-form analysis replaces the search
// (see rankable_single); diag.nodes counts candidate extensions either way.
RankResult rank_sset(const GrammarSpec& g,
                     const std::vector<AttestedSurfaceSet>& ssets,
                     const generate::Limits& limits = {});

// Single attested form, {0,1}-valued constraints: x can be made optimal iff
// no competitor satisfies a proper superset of the constraints x satisfies;
// the witness ranks x's satisfied constraints above the rest.  InputError if
// some constraint is not {0,1}-valued.
struct SingleFormResult {
  bool rankable = false;
  std::optional<Ranking> ranking;
};
SingleFormResult rankable_single(const GrammarSpec& g, const AttestedForm& form,
                                 const generate::Limits& limits = {});

}  // namespace ot::rank

#endif  // OTRANK_RANK_HPP
