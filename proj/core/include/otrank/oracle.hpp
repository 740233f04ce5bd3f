#ifndef OTRANK_ORACLE_HPP
#define OTRANK_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "otrank/cnf.hpp"
#include "otrank/digraph.hpp"
#include "otrank/formula.hpp"
#include "otrank/grammar.hpp"

namespace ot::oracle {

// Brute-force baselines for cross-checking the finite-state implementations.
// They enumerate candidates explicitly and never share code with the
// automata-based paths.  All of them enforce hard input-size caps and throw
// (InputError / ResourceLimitError) instead of silently truncating.

// Optimal vector and all optimal candidates, by enumerating every candidate
// of length <= max_len and comparing violation vectors directly.
// InputError if the candidate set is infinite or empty; ResourceLimitError
// if more than `cap` candidates would be enumerated.
struct BruteOpt {
  ViolationVector values;
  std::vector<Word> optima;
};
BruteOpt brute_opt(const GrammarSpec& g, const Ranking& r,
                   const std::string& underlying, std::uint32_t max_len,
                   std::uint64_t cap = 200000);

// Try all n! rankings (n <= 7) against explicitly enumerated candidates.
std::optional<Ranking> brute_rank(const GrammarSpec& g,
                                  const std::vector<AttestedForm>& forms,
                                  std::uint32_t max_len);
std::optional<Ranking> brute_rank_sset(
    const GrammarSpec& g, const std::vector<AttestedSurfaceSet>& ssets,
    std::uint32_t max_len);

// Try all n! orders of satisfying every clause (n <= 7).
std::optional<Ranking> brute_rank_formulas(const FormulaSet& f);

// Lexicographically least satisfying assignment over ell(phi) variables
// (first variable most significant); nullopt if unsatisfiable.  ell <= 20.
std::optional<std::vector<bool>> brute_msa(const CnfFormula& phi);

// ∃ b ∈ {0,1}^r ∀ c ∈ {0,1}^(ell-r): phi(b·c) is false.  ell <= 20.
bool brute_qsat2(const CnfFormula& phi, std::uint32_t r);

// Hamilton path existence by trying all vertex permutations (order <= 8).
bool brute_hamilton(const Digraph& g);

}  // namespace ot::oracle

#endif  // OTRANK_ORACLE_HPP
