#ifndef OTRANK_FORMULA_HPP
#define OTRANK_FORMULA_HPP

#include <cstdint>
#include <vector>

#include "otrank/grammar.hpp"

namespace ot {

// One mark-data clause: "some member must outrank every loser".  Members are
// the constraints preferring the winner, losers those preferring the loser.
struct MarkDataClause {
  std::vector<ConstraintId> members;
  std::vector<ConstraintId> losers;
};

// A conjunction of mark-data clauses over n constraints, indexed both ways:
// phi(C) lists the clauses C must satisfy (C occurs as a loser), member_of(C)
// lists the clauses where C occurs as a disjunct.  Clauses with no losers are
// vacuous and dropped at construction; a clause with losers but no members is
// unsatisfiable and marks the whole set trivially inconsistent.
class FormulaSet {
 public:
  FormulaSet(std::uint32_t num_constraints,
             std::vector<MarkDataClause> clauses);

  std::uint32_t num_constraints() const { return num_constraints_; }
  const std::vector<MarkDataClause>& clauses() const { return clauses_; }
  bool trivially_inconsistent() const { return trivially_inconsistent_; }

  const std::vector<std::uint32_t>& phi(ConstraintId c) const {
    return phi_[c];
  }
  const std::vector<std::uint32_t>& member_of(ConstraintId c) const {
    return member_of_[c];
  }
  const std::vector<ConstraintId>& clause_losers(std::uint32_t clause) const {
    return clauses_[clause].losers;
  }

  // M = Σ|members| + Σ|phi(C)| — the linear-time budget for rcd.
  std::size_t storage_size() const { return storage_size_; }

 private:
  std::uint32_t num_constraints_ = 0;
  std::vector<MarkDataClause> clauses_;
  std::vector<std::vector<std::uint32_t>> phi_;        // per constraint
  std::vector<std::vector<std::uint32_t>> member_of_;  // per constraint
  bool trivially_inconsistent_ = false;
  std::size_t storage_size_ = 0;
};

// Compile a winner/loser candidate pair into a clause by weighing every
// constraint on both words.  InputError if a constraint rejects either word.
MarkDataClause compile_pair(const ConstraintSet& constraints,
                            const Word& winner, const Word& loser);

// Compile a batch of pairs against a grammar (verifying both words are
// candidates for the pair's underlying key).
FormulaSet compile_pairs(const GrammarSpec& g,
                         const std::vector<MarkDataPair>& pairs);

}  // namespace ot

#endif  // OTRANK_FORMULA_HPP
