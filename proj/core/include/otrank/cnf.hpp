#ifndef OTRANK_CNF_HPP
#define OTRANK_CNF_HPP

#include <cstdint>
#include <vector>

namespace ot {

// A literal over propositional variable `var` (1-based).
struct Literal {
  std::uint32_t var = 0;
  bool negated = false;

  bool operator==(const Literal& o) const {
    return var == o.var && negated == o.negated;
  }
};

using CnfClause = std::vector<Literal>;

struct CnfFormula {
  std::uint32_t num_vars = 0;  // declared variable count (>= ell())
  std::vector<CnfClause> clauses;

  // Highest variable index actually used (0 for a formula with no literals).
  std::uint32_t ell() const;

  // Throws InputError unless: every literal has 1 <= var <= num_vars and
  // every clause is nonempty.
  void validate() const;
};

// assignment[i] is the value of variable i+1; assignment.size() >= vars used.
bool clause_satisfied(const CnfClause& clause,
                      const std::vector<bool>& assignment);
bool formula_satisfied(const CnfFormula& formula,
                       const std::vector<bool>& assignment);

}  // namespace ot

#endif  // OTRANK_CNF_HPP
