#include "otrank/cnf.hpp"

#include <algorithm>

#include "otrank/errors.hpp"

namespace ot {

std::uint32_t CnfFormula::ell() const {
  std::uint32_t top = 0;
  for (const CnfClause& c : clauses)
    for (const Literal& lit : c) top = std::max(top, lit.var);
  return top;
}

void CnfFormula::validate() const {
  for (const CnfClause& c : clauses) {
    if (c.empty()) throw InputError("cnf: empty clause");
    for (const Literal& lit : c) {
      if (lit.var == 0 || lit.var > num_vars)
        throw InputError("cnf: literal variable out of range");
    }
  }
}

bool clause_satisfied(const CnfClause& clause,
                      const std::vector<bool>& assignment) {
  for (const Literal& lit : clause) {
    bool value = assignment.at(lit.var - 1);
    if (value != lit.negated) return true;
  }
  return false;
}

bool formula_satisfied(const CnfFormula& formula,
                       const std::vector<bool>& assignment) {
  for (const CnfClause& c : formula.clauses)
    if (!clause_satisfied(c, assignment)) return false;
  return true;
}

}  // namespace ot
