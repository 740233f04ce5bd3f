#include "otrank/formula.hpp"

#include "otrank/errors.hpp"

namespace ot {

FormulaSet::FormulaSet(std::uint32_t num_constraints,
                       std::vector<MarkDataClause> clauses)
    : num_constraints_(num_constraints) {
  phi_.resize(num_constraints);
  member_of_.resize(num_constraints);
  clauses_.reserve(clauses.size());
  for (MarkDataClause& clause : clauses) {
    for (ConstraintId c : clause.members)
      if (c >= num_constraints_)
        throw InputError("formula: member constraint id out of range");
    for (ConstraintId c : clause.losers)
      if (c >= num_constraints_)
        throw InputError("formula: loser constraint id out of range");
    if (clause.losers.empty()) continue;  // vacuously satisfied
    if (clause.members.empty()) trivially_inconsistent_ = true;
    std::uint32_t index = static_cast<std::uint32_t>(clauses_.size());
    for (ConstraintId c : clause.members) member_of_[c].push_back(index);
    for (ConstraintId c : clause.losers) phi_[c].push_back(index);
    storage_size_ += clause.members.size() + clause.losers.size();
    clauses_.push_back(std::move(clause));
  }
}

MarkDataClause compile_pair(const ConstraintSet& constraints,
                            const Word& winner, const Word& loser) {
  MarkDataClause clause;
  for (ConstraintId id = 0; id < constraints.size(); ++id) {
    PathWeight wx = weigh(constraints.machine(id), winner);
    PathWeight wy = weigh(constraints.machine(id), loser);
    if (wx.is_infinite() || wy.is_infinite())
      throw InputError("compile_pair: constraint \"" + constraints.name(id) +
                       "\" rejects a candidate");
    if (wx < wy)
      clause.members.push_back(id);
    else if (wx > wy)
      clause.losers.push_back(id);
  }
  return clause;
}

FormulaSet compile_pairs(const GrammarSpec& g,
                         const std::vector<MarkDataPair>& pairs) {
  std::vector<MarkDataClause> clauses;
  clauses.reserve(pairs.size());
  for (const MarkDataPair& p : pairs) {
    const Wdfa& gen = g.gen(p.underlying);
    if (weigh(gen, p.winner).is_infinite())
      throw InputError("compile_pairs: winner is not a candidate for \"" +
                       p.underlying + "\"");
    if (weigh(gen, p.loser).is_infinite())
      throw InputError("compile_pairs: loser is not a candidate for \"" +
                       p.underlying + "\"");
    clauses.push_back(compile_pair(g.constraints(), p.winner, p.loser));
  }
  return FormulaSet(g.num_constraints(), std::move(clauses));
}

}  // namespace ot
