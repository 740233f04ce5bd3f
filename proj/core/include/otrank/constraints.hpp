#ifndef OTRANK_CONSTRAINTS_HPP
#define OTRANK_CONSTRAINTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "otrank/cnf.hpp"
#include "otrank/wdfa.hpp"

namespace ot {

using ConstraintId = std::uint32_t;

struct Constraint {
  std::string name;
  Wdfa machine;

  bool operator==(const Constraint& o) const {
    return name == o.name && machine == o.machine;
  }
};

// An ordered list of named constraint machines over one alphabet.  The order
// fixes the dense constraint ids used everywhere else.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(Alphabet alphabet, std::vector<Constraint> members);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t size() const {
    return static_cast<std::uint32_t>(members_.size());
  }
  const Constraint& at(ConstraintId id) const;
  const std::string& name(ConstraintId id) const { return at(id).name; }
  const Wdfa& machine(ConstraintId id) const { return at(id).machine; }
  ConstraintId id(const std::string& name) const;  // InputError if absent
  const std::vector<Constraint>& members() const { return members_; }

  bool operator==(const ConstraintSet& o) const {
    return alphabet_ == o.alphabet_ && members_ == o.members_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Constraint> members_;
};

namespace constraints {

// Charge 1 per symbol preceding the first occurrence of j; if j never occurs,
// every symbol is charged.  (2 states, 2|Σ| arcs.)
Wdfa make_early(const Alphabet& alphabet, SymbolId j);

// Charge 1 iff j does not occur in the word (weight on the exit, not arcs).
Wdfa make_project(const Alphabet& alphabet, SymbolId j);

// Charge 1 per symbol (prefers shorter words).
Wdfa make_short(const Alphabet& alphabet);

// Charge 1 iff the word has length >= position and its bit at `position`
// (1-based) is the opposite of want_one.  Non-"0"/"1" symbols and words
// shorter than `position` are charge-free.
Wdfa make_bit(const Alphabet& alphabet, std::uint32_t position, bool want_one);

// Charge 1 iff the word's bit prefix decides the clause false: the word
// reaches the clause's last literal position with no literal satisfied.
// Undecided (short) words, and words whose next symbol is not a bit, are
// charge-free.  (<= last-literal-position + 2 states.)
Wdfa make_clause(const Alphabet& alphabet, const CnfClause& clause);

// Like make_clause for (clause ∨ (v1 ∧ ... ∧ vr)): charge 1 iff the word
// decides the clause false and is not the all-ones word of length r.
// (<= 2r+2 states.)
Wdfa make_guarded_clause(const Alphabet& alphabet, const CnfClause& clause,
                         std::uint32_t r);

// Membership tester: charge 1 iff x ∉ L(set) (complement=false) or iff
// x ∈ L(set) (complement=true).  Requires `set` zero-weight; accepts every
// word over the alphabet.
Wdfa make_membership(const Wdfa& set, bool complement);

}  // namespace constraints
}  // namespace ot

#endif  // OTRANK_CONSTRAINTS_HPP
