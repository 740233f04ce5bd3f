#ifndef OTRANK_GENERATE_HPP
#define OTRANK_GENERATE_HPP

#include <cstdint>
#include <string>

#include "otrank/grammar.hpp"

namespace ot::generate {

struct Limits {
  std::uint64_t state_limit = kDefaultStateLimit;
  std::uint64_t enum_limit = kDefaultEnumLimit;
};

// One pass of lexicographic optimization: intersect the candidate set with
// each constraint in ranking order, record the minimum, and keep only the
// argmin before moving on.  `optimum` is the zero-weight automaton of exactly
// the optimal candidates; `values` is their (shared) violation vector in
// ranking order.
struct WinnowResult {
  Wdfa optimum;
  ViolationVector values;
};
WinnowResult winnow(const GrammarSpec& g, const Ranking& r,
                    const std::string& underlying, const Limits& limits = {});

// The optimal candidate set as an automaton.
Wdfa opt(const GrammarSpec& g, const Ranking& r, const std::string& underlying,
         const Limits& limits = {});

// The optimal violation vector (in ranking order).
ViolationVector opt_val(const GrammarSpec& g, const Ranking& r,
                        const std::string& underlying,
                        const Limits& limits = {});

// True iff the lowest-ranked component of the optimal vector is zero.
bool opt_val_z(const GrammarSpec& g, const Ranking& r,
               const std::string& underlying, const Limits& limits = {});

// True iff some candidate's vector is lexicographically below k, i.e.
// opt_val < k.  k must have one entry per constraint.
bool beatable(const GrammarSpec& g, const Ranking& r,
              const std::string& underlying, const ViolationVector& k,
              const Limits& limits = {});

// True iff opt_val == k.
bool best(const GrammarSpec& g, const Ranking& r,
          const std::string& underlying, const ViolationVector& k,
          const Limits& limits = {});

// True iff k1 <= opt_val <= k2.
bool range(const GrammarSpec& g, const Ranking& r,
           const std::string& underlying, const ViolationVector& k1,
           const ViolationVector& k2, const Limits& limits = {});

// Violation vector of one candidate, in ranking order.  InputError if some
// constraint rejects the word (constraints must be total over candidates).
ViolationVector evaluate(const GrammarSpec& g, const Ranking& r,
                         const Word& surface);

// True iff the attested surface is optimal for its underlying key.
// InputError if the surface is not a candidate.
bool check(const GrammarSpec& g, const Ranking& r, const AttestedForm& form,
           const Limits& limits = {});

// True iff some member of the attested set is optimal; false outright when
// the set shares no word with the candidate set.
bool check_sset(const GrammarSpec& g, const Ranking& r,
                const AttestedSurfaceSet& sset, const Limits& limits = {});

}  // namespace ot::generate

#endif  // OTRANK_GENERATE_HPP
