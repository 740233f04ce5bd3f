#ifndef OTRANK_GRAMMAR_HPP
#define OTRANK_GRAMMAR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "otrank/constraints.hpp"
#include "otrank/wdfa.hpp"

namespace ot {

// A total order on constraint ids: order[k] is the id ranked k-th (0 = top).
struct Ranking {
  std::vector<ConstraintId> order;

  static Ranking identity(std::uint32_t n);
  void validate(std::uint32_t n) const;  // InputError unless a permutation of 0..n-1
  // position[id] = rank of constraint id.
  std::vector<std::uint32_t> positions(std::uint32_t n) const;

  bool operator==(const Ranking& o) const { return order == o.order; }
};

// Violation counts listed in ranking order (index 0 = highest-ranked).
// Comparison is lexicographic; vectors must have equal arity.
struct ViolationVector {
  std::vector<std::uint64_t> v;

  static int compare(const ViolationVector& a, const ViolationVector& b);
  bool operator==(const ViolationVector& o) const { return v == o.v; }
  bool operator!=(const ViolationVector& o) const { return v != o.v; }
  bool operator<(const ViolationVector& o) const { return compare(*this, o) < 0; }
  bool operator<=(const ViolationVector& o) const {
    return compare(*this, o) <= 0;
  }
  bool operator>(const ViolationVector& o) const { return o < *this; }
  bool operator>=(const ViolationVector& o) const { return o <= *this; }
};

// x is attested: the learner must make surface optimal for its underlying key.
struct AttestedForm {
  std::string underlying;
  Word surface;
};

// The learner must make some member of `set` optimal for the underlying key.
struct AttestedSurfaceSet {
  std::string underlying;
  Wdfa set;  // zero-weight
};

// A winner/loser pair of competing surface candidates for one underlying key.
struct MarkDataPair {
  std::string underlying;
  Word winner;
  Word loser;
};

// Candidate generator plus constraint inventory.  Underlying "forms" are
// opaque keys; each maps to a zero-weight automaton of surface candidates.
class GrammarSpec {
 public:
  GrammarSpec() = default;
  GrammarSpec(Alphabet alphabet,
              std::vector<std::pair<std::string, Wdfa>> gens,
              ConstraintSet constraints);

  const Alphabet& alphabet() const { return alphabet_; }
  const ConstraintSet& constraints() const { return constraints_; }
  std::uint32_t num_constraints() const { return constraints_.size(); }
  const std::vector<std::pair<std::string, Wdfa>>& gens() const {
    return gens_;
  }
  bool has_gen(const std::string& key) const;
  const Wdfa& gen(const std::string& key) const;  // InputError if absent

  bool operator==(const GrammarSpec& o) const {
    return alphabet_ == o.alphabet_ && gens_ == o.gens_ &&
           constraints_ == o.constraints_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::pair<std::string, Wdfa>> gens_;
  ConstraintSet constraints_;
};

}  // namespace ot

#endif  // OTRANK_GRAMMAR_HPP
