#ifndef OTRANK_DERIVATIONAL_HPP
#define OTRANK_DERIVATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "otrank/digraph.hpp"
#include "otrank/wdfa.hpp"

namespace ot::derivational {

// A rewrite rule over words.  Two built-in kinds:
//
//   move(j): on a word of shape α·j·β·#·γ·i, delete the first j before the
//            first '#' and append it at the end — but only when the trailing
//            symbol i is the virtual start vertex "0" or the instance's
//            graph has an edge i -> j; otherwise (and whenever the shape
//            doesn't match) the rule is the identity.
//   accept:  a word starting with '#' rewrites to the empty word; anything
//            else is unchanged.
struct MoveRule {
  std::uint32_t j = 0;  // vertex number; symbol name is its decimal spelling
};
struct AcceptRule {};

struct Rule {
  std::string name;
  std::variant<MoveRule, AcceptRule> body;

  static Rule move(std::uint32_t j);
  static Rule accept();
};

// A rule-ordering problem: does some sequence of `length` rules drawn from
// the pool (with repetition) send every underlying word into its target set?
struct RuleSystemInstance {
  Alphabet alphabet;
  std::optional<Digraph> graph;  // context for move rules
  std::vector<Rule> pool;
  std::uint32_t length = 0;
  // Target is either one exact surface word or a zero-weight word set.
  using Target = std::variant<Word, Wdfa>;
  std::vector<std::pair<Word, Target>> pairs;

  void validate() const;
};

Word apply_rule(const RuleSystemInstance& inst, const Rule& rule,
                const Word& input);

// Apply pool rules by index, left to right.
Word apply_sequence(const RuleSystemInstance& inst,
                    const std::vector<std::uint32_t>& rule_indices,
                    const Word& input);

// Depth-first search over rule sequences in pool order, memoizing failed
// (depth, word-tuple) states; returns the first witness in lexicographic
// pool-index order, or nullopt.
struct OrderResult {
  std::optional<std::vector<std::uint32_t>> sequence;
  std::uint64_t explored = 0;  // distinct states expanded
};
OrderResult orderable_sset(const RuleSystemInstance& inst,
                           std::uint64_t node_limit = 1u << 22);

// The rule-ordering encoding of Hamilton paths: vertices 1..n plus the
// virtual start "0" and separator "#"; pool = move(1)..move(n), accept;
// length n+1; single pair "1 2 ... n # 0" -> ε.
RuleSystemInstance make_hamilton_rules(const Digraph& g);

}  // namespace ot::derivational

#endif  // OTRANK_DERIVATIONAL_HPP
