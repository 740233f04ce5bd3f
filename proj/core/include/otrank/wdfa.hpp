#ifndef OTRANK_WDFA_HPP
#define OTRANK_WDFA_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "otrank/alphabet.hpp"

namespace ot {

// Sum of nonnegative violation weights along a path, or INFINITY when no
// accepting path exists.  INFINITY compares greater than every finite value;
// addition saturates at INFINITY.
class PathWeight {
 public:
  static constexpr std::uint64_t kInfinity =
      std::numeric_limits<std::uint64_t>::max();

  constexpr PathWeight() : v_(kInfinity) {}
  static constexpr PathWeight finite(std::uint64_t v) { return PathWeight(v); }
  static constexpr PathWeight infinity() { return PathWeight(); }

  constexpr bool is_infinite() const { return v_ == kInfinity; }
  constexpr std::uint64_t value() const { return v_; }

  friend constexpr PathWeight operator+(PathWeight a, PathWeight b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    std::uint64_t s = a.v_ + b.v_;
    if (s < a.v_) return infinity();  // saturate on overflow
    return PathWeight(s);
  }
  friend constexpr bool operator==(PathWeight a, PathWeight b) {
    return a.v_ == b.v_;
  }
  friend constexpr bool operator!=(PathWeight a, PathWeight b) {
    return a.v_ != b.v_;
  }
  friend constexpr bool operator<(PathWeight a, PathWeight b) {
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(PathWeight a, PathWeight b) {
    return a.v_ <= b.v_;
  }
  friend constexpr bool operator>(PathWeight a, PathWeight b) { return b < a; }
  friend constexpr bool operator>=(PathWeight a, PathWeight b) {
    return b <= a;
  }

 private:
  explicit constexpr PathWeight(std::uint64_t v) : v_(v) {}
  std::uint64_t v_;
};

// Saturating addition of finite weights (clamps at kInfinity like PathWeight).
constexpr std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return (s < a) ? PathWeight::kInfinity : s;
}

using State = std::uint32_t;

// Deterministic weighted finite automaton.
//
// - at most one arc per (state, symbol); arc weights are finite and >= 0;
// - final states carry a finite exit weight >= 0 (0 for plain acceptors);
// - the weight of an accepted word is the sum of its arc weights plus the
//   exit weight of the ending state;
// - states are dense 0..num_states-1; start state fixed at construction.
//
// Instances are mutated only while being built (add_arc / set_final); all
// operations on built automata are pure functions, so built values are safe
// to share across threads.
class Wdfa {
 public:
  struct Arc {
    std::uint64_t weight;
    State target;
  };

  Wdfa() = default;
  Wdfa(Alphabet alphabet, State num_states, State start);

  // Builder mutations.  Throw InputError on out-of-range states/symbols,
  // duplicate arcs, or infinite weights.
  void add_arc(State src, SymbolId symbol, std::uint64_t weight, State dst);
  void set_final(State s, std::uint64_t exit_weight = 0);

  const Alphabet& alphabet() const { return alphabet_; }
  State num_states() const { return num_states_; }
  State start() const { return start_; }
  std::size_t num_arcs() const { return num_arcs_; }

  bool is_final(State s) const;
  std::uint64_t exit_weight(State s) const;  // precondition: is_final(s)
  std::optional<Arc> arc(State src, SymbolId symbol) const;

  // Weight of x, or INFINITY if x is not accepted.
  PathWeight weigh(const Word& x) const;

  bool operator==(const Wdfa& other) const;
  bool operator!=(const Wdfa& other) const { return !(*this == other); }

 private:
  static constexpr State kNoTarget = std::numeric_limits<State>::max();
  static constexpr std::uint64_t kNotFinal =
      std::numeric_limits<std::uint64_t>::max();

  std::size_t slot(State s, SymbolId symbol) const {
    return static_cast<std::size_t>(s) * alphabet_.size() + symbol;
  }

  Alphabet alphabet_;
  State num_states_ = 0;
  State start_ = 0;
  std::size_t num_arcs_ = 0;
  std::vector<Arc> arcs_;            // dense (state x symbol), kNoTarget = none
  std::vector<std::uint64_t> exit_;  // per state; kNotFinal = not final

  friend class WdfaOps;
};

// --- Operations -----------------------------------------------------------

// Weight of x under a (arc sum + exit weight), INFINITY if rejected.
PathWeight weigh(const Wdfa& a, const Word& x);

inline constexpr std::uint64_t kDefaultStateLimit = 1u << 20;
inline constexpr std::uint64_t kDefaultEnumLimit = 1u << 20;

// Synchronous product: accepts L(a) ∩ L(b); weights (arc and exit) add.
// Throws InputError on alphabet mismatch, ResourceLimitError if the product
// would materialize more than state_limit states.
Wdfa intersect(const Wdfa& a, const Wdfa& b,
               std::uint64_t state_limit = kDefaultStateLimit);

// Least weight of any accepted word (Dijkstra), INFINITY if L(a) is empty.
PathWeight min_accepting_weight(const Wdfa& a);

// True iff L(a) is empty (no final state reachable from the start).
bool is_empty(const Wdfa& a);

// True iff L(a) is infinite (a useful cycle exists: reachable from the start
// and co-reachable to a final state).
bool has_infinite_language(const Wdfa& a);

// Sub-automaton of exactly the minimum-weight accepted words, reweighted to
// zero (arcs and exits).  The result represents the argmin set; its state
// numbering is reachability (BFS) order, making equal inputs give structurally
// equal outputs.  Throws InputError if L(a) is empty.
Wdfa prune_to_optimal(const Wdfa& a);

// Accepted words in length-then-lexicographic (by symbol id) order, at most
// max_count of them, considering lengths 0..max_len only.
struct EnumeratedWord {
  Word word;
  std::uint64_t weight;
};
std::vector<EnumeratedWord> enumerate_words(const Wdfa& a,
                                            std::uint64_t max_count,
                                            std::uint32_t max_len);

// Straight-line acceptor of exactly the given word (r+1 states, zero weight).
Wdfa make_straightline(const Alphabet& alphabet, const Word& w);

// Acceptor of exactly the given finite set of words (trie; zero weight).
// Duplicates are tolerated.
Wdfa make_word_set(const Alphabet& alphabet, const std::vector<Word>& words);

// Acceptor of every word over the alphabet whose length is exactly len.
Wdfa make_all_words_of_length(const Alphabet& alphabet, std::uint32_t len);

// True iff every arc weight and every exit weight is zero (the automaton is a
// plain set).
bool is_zero_weight(const Wdfa& a);

// True iff weigh(a, x) ∈ {0, 1, INFINITY} for all x: no arc-weight/exit
// combination along any useful path can sum past 1.
bool is_binary_valued(const Wdfa& a);

// The zero-weight sub-automaton: accepts {x : weigh(a, x) == 0}, built from
// the zero-weight arcs and zero-exit finals.  Always zero-weight; may be
// empty.
Wdfa zero_language(const Wdfa& a);

}  // namespace ot

#endif  // OTRANK_WDFA_HPP
