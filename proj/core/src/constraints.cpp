#include "otrank/constraints.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "otrank/errors.hpp"

namespace ot {

ConstraintSet::ConstraintSet(Alphabet alphabet, std::vector<Constraint> members)
    : alphabet_(std::move(alphabet)), members_(std::move(members)) {
  std::map<std::string, ConstraintId> seen;
  for (ConstraintId i = 0; i < members_.size(); ++i) {
    const Constraint& c = members_[i];
    if (c.name.empty()) throw InputError("constraints: empty constraint name");
    if (!seen.emplace(c.name, i).second)
      throw InputError("constraints: duplicate constraint name \"" + c.name +
                       "\"");
    if (c.machine.alphabet() != alphabet_)
      throw InputError("constraints: machine alphabet mismatch for \"" +
                       c.name + "\"");
  }
}

const Constraint& ConstraintSet::at(ConstraintId id) const {
  if (id >= members_.size())
    throw InputError("constraints: constraint id out of range");
  return members_[id];
}

ConstraintId ConstraintSet::id(const std::string& name) const {
  for (ConstraintId i = 0; i < members_.size(); ++i)
    if (members_[i].name == name) return i;
  throw InputError("constraints: unknown constraint \"" + name + "\"");
}

namespace constraints {

namespace {

// Bit symbols, if present in the alphabet.
struct BitSyms {
  std::optional<SymbolId> zero, one;
  bool is_bit(SymbolId s) const { return s == zero || s == one; }
};

BitSyms bit_syms(const Alphabet& alphabet) {
  return {alphabet.find("0"), alphabet.find("1")};
}

}  // namespace

Wdfa make_early(const Alphabet& alphabet, SymbolId j) {
  if (j >= alphabet.size())
    throw InputError("make_early: symbol out of range");
  // State 0: j not yet seen (every other symbol costs 1); state 1: j seen.
  Wdfa a(alphabet, 2, 0);
  for (SymbolId s = 0; s < alphabet.size(); ++s) {
    if (s == j) {
      a.add_arc(0, s, 0, 1);
    } else {
      a.add_arc(0, s, 1, 0);
    }
    a.add_arc(1, s, 0, 1);
  }
  a.set_final(0, 0);
  a.set_final(1, 0);
  return a;
}

Wdfa make_project(const Alphabet& alphabet, SymbolId j) {
  if (j >= alphabet.size())
    throw InputError("make_project: symbol out of range");
  // State 0: j absent so far (exit charge 1); state 1: j present (exit 0).
  Wdfa a(alphabet, 2, 0);
  for (SymbolId s = 0; s < alphabet.size(); ++s) {
    a.add_arc(0, s, 0, s == j ? 1u : 0u);
    a.add_arc(1, s, 0, 1);
  }
  a.set_final(0, 1);
  a.set_final(1, 0);
  return a;
}

Wdfa make_short(const Alphabet& alphabet) {
  Wdfa a(alphabet, 1, 0);
  for (SymbolId s = 0; s < alphabet.size(); ++s) a.add_arc(0, s, 1, 0);
  a.set_final(0, 0);
  return a;
}

Wdfa make_bit(const Alphabet& alphabet, std::uint32_t position,
              bool want_one) {
  if (position == 0) throw InputError("make_bit: positions are 1-based");
  BitSyms bits = bit_syms(alphabet);
  if (!bits.zero || !bits.one)
    throw InputError("make_bit: alphabet lacks \"0\"/\"1\"");
  // States 0..position-1 count symbols read; then OK sink / CHARGED sink.
  const State ok = position, charged = position + 1;
  Wdfa a(alphabet, position + 2, 0);
  SymbolId wrong = want_one ? *bits.zero : *bits.one;
  for (State q = 0; q < position; ++q) {
    for (SymbolId s = 0; s < alphabet.size(); ++s) {
      if (q + 1 == position) {
        a.add_arc(q, s, 0, s == wrong ? charged : ok);
      } else {
        a.add_arc(q, s, 0, q + 1);
      }
    }
    a.set_final(q, 0);
  }
  for (SymbolId s = 0; s < alphabet.size(); ++s) {
    a.add_arc(ok, s, 0, ok);
    a.add_arc(charged, s, 0, charged);
  }
  a.set_final(ok, 0);
  a.set_final(charged, 1);
  return a;
}

Wdfa make_clause(const Alphabet& alphabet, const CnfClause& clause) {
  if (clause.empty()) throw InputError("make_clause: empty clause");
  BitSyms bits = bit_syms(alphabet);
  if (!bits.zero || !bits.one)
    throw InputError("make_clause: alphabet lacks \"0\"/\"1\"");
  std::uint32_t last = 0;
  for (const Literal& lit : clause) {
    if (lit.var == 0) throw InputError("make_clause: variable 0");
    last = std::max(last, lit.var);
  }
  // States 0..last-1: position k, clause undecided; then SAT / UNSAT sinks.
  // Reading bit b at position k+1 satisfies the clause iff literal
  // (k+1, b) occurs in it; reaching position `last` unsatisfied decides it
  // false.  Any non-bit symbol is charge-free (jump to SAT).
  const State sat = last, unsat = last + 1;
  Wdfa a(alphabet, last + 2, 0);
  auto literal_in_clause = [&clause](std::uint32_t var, bool value) {
    for (const Literal& lit : clause)
      if (lit.var == var && lit.negated == !value) return true;
    return false;
  };
  for (State q = 0; q < last; ++q) {
    for (SymbolId s = 0; s < alphabet.size(); ++s) {
      State dst;
      if (!bits.is_bit(s)) {
        dst = sat;
      } else {
        bool value = (s == *bits.one);
        if (literal_in_clause(q + 1, value)) {
          dst = sat;
        } else {
          dst = (q + 1 == last) ? unsat : q + 1;
        }
      }
      a.add_arc(q, s, 0, dst);
    }
    a.set_final(q, 0);
  }
  for (SymbolId s = 0; s < alphabet.size(); ++s) {
    a.add_arc(sat, s, 0, sat);
    a.add_arc(unsat, s, 0, bits.is_bit(s) ? unsat : sat);
  }
  a.set_final(sat, 0);
  a.set_final(unsat, 1);
  return a;
}

Wdfa make_guarded_clause(const Alphabet& alphabet, const CnfClause& clause,
                         std::uint32_t r) {
  if (clause.empty()) throw InputError("make_guarded_clause: empty clause");
  if (r == 0) throw InputError("make_guarded_clause: r must be >= 1");
  BitSyms bits = bit_syms(alphabet);
  if (!bits.zero || !bits.one)
    throw InputError("make_guarded_clause: alphabet lacks \"0\"/\"1\"");
  std::uint32_t last = 0;
  for (const Literal& lit : clause) {
    if (lit.var == 0 || lit.var > r)
      throw InputError("make_guarded_clause: literal out of range");
    last = std::max(last, lit.var);
  }
  auto literal_in_clause = [&clause](std::uint32_t var, bool value) {
    for (const Literal& lit : clause)
      if (lit.var == var && lit.negated == !value) return true;
    return false;
  };
  // Two tracks sharing SAT/UNSAT sinks:
  //   A_k (k = 0..r-1): read k ones so far (prefix could still become 1^r),
  //                     clause undecided-or-false-so-far;
  //   B_k (k = 1..last-1): all-ones track broken, clause undecided.
  // From A_{r-1} a final 1 completes 1^r: the guard holds, so jump to SAT
  // (longer words are outside Gen and read SAT's free loop).  A broken
  // prefix falls to B_k (or UNSAT if the clause is already decided false,
  // or SAT if decided true).
  //
  // State numbering: A_0..A_{r-1} are 0..r-1, B_k is r-1+k (k=1..last-1,
  // present only if last >= 2), then SAT, UNSAT.  Total <= 2r+2 states.
  const State a_base = 0;
  const State b_base = r - 1;  // b_base + k = B_k for k >= 1
  const std::uint32_t b_count = (last >= 2) ? last - 1 : 0;
  const State sat = r + b_count;
  const State unsat = sat + 1;
  Wdfa a(alphabet, unsat + 1, 0);

  // Clause status after reading a decided-nothing prefix of length k and one
  // more bit `value` at position k+1.
  enum class Next { kSat, kUnsat, kOpen };
  auto step = [&](std::uint32_t k, bool value) {
    if (k < last && literal_in_clause(k + 1, value)) return Next::kSat;
    if (k + 1 >= last) return Next::kUnsat;
    return Next::kOpen;
  };

  for (std::uint32_t k = 0; k < r; ++k) {
    State q = a_base + k;
    for (SymbolId s = 0; s < alphabet.size(); ++s) {
      State dst;
      if (!bits.is_bit(s)) {
        dst = sat;  // non-bit symbols are charge-free
      } else if (s == *bits.one) {
        // Still on the all-ones track.
        if (k + 1 == r) {
          dst = sat;  // completed 1^r: guard satisfied
        } else if (step(k, true) == Next::kSat) {
          dst = sat;
        } else {
          dst = a_base + k + 1;  // guard still possible, clause open/false
        }
      } else {
        // A zero breaks the all-ones track.
        switch (step(k, false)) {
          case Next::kSat:
            dst = sat;
            break;
          case Next::kUnsat:
            dst = unsat;
            break;
          case Next::kOpen:
            dst = b_base + (k + 1);
            break;
        }
      }
      a.add_arc(q, s, 0, dst);
    }
    a.set_final(q, 0);
  }
  for (std::uint32_t k = 1; k <= b_count; ++k) {
    State q = b_base + k;
    for (SymbolId s = 0; s < alphabet.size(); ++s) {
      State dst;
      if (!bits.is_bit(s)) {
        dst = sat;
      } else {
        switch (step(k, s == *bits.one)) {
          case Next::kSat:
            dst = sat;
            break;
          case Next::kUnsat:
            dst = unsat;
            break;
          case Next::kOpen:
            dst = b_base + (k + 1);
            break;
        }
      }
      a.add_arc(q, s, 0, dst);
    }
    a.set_final(q, 0);
  }
  for (SymbolId s = 0; s < alphabet.size(); ++s) {
    a.add_arc(sat, s, 0, sat);
    a.add_arc(unsat, s, 0, bits.is_bit(s) ? unsat : sat);
  }
  a.set_final(sat, 0);
  a.set_final(unsat, 1);
  return a;
}

Wdfa make_membership(const Wdfa& set, bool complement) {
  if (!is_zero_weight(set))
    throw InputError("make_membership: set must be zero-weight");
  // Complete the set automaton with a dead state, then grade every state by
  // membership of the words ending there.
  const State n = set.num_states();
  const State dead = n;
  Wdfa a(set.alphabet(), n + 1, set.start());
  for (State q = 0; q < n; ++q) {
    for (SymbolId s = 0; s < set.alphabet().size(); ++s) {
      auto arc = set.arc(q, s);
      a.add_arc(q, s, 0, arc ? arc->target : dead);
    }
    bool in_set = set.is_final(q);
    a.set_final(q, (in_set != complement) ? 0 : 1);
  }
  for (SymbolId s = 0; s < set.alphabet().size(); ++s)
    a.add_arc(dead, s, 0, dead);
  a.set_final(dead, complement ? 0 : 1);
  return a;
}

}  // namespace constraints
}  // namespace ot
