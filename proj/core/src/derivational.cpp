#include "otrank/derivational.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "otrank/errors.hpp"

namespace ot::derivational {

Rule Rule::move(std::uint32_t j) {
  return Rule{"move" + std::to_string(j), MoveRule{j}};
}

Rule Rule::accept() { return Rule{"accept", AcceptRule{}}; }

void RuleSystemInstance::validate() const {
  for (const Rule& rule : pool) {
    if (const MoveRule* m = std::get_if<MoveRule>(&rule.body)) {
      if (!alphabet.find(std::to_string(m->j)))
        throw InputError("rules: move target \"" + std::to_string(m->j) +
                         "\" not in alphabet");
    }
  }
  if (!pool.empty() && !alphabet.find("#"))
    throw InputError("rules: alphabet lacks \"#\"");
  for (const auto& [underlying, target] : pairs) {
    if (const Wdfa* set = std::get_if<Wdfa>(&target)) {
      if (set->alphabet() != alphabet)
        throw InputError("rules: target set alphabet mismatch");
      if (!is_zero_weight(*set))
        throw InputError("rules: target set must be zero-weight");
    }
  }
}

namespace {

// Parse a symbol as a vertex number; nullopt for "#" or other non-numerals.
std::optional<std::uint32_t> vertex_of(const Alphabet& alphabet, SymbolId s) {
  const std::string& name = alphabet.name(s);
  if (name.empty() ||
      !std::all_of(name.begin(), name.end(),
                   [](unsigned char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  std::uint32_t value = 0;
  for (char c : name) value = value * 10 + static_cast<std::uint32_t>(c - '0');
  return value;
}

Word apply_move(const RuleSystemInstance& inst, const MoveRule& rule,
                const Word& input) {
  SymbolId hash = inst.alphabet.id("#");
  SymbolId j_sym = inst.alphabet.id(std::to_string(rule.j));

  auto hash_it = std::find(input.begin(), input.end(), hash);
  if (hash_it == input.end()) return input;           // no separator
  if (hash_it + 1 == input.end()) return input;       // nothing after it
  auto j_it = std::find(input.begin(), hash_it, j_sym);
  if (j_it == hash_it) return input;                  // no j before separator

  // The trailing symbol must license the move: virtual start or an edge
  // from it to j.
  std::optional<std::uint32_t> tail = vertex_of(inst.alphabet, input.back());
  if (!tail) return input;
  if (*tail != 0) {
    if (!inst.graph || !inst.graph->has_edge(*tail, rule.j)) return input;
  }

  Word out;
  out.reserve(input.size());
  out.insert(out.end(), input.begin(), j_it);
  out.insert(out.end(), j_it + 1, input.end());
  out.push_back(j_sym);
  return out;
}

}  // namespace

Word apply_rule(const RuleSystemInstance& inst, const Rule& rule,
                const Word& input) {
  if (const MoveRule* m = std::get_if<MoveRule>(&rule.body))
    return apply_move(inst, *m, input);
  // accept: a word led by '#' erases entirely.
  SymbolId hash = inst.alphabet.id("#");
  if (!input.empty() && input.front() == hash) return {};
  return input;
}

Word apply_sequence(const RuleSystemInstance& inst,
                    const std::vector<std::uint32_t>& rule_indices,
                    const Word& input) {
  Word current = input;
  for (std::uint32_t idx : rule_indices) {
    if (idx >= inst.pool.size())
      throw InputError("apply_sequence: rule index out of range");
    current = apply_rule(inst, inst.pool[idx], current);
  }
  return current;
}

OrderResult orderable_sset(const RuleSystemInstance& inst,
                           std::uint64_t node_limit) {
  inst.validate();
  OrderResult result;

  auto in_target = [&](const RuleSystemInstance::Target& target,
                       const Word& w) {
    if (const Word* exact = std::get_if<Word>(&target)) return *exact == w;
    return !std::get<Wdfa>(target).weigh(w).is_infinite();
  };

  std::vector<Word> current;
  current.reserve(inst.pairs.size());
  for (const auto& [underlying, target] : inst.pairs)
    current.push_back(underlying);

  // Memoize failed (depth, word-tuple) states; on success we unwind
  // immediately, so every memoized state is genuinely dead.
  std::unordered_set<std::string> failed;
  auto state_key = [&](std::uint32_t depth) {
    std::string key = std::to_string(depth);
    for (const Word& w : current) {
      key += '|';
      for (SymbolId s : w) {
        key += std::to_string(s);
        key += ',';
      }
    }
    return key;
  };

  std::vector<std::uint32_t> sequence;
  std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t depth) -> bool {
    if (depth == inst.length) {
      for (std::size_t i = 0; i < inst.pairs.size(); ++i)
        if (!in_target(inst.pairs[i].second, current[i])) return false;
      return true;
    }
    std::string key = state_key(depth);
    if (failed.count(key)) return false;
    if (++result.explored > node_limit)
      throw ResourceLimitError("orderable: node limit exceeded");
    for (std::uint32_t idx = 0; idx < inst.pool.size(); ++idx) {
      std::vector<Word> saved = current;
      for (std::size_t i = 0; i < current.size(); ++i)
        current[i] = apply_rule(inst, inst.pool[idx], current[i]);
      sequence.push_back(idx);
      if (dfs(depth + 1)) return true;
      sequence.pop_back();
      current = std::move(saved);
    }
    failed.insert(std::move(key));
    return false;
  };

  if (dfs(0)) result.sequence = sequence;
  return result;
}

RuleSystemInstance make_hamilton_rules(const Digraph& g) {
  g.validate();
  const std::uint32_t n = g.order;
  std::vector<std::string> names{"#", "0"};
  for (std::uint32_t v = 1; v <= n; ++v) names.push_back(std::to_string(v));

  RuleSystemInstance inst;
  inst.alphabet = Alphabet(std::move(names));
  inst.graph = g;
  for (std::uint32_t v = 1; v <= n; ++v) inst.pool.push_back(Rule::move(v));
  inst.pool.push_back(Rule::accept());
  inst.length = n + 1;

  Word start;
  for (std::uint32_t v = 1; v <= n; ++v)
    start.push_back(inst.alphabet.id(std::to_string(v)));
  start.push_back(inst.alphabet.id("#"));
  start.push_back(inst.alphabet.id("0"));
  inst.pairs.emplace_back(std::move(start), Word{});
  return inst;
}

}  // namespace ot::derivational
